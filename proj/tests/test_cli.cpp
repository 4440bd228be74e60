#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace std::string_literals;
namespace fs = std::filesystem;

namespace {

const char* kCli = AUGTK_CLI_PATH;

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "augtk_cli_test";
  fs::create_directories(dir);
  return dir;
}

// Runs the installed binary with shell redirections; augtk itself never
// sees the shell-specific parts.
CmdResult run_cli(const std::string& args, const std::string& redirect = "") {
  fs::path dir = scratch_dir();
  fs::path out = dir / "stdout.txt";
  fs::path err = dir / "stderr.txt";
  std::string cmd = std::string(kCli) + " " + args + " " + redirect + " >" +
                    out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  CmdResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

void put(const fs::path& p, const std::string& body) {
  std::ofstream(p) << body;
}

}  // namespace

TEST_CASE("stream augmentation through files and pipes") {
  fs::path dir = scratch_dir();
  put(dir / "aug_in.txt", "DT w=the\n\nNN w=dog count:2\n");

  CmdResult r = run_cli("augment --domain src --input " +
                        (dir / "aug_in.txt").string() + " --output " +
                        (dir / "aug_out.txt").string());
  CHECK(r.code == 0);
  CHECK(slurp(dir / "aug_out.txt") ==
        "DT w=the src::w=the\n"
        "\n"
        "NN w=dog count:2 src::w=dog src::count:2\n");

  // default input/output are the standard streams
  CmdResult piped =
      run_cli("augment --domain d", "<" + (dir / "aug_in.txt").string());
  CHECK(piped.code == 0);
  CHECK(piped.out ==
        "DT w=the d::w=the\n"
        "\n"
        "NN w=dog count:2 d::w=dog d::count:2\n");
}

TEST_CASE("exit codes separate usage errors from runtime failures") {
  CHECK(run_cli("").code == 1);             // a subcommand is required
  CHECK(run_cli("frobnicate").code == 1);   // unknown subcommand
  CHECK(run_cli("augment").code == 1);      // --domain is required
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("augment --help").code == 0);

  CmdResult missing =
      run_cli("train --spec /nonexistent/x.spec --out /tmp/m.json");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("augtk:") != std::string::npos);
}

TEST_CASE("generate, train, predict, inspect, and score end to end") {
  fs::path dir = scratch_dir() / "flow";
  fs::remove_all(dir);
  std::string d = dir.string();

  CmdResult synth = run_cli(
      "synth --out " + d +
      " --seed 4 --domains 2 --source-sentences 30 --target-sentences 15"
      " --dev 8 --test 10 --general-vocab 20 --conflict-vocab 3"
      " --noise-vocab 4 --min-len 3 --max-len 5");
  CHECK(synth.code == 0);
  CHECK(synth.out == "wrote 5 files under " + d + "\n");
  for (const char* f :
       {"d0-train.txt", "d1-train.txt", "dev.txt", "test.txt", "synth.spec"}) {
    CHECK(fs::exists(dir / f));
  }

  std::string spec = (dir / "synth.spec").string();
  CmdResult train = run_cli("train --spec " + spec + " --method Augment" +
                            " --iterations 4 --out " + d + "/aug.json");
  CHECK(train.code == 0);
  CHECK(train.out.rfind("wrote " + d + "/aug.json (Augment, test error",
                        0) == 0);

  CmdResult again = run_cli("train --spec " + spec + " --method Augment" +
                            " --iterations 4 --out " + d + "/aug2.json");
  CHECK(again.code == 0);
  CHECK(slurp(dir / "aug.json") == slurp(dir / "aug2.json"));

  CmdResult lint = run_cli("train --spec " + spec + " --method LinInt" +
                           " --out " + d + "/li.json");
  CHECK(lint.code == 2);
  CHECK(lint.err.find("compare") != std::string::npos);

  std::string model = d + "/aug.json";
  CmdResult nodomain = run_cli("predict --model " + model + " --input " + d +
                               "/test.txt --output " + d + "/p0.txt");
  CHECK(nodomain.code == 2);
  CHECK(nodomain.err.find("--domain") != std::string::npos);

  CmdResult mismatch = run_cli("predict --model " + model +
                               " --domain d1 --profile recap --input " + d +
                               "/test.txt --output " + d + "/p0.txt");
  CHECK(mismatch.code == 2);

  CmdResult predict = run_cli("predict --model " + model +
                              " --domain d1 --input " + d +
                              "/test.txt --output " + d + "/pred.txt");
  CHECK(predict.code == 0);
  {
    std::ifstream in(dir / "pred.txt");
    std::string line;
    REQUIRE(std::getline(in, line));
    // original columns kept, prediction appended
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  }

  CmdResult eval = run_cli("eval --gold " + d + "/test.txt --pred " + d +
                           "/pred.txt");
  CHECK(eval.code == 0);
  CHECK(eval.out.rfind("error ", 0) == 0);
  CHECK(eval.out.find('%') != std::string::npos);

  CmdResult paired = run_cli("eval --gold " + d + "/test.txt --pred " + d +
                             "/pred.txt --pred2 " + d + "/pred.txt");
  CHECK(paired.code == 0);
  CHECK(paired.out.find("error2 ") != std::string::npos);
  CHECK(paired.out.find("mcnemar b=0 c=0 statistic=0 significant=no") !=
        std::string::npos);

  CmdResult hinton =
      run_cli("hinton --model " + model + " --feature w=the --classes DT,NN");
  CHECK(hinton.code == 0);
  CHECK(hinton.out.rfind("feature w=the", 0) == 0);

  CmdResult svg = run_cli("hinton --model " + model +
                          " --feature w=the --format svg");
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);

  CmdResult unknown = run_cli("hinton --model " + model + " --feature w=zzq");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("nearest matches") != std::string::npos);

  CmdResult compare = run_cli("compare --spec " + spec +
                              " --methods SrcOnly,TgtOnly,Augment" +
                              " --format tsv --out " + d + "/cmp.tsv");
  CHECK(compare.code == 0);
  std::string tsv = slurp(dir / "cmp.tsv");
  CHECK(tsv.rfind("task\ttarget\tmethod\terror\ttuned\tbold", 0) == 0);
  CHECK(tsv.find("\tAugment\t") != std::string::npos);
  CHECK(tsv.find("\tAll\t-\t") != std::string::npos);  // not requested

  fs::remove_all(dir);
}
