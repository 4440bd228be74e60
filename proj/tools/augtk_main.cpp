// augtk: feature-augmentation domain adaptation from the command line.
//
// Subcommands: augment, train, predict, eval, compare, hinton, synth.
// Exit codes: 0 success, 1 usage error, 2 data or model error.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "augtk/augment.hpp"
#include "augtk/corpus.hpp"
#include "augtk/experiment_file.hpp"
#include "augtk/experiments.hpp"
#include "augtk/introspect.hpp"
#include "augtk/model_io.hpp"
#include "augtk/synth.hpp"

namespace {

using namespace augtk;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  return out;
}

// "-" means the standard stream.
struct InputStream {
  explicit InputStream(const std::string& path)
      : file(path == "-" ? std::ifstream() : open_input(path)),
        stream(path == "-" ? std::cin : file) {}
  std::ifstream file;
  std::istream& stream;
};

struct OutputStream {
  explicit OutputStream(const std::string& path)
      : file(path == "-" ? std::ofstream() : open_output(path)),
        stream(path == "-" ? std::cout : file) {}
  std::ofstream file;
  std::ostream& stream;
};

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = value.find(',', start);
    std::string item = value.substr(start, comma - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
      item.erase(item.begin());
    }
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) {
      item.pop_back();
    }
    out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct AugmentArgs {
  std::string domain;
  std::string input = "-";
  std::string output = "-";
};

void run_augment(const AugmentArgs& args) {
  InputStream in(args.input);
  OutputStream out(args.output);
  augment_stream(in.stream, out.stream, args.domain);
}

struct TrainArgs {
  std::string spec_path;
  std::string method = "Augment";
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned iterations = 0;
};

void run_train(const TrainArgs& args) {
  ExperimentFile file = parse_experiment_file(args.spec_path);
  if (args.seed_set) file.seed = args.seed;
  if (args.iterations > 0) file.iterations = args.iterations;
  Method method = method_from_name(args.method);
  if (method == Method::lin_int) {
    throw Error(
        "LinInt interpolates two models at decode time and has no standalone "
        "model to save; run the compare subcommand instead");
  }
  ExperimentSpec spec = load_experiment(file);
  MethodResult result = run_method(spec, method);
  save_model(*result.model, std::filesystem::path(args.out_path));
  std::cout << "wrote " << args.out_path << " (" << method_name(method)
            << ", test error " << format_percent(result.test_error) << "%";
  if (result.tuned) std::cout << ", weight " << format_value(*result.tuned);
  std::cout << ", iteration " << result.model->chosen_iteration << ")\n";
}

struct PredictArgs {
  std::string model_path;
  std::string input = "-";
  std::string output = "-";
  std::string domain;
  std::string profile;
};

void run_predict(const PredictArgs& args) {
  Model model = load_model(std::filesystem::path(args.model_path));
  if (!args.profile.empty() && args.profile != model.profile.descriptor()) {
    throw Error("feature profile mismatch: the model was trained with \"" +
                model.profile.descriptor() + "\" but the input declares \"" +
                args.profile + "\"");
  }
  LabelScheme scheme = LabelScheme::from_descriptor(
      model.scheme_kind.empty() ? "flat" : model.scheme_kind);
  std::optional<DomainId> domain;
  if (model.schema) {
    if (args.domain.empty()) {
      std::string names;
      for (const std::string& n : model.schema->domain_names()) {
        if (!names.empty()) names += ", ";
        names += n;
      }
      throw Error("the model is augmented; pass --domain with one of: " +
                  names);
    }
    domain = model.schema->domain(args.domain);
  } else if (!args.domain.empty()) {
    throw Error("the model is un-augmented; --domain does not apply");
  }
  InputStream in(args.input);
  OutputStream out(args.output);
  for (const RawSentence& s : read_raw_column_corpus(in.stream)) {
    std::vector<LabelId> pred =
        decode_greedy(model, s.tokens, scheme, domain);
    for (std::size_t t = 0; t < s.lines.size(); ++t) {
      out.stream << s.lines[t] << '\t' << model.labels.name_of(pred[t])
                 << '\n';
    }
    out.stream << '\n';
  }
}

struct EvalArgs {
  std::string gold_path;
  std::string pred_path;
  std::string pred2_path;
};

std::vector<std::vector<LabelId>> intern_labels(
    const std::vector<std::vector<std::string>>& columns,
    LabelDictionary& labels) {
  std::vector<std::vector<LabelId>> out;
  out.reserve(columns.size());
  for (const auto& sentence : columns) {
    std::vector<LabelId> ids;
    ids.reserve(sentence.size());
    for (const std::string& name : sentence) ids.push_back(labels.intern(name));
    out.push_back(std::move(ids));
  }
  return out;
}

void run_eval(const EvalArgs& args) {
  LabelDictionary labels;
  auto read = [&](const std::string& path) {
    std::ifstream in = open_input(path);
    try {
      return intern_labels(read_label_columns(in), labels);
    } catch (const ParseError& e) {
      throw Error(path + ": " + e.what());
    }
  };
  auto gold = read(args.gold_path);
  auto pred = read(args.pred_path);
  std::cout << "error " << format_percent(corpus_error_rate(gold, pred))
            << "%\n";
  if (!args.pred2_path.empty()) {
    auto pred2 = read(args.pred2_path);
    std::cout << "error2 " << format_percent(corpus_error_rate(gold, pred2))
              << "%\n";
    McNemarResult r = mcnemar(pred, pred2, gold);
    std::cout << "mcnemar b=" << r.b << " c=" << r.c << " statistic="
              << format_value(r.statistic) << " significant="
              << (r.significant_95 ? "yes" : "no") << '\n';
  }
}

struct CompareArgs {
  std::string spec_path;
  std::string methods;
  std::string format = "text";
  std::string out_path = "-";
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void run_compare(const CompareArgs& args) {
  ExperimentFile file = parse_experiment_file(args.spec_path);
  if (args.seed_set) file.seed = args.seed;
  std::vector<Method> methods = file.methods;
  if (!args.methods.empty()) {
    methods.clear();
    for (const std::string& name : split_commas(args.methods)) {
      if (name.empty()) throw Error("empty method name in --methods");
      methods.push_back(method_from_name(name));
    }
  }
  if (methods.empty()) methods = all_methods();
  ExperimentSpec spec = load_experiment(file);
  ComparisonRun run = run_comparison(spec, methods);
  OutputStream out(args.out_path);
  out.stream << (args.format == "tsv" ? render_tsv(run.report)
                                      : render_text(run.report));
}

struct HintonArgs {
  std::string model_path;
  std::string feature;
  std::string classes;
  std::string format = "text";
  std::string out_path = "-";
};

void run_hinton(const HintonArgs& args) {
  Model model = load_model(std::filesystem::path(args.model_path));
  std::vector<std::string> classes;
  if (!args.classes.empty()) {
    for (std::string& c : split_commas(args.classes)) {
      if (c.empty()) throw Error("empty class name in --classes");
      classes.push_back(std::move(c));
    }
  }
  WeightGrid grid = weight_slice(model, args.feature, classes);
  OutputStream out(args.out_path);
  out.stream << (args.format == "svg" ? hinton_svg(grid)
                                      : hinton_ascii(grid));
}

struct SynthArgs {
  std::string out_dir;
  SynthConfig cfg;
  std::size_t source_sentences = 2000;
  std::size_t target_sentences = 200;
};

void run_synth(const SynthArgs& args) {
  SynthConfig cfg = args.cfg;
  cfg.train_sentences.assign(cfg.domains, args.source_sentences);
  if (!cfg.train_sentences.empty()) {
    cfg.train_sentences.back() = args.target_sentences;
  }
  LabelDictionary labels;
  SynthCorpus corpus = generate_synthetic(cfg, labels);

  namespace fs = std::filesystem;
  fs::path dir(args.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory: " + args.out_dir);

  auto write_corpus = [&](const std::string& name,
                          const std::vector<TaggedSentence>& sentences) {
    std::ofstream out = open_output((dir / name).string());
    write_column_corpus(sentences, labels, out);
  };
  std::ofstream spec = open_output((dir / "synth.spec").string());
  spec << "task = synth\n"
       << "seed = " << cfg.seed << "\n"
       << "iterations = 20\n"
       << "scheme = flat\n"
       << "profile = standard\n";
  for (std::size_t k = 0; k < corpus.domain_names.size(); ++k) {
    const std::string& name = corpus.domain_names[k];
    const std::string file = name + "-train.txt";
    write_corpus(file, corpus.train[k]);
    spec << (k + 1 < corpus.domain_names.size() ? "source = " : "target = ")
         << name << ' ' << file << '\n';
  }
  write_corpus("dev.txt", corpus.dev);
  write_corpus("test.txt", corpus.test);
  spec << "dev = dev.txt\n"
       << "test = test.txt\n";
  std::cout << "wrote " << (corpus.domain_names.size() + 3) << " files under "
            << args.out_dir << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feature-augmentation domain adaptation toolkit"};
  app.require_subcommand(1);

  AugmentArgs augment_args;
  CLI::App* augment = app.add_subcommand(
      "augment", "Filter a sparse-format stream through feature augmentation");
  augment->add_option("--domain", augment_args.domain, "domain name")
      ->required();
  augment->add_option("--input", augment_args.input, "input path or -");
  augment->add_option("--output", augment_args.output, "output path or -");
  augment->callback([&] { run_augment(augment_args); });

  TrainArgs train_args;
  CLI::App* train =
      app.add_subcommand("train", "Fit a model from an experiment spec file");
  train->add_option("--spec", train_args.spec_path, "experiment spec file")
      ->required();
  train->add_option("--method", train_args.method,
                    "training method (default Augment)");
  train->add_option("--out", train_args.out_path, "model file to write")
      ->required();
  train->add_option("--seed", train_args.seed, "override the spec seed")
      ->trigger_on_parse()
      ->each([&](const std::string&) { train_args.seed_set = true; });
  train->add_option("--iterations", train_args.iterations,
                    "override the spec iteration count");
  train->callback([&] { run_train(train_args); });

  PredictArgs predict_args;
  CLI::App* predict =
      app.add_subcommand("predict", "Apply a saved model to a column corpus");
  predict->add_option("--model", predict_args.model_path, "model file")
      ->required();
  predict->add_option("--input", predict_args.input, "input path or -");
  predict->add_option("--output", predict_args.output, "output path or -");
  predict->add_option("--domain", predict_args.domain,
                      "domain to decode under (augmented models)");
  predict->add_option("--profile", predict_args.profile,
                      "expected feature profile; mismatch is an error");
  predict->callback([&] { run_predict(predict_args); });

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "Token error of predictions against gold labels");
  eval->add_option("--gold", eval_args.gold_path, "gold column corpus")
      ->required();
  eval->add_option("--pred", eval_args.pred_path, "predicted column corpus")
      ->required();
  eval->add_option("--pred2", eval_args.pred2_path,
                   "second prediction; adds a McNemar comparison");
  eval->callback([&] { run_eval(eval_args); });

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "Run adaptation methods and print the comparison report");
  compare->add_option("--spec", compare_args.spec_path, "experiment spec file")
      ->required();
  compare->add_option("--methods", compare_args.methods,
                      "comma-separated method list (default: spec or all)");
  compare->add_option("--format", compare_args.format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  compare->add_option("--out", compare_args.out_path, "output path or -");
  compare->add_option("--seed", compare_args.seed, "override the spec seed")
      ->trigger_on_parse()
      ->each([&](const std::string&) { compare_args.seed_set = true; });
  compare->callback([&] { run_compare(compare_args); });

  HintonArgs hinton_args;
  CLI::App* hinton = app.add_subcommand(
      "hinton", "Render per-domain weights of one feature as a diagram");
  hinton->add_option("--model", hinton_args.model_path, "model file")
      ->required();
  hinton->add_option("--feature", hinton_args.feature, "feature name")
      ->required();
  hinton->add_option("--classes", hinton_args.classes,
                     "comma-separated class rows (default: all)");
  hinton->add_option("--format", hinton_args.format, "text or svg")
      ->check(CLI::IsMember({"text", "svg"}));
  hinton->add_option("--out", hinton_args.out_path, "output path or -");
  hinton->callback([&] { run_hinton(hinton_args); });

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand(
      "synth", "Write a seeded synthetic adaptation corpus and spec file");
  synth->add_option("--out", synth_args.out_dir, "output directory")
      ->required();
  synth->add_option("--seed", synth_args.cfg.seed, "generator seed");
  synth->add_option("--domains", synth_args.cfg.domains,
                    "number of domains (last is the target)");
  synth->add_option("--source-sentences", synth_args.source_sentences,
                    "training sentences per source domain");
  synth->add_option("--target-sentences", synth_args.target_sentences,
                    "target-domain training sentences");
  synth->add_option("--dev", synth_args.cfg.dev_sentences,
                    "development sentences");
  synth->add_option("--test", synth_args.cfg.test_sentences,
                    "test sentences");
  synth->add_option("--general-vocab", synth_args.cfg.general_vocab,
                    "shared vocabulary size");
  synth->add_option("--conflict-vocab", synth_args.cfg.conflict_vocab,
                    "domain-dependent vocabulary size");
  synth->add_option("--noise-vocab", synth_args.cfg.noise_vocab,
                    "randomly labeled vocabulary size");
  synth->add_option("--conflict-rate", synth_args.cfg.conflict_rate,
                    "per-slot conflict probability");
  synth->add_option("--noise-rate", synth_args.cfg.noise_rate,
                    "per-slot noise probability");
  synth->add_option("--min-len", synth_args.cfg.min_len,
                    "minimum sentence length");
  synth->add_option("--max-len", synth_args.cfg.max_len,
                    "maximum sentence length");
  synth->callback([&] { run_synth(synth_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const augtk::Error& e) {
    std::cerr << "augtk: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "augtk: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
