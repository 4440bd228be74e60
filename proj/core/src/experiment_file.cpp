#include "augtk/experiment_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>

#include "augtk/corpus.hpp"

namespace augtk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string resolve(const std::string& base_dir, std::string_view path) {
  return (std::filesystem::path(base_dir) / path).string();
}

// Splits "NAME PATH" at the first whitespace run.
std::pair<std::string, std::string> name_and_path(std::string_view value,
                                                  std::size_t line) {
  std::size_t split = value.find_first_of(" \t");
  if (split == std::string_view::npos) {
    throw ParseError("expected \"NAME PATH\"", line);
  }
  std::string_view name = trim(value.substr(0, split));
  std::string_view path = trim(value.substr(split));
  if (name.empty() || path.empty()) {
    throw ParseError("expected \"NAME PATH\"", line);
  }
  return {std::string(name), std::string(path)};
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> out;
  while (true) {
    std::size_t comma = value.find(',');
    out.push_back(trim(value.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view value, std::size_t line) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("cannot parse number \"" + std::string(value) + "\"",
                     line);
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw Error(std::string("cannot open ") + what + " file: " + path);
  }
  return in;
}

}  // namespace

ExperimentFile parse_experiment_file(std::istream& in,
                                     const std::string& base_dir) {
  ExperimentFile file;
  bool saw_target = false, saw_test = false, saw_dev = false;
  std::string line;
  std::size_t line_no = 0;
  auto singleton = [&](bool& seen, std::string_view key) {
    if (seen) {
      throw ParseError("duplicate key \"" + std::string(key) + "\"", line_no);
    }
    seen = true;
  };
  bool saw_task = false, saw_seed = false, saw_iterations = false;
  bool saw_scheme = false, saw_profile = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected \"key = value\"", line_no);
    }
    std::string_view key = trim(s.substr(0, eq));
    std::string_view value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError("expected \"key = value\"", line_no);
    }
    if (key == "task") {
      singleton(saw_task, key);
      file.task = std::string(value);
    } else if (key == "seed") {
      singleton(saw_seed, key);
      file.seed = parse_number<std::uint64_t>(value, line_no);
    } else if (key == "iterations") {
      singleton(saw_iterations, key);
      file.iterations = parse_number<unsigned>(value, line_no);
      if (file.iterations == 0) {
        throw ParseError("iterations must be at least 1", line_no);
      }
    } else if (key == "scheme") {
      singleton(saw_scheme, key);
      if (value != "flat" && value != "bio") {
        throw ParseError("scheme must be \"flat\" or \"bio\"", line_no);
      }
      file.scheme = std::string(value);
    } else if (key == "profile") {
      singleton(saw_profile, key);
      if (value != "standard" && value != "recap") {
        throw ParseError("profile must be \"standard\" or \"recap\"",
                         line_no);
      }
      file.profile = std::string(value);
    } else if (key == "gazetteer") {
      auto [name, path] = name_and_path(value, line_no);
      file.gazetteers.emplace_back(name, resolve(base_dir, path));
    } else if (key == "source") {
      auto [name, path] = name_and_path(value, line_no);
      file.sources.emplace_back(name, resolve(base_dir, path));
    } else if (key == "target") {
      singleton(saw_target, key);
      auto [name, path] = name_and_path(value, line_no);
      file.target = {name, resolve(base_dir, path)};
    } else if (key == "dev") {
      singleton(saw_dev, key);
      file.dev_path = resolve(base_dir, value);
    } else if (key == "test") {
      singleton(saw_test, key);
      file.test_path = resolve(base_dir, value);
    } else if (key == "methods") {
      for (std::string_view item : split_list(value)) {
        if (item.empty()) throw ParseError("empty method name", line_no);
        try {
          file.methods.push_back(method_from_name(item));
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no);
        }
      }
    } else if (key == "weight-grid") {
      for (std::string_view item : split_list(value)) {
        double w = parse_number<double>(item, line_no);
        if (w <= 0.0) {
          throw ParseError("weights must be positive", line_no);
        }
        file.weight_grid.push_back(w);
      }
    } else {
      throw ParseError("unknown key \"" + std::string(key) + "\"", line_no);
    }
  }
  if (!saw_target) throw ParseError("missing \"target\" entry", line_no);
  if (!saw_test) throw ParseError("missing \"test\" entry", line_no);
  return file;
}

ExperimentFile parse_experiment_file(const std::string& path) {
  std::ifstream in = open_or_throw(path, "spec");
  return parse_experiment_file(
      in, std::filesystem::path(path).parent_path().string());
}

ExperimentSpec load_experiment(const ExperimentFile& file) {
  ExperimentSpec spec;
  spec.task = file.task;
  spec.seed = file.seed;
  spec.iterations = file.iterations;
  spec.scheme = LabelScheme::from_descriptor(file.scheme);
  spec.profile = FeatureProfile::from_descriptor(file.profile);
  for (const auto& [name, path] : file.gazetteers) {
    std::ifstream in = open_or_throw(path, "gazetteer");
    spec.profile.gazetteers.push_back(Gazetteer::load(name, in));
  }
  spec.weight_grid = file.weight_grid;

  auto read_corpus = [&](const std::string& path, DomainId domain) {
    std::ifstream in = open_or_throw(path, "corpus");
    try {
      return read_column_corpus(in, domain, spec.labels);
    } catch (const ParseError& e) {
      throw Error(path + ": " + e.what());
    }
  };

  for (std::size_t i = 0; i < file.sources.size(); ++i) {
    const auto& [name, path] = file.sources[i];
    DomainId domain{static_cast<std::uint32_t>(i), name};
    spec.sources.push_back({name, read_corpus(path, domain)});
  }
  DomainId target_domain{static_cast<std::uint32_t>(file.sources.size()),
                         file.target.first};
  spec.target = {file.target.first,
                 read_corpus(file.target.second, target_domain)};
  if (!file.dev_path.empty()) {
    spec.dev = read_corpus(file.dev_path, target_domain);
  }
  spec.test = read_corpus(file.test_path, target_domain);
  return spec;
}

}  // namespace augtk
