#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "augtk/experiments.hpp"

namespace augtk {

/// Parsed form of an experiment spec file.  The format is line-oriented
/// "key = value" with '#' comments; see parse_experiment_file for the keys.
struct ExperimentFile {
  std::string task = "task";
  std::uint64_t seed = 0;
  unsigned iterations = 20;
  std::string scheme = "flat";
  std::string profile = "standard";
  std::vector<std::pair<std::string, std::string>> gazetteers;  // name, path
  std::vector<std::pair<std::string, std::string>> sources;     // name, path
  std::pair<std::string, std::string> target;                   // name, path
  std::string dev_path;
  std::string test_path;
  std::vector<Method> methods;       // empty -> all methods
  std::vector<double> weight_grid;   // empty -> default grid
};

/// Reads a spec file.  Recognized keys (one per line, "key = value"):
///
///   task       = NAME
///   seed       = N
///   iterations = N
///   scheme     = flat | bio
///   profile    = standard | recap
///   gazetteer  = NAME PATH          (repeatable)
///   source     = NAME PATH          (repeatable)
///   target     = NAME PATH
///   dev        = PATH
///   test       = PATH
///   methods    = NAME, NAME, ...
///   weight-grid = W, W, ...
///
/// Relative paths are resolved against base_dir.  Unknown keys, duplicate
/// singleton keys, and malformed values raise ParseError with the line
/// number.
ExperimentFile parse_experiment_file(std::istream& in,
                                     const std::string& base_dir);

/// Convenience overload that opens the path and resolves entries against
/// the file's own directory.
ExperimentFile parse_experiment_file(const std::string& path);

/// Loads every corpus and gazetteer named by the file and assembles a
/// runnable ExperimentSpec.  Labels from all corpora share one dictionary;
/// a missing or unreadable file raises Error naming the path.
ExperimentSpec load_experiment(const ExperimentFile& file);

}  // namespace augtk
