#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "augtk/evaluation.hpp"
#include "augtk/method.hpp"
#include "augtk/seqlabel.hpp"
#include "augtk/synth.hpp"

namespace augtk {

struct DomainCorpus {
  std::string domain;
  std::vector<TaggedSentence> sentences;
};

/// One fully-loaded experiment: labeled corpora per source domain, the
/// target domain's train/dev/test split, and the shared label dictionary.
/// Methods that do not distinguish sources treat them as one pooled corpus;
/// the augmentation method keeps them apart, with the target domain last in
/// the schema.
struct ExperimentSpec {
  std::string task = "task";
  std::vector<DomainCorpus> sources;
  DomainCorpus target;                    // target-domain training data
  std::vector<TaggedSentence> dev;        // target-domain development data
  std::vector<TaggedSentence> test;       // target-domain test data
  LabelDictionary labels;                 // shared across every corpus
  LabelScheme scheme;
  FeatureProfile profile;
  std::uint64_t seed = 0;
  unsigned iterations = 20;
  std::vector<double> weight_grid;        // empty -> default grid plus M/N
};

struct MethodResult {
  Method method;
  double test_error = 0.0;
  std::vector<std::vector<LabelId>> predictions;  // per test sentence
  std::optional<double> tuned;                    // source weight or lambda
  std::optional<Model> model;  // absent for the interpolation method
  std::vector<double> dev_errors;  // per-iteration selection metric
};

/// Runs one method end to end: train per its recipe, decode the test set,
/// record the error and any tuned hyperparameter.  Deterministic given
/// spec.seed.
MethodResult run_method(const ExperimentSpec& spec, Method method);

/// {1, 1/2, 1/5, 1/10, 1/20, 1/50} plus the target/source sentence-count
/// ratio M/N when both are non-zero and the ratio is not already present.
std::vector<double> default_weight_grid(const ExperimentSpec& spec);

struct WeightTune {
  double weight = 1.0;
  std::vector<double> grid;
  std::vector<double> dev_errors;  // one per grid point
};

/// Trains one weighted run per grid value and returns the dev-error
/// minimizer (earliest grid point on ties).
WeightTune tune_source_weight(const ExperimentSpec& spec,
                              std::vector<double> grid = {});

struct LinIntTune {
  double lambda = 0.0;
  std::vector<double> grid;
  std::vector<double> dev_errors;
};

/// Scores the interpolation lambda grid 0, 0.05, ..., 1 on dev and returns
/// the minimizer (earliest on ties).
LinIntTune tune_linint(const ExperimentSpec& spec);

/// Greedy decoding over a convex combination of two models' per-class
/// softmax scores; lambda weighs model `a`.  Both models must be
/// un-augmented and share a label set.  The predicted history is shared, so
/// lambda = 0 and lambda = 1 reproduce single-model decoding exactly.
std::vector<LabelId> decode_interpolated(const Model& a, const Model& b,
                                         double lambda,
                                         const std::vector<std::string>& tokens,
                                         const LabelScheme& scheme);

struct ComparisonRun {
  std::vector<MethodResult> results;
  ComparisonReport report;
};

/// Runs every requested method and assembles the comparison report over the
/// shared test set.
ComparisonRun run_comparison(const ExperimentSpec& spec,
                             const std::vector<Method>& methods);

/// Builds a ready-to-run spec from generated synthetic corpora: the first
/// K-1 domains become sources, the last the target.
ExperimentSpec spec_from_synthetic(SynthCorpus corpus, LabelDictionary labels,
                                   std::uint64_t seed,
                                   unsigned iterations = 20);

}  // namespace augtk
