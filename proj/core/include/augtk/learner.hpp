#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "augtk/augment.hpp"
#include "augtk/dictionary.hpp"
#include "augtk/features.hpp"
#include "augtk/rng.hpp"
#include "augtk/types.hpp"

namespace augtk {

/// [class][feature] weight matrix.
using DenseWeights = std::vector<std::vector<double>>;

struct TrainConfig {
  unsigned max_iterations = 20;
  std::uint64_t shuffle_seed = 0;
  bool dev_selection = true;
};

/// A finalized linear model: averaged per-class weights plus snapshots of
/// everything needed to featurize new input the same way the training run
/// did.  For augmented models the weight rows span (K+1)*F ids laid out per
/// the schema; otherwise they span the base dictionary.
struct Model {
  DenseWeights weights;
  Dictionary features;                // base feature names (F ids)
  LabelDictionary labels;
  std::optional<DomainSchema> schema; // present iff trained augmented
  FeatureProfile profile;             // token featurization, for decoders
  std::string scheme_kind;            // "flat"/"bio" for sequence models, else ""
  unsigned chosen_iteration = 1;      // 1-based
  std::vector<double> dev_errors;     // per-iteration selection metric

  std::size_t n_classes() const { return weights.size(); }
  std::size_t dim() const { return weights.empty() ? 0 : weights[0].size(); }

  std::vector<double> scores(const SparseVector& x) const;
  LabelId predict(const SparseVector& x) const;
};

/// Per-class averaged scores for x; ids outside the model space contribute 0.
std::vector<double> predict_scores(const Model& model, const SparseVector& x);

/// Index of the largest score; ties go to the lowest class id.
std::size_t argmax_score(const std::vector<double>& scores);

/// Mistake-driven multiclass perceptron with lazy weight averaging.  The
/// step counter advances on every presentation; averaged() returns the mean
/// of the post-presentation weight snapshots, computed exactly for integer
/// update histories.
class AveragedPerceptron {
 public:
  AveragedPerceptron(std::size_t n_classes, std::size_t dim);

  /// Adds offset[class] . x to every raw score (the prediction-time bias
  /// used by the prior-weighted variant).  The offset is never updated and
  /// must outlive the perceptron.
  void set_score_offset(const DenseWeights* offset) { offset_ = offset; }

  std::vector<double> raw_scores(const SparseVector& x) const;

  /// One training presentation: predict with the current (raw) weights,
  /// update on a mistake, advance the step counter.  Returns whether an
  /// update happened.
  bool present(const SparseVector& x, LabelId gold);

  DenseWeights averaged() const;

  const DenseWeights& raw() const { return w_; }
  std::uint64_t presentations() const { return t_; }
  std::uint64_t mistakes() const { return mistakes_; }
  std::size_t n_classes() const { return w_.size(); }

 private:
  DenseWeights w_;   // current weights
  DenseWeights u_;   // sum of step-stamped deltas, for lazy averaging
  const DenseWeights* offset_ = nullptr;
  std::uint64_t t_ = 0;
  std::uint64_t mistakes_ = 0;
};

/// One training run over shuffled epochs with optional per-iteration
/// development selection.
struct EpochRunResult {
  DenseWeights averaged;          // snapshot of the chosen iteration
  unsigned chosen_iteration = 1;  // 1-based
  std::vector<double> dev_errors; // one entry per iteration when evaluated
};

/// Drives `iterations` epochs: each epoch asks `epoch_instances` for the
/// presentation list (base order), shuffles it with `shuffle_rng`, presents
/// every instance, and (when `dev_error` is set) scores the averaged
/// snapshot, keeping the earliest minimum.  Without an evaluator the final
/// iteration wins.
EpochRunResult run_epochs(
    AveragedPerceptron& p,
    const std::function<std::vector<const Instance*>(unsigned)>& epoch_instances,
    unsigned iterations, Rng& shuffle_rng,
    const std::function<double(const DenseWeights&)>& dev_error);

/// Trains a plain multiclass averaged perceptron over the frozen dictionary.
/// Dev selection (when enabled and dev is non-empty) picks the iteration
/// with the lowest dev classification error, earliest on ties; an empty dev
/// set falls back to the last iteration with a warning on stderr.
Model train_avg_perceptron(const std::vector<Instance>& train,
                           const std::vector<Instance>& dev,
                           const TrainConfig& cfg, const Dictionary& features,
                           const LabelDictionary& labels);

/// Prior-weighted variant: predictions during training (and in the returned
/// model) score with (w + w_src) . x while updates touch only the learned
/// correction w.  The returned model's weights are the averaged correction
/// plus the source weights, so it behaves as a plain model downstream.
/// The source model must share the feature and label dictionaries and be
/// un-augmented.
Model train_prior_perceptron(const std::vector<Instance>& target_train,
                             const std::vector<Instance>& target_dev,
                             const Model& source_model, const TrainConfig& cfg,
                             const Dictionary& features,
                             const LabelDictionary& labels);

}  // namespace augtk
