#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augtk/learner.hpp"

namespace augtk {

/// Which label bigrams a decoder may emit.
///
///  - flat: every transition is valid.
///  - bio: "I-X" may only follow "B-X" or "I-X"; "O", "B-*" and labels
///    outside the B-/I- convention are valid after anything.
struct LabelScheme {
  enum class Kind { flat, bio };
  Kind kind = Kind::flat;

  static LabelScheme flat_scheme() { return {Kind::flat}; }
  static LabelScheme bio_scheme() { return {Kind::bio}; }

  /// May `cand` follow `prev`?  Pass the begin-of-sentence marker as prev
  /// for the first token.
  bool valid(std::string_view prev, std::string_view cand) const;

  std::string descriptor() const;
  static LabelScheme from_descriptor(std::string_view name);
};

/// Transition feature names: the previous one and two predicted (or gold)
/// labels as bias-only indicator features.  Missing history uses the
/// begin-of-sentence marker.
std::string prev_feature_name(std::string_view prev_label);
std::string prevprev_feature_name(std::string_view prevprev_label,
                                  std::string_view prev_label);

/// Every feature name one decoder step sees: the position's token features,
/// the two transition features, and (when non-empty) one extra name.
std::vector<std::string> step_feature_names(
    const std::vector<std::string>& tokens, std::size_t position,
    std::string_view prev_label, std::string_view prevprev_label,
    const FeatureProfile& profile, std::string_view extra_name = {});

/// Binary vector of the names found in a frozen dictionary; unknown names
/// score 0 by omission.
SparseVector lookup_features(const std::vector<std::string>& names,
                             const Dictionary& dict);

/// Greedy left-to-right decoding under the scheme's validity mask.  For
/// augmented models `domain` names the sentence's domain within the model
/// schema.  `extra` optionally supplies one additional feature name per
/// token.  Empty input decodes to an empty sequence.
std::vector<LabelId> decode_greedy(
    const Model& model, const std::vector<std::string>& tokens,
    const LabelScheme& scheme,
    const std::optional<DomainId>& domain = std::nullopt,
    const std::vector<std::string>* extra = nullptr);

/// One training corpus: sentences, their domain, whether the per-epoch
/// subsampling weight applies to them, and optional per-token extra feature
/// names aligned with the sentences.
struct SequenceCorpus {
  const std::vector<TaggedSentence>* sentences = nullptr;
  DomainId domain;
  bool subsample = false;
  const std::vector<std::vector<std::string>>* extra = nullptr;
};

struct SequenceTrainOptions {
  unsigned iterations = 20;
  std::uint64_t shuffle_seed = 0;
  bool dev_selection = true;
  bool augment = false;
  LabelScheme scheme;
  FeatureProfile profile;
  /// Effective weight for corpora flagged subsample: each of their sentences
  /// enters an epoch floor(w) times plus once more with probability frac(w).
  /// At integral weights no random draws are consumed.
  double subsample_weight = 1.0;
  std::uint64_t sampling_seed = 0;
  /// Train in this frozen feature space instead of building one from the
  /// corpora (required when the result must align with an existing model's
  /// weights, as in the prior-weighted setup).
  const Dictionary* fixed_dictionary = nullptr;
  /// Prediction-time weight offset: training scores with (w + prior) . x,
  /// updates only w, and the returned model's weights are the averaged w
  /// plus the prior.  Incompatible with augment.
  const DenseWeights* prior_weights = nullptr;
  /// Additional corpora whose feature names are interned but which are never
  /// trained on (so a source model's space can cover target vocabulary).
  std::vector<const std::vector<TaggedSentence>*> extra_vocab;
};

/// Per-iteration training diagnostics.
struct SequenceTrainDiagnostics {
  std::vector<double> dev_decode_errors;          // what selection minimizes
  std::vector<double> dev_classification_errors;  // gold-history, for contrast
};

/// Trains a per-token classifier against gold history (the first policy
/// iteration of a structured-to-classification reduction) and packages it
/// with everything decode_greedy needs.  Dev selection minimizes greedy
/// decoding token error on `dev`, evaluated per iteration.
Model train_sequence(const std::vector<SequenceCorpus>& corpora,
                     const std::vector<TaggedSentence>& dev,
                     const DomainId& dev_domain,
                     const LabelDictionary& labels,
                     const SequenceTrainOptions& opt,
                     const std::vector<std::vector<std::string>>* dev_extra =
                         nullptr,
                     SequenceTrainDiagnostics* diag = nullptr);

}  // namespace augtk
