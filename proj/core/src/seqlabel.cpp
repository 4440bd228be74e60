#include "augtk/seqlabel.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace augtk {

bool LabelScheme::valid(std::string_view prev, std::string_view cand) const {
  if (kind == Kind::flat) return true;
  if (cand.size() > 2 && cand.substr(0, 2) == "I-") {
    std::string_view chunk = cand.substr(2);
    if (prev.size() > 2 && (prev.substr(0, 2) == "B-" || prev.substr(0, 2) == "I-")) {
      return prev.substr(2) == chunk;
    }
    return false;
  }
  return true;
}

std::string LabelScheme::descriptor() const {
  return kind == Kind::flat ? "flat" : "bio";
}

LabelScheme LabelScheme::from_descriptor(std::string_view name) {
  if (name == "flat") return flat_scheme();
  if (name == "bio") return bio_scheme();
  throw Error("unknown label scheme: " + std::string(name) +
              " (expected flat or bio)");
}

std::string prev_feature_name(std::string_view prev_label) {
  std::string out = "prev=";
  out.append(prev_label);
  return out;
}

std::string prevprev_feature_name(std::string_view prevprev_label,
                                  std::string_view prev_label) {
  std::string out = "prevprev=";
  out.append(prevprev_label);
  out.push_back(',');
  out.append(prev_label);
  return out;
}

std::vector<std::string> step_feature_names(
    const std::vector<std::string>& tokens, std::size_t position,
    std::string_view prev_label, std::string_view prevprev_label,
    const FeatureProfile& profile, std::string_view extra_name) {
  std::vector<std::string> names =
      token_feature_names(tokens, position, profile);
  names.push_back(prev_feature_name(prev_label));
  names.push_back(prevprev_feature_name(prevprev_label, prev_label));
  if (!extra_name.empty()) names.emplace_back(extra_name);
  return names;
}

SparseVector lookup_features(const std::vector<std::string>& names,
                             const Dictionary& dict) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(names.size());
  for (const std::string& n : names) {
    if (auto id = dict.lookup(n)) entries.push_back({*id, 1.0});
  }
  // Indicators stay binary even when a name repeats at one position.
  std::sort(entries.begin(), entries.end(),
            [](const SparseVector::Entry& a, const SparseVector::Entry& b) {
              return a.id.value < b.id.value;
            });
  entries.erase(
      std::unique(entries.begin(), entries.end(),
                  [](const SparseVector::Entry& a, const SparseVector::Entry& b) {
                    return a.id.value == b.id.value;
                  }),
      entries.end());
  return SparseVector::accumulate(std::move(entries));
}

namespace {

/// validity[prev_row][cand]: row 0 is begin-of-sentence, row i+1 label i.
std::vector<std::vector<char>> validity_mask(const LabelScheme& scheme,
                                             const LabelDictionary& labels) {
  const std::size_t n = labels.size();
  std::vector<std::vector<char>> mask(n + 1, std::vector<char>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    const std::string& cand = labels.name_of(LabelId{(std::uint32_t)c});
    mask[0][c] = scheme.valid(kBosMarker, cand) ? 1 : 0;
    for (std::size_t p = 0; p < n; ++p) {
      mask[p + 1][c] =
          scheme.valid(labels.name_of(LabelId{(std::uint32_t)p}), cand) ? 1
                                                                        : 0;
    }
  }
  return mask;
}

}  // namespace

std::vector<LabelId> decode_greedy(const Model& model,
                                   const std::vector<std::string>& tokens,
                                   const LabelScheme& scheme,
                                   const std::optional<DomainId>& domain,
                                   const std::vector<std::string>* extra) {
  if (model.schema && !domain) {
    throw Error("decoding with an augmented model needs the sentence's "
                "domain");
  }
  if (model.schema && domain->index >= model.schema->domain_count()) {
    throw Error("domain index " + std::to_string(domain->index) +
                " not in the model's schema");
  }
  if (extra && extra->size() != tokens.size()) {
    throw Error("extra feature list length does not match the sentence");
  }
  std::vector<LabelId> out;
  if (tokens.empty()) return out;
  out.reserve(tokens.size());

  const auto mask = validity_mask(scheme, model.labels);
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::string_view prev =
        t > 0 ? std::string_view(model.labels.name_of(out[t - 1]))
              : std::string_view(kBosMarker);
    std::string_view prevprev =
        t > 1 ? std::string_view(model.labels.name_of(out[t - 2]))
              : std::string_view(kBosMarker);
    auto names = step_feature_names(tokens, t, prev, prevprev, model.profile,
                                    extra ? std::string_view((*extra)[t])
                                          : std::string_view{});
    SparseVector x = lookup_features(names, model.features);
    if (model.schema) x = augment_vector(x, *domain, *model.schema);
    std::vector<double> scores = model.scores(x);
    const std::vector<char>& row = mask[t > 0 ? out[t - 1].value + 1 : 0];
    int best = -1;
    for (std::size_t c = 0; c < scores.size(); ++c) {
      if (!row[c]) continue;
      if (best < 0 || scores[c] > scores[best]) best = static_cast<int>(c);
    }
    if (best < 0) {
      throw Error("no valid label at position " + std::to_string(t) +
                  " under the active label scheme");
    }
    out.push_back(LabelId{static_cast<std::uint32_t>(best)});
  }
  return out;
}

Model train_sequence(const std::vector<SequenceCorpus>& corpora,
                     const std::vector<TaggedSentence>& dev,
                     const DomainId& dev_domain, const LabelDictionary& labels,
                     const SequenceTrainOptions& opt,
                     const std::vector<std::vector<std::string>>* dev_extra,
                     SequenceTrainDiagnostics* diag) {
  if (corpora.empty()) throw Error("no training corpora supplied");
  for (const SequenceCorpus& c : corpora) {
    if (!c.sentences) throw Error("null corpus in training set");
  }
  if (labels.size() < 2) {
    throw Error("training needs at least 2 registered labels");
  }
  if (dev_extra && dev_extra->size() != dev.size()) {
    throw Error("dev extra-feature list does not match the dev corpus");
  }
  if (opt.prior_weights && opt.augment) {
    throw Error("the prior-weighted setup runs in the un-augmented space");
  }

  // Pass 1: intern every feature name the training pool can produce.
  Dictionary dict;
  if (opt.fixed_dictionary) {
    dict = *opt.fixed_dictionary;
  } else {
    auto intern_corpus = [&](const std::vector<TaggedSentence>& sentences,
                             const std::vector<std::vector<std::string>>*
                                 extra) {
      for (std::size_t si = 0; si < sentences.size(); ++si) {
        const TaggedSentence& s = sentences[si];
        for (std::size_t t = 0; t < s.tokens.size(); ++t) {
          std::string_view prev =
              t > 0 ? std::string_view(labels.name_of(s.labels[t - 1]))
                    : std::string_view(kBosMarker);
          std::string_view prevprev =
              t > 1 ? std::string_view(labels.name_of(s.labels[t - 2]))
                    : std::string_view(kBosMarker);
          std::string_view extra_name =
              extra ? std::string_view((*extra)[si][t]) : std::string_view{};
          for (const std::string& n :
               step_feature_names(s.tokens, t, prev, prevprev, opt.profile,
                                  extra_name)) {
            dict.intern(n);
          }
        }
      }
    };
    for (const SequenceCorpus& corpus : corpora) {
      intern_corpus(*corpus.sentences, corpus.extra);
    }
    for (const auto* extra_corpus : opt.extra_vocab) {
      intern_corpus(*extra_corpus, nullptr);
    }
  }
  dict.freeze();

  std::optional<DomainSchema> schema;
  if (opt.augment) {
    std::vector<std::string> names;
    names.reserve(corpora.size());
    for (std::size_t i = 0; i < corpora.size(); ++i) {
      if (corpora[i].domain.index != i) {
        throw Error("corpus domains must be indexed in schema order");
      }
      names.push_back(corpora[i].domain.name);
    }
    schema.emplace(std::move(names), dict.size());
    if (dev_domain.index >= schema->domain_count()) {
      throw Error("dev domain is not in the schema");
    }
  }

  // Pass 2: build the per-token training instances against gold history.
  auto build_instance = [&](const TaggedSentence& s, std::size_t t,
                            std::string_view extra_name,
                            const DomainId& dom) {
    std::string_view prev =
        t > 0 ? std::string_view(labels.name_of(s.labels[t - 1]))
              : std::string_view(kBosMarker);
    std::string_view prevprev =
        t > 1 ? std::string_view(labels.name_of(s.labels[t - 2]))
              : std::string_view(kBosMarker);
    Instance inst;
    inst.x = lookup_features(
        step_feature_names(s.tokens, t, prev, prevprev, opt.profile,
                           extra_name),
        dict);
    if (schema) inst.x = augment_vector(inst.x, dom, *schema);
    inst.y = s.labels[t];
    inst.domain = dom;
    return inst;
  };

  // built[corpus][sentence] holds that sentence's token instances.
  std::vector<std::vector<std::vector<Instance>>> built(corpora.size());
  std::size_t total_instances = 0;
  for (std::size_t ci = 0; ci < corpora.size(); ++ci) {
    const auto& sentences = *corpora[ci].sentences;
    built[ci].resize(sentences.size());
    for (std::size_t si = 0; si < sentences.size(); ++si) {
      const TaggedSentence& s = sentences[si];
      built[ci][si].reserve(s.tokens.size());
      for (std::size_t t = 0; t < s.tokens.size(); ++t) {
        std::string_view extra_name =
            corpora[ci].extra ? std::string_view((*corpora[ci].extra)[si][t])
                              : std::string_view{};
        built[ci][si].push_back(
            build_instance(s, t, extra_name, corpora[ci].domain));
        ++total_instances;
      }
    }
  }
  if (total_instances == 0) throw Error("training corpora hold no tokens");

  const double w = opt.subsample_weight;
  if (w < 0.0) throw Error("subsample weight must be >= 0");
  const double whole = std::floor(w);
  const double frac = w - whole;
  Rng sampling_rng(opt.sampling_seed);

  auto epoch_instances = [&](unsigned) {
    std::vector<const Instance*> out;
    out.reserve(total_instances);
    for (std::size_t ci = 0; ci < corpora.size(); ++ci) {
      for (const auto& sentence : built[ci]) {
        std::size_t copies = 1;
        if (corpora[ci].subsample) {
          copies = static_cast<std::size_t>(whole);
          if (frac > 0.0 && sampling_rng.unit() < frac) ++copies;
        }
        for (std::size_t k = 0; k < copies; ++k) {
          for (const Instance& inst : sentence) out.push_back(&inst);
        }
      }
    }
    return out;
  };

  // Metadata probe used for per-iteration dev decoding.
  Model probe;
  probe.features = dict;
  probe.labels = labels;
  probe.schema = schema;
  probe.profile = opt.profile;
  probe.scheme_kind = opt.scheme.descriptor();

  std::vector<Instance> dev_cls;  // gold-history instances, diagnostics only
  if (diag) {
    for (std::size_t si = 0; si < dev.size(); ++si) {
      const TaggedSentence& s = dev[si];
      for (std::size_t t = 0; t < s.tokens.size(); ++t) {
        std::string_view extra_name =
            dev_extra ? std::string_view((*dev_extra)[si][t])
                      : std::string_view{};
        dev_cls.push_back(build_instance(s, t, extra_name, dev_domain));
      }
    }
  }

  bool select = opt.dev_selection;
  if (select && dev.empty()) {
    std::cerr << "warning: dev selection requested but the dev set is empty; "
                 "keeping the last iteration\n";
    select = false;
  }

  auto with_prior = [&](const DenseWeights& avg) {
    if (!opt.prior_weights) return avg;
    DenseWeights sum = avg;
    for (std::size_t c = 0; c < sum.size(); ++c) {
      for (std::size_t i = 0; i < sum[c].size(); ++i) {
        sum[c][i] += (*opt.prior_weights)[c][i];
      }
    }
    return sum;
  };

  std::function<double(const DenseWeights&)> dev_eval;
  if (select) {
    dev_eval = [&](const DenseWeights& avg_raw) {
      const DenseWeights avg = with_prior(avg_raw);
      probe.weights = avg;
      std::size_t wrong = 0, total = 0;
      for (std::size_t si = 0; si < dev.size(); ++si) {
        const TaggedSentence& s = dev[si];
        auto pred = decode_greedy(probe, s.tokens, opt.scheme,
                                  schema ? std::optional<DomainId>(dev_domain)
                                         : std::nullopt,
                                  dev_extra ? &(*dev_extra)[si] : nullptr);
        for (std::size_t t = 0; t < s.labels.size(); ++t) {
          if (pred[t] != s.labels[t]) ++wrong;
        }
        total += s.labels.size();
      }
      double decode_err =
          total ? static_cast<double>(wrong) / static_cast<double>(total) : 0.0;
      if (diag) {
        std::size_t cls_wrong = 0;
        for (const Instance& inst : dev_cls) {
          std::vector<double> s(avg.size());
          for (std::size_t c = 0; c < avg.size(); ++c) {
            s[c] = dot(avg[c], inst.x);
          }
          if (argmax_score(s) != inst.y.value) ++cls_wrong;
        }
        diag->dev_decode_errors.push_back(decode_err);
        diag->dev_classification_errors.push_back(
            dev_cls.empty()
                ? 0.0
                : static_cast<double>(cls_wrong) /
                      static_cast<double>(dev_cls.size()));
      }
      return decode_err;
    };
  }

  const std::size_t dim = schema ? schema->augmented_dim() : dict.size();
  if (opt.prior_weights &&
      (opt.prior_weights->size() != labels.size() ||
       (!opt.prior_weights->empty() &&
        (*opt.prior_weights)[0].size() != dim))) {
    throw Error("prior weights do not match the training space");
  }
  AveragedPerceptron p(labels.size(), dim);
  if (opt.prior_weights) p.set_score_offset(opt.prior_weights);
  Rng shuffle_rng(opt.shuffle_seed);
  EpochRunResult run = run_epochs(p, epoch_instances, opt.iterations,
                                  shuffle_rng, dev_eval);

  Model model;
  model.weights = with_prior(run.averaged);
  model.features = std::move(dict);
  model.labels = labels;
  model.schema = std::move(schema);
  model.profile = opt.profile;
  model.scheme_kind = opt.scheme.descriptor();
  model.chosen_iteration = run.chosen_iteration;
  model.dev_errors = std::move(run.dev_errors);
  return model;
}

}  // namespace augtk
