#include "augtk/synth.hpp"

#include <algorithm>

#include "augtk/rng.hpp"

namespace augtk {

namespace {

constexpr const char* kLabelNames[] = {"DT", "NN", "VB", "JJ"};
constexpr std::size_t kLabelCount = 4;

struct Vocab {
  std::vector<std::string> general;
  std::vector<std::string> conflict;
  std::vector<std::string> noise;
  std::vector<double> zipf_cum;  // cumulative Zipf weights over general
};

Vocab build_vocab(const SynthConfig& cfg) {
  Vocab v;
  v.general.reserve(cfg.general_vocab);
  v.general.emplace_back("the");
  for (std::size_t i = 1; i < cfg.general_vocab; ++i) {
    v.general.push_back("gen" + std::to_string(i));
  }
  v.conflict.reserve(cfg.conflict_vocab);
  v.conflict.emplace_back("monitor");
  for (std::size_t i = 1; i < cfg.conflict_vocab; ++i) {
    v.conflict.push_back("cfl" + std::to_string(i));
  }
  for (std::size_t i = 0; i < cfg.noise_vocab; ++i) {
    v.noise.push_back("nz" + std::to_string(i));
  }
  v.zipf_cum.reserve(cfg.general_vocab);
  double total = 0.0;
  for (std::size_t r = 0; r < cfg.general_vocab; ++r) {
    total += 1.0 / static_cast<double>(r + 1);
    v.zipf_cum.push_back(total);
  }
  return v;
}

void validate(const SynthConfig& cfg) {
  if (cfg.domains < 2) throw Error("synthetic generation needs >= 2 domains");
  if (cfg.train_sentences.size() != cfg.domains) {
    throw Error("train_sentences must list one count per domain");
  }
  if (cfg.general_vocab == 0 || cfg.conflict_vocab == 0) {
    throw Error("general and conflict vocabularies must be non-empty");
  }
  if (cfg.noise_rate > 0.0 && cfg.noise_vocab == 0) {
    throw Error("noise_rate > 0 needs a non-empty noise vocabulary");
  }
  if (cfg.conflict_rate < 0.0 || cfg.noise_rate < 0.0 ||
      cfg.conflict_rate + cfg.noise_rate > 1.0) {
    throw Error("token rates must be non-negative and sum to at most 1");
  }
  if (cfg.min_len < 1 || cfg.max_len < cfg.min_len) {
    throw Error("sentence length bounds must satisfy 1 <= min <= max");
  }
}

}  // namespace

SynthCorpus generate_synthetic(const SynthConfig& cfg,
                               LabelDictionary& labels) {
  validate(cfg);
  std::vector<LabelId> lab;
  lab.reserve(kLabelCount);
  for (const char* n : kLabelNames) lab.push_back(labels.intern(n));
  const LabelId DT = lab[0], NN = lab[1], VB = lab[2];

  const Vocab vocab = build_vocab(cfg);
  Rng rng(cfg.seed);

  auto zipf_draw = [&]() -> std::size_t {
    double u = rng.unit() * vocab.zipf_cum.back();
    auto it = std::upper_bound(vocab.zipf_cum.begin(), vocab.zipf_cum.end(), u);
    return static_cast<std::size_t>(it - vocab.zipf_cum.begin());
  };

  auto general_label = [&](std::size_t type) {
    return type == 0 ? DT : lab[type % kLabelCount];
  };

  auto make_sentence = [&](const DomainId& dom) {
    TaggedSentence s;
    s.domain = dom;
    std::size_t len =
        cfg.min_len + static_cast<std::size_t>(
                          rng.below(cfg.max_len - cfg.min_len + 1));
    s.tokens.reserve(len);
    s.labels.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      double u = rng.unit();
      if (u < cfg.conflict_rate) {
        std::size_t t = static_cast<std::size_t>(rng.below(cfg.conflict_vocab));
        s.tokens.push_back(vocab.conflict[t]);
        s.labels.push_back(dom.index == 0 ? VB : NN);
      } else if (u < cfg.conflict_rate + cfg.noise_rate) {
        std::size_t t = static_cast<std::size_t>(rng.below(cfg.noise_vocab));
        s.tokens.push_back(vocab.noise[t]);
        s.labels.push_back(lab[rng.below(kLabelCount)]);
      } else {
        std::size_t t = zipf_draw();
        s.tokens.push_back(vocab.general[t]);
        s.labels.push_back(general_label(t));
      }
    }
    return s;
  };

  SynthCorpus out;
  out.domain_names.reserve(cfg.domains);
  for (std::size_t k = 0; k < cfg.domains; ++k) {
    out.domain_names.push_back("d" + std::to_string(k));
  }
  out.train.resize(cfg.domains);
  for (std::size_t k = 0; k < cfg.domains; ++k) {
    DomainId dom{static_cast<std::uint32_t>(k), out.domain_names[k]};
    out.train[k].reserve(cfg.train_sentences[k]);
    for (std::size_t i = 0; i < cfg.train_sentences[k]; ++i) {
      out.train[k].push_back(make_sentence(dom));
    }
  }
  DomainId last{static_cast<std::uint32_t>(cfg.domains - 1),
                out.domain_names.back()};
  out.dev.reserve(cfg.dev_sentences);
  for (std::size_t i = 0; i < cfg.dev_sentences; ++i) {
    out.dev.push_back(make_sentence(last));
  }
  out.test.reserve(cfg.test_sentences);
  for (std::size_t i = 0; i < cfg.test_sentences; ++i) {
    out.test.push_back(make_sentence(last));
  }
  return out;
}

}  // namespace augtk
