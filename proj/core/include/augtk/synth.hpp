#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "augtk/dictionary.hpp"
#include "augtk/types.hpp"

namespace augtk {

/// Parameters of the planted-signal corpus generator.
///
/// Three vocabularies drive the token mix:
///  - general: each type carries one label shared by every domain (type 0 is
///    the literal "the", always labeled DT); types are drawn with a Zipf
///    skew, so small corpora miss the tail.
///  - conflict: types whose label depends on the domain — VB in domain 0,
///    NN everywhere else (type 0 is the literal "monitor"); drawn uniformly.
///  - noise: types labeled uniformly at random per occurrence, an
///    irreducible error floor.
struct SynthConfig {
  std::uint64_t seed = 0;
  std::size_t domains = 2;
  std::vector<std::size_t> train_sentences;  // one count per domain
  std::size_t dev_sentences = 50;            // drawn from the last domain
  std::size_t test_sentences = 200;          // drawn from the last domain
  std::size_t general_vocab = 300;
  std::size_t conflict_vocab = 10;
  std::size_t noise_vocab = 20;
  double conflict_rate = 0.2;  // per-slot probability of a conflict token
  double noise_rate = 0.05;    // per-slot probability of a noise token
  std::size_t min_len = 6;
  std::size_t max_len = 10;
};

struct SynthCorpus {
  std::vector<std::string> domain_names;           // d0 .. dK-1
  std::vector<std::vector<TaggedSentence>> train;  // per domain
  std::vector<TaggedSentence> dev;                 // last domain
  std::vector<TaggedSentence> test;                // last domain
};

/// Deterministic corpus generation; labels are interned into the supplied
/// dictionary (DT, NN, VB, JJ).  Rejects degenerate configurations (fewer
/// than 2 domains, empty vocabularies, bad lengths or rates).
SynthCorpus generate_synthetic(const SynthConfig& cfg,
                               LabelDictionary& labels);

}  // namespace augtk
