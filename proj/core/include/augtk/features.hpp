#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "augtk/dictionary.hpp"
#include "augtk/types.hpp"

namespace augtk {

/// Case-insensitive word list.  Words are stored lowercased (ASCII).
struct Gazetteer {
  std::string name;
  std::unordered_set<std::string> words;

  /// Reads one entry per line, UTF-8, skipping blank lines.
  static Gazetteer load(std::string name, std::istream& in);

  bool contains(std::string_view token) const;
};

/// Which token features to emit.
///
///  - standard: word identity at offsets -1/0/+1, lowercased word,
///    suffix-stripped stem, character shape class, prefixes and suffixes of
///    lengths 1-3, plus membership features for any configured gazetteers.
///  - recap: exactly word identity at -1/0/+1 and 1-3 letter
///    prefixes/suffixes.
struct FeatureProfile {
  enum class Kind { standard, recap };

  Kind kind = Kind::standard;
  std::vector<Gazetteer> gazetteers;  // standard profile only

  std::string descriptor() const;
  static FeatureProfile from_descriptor(std::string_view name);
};

inline constexpr const char* kBosMarker = "<s>";
inline constexpr const char* kEosMarker = "</s>";

/// ASCII lowercase copy; non-ASCII bytes pass through unchanged.
std::string ascii_lower(std::string_view word);

/// Strips one of -est/-ing/-ed/-es/-er/-ly/-s (longest match first) when at
/// least three characters remain; otherwise returns the word unchanged.
std::string stem(std::string_view word);

/// Maps characters to classes A/a/0/- and compresses runs of two or more to
/// "c+", e.g. "Monitor" -> "Aa+", "USA" -> "A+", "iPhone4" -> "aAa+0".
std::string shape_class(std::string_view word);

/// Feature names for one token position; a pure function of (tokens,
/// position, profile).  Out-of-range neighbours use the <s> / </s> markers.
/// Throws when position is out of range.
std::vector<std::string> token_feature_names(
    const std::vector<std::string>& tokens, std::size_t position,
    const FeatureProfile& profile);

/// Interns the emitted names and returns the binary feature vector (all
/// values 1.0).  With an unfrozen dictionary new names are added; with a
/// frozen one unknown names are skipped.
SparseVector extract_token_features(const std::vector<std::string>& tokens,
                                    std::size_t position,
                                    const FeatureProfile& profile,
                                    Dictionary& dict);

}  // namespace augtk
