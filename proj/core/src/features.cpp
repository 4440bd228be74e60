#include "augtk/features.hpp"

#include <array>
#include <cctype>
#include <istream>

namespace augtk {

namespace {

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Gazetteer Gazetteer::load(std::string name, std::istream& in) {
  Gazetteer g;
  g.name = std::move(name);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    g.words.insert(ascii_lower(line));
  }
  return g;
}

bool Gazetteer::contains(std::string_view token) const {
  return words.contains(ascii_lower(token));
}

std::string FeatureProfile::descriptor() const {
  return kind == Kind::standard ? "standard" : "recap";
}

FeatureProfile FeatureProfile::from_descriptor(std::string_view name) {
  FeatureProfile p;
  if (name == "standard") {
    p.kind = Kind::standard;
  } else if (name == "recap") {
    p.kind = Kind::recap;
  } else {
    throw Error("unknown feature profile: " + std::string(name));
  }
  return p;
}

std::string ascii_lower(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string stem(std::string_view word) {
  static constexpr std::array<std::string_view, 7> suffixes = {
      "est", "ing", "ed", "es", "er", "ly", "s"};
  for (std::string_view suf : suffixes) {
    if (word.size() >= suf.size() + 3 && word.ends_with(suf)) {
      return std::string(word.substr(0, word.size() - suf.size()));
    }
  }
  return std::string(word);
}

std::string shape_class(std::string_view word) {
  std::string out;
  char prev = '\0';
  std::size_t run = 0;
  auto flush = [&] {
    if (run == 0) return;
    out.push_back(prev);
    if (run > 1) out.push_back('+');
  };
  for (char raw : word) {
    unsigned char c = static_cast<unsigned char>(raw);
    char cls = std::isupper(c) ? 'A' : std::islower(c) ? 'a' : std::isdigit(c) ? '0' : '-';
    if (cls == prev) {
      ++run;
    } else {
      flush();
      prev = cls;
      run = 1;
    }
  }
  flush();
  return out;
}

std::vector<std::string> token_feature_names(
    const std::vector<std::string>& tokens, std::size_t position,
    const FeatureProfile& profile) {
  if (position >= tokens.size()) {
    throw Error("token position " + std::to_string(position) +
                " out of range (sentence length " +
                std::to_string(tokens.size()) + ")");
  }
  const std::string& word = tokens[position];
  const std::string& prev = position > 0 ? tokens[position - 1] : std::string(kBosMarker);
  const std::string& next =
      position + 1 < tokens.size() ? tokens[position + 1] : std::string(kEosMarker);

  std::vector<std::string> names;
  names.reserve(profile.kind == FeatureProfile::Kind::standard ? 12 : 9);
  names.push_back("w=" + word);
  names.push_back("w-1=" + prev);
  names.push_back("w+1=" + next);
  if (profile.kind == FeatureProfile::Kind::standard) {
    names.push_back("lc=" + ascii_lower(word));
    names.push_back("stem=" + stem(word));
    names.push_back("shape=" + shape_class(word));
  }
  for (std::size_t len = 1; len <= 3 && len <= word.size(); ++len) {
    names.push_back("p" + std::to_string(len) + "=" + word.substr(0, len));
  }
  for (std::size_t len = 1; len <= 3 && len <= word.size(); ++len) {
    names.push_back("s" + std::to_string(len) + "=" + word.substr(word.size() - len));
  }
  if (profile.kind == FeatureProfile::Kind::standard) {
    for (const Gazetteer& g : profile.gazetteers) {
      if (g.contains(word)) names.push_back("gaz=" + g.name);
    }
  }
  return names;
}

SparseVector extract_token_features(const std::vector<std::string>& tokens,
                                    std::size_t position,
                                    const FeatureProfile& profile,
                                    Dictionary& dict) {
  std::vector<SparseVector::Entry> entries;
  for (const std::string& name : token_feature_names(tokens, position, profile)) {
    if (dict.frozen()) {
      if (auto id = dict.lookup(name)) entries.push_back({*id, 1.0});
    } else {
      entries.push_back({dict.intern(name), 1.0});
    }
  }
  return SparseVector::accumulate(std::move(entries));
}

}  // namespace augtk
