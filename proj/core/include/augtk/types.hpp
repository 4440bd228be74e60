#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace augtk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure carrying a 1-based line number when known (0 = unknown).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Dense index of a feature name within one dictionary.
struct FeatureId {
  std::uint32_t value = 0;
  auto operator<=>(const FeatureId&) const = default;
};

/// Dense index of a label name within one label dictionary.
struct LabelId {
  std::uint32_t value = 0;
  auto operator<=>(const LabelId&) const = default;
};

/// Identity of one domain: its position in the owning schema's ordered
/// domain list plus the human-readable name.  Two DomainIds are the same
/// domain iff their indices match.
struct DomainId {
  std::uint32_t index = 0;
  std::string name;

  friend bool operator==(const DomainId& a, const DomainId& b) {
    return a.index == b.index;
  }
};

/// Sparse real vector keyed by feature id.  Entries are unique, nonzero and
/// iterate in ascending id order, so serializing a vector twice yields
/// identical bytes.
class SparseVector {
 public:
  struct Entry {
    FeatureId id;
    double value = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;

  /// Builds from possibly unsorted, possibly repeated (id, value) pairs.
  /// Repeated ids accumulate; entries that end up exactly zero are dropped.
  static SparseVector accumulate(std::vector<Entry> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const Entry& a, const Entry& b) { return a.id < b.id; });
    SparseVector out;
    out.entries_.reserve(pairs.size());
    for (const Entry& e : pairs) {
      if (!out.entries_.empty() && out.entries_.back().id == e.id) {
        out.entries_.back().value += e.value;
      } else {
        out.entries_.push_back(e);
      }
    }
    std::erase_if(out.entries_, [](const Entry& e) { return e.value == 0.0; });
    return out;
  }

  /// Value at `id`, 0.0 when absent.
  double at(FeatureId id) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), id,
        [](const Entry& e, FeatureId key) { return e.id < key; });
    return (it != entries_.end() && it->id == id) ? it->value : 0.0;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea && ib != eb) {
    if (ia->id < ib->id) {
      ++ia;
    } else if (ib->id < ia->id) {
      ++ib;
    } else {
      sum += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

/// Dense-sparse dot product; sparse ids beyond the dense extent contribute 0.
inline double dot(std::span<const double> dense, const SparseVector& sparse) {
  double sum = 0.0;
  for (const auto& e : sparse.entries()) {
    if (e.id.value < dense.size()) sum += dense[e.id.value] * e.value;
  }
  return sum;
}

inline double norm_squared(const SparseVector& v) {
  double sum = 0.0;
  for (const auto& e : v.entries()) sum += e.value * e.value;
  return sum;
}

/// One labeled classification example.
struct Instance {
  SparseVector x;
  LabelId y;
  DomainId domain;
};

/// A token sequence with per-token gold labels, tagged with its domain.
/// Invariant: |tokens| == |labels| > 0.
struct TaggedSentence {
  std::vector<std::string> tokens;
  std::vector<LabelId> labels;
  DomainId domain;
};

}  // namespace augtk
