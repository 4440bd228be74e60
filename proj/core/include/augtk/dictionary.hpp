#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "augtk/types.hpp"

namespace augtk {

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace detail

/// Bijective name <-> dense id registry.  Ids are assigned contiguously from
/// 0 in first-seen order.  Mutable during the build phase only: after
/// freeze() the registry is immutable and safe to share across threads.
template <typename Id>
class Interner {
 public:
  /// Returns the existing id for a seen name, otherwise assigns the next id.
  /// Interning a new name after freeze(), or an empty name, is an error.
  Id intern(std::string_view name) {
    if (name.empty()) throw Error("cannot intern an empty name");
    if (auto it = index_.find(name); it != index_.end()) return Id{it->second};
    if (frozen_) {
      throw Error("dictionary is frozen; unknown name: " + std::string(name));
    }
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return Id{id};
  }

  std::optional<Id> lookup(std::string_view name) const {
    if (auto it = index_.find(name); it != index_.end()) return Id{it->second};
    return std::nullopt;
  }

  const std::string& name_of(Id id) const {
    if (id.value >= names_.size()) {
      throw Error("id " + std::to_string(id.value) + " out of range (size " +
                  std::to_string(names_.size()) + ")");
    }
    return names_[id.value];
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  /// All names in ascending id order.
  const std::vector<std::string>& names() const { return names_; }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  friend bool operator==(const Interner& a, const Interner& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t, detail::StringHash,
                     std::equal_to<>>
      index_;
  bool frozen_ = false;
};

using Dictionary = Interner<FeatureId>;
using LabelDictionary = Interner<LabelId>;

}  // namespace augtk
