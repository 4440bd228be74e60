#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "augtk/types.hpp"

namespace augtk {

/// Ordered registry of K domain names plus the implicit general slot.
/// The augmented space is laid out in K+1 blocks of base_dim ids each:
/// block 0 holds the shared copy of every feature, block k+1 the copy owned
/// by domain k.
class DomainSchema {
 public:
  /// Domain names must be non-empty, unique, and free of "::" (reserved as
  /// the name separator in the stream transform).  base_dim is the frozen
  /// feature dictionary size F.
  DomainSchema(std::vector<std::string> domains, std::size_t base_dim);

  std::size_t domain_count() const { return domains_.size(); }
  std::size_t base_dim() const { return base_dim_; }
  std::size_t augmented_dim() const {
    return (domains_.size() + 1) * base_dim_;
  }

  const std::vector<std::string>& domain_names() const { return domains_; }

  DomainId domain(std::string_view name) const;
  DomainId domain_at(std::size_t index) const;
  bool has_domain(std::string_view name) const;

  friend bool operator==(const DomainSchema&, const DomainSchema&) = default;

 private:
  std::vector<std::string> domains_;
  std::size_t base_dim_ = 0;
};

/// (K+1)*F for K >= 1 domains over an F-dimensional base space.
std::size_t augmented_dim(std::size_t base_dim, std::size_t domain_count);

/// Maps x to its augmented image: each entry (i, v) appears at id i (general
/// copy) and at id (d.index+1)*F + i (domain copy).  Ids at or beyond F are
/// rejected, so augmentation must follow the dictionary freeze.
SparseVector augment_vector(const SparseVector& x, const DomainId& d,
                            const DomainSchema& schema);

/// Text-level equivalent over one sparse-format line: the label passes
/// through, then every feature token appears verbatim followed by all tokens
/// again prefixed "<domain>::".  "name:value" tokens keep their value on both
/// copies.
std::string augment_stream_line(std::string_view line,
                                std::string_view domain_name);

/// Filters a whole stream through augment_stream_line, one line at a time
/// (memory bounded by the longest line, not the stream).  Blank lines pass
/// through untouched.  Returns the number of lines transformed.
std::size_t augment_stream(std::istream& in, std::ostream& out,
                           std::string_view domain_name);

}  // namespace augtk
