#include "augtk/augment.hpp"

#include <istream>
#include <ostream>
#include <unordered_set>

#include "augtk/corpus.hpp"

namespace augtk {

DomainSchema::DomainSchema(std::vector<std::string> domains,
                           std::size_t base_dim)
    : domains_(std::move(domains)), base_dim_(base_dim) {
  if (domains_.empty()) throw Error("a domain schema needs at least 1 domain");
  std::unordered_set<std::string_view> seen;
  for (const std::string& name : domains_) {
    if (name.empty()) throw Error("domain names must be non-empty");
    if (name.find("::") != std::string::npos) {
      throw Error("domain name may not contain \"::\": " + name);
    }
    if (!seen.insert(name).second) {
      throw Error("duplicate domain name: " + name);
    }
  }
}

DomainId DomainSchema::domain(std::string_view name) const {
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (domains_[i] == name) {
      return DomainId{static_cast<std::uint32_t>(i), domains_[i]};
    }
  }
  throw Error("unknown domain: " + std::string(name));
}

DomainId DomainSchema::domain_at(std::size_t index) const {
  if (index >= domains_.size()) {
    throw Error("domain index " + std::to_string(index) +
                " out of range (schema has " +
                std::to_string(domains_.size()) + " domains)");
  }
  return DomainId{static_cast<std::uint32_t>(index), domains_[index]};
}

bool DomainSchema::has_domain(std::string_view name) const {
  for (const std::string& d : domains_) {
    if (d == name) return true;
  }
  return false;
}

std::size_t augmented_dim(std::size_t base_dim, std::size_t domain_count) {
  if (domain_count == 0) {
    throw Error("augmented_dim requires at least 1 domain");
  }
  return (domain_count + 1) * base_dim;
}

SparseVector augment_vector(const SparseVector& x, const DomainId& d,
                            const DomainSchema& schema) {
  if (d.index >= schema.domain_count()) {
    throw Error("domain index " + std::to_string(d.index) +
                " not in schema (" + std::to_string(schema.domain_count()) +
                " domains)");
  }
  const std::size_t F = schema.base_dim();
  const std::size_t offset = (d.index + 1) * F;
  std::vector<SparseVector::Entry> entries;
  entries.reserve(2 * x.size());
  for (const auto& e : x.entries()) {
    if (e.id.value >= F) {
      throw Error("feature id " + std::to_string(e.id.value) +
                  " outside the base space (F = " + std::to_string(F) + ")");
    }
    entries.push_back(e);
  }
  // Entries are already ascending; the domain block sits strictly above the
  // general block, so appending keeps the whole vector sorted.
  for (const auto& e : x.entries()) {
    entries.push_back(
        {FeatureId{static_cast<std::uint32_t>(offset + e.id.value)}, e.value});
  }
  return SparseVector::accumulate(std::move(entries));
}

std::string augment_stream_line(std::string_view line,
                                std::string_view domain_name) {
  if (domain_name.empty()) throw Error("domain name must be non-empty");
  if (domain_name.find("::") != std::string_view::npos) {
    throw Error("domain name may not contain \"::\": " +
                std::string(domain_name));
  }
  SparseLineView view = parse_sparse_line(line);
  std::string out;
  out.reserve(line.size() * 2 + view.features.size() * (domain_name.size() + 2));
  out.append(view.label);
  for (std::string_view f : view.features) {
    out.push_back(' ');
    out.append(f);
  }
  for (std::string_view f : view.features) {
    out.push_back(' ');
    out.append(domain_name);
    out.append("::");
    out.append(f);
  }
  return out;
}

std::size_t augment_stream(std::istream& in, std::ostream& out,
                           std::string_view domain_name) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t transformed = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      out << line << '\n';
      continue;
    }
    try {
      out << augment_stream_line(line, domain_name) << '\n';
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    ++transformed;
  }
  return transformed;
}

}  // namespace augtk
