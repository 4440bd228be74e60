#pragma once

#include <filesystem>
#include <iosfwd>

#include "augtk/learner.hpp"

namespace augtk {

/// Versioned JSON model files carrying dictionaries, schema, feature
/// profile (gazetteer contents included), label scheme, averaged per-class
/// weights and the chosen iteration.  Serialization is canonical: saving the
/// same model twice yields identical bytes, and load(save(m)) restores every
/// field needed for prediction exactly.
inline constexpr int kModelFormatVersion = 1;

void save_model(const Model& model, std::ostream& out);
void save_model(const Model& model, const std::filesystem::path& path);

Model load_model(std::istream& in);
Model load_model(const std::filesystem::path& path);

}  // namespace augtk
