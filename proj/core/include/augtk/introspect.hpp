#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "augtk/learner.hpp"

namespace augtk {

/// Per-domain weight view of one feature: rows are class labels, column 0
/// ("*") the shared copy, then one column per domain in schema order.
struct WeightGrid {
  std::string feature;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<double>> values;  // [row][col]
};

/// Extracts the grid for one feature of an augmented model.  `classes`
/// restricts and orders the rows; empty means all classes in id order.
/// Unknown feature names raise an error listing the nearest dictionary
/// matches; un-augmented models are rejected.
WeightGrid weight_slice(const Model& model, std::string_view feature_name,
                        const std::vector<std::string>& classes = {});

/// Character rendering: box glyphs bucketed by |weight| relative to the grid
/// maximum, filled glyphs for negative weights, outlined for positive,
/// blank for zero.  Output bytes depend only on the grid.
std::string hinton_ascii(const WeightGrid& grid);

/// SVG rendering: one square per cell, area proportional to |weight|
/// normalized by the grid maximum, black fill for negative, white with a
/// black outline for positive, nothing for zero.  Deterministic bytes.
std::string hinton_svg(const WeightGrid& grid);

}  // namespace augtk
