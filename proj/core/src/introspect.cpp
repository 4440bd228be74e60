#include "augtk/introspect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace augtk {

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string nearest_matches(const Dictionary& dict, std::string_view query,
                            std::size_t count) {
  std::vector<std::pair<std::size_t, const std::string*>> ranked;
  ranked.reserve(dict.size());
  for (const std::string& name : dict.names()) {
    ranked.emplace_back(edit_distance(query, name), &name);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return *a.second < *b.second;
            });
  std::string out;
  for (std::size_t i = 0; i < ranked.size() && i < count; ++i) {
    if (i) out += ", ";
    out += *ranked[i].second;
  }
  return out;
}

}  // namespace

WeightGrid weight_slice(const Model& model, std::string_view feature_name,
                        const std::vector<std::string>& classes) {
  if (!model.schema) {
    throw Error("per-domain weight views need an augmented model");
  }
  auto fid = model.features.lookup(feature_name);
  if (!fid) {
    throw Error("unknown feature \"" + std::string(feature_name) +
                "\"; nearest matches: " +
                nearest_matches(model.features, feature_name, 5));
  }
  const DomainSchema& schema = *model.schema;
  const std::size_t F = schema.base_dim();

  WeightGrid grid;
  grid.feature = std::string(feature_name);
  grid.col_labels.push_back("*");
  for (const std::string& d : schema.domain_names()) {
    grid.col_labels.push_back(d);
  }

  std::vector<std::uint32_t> class_ids;
  if (classes.empty()) {
    for (std::uint32_t c = 0; c < model.labels.size(); ++c) {
      class_ids.push_back(c);
    }
  } else {
    for (const std::string& name : classes) {
      auto id = model.labels.lookup(name);
      if (!id) throw Error("unknown class label: " + name);
      class_ids.push_back(id->value);
    }
  }

  for (std::uint32_t c : class_ids) {
    grid.row_labels.push_back(model.labels.name_of(LabelId{c}));
    std::vector<double> row;
    row.reserve(schema.domain_count() + 1);
    row.push_back(model.weights[c][fid->value]);
    for (std::size_t k = 0; k < schema.domain_count(); ++k) {
      row.push_back(model.weights[c][(k + 1) * F + fid->value]);
    }
    grid.values.push_back(std::move(row));
  }
  return grid;
}

namespace {

double grid_max_abs(const WeightGrid& grid) {
  double m = 0.0;
  for (const auto& row : grid.values) {
    for (double v : row) m = std::max(m, std::abs(v));
  }
  return m;
}

/// Display-width-1 box glyph for one cell; empty string for zero weight.
std::string cell_glyph(double v, double max_abs) {
  if (v == 0.0 || max_abs == 0.0) return "";
  double r = std::abs(v) / max_abs;
  if (v < 0.0) {
    if (r <= 1.0 / 3.0) return "▪";  // small black square
    if (r <= 2.0 / 3.0) return "◼";  // medium black square
    return "■";                      // large black square
  }
  if (r <= 1.0 / 3.0) return "▫";  // small white square
  if (r <= 2.0 / 3.0) return "◻";  // medium white square
  return "□";                      // large white square
}

void append_padded(std::string& out, const std::string& text,
                   std::size_t display_width, std::size_t pad_to) {
  out += text;
  for (std::size_t i = display_width; i < pad_to; ++i) out.push_back(' ');
}

}  // namespace

std::string hinton_ascii(const WeightGrid& grid) {
  const double max_abs = grid_max_abs(grid);
  std::size_t row_w = 0;
  for (const auto& r : grid.row_labels) row_w = std::max(row_w, r.size());
  row_w = std::max(row_w, grid.feature.size());

  std::string out;
  out += "feature " + grid.feature + "\n";
  append_padded(out, "", 0, row_w);
  for (const auto& col : grid.col_labels) {
    out += "  ";
    out += col;
  }
  out += "\n";
  for (std::size_t r = 0; r < grid.row_labels.size(); ++r) {
    append_padded(out, grid.row_labels[r], grid.row_labels[r].size(), row_w);
    for (std::size_t c = 0; c < grid.col_labels.size(); ++c) {
      out += "  ";
      std::string glyph = cell_glyph(grid.values[r][c], max_abs);
      // Pad to the column label width; a glyph displays one column wide.
      append_padded(out, glyph, glyph.empty() ? 0 : 1,
                    grid.col_labels[c].size());
    }
    out += "\n";
  }
  return out;
}

std::string hinton_svg(const WeightGrid& grid) {
  const double max_abs = grid_max_abs(grid);
  const double cell = 28.0;
  const double box_max = 24.0;
  const double font = 12.0;
  std::size_t row_chars = 0;
  for (const auto& r : grid.row_labels) row_chars = std::max(row_chars, r.size());
  const double left = 12.0 + static_cast<double>(row_chars) * font * 0.62;
  const double top = 26.0;
  const double width = left + cell * static_cast<double>(grid.col_labels.size()) + 8.0;
  const double height =
      top + cell * static_cast<double>(grid.row_labels.size()) + 8.0;

  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
         " " + num(height) + "\">\n";
  out += "<title>" + grid.feature + "</title>\n";
  for (std::size_t c = 0; c < grid.col_labels.size(); ++c) {
    double x = left + cell * (static_cast<double>(c) + 0.5);
    out += "<text x=\"" + num(x) + "\" y=\"" + num(top - 8.0) +
           "\" font-family=\"monospace\" font-size=\"" + num(font) +
           "\" text-anchor=\"middle\">" + grid.col_labels[c] + "</text>\n";
  }
  for (std::size_t r = 0; r < grid.row_labels.size(); ++r) {
    double y = top + cell * (static_cast<double>(r) + 0.5);
    out += "<text x=\"" + num(left - 6.0) + "\" y=\"" + num(y + font * 0.35) +
           "\" font-family=\"monospace\" font-size=\"" + num(font) +
           "\" text-anchor=\"end\">" + grid.row_labels[r] + "</text>\n";
    for (std::size_t c = 0; c < grid.col_labels.size(); ++c) {
      double v = grid.values[r][c];
      if (v == 0.0 || max_abs == 0.0) continue;
      // Box area proportional to |weight|: side grows with sqrt.
      double side = box_max * std::sqrt(std::abs(v) / max_abs);
      double cx = left + cell * (static_cast<double>(c) + 0.5);
      double x = cx - side / 2.0;
      double yy = y - side / 2.0;
      out += "<rect x=\"" + num(x) + "\" y=\"" + num(yy) + "\" width=\"" +
             num(side) + "\" height=\"" + num(side) + "\"";
      if (v < 0.0) {
        out += " fill=\"black\"/>\n";
      } else {
        out += " fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
      }
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace augtk
