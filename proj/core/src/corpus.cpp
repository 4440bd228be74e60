#include "augtk/corpus.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace augtk {

namespace {

std::vector<std::string_view> split_columns(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) cols.push_back(line.substr(start, i - start));
  }
  return cols;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::vector<TaggedSentence> read_column_corpus(std::istream& in,
                                               const DomainId& domain,
                                               LabelDictionary& labels) {
  std::vector<TaggedSentence> sentences;
  TaggedSentence current;
  current.domain = domain;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      sentences.push_back(std::move(current));
      current = TaggedSentence{};
      current.domain = domain;
    }
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    auto cols = split_columns(line);
    if (cols.empty()) {
      flush();
      continue;
    }
    if (cols.size() < 2) {
      throw ParseError("expected at least 2 columns, got 1", line_no);
    }
    current.tokens.emplace_back(cols.front());
    current.labels.push_back(labels.intern(cols.back()));
  }
  flush();
  return sentences;
}

void write_column_corpus(const std::vector<TaggedSentence>& sentences,
                         const LabelDictionary& labels, std::ostream& out) {
  for (const TaggedSentence& s : sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      out << s.tokens[i] << '\t' << labels.name_of(s.labels[i]) << '\n';
    }
    out << '\n';
  }
}

std::vector<RawSentence> read_raw_column_corpus(std::istream& in) {
  std::vector<RawSentence> sentences;
  RawSentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      sentences.push_back(std::move(current));
      current = RawSentence{};
    }
  };
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    auto cols = split_columns(line);
    if (cols.empty()) {
      flush();
      continue;
    }
    current.lines.push_back(line);
    current.tokens.emplace_back(cols.front());
  }
  flush();
  return sentences;
}

std::vector<std::vector<std::string>> read_label_columns(std::istream& in) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;
  auto flush = [&] {
    if (!current.empty()) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    auto cols = split_columns(line);
    if (cols.empty()) {
      flush();
      continue;
    }
    if (cols.size() < 2) {
      throw ParseError("expected at least 2 columns, got 1", line_no);
    }
    current.emplace_back(cols.back());
  }
  flush();
  return sentences;
}

SparseLineView parse_sparse_line(std::string_view line) {
  auto tokens = split_columns(line);
  if (tokens.empty()) throw ParseError("line holds no label token");
  SparseLineView view;
  view.label = tokens.front();
  view.features.assign(tokens.begin() + 1, tokens.end());
  return view;
}

std::pair<std::string_view, double> split_feature_token(
    std::string_view token) {
  std::size_t colon = token.rfind(':');
  if (colon != std::string_view::npos && colon > 0) {
    std::string_view tail = token.substr(colon + 1);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(tail.data(), tail.data() + tail.size(), value);
    if (ec == std::errc{} && ptr == tail.data() + tail.size() &&
        !tail.empty()) {
      return {token.substr(0, colon), value};
    }
  }
  return {token, 1.0};
}

std::vector<Instance> read_sparse_lines(std::istream& in, Dictionary& features,
                                        LabelDictionary& labels,
                                        const DomainId& domain) {
  std::vector<Instance> instances;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    SparseLineView view;
    try {
      view = parse_sparse_line(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    Instance inst;
    inst.y = labels.intern(view.label);
    inst.domain = domain;
    std::vector<SparseVector::Entry> entries;
    entries.reserve(view.features.size());
    for (std::string_view tok : view.features) {
      auto [name, value] = split_feature_token(tok);
      if (features.frozen()) {
        if (auto id = features.lookup(name)) entries.push_back({*id, value});
      } else {
        entries.push_back({features.intern(name), value});
      }
    }
    inst.x = SparseVector::accumulate(std::move(entries));
    instances.push_back(std::move(inst));
  }
  return instances;
}

void write_sparse_lines(const std::vector<Instance>& instances,
                        const Dictionary& features,
                        const LabelDictionary& labels, std::ostream& out) {
  for (const Instance& inst : instances) {
    out << labels.name_of(inst.y);
    for (const auto& e : inst.x.entries()) {
      out << ' ' << features.name_of(e.id);
      if (e.value != 1.0) out << ':' << format_value(e.value);
    }
    out << '\n';
  }
}

std::string format_value(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace augtk
