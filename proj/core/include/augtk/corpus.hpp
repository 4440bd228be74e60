#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "augtk/dictionary.hpp"
#include "augtk/types.hpp"

namespace augtk {

/// Reads a CoNLL-style column corpus: whitespace-separated columns, first
/// column the token, last column the label, blank line between sentences.
/// Lines with fewer than two columns raise a ParseError naming the line.
/// Trailing blank lines are ignored; a file of only blank lines yields an
/// empty list.
std::vector<TaggedSentence> read_column_corpus(std::istream& in,
                                               const DomainId& domain,
                                               LabelDictionary& labels);

/// Writes token<TAB>label lines with a blank line after each sentence.
void write_column_corpus(const std::vector<TaggedSentence>& sentences,
                         const LabelDictionary& labels, std::ostream& out);

/// A sentence kept with its raw input lines, for writers that append a
/// prediction column without disturbing the original columns.  Lines may
/// have a single column (token only).
struct RawSentence {
  std::vector<std::string> lines;
  std::vector<std::string> tokens;
};

std::vector<RawSentence> read_raw_column_corpus(std::istream& in);

/// Last whitespace-separated column of each line, sentence by sentence.
/// Lines with a single column raise a ParseError.
std::vector<std::vector<std::string>> read_label_columns(std::istream& in);

// ---- sparse line format -----------------------------------------------------
//
// One instance per line: "label feat1 feat2 ...".  A feature token is either
// a bare name (value 1.0) or "name:value" where the text after the last ':'
// parses as a real number.  A line with no label token is a parse error.

struct SparseLineView {
  std::string_view label;
  std::vector<std::string_view> features;
};

/// Splits one line into label and feature tokens.  Throws ParseError when the
/// line holds no tokens.
SparseLineView parse_sparse_line(std::string_view line);

/// Splits a feature token into (name, value); bare names get value 1.0.
std::pair<std::string_view, double> split_feature_token(std::string_view token);

std::vector<Instance> read_sparse_lines(std::istream& in, Dictionary& features,
                                        LabelDictionary& labels,
                                        const DomainId& domain);

/// Writes instances so that read_sparse_lines() reproduces them exactly.
/// Entries appear in ascending id order; unit values print as bare names,
/// all other values with shortest round-trip formatting.
void write_sparse_lines(const std::vector<Instance>& instances,
                        const Dictionary& features,
                        const LabelDictionary& labels, std::ostream& out);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_value(double value);

}  // namespace augtk
