#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fairrank/types.hpp"

namespace fairrank::textprep {

// Ordered lowercase terms; no term is empty or contains whitespace.
using TokenStream = std::vector<std::string>;

// Deterministic tokenizer shared by documents and queries:
//   - UTF-8 input; invalid byte sequences act as separators
//   - simple case folding (ASCII, Latin-1, Latin Extended-A, Greek, Cyrillic)
//   - split on any non-alphanumeric codepoint
//   - drop tokens shorter than 2 codepoints, keep digits
// No stemming, no stopwords. Text is expected to be English or pre-translated.
TokenStream tokenize(std::string_view text);

// Title and abstract joined by a single space; absent parts contribute nothing.
std::string doc_text(const PaperDoc& doc);

// The tokenizer's case folding applied to a whole string, bytes otherwise
// untouched. Used for dictionary keys (names, affiliations).
std::string fold_case(std::string_view text);

}  // namespace fairrank::textprep
