#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fatg {

// Lowercases ASCII letters, trims leading/trailing whitespace and collapses
// interior whitespace runs to a single space.  Idempotent; bytes outside
// ASCII pass through untouched.
std::string normalize_text(std::string_view raw);

// Splits an already-normalized string on single spaces.  Empty input gives
// an empty vector.
std::vector<std::string> split_words(std::string_view normalized);

// True for the placeholder values that never count as tokens: "", " " and
// the literal "nan" left behind by tabular exports.
bool is_blank_token(std::string_view token);

// Splits on a single-character separator without any unescaping; the
// separator characters are structural and may not appear inside fields.
std::vector<std::string> split_on(std::string_view text, char sep);

}  // namespace fatg
