#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fatg/errors.hpp"

namespace fatg {

// One failure-analysis step: what was done, how, and on which machine.
// Fields are stored normalized, are never empty, and contain neither of the
// structural separators ';' and '|' (there is no escaping).
struct Triplet {
  std::string step_type;
  std::string substep;
  std::string equipment;

  bool operator==(const Triplet&) const = default;
};

// Builds a Triplet from raw field text, normalizing and validating each
// field.  Throws EmptyField for empty/placeholder fields and
// MalformedTriplet if a field contains a structural separator.
Triplet make_triplet(std::string_view step_type, std::string_view substep,
                     std::string_view equipment);

// An ordered failure-analysis sequence.  Corpus loading caps the length
// (default below); sequences produced by generation are bounded by the
// decoder's token budget instead.
struct FatSequence {
  std::vector<Triplet> triplets;

  std::size_t size() const { return triplets.size(); }
  bool empty() const { return triplets.empty(); }
  bool operator==(const FatSequence&) const = default;
};

inline constexpr std::size_t kDefaultMaxTriplets = 23;

// Parses "step; substep; equipment | step; substep; equipment | ...".
// Whitespace-only input yields an empty sequence.  Throws MalformedTriplet
// when a segment does not have exactly three fields or the sequence exceeds
// max_triplets, EmptyField for blank fields.
FatSequence parse_fat_sequence(std::string_view raw,
                               std::size_t max_triplets = kDefaultMaxTriplets);

// Renders fields joined by "; " and triplets joined by " | ".  parse and
// render round-trip: parse_fat_sequence(render_fat_sequence(s)) == s.
std::string render_fat_sequence(const FatSequence& seq);

enum class TokenMode { field, word };

// A tokenized sequence ready for scoring.  Tokens are normalized and never
// blank (the "", " " and "nan" placeholders are dropped).
struct TokenSeq {
  std::vector<std::string> tokens;
  TokenMode mode = TokenMode::field;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const TokenSeq&) const = default;
};

// Tokenizes a parsed sequence.  Field mode emits each triplet field as one
// token (three per triplet); word mode splits the rendered text on
// whitespace.
TokenSeq tokenize(const FatSequence& seq, TokenMode mode);

// Tokenizes free text without structural validation: field mode splits on
// '|' then ';' and keeps whatever non-blank fields appear, so malformed
// model output can still be scored.  Word mode is plain word splitting.
TokenSeq tokenize_text(std::string_view raw, TokenMode mode);

// One corpus row.  fdr is the free-text failure description; it may be
// empty in hypothesis corpora.
struct Record {
  std::string id;
  std::string fdr;
  FatSequence fats;

  bool operator==(const Record&) const = default;
};

enum class CorpusKind { reference, hypothesis };

// Reads a JSONL corpus: one object per line with keys "id", "fdr" and
// "fats" (a list of [step, substep, equipment] lists).  Reference corpora
// require a non-empty fdr; hypothesis corpora may omit it.  Throws
// ParseError (with line number) for bad lines, MissingField, DuplicateId.
std::vector<Record> parse_corpus(std::istream& in, CorpusKind kind,
                                 std::size_t max_triplets = kDefaultMaxTriplets);
std::vector<Record> load_corpus(const std::filesystem::path& path,
                                CorpusKind kind,
                                std::size_t max_triplets = kDefaultMaxTriplets);

// Writes records back out as JSONL in the same shape load_corpus reads.
void write_corpus(const std::vector<Record>& records, std::ostream& out);

}  // namespace fatg
