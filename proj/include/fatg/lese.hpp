#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fatg/corpus.hpp"

namespace fatg {

// LESE-N downgrades the requested n to 1 when either side holds at most a
// single n-gram block.  The checks run sequentially: if the reference side
// fires, the hypothesis side is re-checked against the downgraded value, so
// one short side downgrades both.
int effective_ngram(std::size_t ref_len, std::size_t hyp_len, int n);

// Full (m+1)x(n+1) edit-distance table between two token sequences where a
// cell match compares the length-n windows starting at each position
// (windows truncate at the sequence tails; no padding).  Mismatch cost is
// 1 + min(insert, delete, substitute); boundary row/column are 0..m, 0..n.
struct CostMatrix {
  std::vector<std::string> ref_tokens;
  std::vector<std::string> hyp_tokens;
  int n_gram = 1;             // effective n the table was built with
  std::vector<int> cells;     // row-major, (m+1) * (h+1)

  std::size_t rows() const { return ref_tokens.size() + 1; }
  std::size_t cols() const { return hyp_tokens.size() + 1; }
  int at(std::size_t i, std::size_t j) const { return cells[i * cols() + j]; }
  int& at(std::size_t i, std::size_t j) { return cells[i * cols() + j]; }
  int distance() const { return cells.back(); }
};

// Builds the DP table.  `n` is used as given; callers wanting the LESE
// fallback semantics pass it through effective_ngram first (lese_score does
// both).  Empty sequences degenerate to the boundary row/column.
CostMatrix lese_cost_matrix(const TokenSeq& ref, const TokenSeq& hyp, int n);

// One LESE-N measurement.  `raw_distance` is the token-level DP value;
// `distance` is raw_distance floor-divided by the effective n, i.e. counted
// in n-gram units.  With gram counts g_r = ref_len/n and g_h = hyp_len/n:
//
//   precision = |max(g_r, g_h) - distance| / g_h
//   recall    = |max(g_r, g_h) - distance| / g_h  with g_r in the denominator
//   f1        = (1 + beta^2) P R / (beta^2 P + R), 0 when P = R = 0
//
// Values stay in [0,1] except in one degenerate corner: when one sequence
// extends the other by fewer than n tokens, tail-window truncation can
// floor the distance below max(g_r,g_h) - min(g_r,g_h) and push the smaller
// side's ratio slightly above 1.  The overshoot is kept (no clamping) so the
// score matches the floor-division arithmetic exactly.
struct LeseScore {
  int raw_distance = 0;
  int distance = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int effective_n = 1;

  bool operator==(const LeseScore&) const = default;
};

// Scores a pair.  An empty side short-circuits: raw_distance becomes the
// other side's token count and all three ratios are 0.  Degenerate inputs
// (too few tokens to form one n-gram block) also score 0 rather than fail.
LeseScore lese_score(const TokenSeq& ref, const TokenSeq& hyp, int n,
                     double beta = 1.0);

// CSV export of a cost matrix: header row = blank corner cell, blank cell
// for the boundary column, then hypothesis tokens; each following row is
// the ref token label (blank for the boundary row) and one integer per
// column.  Cells containing ',' or '"' are quoted.
void write_cost_matrix_csv(const CostMatrix& matrix, std::ostream& out);

// Same, to a file; throws IoError with the path on failure.
void export_cost_matrix(const CostMatrix& matrix,
                        const std::filesystem::path& destination);

}  // namespace fatg
