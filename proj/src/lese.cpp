#include "fatg/lese.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "fatg/errors.hpp"

namespace fatg {

int effective_ngram(std::size_t ref_len, std::size_t hyp_len, int n) {
  if (n < 1) throw Error("n-gram size must be >= 1");
  int eff = n;
  if (ref_len / static_cast<std::size_t>(eff) <= 1) eff = 1;
  if (hyp_len / static_cast<std::size_t>(eff) <= 1) eff = 1;
  return eff;
}

namespace {

// Compares the length-n windows starting at ref[i] and hyp[j]; windows
// truncate at the tails, and truncated windows of different lengths never
// match.
bool windows_equal(const std::vector<std::string>& ref, std::size_t i,
                   const std::vector<std::string>& hyp, std::size_t j,
                   std::size_t n) {
  std::size_t len_r = std::min(n, ref.size() - i);
  std::size_t len_h = std::min(n, hyp.size() - j);
  if (len_r != len_h) return false;
  return std::equal(ref.begin() + i, ref.begin() + i + len_r,
                    hyp.begin() + j);
}

}  // namespace

CostMatrix lese_cost_matrix(const TokenSeq& ref, const TokenSeq& hyp, int n) {
  if (n < 1) throw Error("n-gram size must be >= 1");
  CostMatrix m;
  m.ref_tokens = ref.tokens;
  m.hyp_tokens = hyp.tokens;
  m.n_gram = n;
  const std::size_t rows = m.rows(), cols = m.cols();
  m.cells.assign(rows * cols, 0);
  for (std::size_t i = 0; i < rows; ++i) m.at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j < cols; ++j) m.at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      if (windows_equal(m.ref_tokens, i - 1, m.hyp_tokens, j - 1,
                        static_cast<std::size_t>(n))) {
        m.at(i, j) = m.at(i - 1, j - 1);
      } else {
        m.at(i, j) = 1 + std::min({m.at(i, j - 1), m.at(i - 1, j),
                                   m.at(i - 1, j - 1)});
      }
    }
  }
  return m;
}

LeseScore lese_score(const TokenSeq& ref, const TokenSeq& hyp, int n,
                     double beta) {
  const std::size_t m = ref.size();
  const std::size_t h = hyp.size();
  LeseScore s;
  s.effective_n = effective_ngram(m, h, n);
  const auto eff = static_cast<std::size_t>(s.effective_n);
  const auto g_r = static_cast<long>(m / eff);
  const auto g_h = static_cast<long>(h / eff);

  if (h == 0 || m == 0) {
    s.raw_distance = static_cast<int>(std::max(m, h));
    s.distance = static_cast<int>(std::max(m, h) / eff);
    return s;  // ratios stay 0
  }

  CostMatrix table = lese_cost_matrix(ref, hyp, s.effective_n);
  s.raw_distance = table.distance();
  s.distance = s.raw_distance / s.effective_n;

  if (g_r == 0 || g_h == 0) return s;  // no full n-gram block on one side

  const long best = std::max(g_r, g_h);
  const auto numerator =
      static_cast<double>(std::abs(best - static_cast<long>(s.distance)));
  s.precision = std::max(0.0, numerator / static_cast<double>(g_h));
  s.recall = std::max(0.0, numerator / static_cast<double>(g_r));
  if (s.precision == 0.0 && s.recall == 0.0) return s;
  s.f1 = (1.0 + beta * beta) * s.precision * s.recall /
         (beta * beta * s.precision + s.recall);
  return s;
}

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find(',') == std::string::npos &&
      cell.find('"') == std::string::npos)
    return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

void write_cost_matrix_csv(const CostMatrix& matrix, std::ostream& out) {
  // Header row: blank corner cell, blank cell over the boundary column,
  // then one hypothesis token per remaining column.
  out << ',';
  for (const std::string& token : matrix.hyp_tokens)
    out << ',' << csv_escape(token);
  out << '\n';
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out << csv_escape(i == 0 ? std::string() : matrix.ref_tokens[i - 1]);
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      out << ',' << matrix.at(i, j);
    out << '\n';
  }
}

void export_cost_matrix(const CostMatrix& matrix,
                        const std::filesystem::path& destination) {
  std::ofstream out(destination);
  if (!out)
    throw IoError("cannot open matrix output file: " + destination.string());
  write_cost_matrix_csv(matrix, out);
  out.flush();
  if (!out)
    throw IoError("failed writing matrix to: " + destination.string());
}

}  // namespace fatg
