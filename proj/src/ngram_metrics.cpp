#include "fatg/ngram_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fatg/errors.hpp"

namespace fatg {

int NgramCounts::total() const {
  int sum = 0;
  for (const auto& [gram, count] : counts) sum += count;
  return sum;
}

NgramCounts sliding_ngrams(const TokenSeq& seq, int n) {
  if (n < 1) throw Error("n-gram size must be >= 1");
  NgramCounts out;
  out.n = n;
  const auto width = static_cast<std::size_t>(n);
  if (seq.size() < width) return out;
  for (std::size_t i = 0; i + width <= seq.size(); ++i) {
    Ngram gram(seq.tokens.begin() + i, seq.tokens.begin() + i + width);
    ++out.counts[std::move(gram)];
  }
  return out;
}

namespace {

// Sum over gram types of min(hyp count, ref count).
int clipped_matches(const NgramCounts& ref, const NgramCounts& hyp) {
  int matched = 0;
  for (const auto& [gram, count] : hyp.counts) {
    auto it = ref.counts.find(gram);
    if (it != ref.counts.end()) matched += std::min(count, it->second);
  }
  return matched;
}

}  // namespace

double modified_precision(const TokenSeq& ref, const TokenSeq& hyp, int n) {
  NgramCounts hyp_grams = sliding_ngrams(hyp, n);
  int total = hyp_grams.total();
  if (total == 0) return 0.0;
  return static_cast<double>(clipped_matches(sliding_ngrams(ref, n),
                                             hyp_grams)) /
         total;
}

double brevity_penalty(std::size_t ref_len, std::size_t hyp_len) {
  if (hyp_len == 0) return 0.0;
  if (hyp_len > ref_len) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_len) /
                            static_cast<double>(hyp_len));
}

double bleu(const TokenSeq& ref, const TokenSeq& hyp, int max_n,
            std::span<const double> weights) {
  if (max_n < 1) throw Error("bleu requires max_n >= 1");
  if (!weights.empty() && weights.size() != static_cast<std::size_t>(max_n))
    throw Error("bleu weights length must equal max_n");
  if (hyp.empty()) return 0.0;

  double log_sum = 0.0;
  double weight_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    if (hyp.size() < static_cast<std::size_t>(n)) continue;  // no grams
    double w = weights.empty() ? 1.0 / max_n : weights[n - 1];
    double p = modified_precision(ref, hyp, n);
    if (p == 0.0) return 0.0;  // unsmoothed: one zero kills the score
    log_sum += w * std::log(p);
    weight_sum += w;
  }
  if (weight_sum == 0.0) return 0.0;
  return brevity_penalty(ref.size(), hyp.size()) *
         std::exp(log_sum / weight_sum);
}

PrfScore rouge_n(const TokenSeq& ref, const TokenSeq& hyp, int n) {
  NgramCounts ref_grams = sliding_ngrams(ref, n);
  NgramCounts hyp_grams = sliding_ngrams(hyp, n);
  int matched = clipped_matches(ref_grams, hyp_grams);
  int ref_total = ref_grams.total();
  int hyp_total = hyp_grams.total();
  PrfScore s;
  if (ref_total > 0) s.recall = static_cast<double>(matched) / ref_total;
  if (hyp_total > 0) s.precision = static_cast<double>(matched) / hyp_total;
  if (s.precision + s.recall > 0.0)
    s.f = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

std::size_t lcs_length(const TokenSeq& ref, const TokenSeq& hyp) {
  const std::size_t m = ref.size(), h = hyp.size();
  std::vector<std::size_t> prev(h + 1, 0), curr(h + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= h; ++j) {
      if (ref.tokens[i - 1] == hyp.tokens[j - 1])
        curr[j] = prev[j - 1] + 1;
      else
        curr[j] = std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[h];
}

PrfScore rouge_l(const TokenSeq& ref, const TokenSeq& hyp, double beta) {
  PrfScore s;
  if (ref.empty() || hyp.empty()) return s;
  const auto lcs = static_cast<double>(lcs_length(ref, hyp));
  s.recall = lcs / static_cast<double>(ref.size());
  s.precision = lcs / static_cast<double>(hyp.size());
  const double denom = s.recall + beta * beta * s.precision;
  if (denom > 0.0)
    s.f = (1.0 + beta * beta) * s.recall * s.precision / denom;
  return s;
}

double meteor(const TokenSeq& ref, const TokenSeq& hyp) {
  if (ref.empty() || hyp.empty()) return 0.0;
  int mapped = clipped_matches(sliding_ngrams(ref, 1), sliding_ngrams(hyp, 1));
  if (mapped == 0) return 0.0;
  const double p = static_cast<double>(mapped) / static_cast<double>(hyp.size());
  const double r = static_cast<double>(mapped) / static_cast<double>(ref.size());
  return 10.0 * p * r / (r + 9.0 * p);
}

}  // namespace fatg
