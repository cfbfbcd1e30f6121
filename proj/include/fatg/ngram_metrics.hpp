#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fatg/corpus.hpp"

namespace fatg {

using Ngram = std::vector<std::string>;

// Contiguous n-gram multiset of one sequence.
struct NgramCounts {
  int n = 1;
  std::map<Ngram, int> counts;

  int total() const;
};

// All contiguous windows of length n with multiplicities; empty when the
// sequence is shorter than n.
NgramCounts sliding_ngrams(const TokenSeq& seq, int n);

// Clipped n-gram precision: each hypothesis gram counts at most as often as
// it appears in the reference.  0 when the hypothesis has no n-grams.
double modified_precision(const TokenSeq& ref, const TokenSeq& hyp, int n);

// 1 for hypotheses at least as long as the reference, exp(1 - r/h)
// otherwise.  hyp_len = 0 is a 0-score bypass handled by bleu itself.
double brevity_penalty(std::size_t ref_len, std::size_t hyp_len);

// Unsmoothed BLEU-N: brevity penalty times the weighted geometric mean of
// modified precisions for n = 1..max_n.  Weights default to uniform 1/N.
// Orders where the hypothesis is too short to form any n-gram are excluded
// (their weight renormalized away) so identical short pairs still score 1;
// any included precision of 0 zeroes the result.
double bleu(const TokenSeq& ref, const TokenSeq& hyp, int max_n,
            std::span<const double> weights = {});

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;

  bool operator==(const PrfScore&) const = default;
};

// ROUGE-N: recall = clipped matches / reference gram total, precision =
// clipped matches / hypothesis gram total, f = harmonic mean.
PrfScore rouge_n(const TokenSeq& ref, const TokenSeq& hyp, int n);

// Longest common subsequence length (token-level, order preserving).
std::size_t lcs_length(const TokenSeq& ref, const TokenSeq& hyp);

// ROUGE-L: P = LCS/hyp_len, R = LCS/ref_len,
// f = (1 + beta^2) R P / (R + beta^2 P).
PrfScore rouge_l(const TokenSeq& ref, const TokenSeq& hyp, double beta = 1.0);

// METEOR with exact clipped unigram mapping (no stemming, no fragmentation
// penalty): P = mapped/hyp_len, R = mapped/ref_len, score = 10PR/(R + 9P).
double meteor(const TokenSeq& ref, const TokenSeq& hyp);

}  // namespace fatg
