#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fatg/corpus.hpp"
#include "fatg/lese.hpp"
#include "fatg/ngram_metrics.hpp"

namespace fatg {

enum class MetricFamily { lese, bleu, rouge, meteor };

std::set<MetricFamily> all_metric_families();
// Parses a comma-separated selector like "lese,bleu"; throws Error on an
// unknown family name or an empty selection.
std::set<MetricFamily> parse_metric_families(std::string_view csv);

// Scores for one (reference, hypothesis) pair.  Fields of unselected
// families are left zeroed.
struct PairScores {
  std::string id;
  double bleu_1 = 0.0;
  double bleu_3 = 0.0;
  double meteor = 0.0;
  PrfScore rouge_1;
  PrfScore rouge_l;
  LeseScore lese_1;
  LeseScore lese_3;

  bool operator==(const PairScores&) const = default;
};

// Unweighted arithmetic means over records.  lev_1/lev_3 are the means of
// the floor-divided (n-gram-unit) LESE distances.
struct ScoreAggregates {
  double bleu_1 = 0.0;
  double bleu_3 = 0.0;
  double meteor = 0.0;
  PrfScore rouge_1;
  PrfScore rouge_l;
  PrfScore lese_1;
  PrfScore lese_3;
  double lev_1 = 0.0;
  double lev_3 = 0.0;

  bool operator==(const ScoreAggregates&) const = default;
};

struct MetricReport {
  std::set<MetricFamily> families;
  std::vector<PairScores> rows;  // sorted by id
  ScoreAggregates mean;

  std::size_t record_count() const { return rows.size(); }
  bool operator==(const MetricReport&) const = default;
};

// Computes every metric family on one tokenized pair.
PairScores evaluate_pair(const TokenSeq& ref, const TokenSeq& hyp);
PairScores evaluate_pair(const FatSequence& ref, const FatSequence& hyp,
                         TokenMode mode);

struct EvalConfig {
  TokenMode mode = TokenMode::field;
  std::set<MetricFamily> families = all_metric_families();
};

// Joins hypotheses to references on id, scores each pair, and aggregates.
// Rows are ordered by id.  Throws UnmatchedId (listing every offending id)
// and EmptyCorpus.
MetricReport evaluate_corpus(const std::vector<Record>& refs,
                             const std::vector<Record>& hyps,
                             const EvalConfig& config = {});

enum class ReportFormat { structured, table };

// Structured form is JSON, lossless and byte-deterministic; table form
// prints one row per record plus a mean row, percentages at 2 decimals.
std::string render_report(const MetricReport& report, ReportFormat format);

// Inverse of render_report(..., structured).
MetricReport parse_report(std::string_view text);

}  // namespace fatg
