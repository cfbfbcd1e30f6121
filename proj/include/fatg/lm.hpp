#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fatg/corpus.hpp"

namespace fatg {

// Reserved marker tokens.  Corpus tokens that would collide with a marker
// are rejected when joint sequences are built.
inline constexpr const char* kBosMarker = "<bos>";
inline constexpr const char* kSepMarker = "<sep>";
inline constexpr const char* kEosMarker = "<eos>";

// BOS ++ FDR word tokens ++ SEP ++ FAT field tokens ++ EOS.  The single SEP
// splits the description from the analysis steps; EOS is terminal.
using JointSequence = std::vector<std::string>;

// Throws MissingField when the record has no fdr.
JointSequence build_joint_sequence(const Record& record);

struct SmoothingConfig {
  double add_k = 0.01;   // additive mass per vocabulary entry
  double backoff = 0.4;  // multiplier per context order skipped

  bool operator==(const SmoothingConfig&) const = default;
};

// Next-token distribution over the positive-probability support, kept in
// lexicographic token order.
struct Distribution {
  std::map<std::string, double> probs;

  double sum() const;
  // Highest-probability token, ties resolved to the lexicographically
  // smallest.
  const std::string& argmax() const;
  bool operator==(const Distribution&) const = default;
};

// Count-based autoregressive model over joint sequences.  Stores successor
// counts for every context length 0..order-1; queries back off from the
// longest matching context to shorter ones, add-k smoothing the counts of
// the longest context order actually seen.
class NgramLanguageModel {
 public:
  NgramLanguageModel() = default;

  bool trained() const { return order_ > 0; }
  int order() const { return order_; }
  const SmoothingConfig& smoothing() const { return smoothing_; }
  const std::set<std::string>& vocabulary() const { return vocab_; }

  // Relative frequencies of the longest stored context that matches a
  // suffix of `context`, add-k smoothed over the vocabulary.  The backoff
  // multiplier scales every score of a skipped-to order uniformly, so it
  // cancels under normalization; it is applied anyway so the
  // pre-normalization weights match the documented scheme.  Throws
  // UntrainedModel on an untrained model.
  Distribution next_distribution(std::span<const std::string> context) const;

  void save(std::ostream& out) const;
  static NgramLanguageModel load(std::istream& in);

  bool operator==(const NgramLanguageModel&) const = default;

 private:
  friend NgramLanguageModel train_lm(const std::vector<Record>&, int,
                                     SmoothingConfig);

  using SuccessorCounts = std::map<std::string, std::int64_t>;
  using ContextTable = std::map<std::vector<std::string>, SuccessorCounts>;

  int order_ = 0;  // 0 = untrained
  SmoothingConfig smoothing_;
  std::set<std::string> vocab_;
  std::vector<ContextTable> tables_;  // index = context length
};

// Counts every (context, successor) pair of every joint sequence, for all
// context lengths 0..order-1.  Throws EmptyCorpus, MissingField.
NgramLanguageModel train_lm(const std::vector<Record>& corpus, int order,
                            SmoothingConfig smoothing = {});

Distribution next_distribution(const NgramLanguageModel& model,
                               const std::vector<std::string>& context);

// p_i' proportional to p_i^(1/T).  T = 1 is the identity; larger T flattens.
Distribution apply_temperature(const Distribution& dist, double temperature);

// Keeps the k highest-probability tokens (ties lexicographic), renormalized.
Distribution top_k_filter(const Distribution& dist, int k);

// Keeps the smallest descending-probability prefix (ties lexicographic)
// whose cumulative mass reaches p, renormalized.
Distribution nucleus_filter(const Distribution& dist, double p);

enum class DecodeStrategy { greedy, top_k, nucleus };

struct DecoderConfig {
  DecodeStrategy strategy = DecodeStrategy::nucleus;
  int k = 10;
  double p = 0.95;
  double temperature = 1.9;
  std::uint64_t seed = 0;
  int max_len = 80;
};

// Seeds the context with BOS ++ prompt words ++ SEP and samples field
// tokens until EOS or max_len tokens, applying temperature, then the
// configured filter, then seeded sampling (greedy takes the argmax).
// Markers and tokens that cannot be triplet fields are excluded from the
// sampled support.  Emitted tokens are grouped into Triplets in threes; a
// trailing incomplete group is discarded.  Throws UntrainedModel.
FatSequence generate(const NgramLanguageModel& model,
                     std::string_view fdr_prompt, const DecoderConfig& config);

// Versioned text dump; save -> load -> save is byte-identical.
void save_model(const NgramLanguageModel& model,
                const std::filesystem::path& path);
NgramLanguageModel load_model(const std::filesystem::path& path);

}  // namespace fatg
