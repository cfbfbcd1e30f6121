#include "fatg/lm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "fatg/errors.hpp"
#include "fatg/text.hpp"

namespace fatg {

namespace {

bool is_marker(const std::string& token) {
  return token == kBosMarker || token == kSepMarker || token == kEosMarker;
}

void check_reserved(const std::string& token) {
  if (is_marker(token))
    throw Error("corpus token collides with reserved marker '" + token + "'");
}

}  // namespace

JointSequence build_joint_sequence(const Record& record) {
  if (record.fdr.empty())
    throw MissingField("record '" + record.id +
                       "' has no fdr to build a joint sequence from");
  JointSequence seq;
  seq.push_back(kBosMarker);
  for (std::string& word : split_words(record.fdr)) {
    check_reserved(word);
    seq.push_back(std::move(word));
  }
  seq.push_back(kSepMarker);
  for (const std::string& field : tokenize(record.fats, TokenMode::field).tokens) {
    check_reserved(field);
    seq.push_back(field);
  }
  seq.push_back(kEosMarker);
  return seq;
}

double Distribution::sum() const {
  double total = 0.0;
  for (const auto& [token, p] : probs) total += p;
  return total;
}

const std::string& Distribution::argmax() const {
  if (probs.empty()) throw Error("argmax of an empty distribution");
  auto best = probs.begin();
  for (auto it = std::next(probs.begin()); it != probs.end(); ++it)
    if (it->second > best->second) best = it;  // strict: first max wins ties
  return best->first;
}

NgramLanguageModel train_lm(const std::vector<Record>& corpus, int order,
                            SmoothingConfig smoothing) {
  if (order < 1) throw Error("model order must be >= 1");
  if (corpus.empty()) throw EmptyCorpus("cannot train on an empty corpus");

  NgramLanguageModel model;
  model.order_ = order;
  model.smoothing_ = smoothing;
  model.tables_.resize(static_cast<std::size_t>(order));
  for (const Record& record : corpus) {
    JointSequence seq = build_joint_sequence(record);
    model.vocab_.insert(seq.begin(), seq.end());
    for (std::size_t pos = 1; pos < seq.size(); ++pos) {
      const std::size_t max_ctx =
          std::min(pos, static_cast<std::size_t>(order - 1));
      for (std::size_t len = 0; len <= max_ctx; ++len) {
        std::vector<std::string> context(seq.begin() + (pos - len),
                                         seq.begin() + pos);
        ++model.tables_[len][std::move(context)][seq[pos]];
      }
    }
  }
  return model;
}

Distribution NgramLanguageModel::next_distribution(
    std::span<const std::string> context) const {
  if (!trained()) throw UntrainedModel("model has no counts");

  const std::size_t longest =
      std::min(context.size(), static_cast<std::size_t>(order_ - 1));
  for (std::size_t len = longest + 1; len-- > 0;) {
    std::vector<std::string> suffix(context.end() - len, context.end());
    auto it = tables_[len].find(suffix);
    if (it == tables_[len].end()) continue;

    const double factor =
        std::pow(smoothing_.backoff, static_cast<double>(longest - len));
    const SuccessorCounts& successors = it->second;
    Distribution dist;
    double total = 0.0;
    if (smoothing_.add_k > 0.0) {
      for (const std::string& token : vocab_) {
        auto found = successors.find(token);
        const double count =
            found == successors.end() ? 0.0
                                      : static_cast<double>(found->second);
        const double score = factor * (count + smoothing_.add_k);
        dist.probs[token] = score;
        total += score;
      }
    } else {
      for (const auto& [token, count] : successors) {
        const double score = factor * static_cast<double>(count);
        dist.probs[token] = score;
        total += score;
      }
    }
    for (auto& [token, p] : dist.probs) p /= total;
    return dist;
  }
  // The empty context is always stored after training, so this is
  // unreachable for trained models; kept as a hard failure.
  throw UntrainedModel("no context table matched");
}

Distribution next_distribution(const NgramLanguageModel& model,
                               const std::vector<std::string>& context) {
  return model.next_distribution(context);
}

Distribution apply_temperature(const Distribution& dist, double temperature) {
  if (temperature <= 0.0) throw Error("temperature must be positive");
  Distribution out;
  double total = 0.0;
  for (const auto& [token, p] : dist.probs) {
    const double scaled = std::pow(p, 1.0 / temperature);
    out.probs[token] = scaled;
    total += scaled;
  }
  for (auto& [token, p] : out.probs) p /= total;
  return out;
}

namespace {

// Support sorted by descending probability, ties lexicographic.  The input
// map already iterates lexicographically, so a stable sort on probability
// keeps tied tokens in token order.
std::vector<std::pair<std::string, double>> descending_support(
    const Distribution& dist) {
  std::vector<std::pair<std::string, double>> entries(dist.probs.begin(),
                                                      dist.probs.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  return entries;
}

Distribution renormalized(
    std::span<const std::pair<std::string, double>> kept) {
  Distribution out;
  double total = 0.0;
  for (const auto& [token, p] : kept) total += p;
  for (const auto& [token, p] : kept) out.probs[token] = p / total;
  return out;
}

}  // namespace

Distribution top_k_filter(const Distribution& dist, int k) {
  if (k < 1) throw Error("top-k requires k >= 1");
  auto entries = descending_support(dist);
  const std::size_t keep =
      std::min(entries.size(), static_cast<std::size_t>(k));
  return renormalized({entries.data(), keep});
}

Distribution nucleus_filter(const Distribution& dist, double p) {
  if (p <= 0.0 || p > 1.0) throw Error("nucleus threshold must be in (0,1]");
  auto entries = descending_support(dist);
  double cumulative = 0.0;
  std::size_t keep = 0;
  while (keep < entries.size()) {
    cumulative += entries[keep].second;
    ++keep;
    if (cumulative >= p) break;  // smallest qualifying prefix
  }
  return renormalized({entries.data(), keep});
}

namespace {

// Tokens eligible for emission: everything except BOS/SEP and tokens that
// could not be triplet fields.  EOS stays in as the stop signal.
bool emittable(const std::string& token) {
  if (token == kBosMarker || token == kSepMarker) return false;
  return token.find(';') == std::string::npos &&
         token.find('|') == std::string::npos;
}

Distribution restrict_to_emittable(const Distribution& dist) {
  Distribution out;
  double total = 0.0;
  for (const auto& [token, p] : dist.probs) {
    if (!emittable(token)) continue;
    out.probs[token] = p;
    total += p;
  }
  for (auto& [token, p] : out.probs) p /= total;
  return out;
}

// Inverse-CDF draw over lexicographic token order; the uniform variate is
// derived from the raw engine output so results do not depend on the
// standard library's distribution implementation.
const std::string& sample(const Distribution& dist, std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double cumulative = 0.0;
  const std::string* last = nullptr;
  for (const auto& [token, p] : dist.probs) {
    cumulative += p;
    last = &token;
    if (u < cumulative) return token;
  }
  return *last;  // float dust: fall back to the final token
}

}  // namespace

FatSequence generate(const NgramLanguageModel& model,
                     std::string_view fdr_prompt,
                     const DecoderConfig& config) {
  if (!model.trained()) throw UntrainedModel("generate needs a trained model");
  if (config.max_len < 1) throw Error("max_len must be >= 1");

  std::vector<std::string> context;
  context.emplace_back(kBosMarker);
  for (std::string& word : split_words(normalize_text(fdr_prompt)))
    context.push_back(std::move(word));
  context.emplace_back(kSepMarker);

  std::mt19937_64 rng(config.seed);
  std::vector<std::string> emitted;
  while (emitted.size() < static_cast<std::size_t>(config.max_len)) {
    Distribution dist = restrict_to_emittable(
        model.next_distribution(context));
    if (dist.probs.empty()) break;  // nothing emittable remains
    dist = apply_temperature(dist, config.temperature);

    std::string token;
    switch (config.strategy) {
      case DecodeStrategy::greedy:
        token = dist.argmax();
        break;
      case DecodeStrategy::top_k:
        token = sample(top_k_filter(dist, config.k), rng);
        break;
      case DecodeStrategy::nucleus:
        token = sample(nucleus_filter(dist, config.p), rng);
        break;
    }
    if (token == kEosMarker) break;
    emitted.push_back(token);
    context.push_back(std::move(token));
  }

  FatSequence fats;
  for (std::size_t i = 0; i + 3 <= emitted.size(); i += 3)
    fats.triplets.push_back(
        make_triplet(emitted[i], emitted[i + 1], emitted[i + 2]));
  return fats;
}

namespace {

constexpr const char* kModelMagic = "fatg-lm";
constexpr int kModelVersion = 1;

std::string repr_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error("bad numeric field in model file: '" + text + "'");
  return value;
}

std::string read_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(std::string("truncated model file: expected ") + what);
  return line;
}

}  // namespace

void NgramLanguageModel::save(std::ostream& out) const {
  if (!trained()) throw UntrainedModel("cannot save an untrained model");
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "order " << order_ << '\n';
  out << "add_k " << repr_double(smoothing_.add_k) << '\n';
  out << "backoff " << repr_double(smoothing_.backoff) << '\n';
  out << "vocab " << vocab_.size() << '\n';
  for (const std::string& token : vocab_) out << token << '\n';
  for (std::size_t len = 0; len < tables_.size(); ++len) {
    for (const auto& [context, successors] : tables_[len]) {
      for (const auto& [token, count] : successors) {
        // Tokens never contain tabs, so tab-joining is unambiguous.
        out << len;
        for (const std::string& part : context) out << '\t' << part;
        out << '\t' << token << '\t' << count << '\n';
      }
    }
  }
}

NgramLanguageModel NgramLanguageModel::load(std::istream& in) {
  std::istringstream header(read_line(in, "header"));
  std::string magic;
  int version = 0;
  header >> magic >> version;
  if (magic != kModelMagic || version != kModelVersion)
    throw Error("unrecognized model file header");

  auto read_kv = [&](const char* key) {
    std::string line = read_line(in, key);
    const std::string prefix = std::string(key) + ' ';
    if (line.rfind(prefix, 0) != 0)
      throw Error(std::string("model file: expected '") + key + "' line");
    return line.substr(prefix.size());
  };

  NgramLanguageModel model;
  model.order_ = static_cast<int>(parse_double(read_kv("order")));
  if (model.order_ < 1) throw Error("model file: bad order");
  model.smoothing_.add_k = parse_double(read_kv("add_k"));
  model.smoothing_.backoff = parse_double(read_kv("backoff"));
  const auto vocab_size =
      static_cast<std::size_t>(parse_double(read_kv("vocab")));
  for (std::size_t i = 0; i < vocab_size; ++i)
    model.vocab_.insert(read_line(in, "vocabulary entry"));

  model.tables_.resize(static_cast<std::size_t>(model.order_));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> parts = split_on(line, '\t');
    if (parts.size() < 3)
      throw Error("model file: malformed count row " + std::to_string(line_no));
    const auto len = static_cast<std::size_t>(parse_double(parts[0]));
    if (len >= model.tables_.size() || parts.size() != len + 3)
      throw Error("model file: inconsistent count row " +
                  std::to_string(line_no));
    std::vector<std::string> context(parts.begin() + 1,
                                     parts.begin() + 1 + len);
    const std::string& token = parts[len + 1];
    const auto count =
        static_cast<std::int64_t>(parse_double(parts[len + 2]));
    if (count < 1) throw Error("model file: nonpositive count");
    model.tables_[len][std::move(context)][token] = count;
  }
  return model;
}

void save_model(const NgramLanguageModel& model,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open model file for write: " + path.string());
  model.save(out);
  out.flush();
  if (!out) throw IoError("failed writing model to: " + path.string());
}

NgramLanguageModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path.string());
  return NgramLanguageModel::load(in);
}

}  // namespace fatg
