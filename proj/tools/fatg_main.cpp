#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fatg/corpus.hpp"
#include "fatg/errors.hpp"
#include "fatg/lese.hpp"
#include "fatg/lm.hpp"
#include "fatg/report.hpp"

namespace {

using namespace fatg;

std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
  return buf;
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing output to: " + out_path);
}

int run_evaluate(const std::string& ref_path, const std::string& hyp_path,
                 TokenMode mode, const std::string& metrics,
                 const std::string& out_path, ReportFormat format) {
  EvalConfig config;
  config.mode = mode;
  config.families = parse_metric_families(metrics);
  MetricReport report =
      evaluate_corpus(load_corpus(ref_path, CorpusKind::reference),
                      load_corpus(hyp_path, CorpusKind::hypothesis), config);
  write_text(render_report(report, format), out_path);
  return 0;
}

int run_score(const std::string& ref_text, const std::string& hyp_text,
              TokenMode mode) {
  TokenSeq ref = tokenize_text(ref_text, mode);
  TokenSeq hyp = tokenize_text(hyp_text, mode);
  PairScores s = evaluate_pair(ref, hyp);
  std::cout << "BLEU-1     " << pct(s.bleu_1) << '\n';
  std::cout << "BLEU-3     " << pct(s.bleu_3) << '\n';
  std::cout << "METEOR     " << pct(s.meteor) << '\n';
  std::cout << "ROUGE-1    P " << pct(s.rouge_1.precision) << "  R "
            << pct(s.rouge_1.recall) << "  F1 " << pct(s.rouge_1.f) << '\n';
  std::cout << "ROUGE-L    P " << pct(s.rouge_l.precision) << "  R "
            << pct(s.rouge_l.recall) << "  F1 " << pct(s.rouge_l.f) << '\n';
  std::cout << "LESE-1     P " << pct(s.lese_1.precision) << "  R "
            << pct(s.lese_1.recall) << "  F1 " << pct(s.lese_1.f1)
            << "  Lev " << s.lese_1.distance << " (raw "
            << s.lese_1.raw_distance << ", n=" << s.lese_1.effective_n
            << ")\n";
  std::cout << "LESE-3     P " << pct(s.lese_3.precision) << "  R "
            << pct(s.lese_3.recall) << "  F1 " << pct(s.lese_3.f1)
            << "  Lev " << s.lese_3.distance << " (raw "
            << s.lese_3.raw_distance << ", n=" << s.lese_3.effective_n
            << ")\n";
  return 0;
}

int run_matrix(const std::string& ref_text, const std::string& hyp_text,
               int ngram, const std::string& out_path) {
  TokenSeq ref = tokenize_text(ref_text, TokenMode::field);
  TokenSeq hyp = tokenize_text(hyp_text, TokenMode::field);
  const int eff = effective_ngram(ref.size(), hyp.size(), ngram);
  export_cost_matrix(lese_cost_matrix(ref, hyp, eff), out_path);
  return 0;
}

int run_train(const std::string& corpus_path, int order, double add_k,
              double backoff, const std::string& model_path) {
  std::vector<Record> corpus =
      load_corpus(corpus_path, CorpusKind::reference);
  NgramLanguageModel model =
      train_lm(corpus, order, SmoothingConfig{add_k, backoff});
  save_model(model, model_path);
  std::cout << "trained order-" << order << " model on " << corpus.size()
            << " records (vocabulary " << model.vocabulary().size() << ")\n";
  return 0;
}

int run_generate(const std::string& model_path, const std::string& prompt,
                 const DecoderConfig& config) {
  NgramLanguageModel model = load_model(model_path);
  std::cout << render_fat_sequence(generate(model, prompt, config)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scoring and baseline generation for failure-analysis "
               "triplet sequences"};
  app.require_subcommand(1);

  const std::map<std::string, TokenMode> mode_names{
      {"field", TokenMode::field}, {"word", TokenMode::word}};
  const std::map<std::string, ReportFormat> format_names{
      {"json", ReportFormat::structured}, {"table", ReportFormat::table}};
  const std::map<std::string, DecodeStrategy> decoder_names{
      {"greedy", DecodeStrategy::greedy},
      {"topk", DecodeStrategy::top_k},
      {"nucleus", DecodeStrategy::nucleus}};

  // evaluate
  auto* evaluate = app.add_subcommand(
      "evaluate", "Score a hypothesis corpus against a reference corpus");
  std::string ref_path, hyp_path, out_path;
  std::string metrics = "lese,bleu,rouge,meteor";
  TokenMode mode = TokenMode::field;
  ReportFormat format = ReportFormat::table;
  evaluate->add_option("--ref", ref_path, "Reference corpus (JSONL)")
      ->required();
  evaluate->add_option("--hyp", hyp_path, "Hypothesis corpus (JSONL)")
      ->required();
  evaluate->add_option("--mode", mode, "Tokenization mode")
      ->transform(CLI::CheckedTransformer(mode_names));
  evaluate->add_option("--metrics", metrics,
                       "Comma-separated families: lese,bleu,rouge,meteor");
  evaluate->add_option("--out", out_path, "Write the report here");
  evaluate->add_option("--format", format, "Report format")
      ->transform(CLI::CheckedTransformer(format_names));

  // score
  auto* score = app.add_subcommand("score", "Score one rendered FAT pair");
  std::string ref_text, hyp_text;
  TokenMode score_mode = TokenMode::field;
  score->add_option("--ref", ref_text, "Reference FAT text")->required();
  score->add_option("--hyp", hyp_text, "Hypothesis FAT text")->required();
  score->add_option("--mode", score_mode, "Tokenization mode")
      ->transform(CLI::CheckedTransformer(mode_names));

  // matrix
  auto* matrix = app.add_subcommand(
      "matrix", "Export the LESE cost matrix of one pair as CSV");
  std::string m_ref, m_hyp, m_out;
  int ngram = 1;
  matrix->add_option("--ref", m_ref, "Reference FAT text")->required();
  matrix->add_option("--hyp", m_hyp, "Hypothesis FAT text")->required();
  matrix->add_option("--ngram", ngram, "Window size n")
      ->required()
      ->check(CLI::PositiveNumber);
  matrix->add_option("--out", m_out, "Output CSV path")->required();

  // train
  auto* train = app.add_subcommand(
      "train", "Train the count-based baseline language model");
  std::string corpus_path, model_path;
  int order = 3;
  double add_k = 0.01, backoff = 0.4;
  train->add_option("--corpus", corpus_path, "Training corpus (JSONL)")
      ->required();
  train->add_option("--order", order, "Model order (context + 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  train->add_option("--add-k", add_k, "Additive smoothing mass")
      ->check(CLI::NonNegativeNumber);
  train->add_option("--backoff", backoff, "Backoff multiplier per order")
      ->check(CLI::PositiveNumber);
  train->add_option("--model", model_path, "Where to save the model")
      ->required();

  // generate
  auto* generate = app.add_subcommand(
      "generate", "Generate a FAT sequence from a failure description");
  std::string gen_model, prompt;
  DecoderConfig decoder;
  generate->add_option("--model", gen_model, "Trained model path")
      ->required();
  generate->add_option("--prompt", prompt, "Failure description text")
      ->required();
  generate->add_option("--decoder", decoder.strategy, "Decoding strategy")
      ->transform(CLI::CheckedTransformer(decoder_names));
  generate->add_option("--top-k", decoder.k, "Top-k cutoff")
      ->check(CLI::PositiveNumber);
  generate->add_option("--top-p", decoder.p, "Nucleus threshold")
      ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0));
  generate->add_option("--temperature", decoder.temperature,
                       "Sampling temperature")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", decoder.seed, "Random seed");
  generate->add_option("--max-len", decoder.max_len,
                       "Token budget after the separator")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  try {
    if (*evaluate)
      return run_evaluate(ref_path, hyp_path, mode, metrics, out_path,
                          format);
    if (*score) return run_score(ref_text, hyp_text, score_mode);
    if (*matrix) return run_matrix(m_ref, m_hyp, ngram, m_out);
    if (*train)
      return run_train(corpus_path, order, add_k, backoff, model_path);
    if (*generate) return run_generate(gen_model, prompt, decoder);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
