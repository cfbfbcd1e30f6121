#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "fatg/corpus.hpp"
#include "fatg/errors.hpp"
#include "fatg/report.hpp"
#include "json.hpp"

using namespace fatg;

namespace {

Record make_record(std::string id, const char* fats) {
  return Record{std::move(id), "description", parse_fat_sequence(fats)};
}

constexpr const char* kBase = "a; b; c | d; e; f";
constexpr const char* kOneSub = "a; b; c | d; e; x";
constexpr const char* kDisjoint = "q; r; s | t; u; v";

}  // namespace

TEST_CASE("parse_metric_families") {
  CHECK(parse_metric_families("lese,bleu") ==
        std::set<MetricFamily>{MetricFamily::lese, MetricFamily::bleu});
  CHECK(parse_metric_families(" ROUGE , Meteor ") ==
        std::set<MetricFamily>{MetricFamily::rouge, MetricFamily::meteor});
  CHECK(parse_metric_families("lese,lese") ==
        std::set<MetricFamily>{MetricFamily::lese});
  CHECK(parse_metric_families("lese,bleu,rouge,meteor") ==
        all_metric_families());

  CHECK_THROWS_AS(parse_metric_families("bogus"), Error);
  CHECK_THROWS_AS(parse_metric_families(""), Error);
  CHECK_THROWS_AS(parse_metric_families(","), Error);
}

TEST_CASE("evaluate_pair scores an identical pair at 1 everywhere") {
  FatSequence fats = parse_fat_sequence(kBase);
  PairScores s = evaluate_pair(fats, fats, TokenMode::field);

  CHECK(s.bleu_1 == doctest::Approx(1.0));
  CHECK(s.bleu_3 == doctest::Approx(1.0));
  CHECK(s.meteor == doctest::Approx(1.0));
  CHECK(s.rouge_1.f == doctest::Approx(1.0));
  CHECK(s.rouge_l.f == doctest::Approx(1.0));
  CHECK(s.lese_1.f1 == doctest::Approx(1.0));
  CHECK(s.lese_3.f1 == doctest::Approx(1.0));
  CHECK(s.lese_1.distance == 0);
  CHECK(s.lese_3.distance == 0);
}

TEST_CASE("evaluate_pair agrees with the standalone metric functions") {
  FatSequence ref = parse_fat_sequence(kBase);
  FatSequence hyp = parse_fat_sequence(kOneSub);
  PairScores s = evaluate_pair(ref, hyp, TokenMode::field);

  TokenSeq ref_tokens = tokenize(ref, TokenMode::field);
  TokenSeq hyp_tokens = tokenize(hyp, TokenMode::field);
  CHECK(s.bleu_1 == bleu(ref_tokens, hyp_tokens, 1));
  CHECK(s.bleu_1 == doctest::Approx(5.0 / 6.0));
  CHECK(s.meteor == meteor(ref_tokens, hyp_tokens));
  CHECK(s.rouge_1 == rouge_n(ref_tokens, hyp_tokens, 1));
  CHECK(s.rouge_l == rouge_l(ref_tokens, hyp_tokens));
  CHECK(s.lese_1 == lese_score(ref_tokens, hyp_tokens, 1));
  CHECK(s.lese_1.distance == 1);
  CHECK(s.lese_3 == lese_score(ref_tokens, hyp_tokens, 3));

  // Word mode tokenizes the rendered text instead of whole fields.
  PairScores words = evaluate_pair(ref, ref, TokenMode::word);
  CHECK(words.bleu_3 == doctest::Approx(1.0));
}

TEST_CASE("evaluate_corpus joins by id and orders rows") {
  std::vector<Record> refs = {make_record("r2", kBase),
                              make_record("r1", kBase)};
  std::vector<Record> hyps = {make_record("r2", kOneSub),
                              make_record("r1", kBase)};
  MetricReport report = evaluate_corpus(refs, hyps);

  REQUIRE(report.record_count() == 2);
  CHECK(report.rows[0].id == "r1");
  CHECK(report.rows[1].id == "r2");
  CHECK(report.families == all_metric_families());

  // r1 is identical, r2 has one substituted field.
  CHECK(report.rows[0].bleu_1 == doctest::Approx(1.0));
  CHECK(report.rows[1].bleu_1 == doctest::Approx(5.0 / 6.0));
  CHECK(report.mean.bleu_1 == doctest::Approx((1.0 + 5.0 / 6.0) / 2.0));
  CHECK(report.mean.lev_1 == doctest::Approx(0.5));
  CHECK(report.mean.lese_1.f ==
        doctest::Approx((report.rows[0].lese_1.f1 +
                         report.rows[1].lese_1.f1) / 2.0));
}

TEST_CASE("evaluate_corpus aggregates are the arithmetic row means") {
  std::vector<Record> refs = {make_record("r1", kBase),
                              make_record("r2", kBase),
                              make_record("r3", kBase)};
  std::vector<Record> hyps = {make_record("r1", kBase),
                              make_record("r2", kOneSub),
                              make_record("r3", kDisjoint)};
  MetricReport report = evaluate_corpus(refs, hyps);

  double bleu_sum = 0.0, meteor_sum = 0.0, rouge_f_sum = 0.0;
  double lese_f_sum = 0.0, lev_sum = 0.0;
  for (const PairScores& s : report.rows) {
    bleu_sum += s.bleu_1;
    meteor_sum += s.meteor;
    rouge_f_sum += s.rouge_1.f;
    lese_f_sum += s.lese_1.f1;
    lev_sum += s.lese_1.distance;
  }
  CHECK(report.mean.bleu_1 == doctest::Approx(bleu_sum / 3).epsilon(1e-12));
  CHECK(report.mean.meteor ==
        doctest::Approx(meteor_sum / 3).epsilon(1e-12));
  CHECK(report.mean.rouge_1.f ==
        doctest::Approx(rouge_f_sum / 3).epsilon(1e-12));
  CHECK(report.mean.lese_1.f ==
        doctest::Approx(lese_f_sum / 3).epsilon(1e-12));
  CHECK(report.mean.lev_1 == doctest::Approx(lev_sum / 3).epsilon(1e-12));
}

TEST_CASE("evaluate_corpus reports every unmatched hypothesis id") {
  std::vector<Record> refs = {make_record("r1", kBase)};
  std::vector<Record> hyps = {make_record("r1", kBase),
                              make_record("r3", kBase),
                              make_record("r9", kBase)};
  try {
    evaluate_corpus(refs, hyps);
    FAIL("expected UnmatchedId");
  } catch (const UnmatchedId& e) {
    const std::string what = e.what();
    CHECK(what.find("r3") != std::string::npos);
    CHECK(what.find("r9") != std::string::npos);
  }

  CHECK_THROWS_AS(evaluate_corpus({}, hyps), EmptyCorpus);
  CHECK_THROWS_AS(evaluate_corpus(refs, {}), EmptyCorpus);
}

TEST_CASE("unselected families are zeroed in rows and the report") {
  std::vector<Record> refs = {make_record("r1", kBase)};
  std::vector<Record> hyps = {make_record("r1", kOneSub)};
  EvalConfig config;
  config.families = {MetricFamily::lese};
  MetricReport report = evaluate_corpus(refs, hyps, config);

  const PairScores& row = report.rows[0];
  CHECK(row.bleu_1 == 0.0);
  CHECK(row.meteor == 0.0);
  CHECK(row.rouge_1 == PrfScore{});
  CHECK(row.lese_1.distance == 1);
  CHECK(row.lese_1.f1 > 0.0);
  CHECK(report.mean.bleu_1 == 0.0);
  CHECK(report.mean.lese_1.f > 0.0);
}

TEST_CASE("structured reports round-trip losslessly") {
  std::vector<Record> refs = {make_record("r1", kBase),
                              make_record("r2", kBase)};
  std::vector<Record> hyps = {make_record("r1", kOneSub),
                              make_record("r2", kDisjoint)};

  for (auto families :
       {all_metric_families(),
        std::set<MetricFamily>{MetricFamily::lese, MetricFamily::bleu},
        std::set<MetricFamily>{MetricFamily::meteor}}) {
    EvalConfig config;
    config.families = families;
    MetricReport report = evaluate_corpus(refs, hyps, config);

    const std::string rendered =
        render_report(report, ReportFormat::structured);
    CHECK(parse_report(rendered) == report);

    // Rendering is byte-deterministic, including through a round-trip.
    CHECK(render_report(report, ReportFormat::structured) == rendered);
    CHECK(render_report(parse_report(rendered), ReportFormat::structured) ==
          rendered);
  }
}

TEST_CASE("structured report document shape") {
  std::vector<Record> refs = {make_record("r1", kBase)};
  std::vector<Record> hyps = {make_record("r1", kBase)};
  MetricReport report = evaluate_corpus(refs, hyps);

  nlohmann::json doc = nlohmann::json::parse(
      render_report(report, ReportFormat::structured));
  CHECK(doc.at("version") == 1);
  CHECK(doc.at("record_count") == 1);
  CHECK(doc.at("families") ==
        nlohmann::json({"bleu", "lese", "meteor", "rouge"}));
  CHECK(doc.at("rows").size() == 1);
  CHECK(doc.at("rows")[0].at("id") == "r1");
  CHECK(doc.at("rows")[0].at("lese_1").at("distance") == 0);
  CHECK(doc.at("aggregates").contains("lev_1"));
  CHECK(doc.at("aggregates").at("bleu_1") == 1.0);
}

TEST_CASE("parse_report rejects malformed documents") {
  CHECK_THROWS_AS(parse_report("not json"), Error);
  CHECK_THROWS_AS(parse_report("{}"), Error);
  CHECK_THROWS_AS(parse_report("{\"families\":[\"bogus\"]}"), Error);
}

TEST_CASE("table output lines up rows and a mean row") {
  std::vector<Record> refs = {make_record("r1", kBase),
                              make_record("r2", kBase)};
  std::vector<Record> hyps = {make_record("r1", kBase),
                              make_record("r2", kOneSub)};
  MetricReport report = evaluate_corpus(refs, hyps);
  const std::string table = render_report(report, ReportFormat::table);

  CHECK(table.find("BLEU-1") != std::string::npos);
  CHECK(table.find("LESE-3-F1") != std::string::npos);
  CHECK(table.find("MEAN") != std::string::npos);
  CHECK(table.find("100.00") != std::string::npos);  // identical r1
  CHECK(table.find("0.50") != std::string::npos);    // mean Lev-1

  // Header + 2 rows + mean.
  const auto newlines =
      static_cast<std::size_t>(std::count(table.begin(), table.end(), '\n'));
  CHECK(newlines == 4);
}

TEST_CASE("table output respects the family selection") {
  std::vector<Record> refs = {make_record("r1", kBase)};
  std::vector<Record> hyps = {make_record("r1", kBase)};
  EvalConfig config;
  config.families = {MetricFamily::lese};
  MetricReport report = evaluate_corpus(refs, hyps, config);
  const std::string table = render_report(report, ReportFormat::table);

  CHECK(table.find("LESE-1-P") != std::string::npos);
  CHECK(table.find("Lev-3") != std::string::npos);
  CHECK(table.find("BLEU") == std::string::npos);
  CHECK(table.find("ROUGE") == std::string::npos);
}

TEST_CASE("an empty report renders as just the header") {
  MetricReport report;
  report.families = all_metric_families();
  const std::string table = render_report(report, ReportFormat::table);
  CHECK(table.find("MEAN") == std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 1);

  MetricReport parsed =
      parse_report(render_report(report, ReportFormat::structured));
  CHECK(parsed == report);
  CHECK(parsed.record_count() == 0);
}
