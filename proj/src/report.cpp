#include "fatg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "fatg/errors.hpp"
#include "fatg/text.hpp"
#include "json.hpp"

namespace fatg {

namespace {

const std::map<std::string, MetricFamily>& family_names() {
  static const std::map<std::string, MetricFamily> names = {
      {"lese", MetricFamily::lese},
      {"bleu", MetricFamily::bleu},
      {"rouge", MetricFamily::rouge},
      {"meteor", MetricFamily::meteor},
  };
  return names;
}

std::string family_name(MetricFamily family) {
  for (const auto& [name, value] : family_names())
    if (value == family) return name;
  throw Error("unknown metric family");
}

}  // namespace

std::set<MetricFamily> all_metric_families() {
  return {MetricFamily::lese, MetricFamily::bleu, MetricFamily::rouge,
          MetricFamily::meteor};
}

std::set<MetricFamily> parse_metric_families(std::string_view csv) {
  std::set<MetricFamily> families;
  for (const std::string& part : split_on(csv, ',')) {
    std::string name = normalize_text(part);
    if (name.empty()) continue;
    auto it = family_names().find(name);
    if (it == family_names().end())
      throw Error("unknown metric family '" + name +
                  "' (expected lese, bleu, rouge, meteor)");
    families.insert(it->second);
  }
  if (families.empty()) throw Error("no metric families selected");
  return families;
}

PairScores evaluate_pair(const TokenSeq& ref, const TokenSeq& hyp) {
  PairScores s;
  s.bleu_1 = bleu(ref, hyp, 1);
  s.bleu_3 = bleu(ref, hyp, 3);
  s.meteor = fatg::meteor(ref, hyp);
  s.rouge_1 = rouge_n(ref, hyp, 1);
  s.rouge_l = rouge_l(ref, hyp);
  s.lese_1 = lese_score(ref, hyp, 1);
  s.lese_3 = lese_score(ref, hyp, 3);
  return s;
}

PairScores evaluate_pair(const FatSequence& ref, const FatSequence& hyp,
                         TokenMode mode) {
  return evaluate_pair(tokenize(ref, mode), tokenize(hyp, mode));
}

MetricReport evaluate_corpus(const std::vector<Record>& refs,
                             const std::vector<Record>& hyps,
                             const EvalConfig& config) {
  if (refs.empty()) throw EmptyCorpus("reference corpus is empty");
  if (hyps.empty()) throw EmptyCorpus("hypothesis corpus is empty");

  std::map<std::string, const Record*> ref_by_id;
  for (const Record& r : refs) ref_by_id[r.id] = &r;

  std::vector<std::string> unmatched;
  for (const Record& h : hyps)
    if (!ref_by_id.count(h.id)) unmatched.push_back(h.id);
  if (!unmatched.empty()) {
    std::string joined;
    for (const std::string& id : unmatched) {
      if (!joined.empty()) joined += ", ";
      joined += id;
    }
    throw UnmatchedId("hypothesis ids with no reference: " + joined);
  }

  MetricReport report;
  report.families = config.families;
  const bool want_lese = config.families.count(MetricFamily::lese) > 0;
  const bool want_bleu = config.families.count(MetricFamily::bleu) > 0;
  const bool want_rouge = config.families.count(MetricFamily::rouge) > 0;
  const bool want_meteor = config.families.count(MetricFamily::meteor) > 0;

  for (const Record& h : hyps) {
    PairScores s =
        evaluate_pair(ref_by_id.at(h.id)->fats, h.fats, config.mode);
    s.id = h.id;
    if (!want_bleu) s.bleu_1 = s.bleu_3 = 0.0;
    if (!want_meteor) s.meteor = 0.0;
    if (!want_rouge) {
      s.rouge_1 = {};
      s.rouge_l = {};
    }
    if (!want_lese) {
      s.lese_1 = {};
      s.lese_3 = {};
    }
    report.rows.push_back(std::move(s));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const PairScores& a, const PairScores& b) {
              return a.id < b.id;
            });

  const auto n = static_cast<double>(report.rows.size());
  ScoreAggregates& m = report.mean;
  for (const PairScores& s : report.rows) {
    m.bleu_1 += s.bleu_1;
    m.bleu_3 += s.bleu_3;
    m.meteor += s.meteor;
    m.rouge_1.precision += s.rouge_1.precision;
    m.rouge_1.recall += s.rouge_1.recall;
    m.rouge_1.f += s.rouge_1.f;
    m.rouge_l.precision += s.rouge_l.precision;
    m.rouge_l.recall += s.rouge_l.recall;
    m.rouge_l.f += s.rouge_l.f;
    m.lese_1.precision += s.lese_1.precision;
    m.lese_1.recall += s.lese_1.recall;
    m.lese_1.f += s.lese_1.f1;
    m.lese_3.precision += s.lese_3.precision;
    m.lese_3.recall += s.lese_3.recall;
    m.lese_3.f += s.lese_3.f1;
    m.lev_1 += s.lese_1.distance;
    m.lev_3 += s.lese_3.distance;
  }
  for (double* field :
       {&m.bleu_1, &m.bleu_3, &m.meteor, &m.rouge_1.precision,
        &m.rouge_1.recall, &m.rouge_1.f, &m.rouge_l.precision,
        &m.rouge_l.recall, &m.rouge_l.f, &m.lese_1.precision,
        &m.lese_1.recall, &m.lese_1.f, &m.lese_3.precision,
        &m.lese_3.recall, &m.lese_3.f, &m.lev_1, &m.lev_3})
    *field /= n;
  return report;
}

namespace {

using nlohmann::json;

json prf_to_json(const PrfScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f", s.f}};
}

PrfScore prf_from_json(const json& j) {
  return PrfScore{j.at("precision").get<double>(),
                  j.at("recall").get<double>(), j.at("f").get<double>()};
}

json lese_to_json(const LeseScore& s) {
  return {{"raw_distance", s.raw_distance}, {"distance", s.distance},
          {"precision", s.precision},       {"recall", s.recall},
          {"f1", s.f1},                     {"effective_n", s.effective_n}};
}

LeseScore lese_from_json(const json& j) {
  LeseScore s;
  s.raw_distance = j.at("raw_distance").get<int>();
  s.distance = j.at("distance").get<int>();
  s.precision = j.at("precision").get<double>();
  s.recall = j.at("recall").get<double>();
  s.f1 = j.at("f1").get<double>();
  s.effective_n = j.at("effective_n").get<int>();
  return s;
}

std::string render_structured(const MetricReport& report) {
  const bool lese = report.families.count(MetricFamily::lese) > 0;
  const bool bleu = report.families.count(MetricFamily::bleu) > 0;
  const bool rouge = report.families.count(MetricFamily::rouge) > 0;
  const bool meteor = report.families.count(MetricFamily::meteor) > 0;

  json doc;
  doc["version"] = 1;
  std::vector<std::string> names;
  for (MetricFamily f : report.families) names.push_back(family_name(f));
  std::sort(names.begin(), names.end());
  doc["families"] = names;
  doc["record_count"] = report.rows.size();

  json rows = json::array();
  for (const PairScores& s : report.rows) {
    json row;
    row["id"] = s.id;
    if (bleu) {
      row["bleu_1"] = s.bleu_1;
      row["bleu_3"] = s.bleu_3;
    }
    if (meteor) row["meteor"] = s.meteor;
    if (rouge) {
      row["rouge_1"] = prf_to_json(s.rouge_1);
      row["rouge_l"] = prf_to_json(s.rouge_l);
    }
    if (lese) {
      row["lese_1"] = lese_to_json(s.lese_1);
      row["lese_3"] = lese_to_json(s.lese_3);
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);

  json agg;
  if (bleu) {
    agg["bleu_1"] = report.mean.bleu_1;
    agg["bleu_3"] = report.mean.bleu_3;
  }
  if (meteor) agg["meteor"] = report.mean.meteor;
  if (rouge) {
    agg["rouge_1"] = prf_to_json(report.mean.rouge_1);
    agg["rouge_l"] = prf_to_json(report.mean.rouge_l);
  }
  if (lese) {
    agg["lese_1"] = prf_to_json(report.mean.lese_1);
    agg["lese_3"] = prf_to_json(report.mean.lese_3);
    agg["lev_1"] = report.mean.lev_1;
    agg["lev_3"] = report.mean.lev_3;
  }
  doc["aggregates"] = std::move(agg);
  return doc.dump();
}

std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
  return buf;
}

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string render_table(const MetricReport& report) {
  const bool lese = report.families.count(MetricFamily::lese) > 0;
  const bool bleu = report.families.count(MetricFamily::bleu) > 0;
  const bool rouge = report.families.count(MetricFamily::rouge) > 0;
  const bool meteor = report.families.count(MetricFamily::meteor) > 0;

  std::vector<std::string> headers = {"id"};
  if (bleu) {
    headers.push_back("BLEU-1");
    headers.push_back("BLEU-3");
  }
  if (meteor) headers.push_back("MET.");
  if (rouge)
    for (const char* h : {"ROUGE-1-P", "ROUGE-1-R", "ROUGE-1-F1",
                          "ROUGE-L-P", "ROUGE-L-R", "ROUGE-L-F1"})
      headers.push_back(h);
  if (lese) {
    for (const char* h : {"LESE-1-P", "LESE-1-R", "LESE-1-F1", "Lev-1",
                          "LESE-3-P", "LESE-3-R", "LESE-3-F1", "Lev-3"})
      headers.push_back(h);
  }

  std::vector<std::vector<std::string>> lines;
  for (const PairScores& s : report.rows) {
    std::vector<std::string> line = {s.id};
    if (bleu) {
      line.push_back(pct(s.bleu_1));
      line.push_back(pct(s.bleu_3));
    }
    if (meteor) line.push_back(pct(s.meteor));
    if (rouge) {
      for (double v : {s.rouge_1.precision, s.rouge_1.recall, s.rouge_1.f,
                       s.rouge_l.precision, s.rouge_l.recall, s.rouge_l.f})
        line.push_back(pct(v));
    }
    if (lese) {
      line.push_back(pct(s.lese_1.precision));
      line.push_back(pct(s.lese_1.recall));
      line.push_back(pct(s.lese_1.f1));
      line.push_back(std::to_string(s.lese_1.distance));
      line.push_back(pct(s.lese_3.precision));
      line.push_back(pct(s.lese_3.recall));
      line.push_back(pct(s.lese_3.f1));
      line.push_back(std::to_string(s.lese_3.distance));
    }
    lines.push_back(std::move(line));
  }
  if (!report.rows.empty()) {
    const ScoreAggregates& m = report.mean;
    std::vector<std::string> line = {"MEAN"};
    if (bleu) {
      line.push_back(pct(m.bleu_1));
      line.push_back(pct(m.bleu_3));
    }
    if (meteor) line.push_back(pct(m.meteor));
    if (rouge) {
      for (double v : {m.rouge_1.precision, m.rouge_1.recall, m.rouge_1.f,
                       m.rouge_l.precision, m.rouge_l.recall, m.rouge_l.f})
        line.push_back(pct(v));
    }
    if (lese) {
      line.push_back(pct(m.lese_1.precision));
      line.push_back(pct(m.lese_1.recall));
      line.push_back(pct(m.lese_1.f));
      line.push_back(fixed2(m.lev_1));
      line.push_back(pct(m.lese_3.precision));
      line.push_back(pct(m.lese_3.recall));
      line.push_back(pct(m.lese_3.f));
      line.push_back(fixed2(m.lev_3));
    }
    lines.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& line : lines) widths[c] = std::max(widths[c], line[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << cells[c];
      for (std::size_t pad = cells[c].size(); pad < widths[c]; ++pad)
        out << ' ';
    }
    out << '\n';
  };
  emit(headers);
  for (const auto& line : lines) emit(line);
  return out.str();
}

}  // namespace

std::string render_report(const MetricReport& report, ReportFormat format) {
  return format == ReportFormat::structured ? render_structured(report)
                                            : render_table(report);
}

MetricReport parse_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("bad report document: ") + e.what());
  }
  try {
    MetricReport report;
    for (const json& name : doc.at("families")) {
      auto it = family_names().find(name.get<std::string>());
      if (it == family_names().end())
        throw Error("bad report document: unknown metric family '" +
                    name.get<std::string>() + "'");
      report.families.insert(it->second);
    }
    const bool lese = report.families.count(MetricFamily::lese) > 0;
    const bool bleu = report.families.count(MetricFamily::bleu) > 0;
    const bool rouge = report.families.count(MetricFamily::rouge) > 0;
    const bool meteor = report.families.count(MetricFamily::meteor) > 0;

    for (const json& row : doc.at("rows")) {
      PairScores s;
      s.id = row.at("id").get<std::string>();
      if (bleu) {
        s.bleu_1 = row.at("bleu_1").get<double>();
        s.bleu_3 = row.at("bleu_3").get<double>();
      }
      if (meteor) s.meteor = row.at("meteor").get<double>();
      if (rouge) {
        s.rouge_1 = prf_from_json(row.at("rouge_1"));
        s.rouge_l = prf_from_json(row.at("rouge_l"));
      }
      if (lese) {
        s.lese_1 = lese_from_json(row.at("lese_1"));
        s.lese_3 = lese_from_json(row.at("lese_3"));
      }
      report.rows.push_back(std::move(s));
    }

    const json& agg = doc.at("aggregates");
    ScoreAggregates& m = report.mean;
    if (bleu) {
      m.bleu_1 = agg.at("bleu_1").get<double>();
      m.bleu_3 = agg.at("bleu_3").get<double>();
    }
    if (meteor) m.meteor = agg.at("meteor").get<double>();
    if (rouge) {
      m.rouge_1 = prf_from_json(agg.at("rouge_1"));
      m.rouge_l = prf_from_json(agg.at("rouge_l"));
    }
    if (lese) {
      m.lese_1 = prf_from_json(agg.at("lese_1"));
      m.lese_3 = prf_from_json(agg.at("lese_3"));
      m.lev_1 = agg.at("lev_1").get<double>();
      m.lev_3 = agg.at("lev_3").get<double>();
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(std::string("bad report document: ") + e.what());
  }
}

}  // namespace fatg
