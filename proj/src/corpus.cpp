#include "fatg/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "fatg/text.hpp"
#include "json.hpp"

namespace fatg {

namespace {

std::string validate_field(std::string_view raw, const char* name) {
  std::string value = normalize_text(raw);
  if (is_blank_token(value))
    throw EmptyField(std::string(name) + " field is empty");
  if (value.find(';') != std::string::npos ||
      value.find('|') != std::string::npos)
    throw MalformedTriplet(std::string(name) +
                           " field contains a separator: '" + value + "'");
  return value;
}

void append_field_tokens(std::string_view raw, std::vector<std::string>* out) {
  for (const std::string& segment : split_on(raw, '|'))
    for (const std::string& field : split_on(segment, ';')) {
      std::string token = normalize_text(field);
      if (!is_blank_token(token)) out->push_back(std::move(token));
    }
}

}  // namespace

Triplet make_triplet(std::string_view step_type, std::string_view substep,
                     std::string_view equipment) {
  return Triplet{validate_field(step_type, "step_type"),
                 validate_field(substep, "substep"),
                 validate_field(equipment, "equipment")};
}

FatSequence parse_fat_sequence(std::string_view raw,
                               std::size_t max_triplets) {
  FatSequence seq;
  if (normalize_text(raw).empty()) return seq;
  for (const std::string& segment : split_on(raw, '|')) {
    std::vector<std::string> fields = split_on(segment, ';');
    if (fields.size() != 3)
      throw MalformedTriplet("expected 3 fields, got " +
                             std::to_string(fields.size()) + " in '" +
                             normalize_text(segment) + "'");
    seq.triplets.push_back(make_triplet(fields[0], fields[1], fields[2]));
  }
  if (seq.size() > max_triplets)
    throw MalformedTriplet("sequence has " + std::to_string(seq.size()) +
                           " triplets, limit is " +
                           std::to_string(max_triplets));
  return seq;
}

std::string render_fat_sequence(const FatSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.triplets.size(); ++i) {
    const Triplet& t = seq.triplets[i];
    if (i > 0) out += " | ";
    out += t.step_type;
    out += "; ";
    out += t.substep;
    out += "; ";
    out += t.equipment;
  }
  return out;
}

TokenSeq tokenize(const FatSequence& seq, TokenMode mode) {
  TokenSeq out;
  out.mode = mode;
  if (mode == TokenMode::field) {
    out.tokens.reserve(seq.size() * 3);
    for (const Triplet& t : seq.triplets) {
      out.tokens.push_back(t.step_type);
      out.tokens.push_back(t.substep);
      out.tokens.push_back(t.equipment);
    }
  } else {
    out.tokens = split_words(normalize_text(render_fat_sequence(seq)));
  }
  return out;
}

TokenSeq tokenize_text(std::string_view raw, TokenMode mode) {
  TokenSeq out;
  out.mode = mode;
  if (mode == TokenMode::field) {
    append_field_tokens(raw, &out.tokens);
  } else {
    out.tokens = split_words(normalize_text(raw));
  }
  return out;
}

namespace {

using nlohmann::json;

Record record_from_json(const json& obj, CorpusKind kind,
                        std::size_t max_triplets) {
  if (!obj.is_object()) throw MissingField("record is not a JSON object");
  if (!obj.contains("id") || !obj["id"].is_string() ||
      obj["id"].get<std::string>().empty())
    throw MissingField("missing or empty 'id'");

  Record rec;
  rec.id = obj["id"].get<std::string>();

  if (obj.contains("fdr")) {
    if (!obj["fdr"].is_string()) throw MissingField("'fdr' must be a string");
    rec.fdr = normalize_text(obj["fdr"].get<std::string>());
  }
  if (kind == CorpusKind::reference && rec.fdr.empty())
    throw MissingField("missing or empty 'fdr' in reference record '" +
                       rec.id + "'");

  if (!obj.contains("fats") || !obj["fats"].is_array())
    throw MissingField("missing 'fats' list in record '" + rec.id + "'");
  for (const json& item : obj["fats"]) {
    if (!item.is_array() || item.size() != 3)
      throw MalformedTriplet("each 'fats' entry must be a 3-element list");
    for (const json& field : item)
      if (!field.is_string())
        throw MalformedTriplet("triplet fields must be strings");
    rec.fats.triplets.push_back(make_triplet(item[0].get<std::string>(),
                                             item[1].get<std::string>(),
                                             item[2].get<std::string>()));
  }
  if (rec.fats.size() > max_triplets)
    throw MalformedTriplet("record '" + rec.id + "' has " +
                           std::to_string(rec.fats.size()) +
                           " triplets, limit is " +
                           std::to_string(max_triplets));
  return rec;
}

}  // namespace

std::vector<Record> parse_corpus(std::istream& in, CorpusKind kind,
                                 std::size_t max_triplets) {
  std::vector<Record> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (normalize_text(line).empty()) continue;  // skip blank lines
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    Record rec;
    try {
      rec = record_from_json(obj, kind, max_triplets);
    } catch (const DuplicateId&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (!seen_ids.insert(rec.id).second)
      throw DuplicateId("duplicate record id '" + rec.id + "'");
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Record> load_corpus(const std::filesystem::path& path,
                                CorpusKind kind, std::size_t max_triplets) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  return parse_corpus(in, kind, max_triplets);
}

void write_corpus(const std::vector<Record>& records, std::ostream& out) {
  for (const Record& rec : records) {
    json obj;
    obj["id"] = rec.id;
    if (!rec.fdr.empty()) obj["fdr"] = rec.fdr;
    json fats = json::array();
    for (const Triplet& t : rec.fats.triplets)
      fats.push_back({t.step_type, t.substep, t.equipment});
    obj["fats"] = std::move(fats);
    out << obj.dump() << '\n';
  }
}

}  // namespace fatg
