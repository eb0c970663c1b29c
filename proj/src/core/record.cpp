#include "core/record.hpp"

#include <json.hpp>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/prep.hpp"

namespace syncur {

using nlohmann::json;

std::string record_to_json(const LabeledRecord& record) {
  json j;
  j["line_no"] = record.record_id;
  j["corpus"] = record.corpus_id;
  j["text"] = record.text;
  j["token_count"] = record.token_count();
  j["age_months"] =
      record.age_months ? json(*record.age_months) : json(nullptr);
  j["parsed"] = record.tree.has_value() || record.assignment.has_value();
  json matched = json::array();
  if (record.assignment)
    for (const auto& name : record.assignment->matched) matched.push_back(name);
  j["matched"] = matched;
  if (record.assignment && record.assignment->primary) {
    j["primary"] = *record.assignment->primary;
    j["macro"] = std::string(macro_name(*record.assignment->macro));
  } else {
    j["primary"] = nullptr;
    j["macro"] = nullptr;
  }
  j["c2_complex"] =
      record.c2_complex ? json(*record.c2_complex) : json(nullptr);
  return j.dump();
}

LabeledRecord record_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Data, std::string("bad JSONL record: ") + e.what());
  }
  LabeledRecord record;
  record.record_id = j.at("line_no").get<std::int64_t>();
  record.corpus_id = j.value("corpus", std::string());
  record.text = j.at("text").get<std::string>();
  record.tokens = tokenize(record.text);
  if (j.contains("age_months") && !j["age_months"].is_null())
    record.age_months = j["age_months"].get<int>();
  const bool parsed = j.value("parsed", false);
  if (parsed) {
    CategoryAssignment assignment;
    if (j.contains("matched"))
      for (const auto& m : j["matched"])
        assignment.matched.push_back(m.get<std::string>());
    if (j.contains("primary") && !j["primary"].is_null()) {
      assignment.primary = j["primary"].get<std::string>();
      const auto macro = macro_from_name(j.at("macro").get<std::string>());
      if (!macro)
        throw Error(ErrorCode::Data,
                    "record " + std::to_string(record.record_id) +
                        ": unknown macro");
      assignment.macro = *macro;
    }
    record.assignment = std::move(assignment);
  }
  if (j.contains("c2_complex") && !j["c2_complex"].is_null())
    record.c2_complex = j["c2_complex"].get<bool>();
  return record;
}

void write_records_jsonl(const std::vector<LabeledRecord>& records,
                         const std::filesystem::path& path) {
  std::string out;
  for (const auto& record : records) {
    out += record_to_json(record);
    out += '\n';
  }
  write_file_atomic(path, out);
}

std::vector<LabeledRecord> read_records_jsonl(
    const std::filesystem::path& path) {
  std::vector<LabeledRecord> records;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(line));
  }
  return records;
}

}  // namespace syncur
