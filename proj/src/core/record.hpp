#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/ptb.hpp"

namespace syncur {

// One sentence flowing through the pipeline: cleaned text, its tokens,
// source corpus, optional child age, optional parse and classification.
struct LabeledRecord {
  std::int64_t record_id = 0;  // line number in the source file, 1-based
  std::string corpus_id;
  std::string text;
  std::vector<std::string> tokens;
  std::optional<int> age_months;
  std::optional<ParseTree> tree;
  std::optional<CategoryAssignment> assignment;
  // Cached C2 staging decision so records round-trip through JSONL
  // without their trees.
  std::optional<bool> c2_complex;

  std::int64_t token_count() const {
    return static_cast<std::int64_t>(tokens.size());
  }
  bool categorized() const {
    return assignment.has_value() && assignment->categorized();
  }
};

// JSON-lines serialization. Fields: line_no, corpus, text, token_count,
// age_months, parsed, matched[], primary, macro, c2_complex.
std::string record_to_json(const LabeledRecord& record);
LabeledRecord record_from_json(const std::string& line);

void write_records_jsonl(const std::vector<LabeledRecord>& records,
                         const std::filesystem::path& path);
std::vector<LabeledRecord> read_records_jsonl(
    const std::filesystem::path& path);

}  // namespace syncur
