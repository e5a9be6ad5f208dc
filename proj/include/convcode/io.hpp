#pragma once

// JSON documents (scenario configs, plans, reports) and codeword text files.
//
// Symbol ids in documents are one-based [code, position] pairs; written
// symbols of final code j use code t1 + j. Matrices are embedded as arrays of
// lines in the text dump format ("rows cols q" header, then one row per line).

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "convcode/convert.hpp"
#include "json.hpp"

namespace convcode::io {

using json = nlohmann::json;

using Plan = std::variant<MergePlan, SplitPlan, GeneralPlan>;

json field_to_json(const Field& field);
Field field_from_json(const json& j);

json spec_to_json(const ExtGrsSpec& spec);
ExtGrsSpec spec_from_json(const json& j);

json params_to_json(const ConvertParams& params);
ConvertParams params_from_json(const json& j);

json plan_to_json(const Plan& plan);
/// Throws UsageError on malformed or inconsistent documents.
Plan plan_from_json(const json& j);

json report_to_json(const AccessReport& report, bool include_trace);
/// Fixed-width device table, one row per symbol.
std::string trace_table(const AccessReport& report);

struct ScenarioConfig {
  enum class Regime { merge, split } regime = Regime::merge;
  std::optional<std::uint64_t> q;  // absent: smallest supported field that fits
  ConvertParams params;
};

ScenarioConfig config_from_json(const json& j);
/// Field order the construction needs for these parameters.
std::uint64_t required_order(const ScenarioConfig& config);

/// One word per non-empty line; '#' starts a comment. Symbols must be < q.
std::vector<Word> read_words(std::istream& in, const Field& field);
void write_words(std::ostream& out, const std::vector<Word>& words);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace convcode::io
