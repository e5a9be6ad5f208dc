#include <gtest/gtest.h>

#include <sstream>

#include "convcode/errors.hpp"
#include "convcode/io.hpp"

using namespace convcode;
using io::json;

TEST(Io, FieldRoundTrip) {
  for (std::uint64_t q : {2u, 5u, 8u, 256u, 65521u}) {
    const Field f = Field::of_order(q);
    EXPECT_EQ(io::field_from_json(io::field_to_json(f)), f);
  }
  EXPECT_EQ(io::field_from_json(json{{"q", 16}}), Field::binary(4));
  EXPECT_THROW(io::field_from_json(json{{"q", 9}}), UsageError);
  EXPECT_THROW(io::field_from_json(json{{"p", 2}, {"m", 3}, {"q", 16}}), UsageError);
}

TEST(Io, SpecRoundTrip) {
  const ExtGrsSpec s = ExtGrsSpec::make(Field::prime(7), 5, 2, {3, 1, 0, 6}, {1, 2, 3, 4, 5});
  EXPECT_EQ(io::spec_from_json(io::spec_to_json(s)), s);
  json bad = io::spec_to_json(s);
  bad["gamma"] = {1, 1, 2, 3};
  EXPECT_THROW(io::spec_from_json(bad), UsageError);
  bad.erase("gamma");
  EXPECT_THROW(io::spec_from_json(bad), UsageError);
}

TEST(Io, MergePlanRoundTrip) {
  const MergePlan plan = build_merge(ConvertParams::merge({{5, 3}, {5, 4}, {5, 2}}, 2), Field::binary(4));
  const json doc = io::plan_to_json(plan);
  EXPECT_EQ(doc["kind"], "merge");
  EXPECT_EQ(doc["S"], json::array({1}));
  const io::Plan back = io::plan_from_json(json::parse(doc.dump()));
  const auto& m = std::get<MergePlan>(back);
  EXPECT_EQ(m.final_code, plan.final_code);
  EXPECT_EQ(m.read, plan.read);
  EXPECT_EQ(m.punctured_checks, plan.punctured_checks);
  EXPECT_EQ(m.unchanged_blocks, plan.unchanged_blocks);
  EXPECT_EQ(m.written_block, plan.written_block);
  EXPECT_EQ(io::plan_to_json(back), doc);
}

TEST(Io, SplitPlanRoundTrip) {
  const SplitPlan plan = build_split(ConvertParams::split({10, 7}, {{6, 4}, {5, 3}}), Field::binary(4));
  const json doc = io::plan_to_json(plan);
  EXPECT_EQ(doc["privileged"], 1);
  const io::Plan back = io::plan_from_json(doc);
  EXPECT_EQ(io::plan_to_json(back), doc);
  json bad = doc;
  bad["read"][1].push_back({1, 10});
  EXPECT_THROW(io::plan_from_json(bad), UsageError);
}

TEST(Io, GeneralPlanFixture) {
  const json doc = io::read_json_file(CONVCODE_FIXTURES "/hand_plan_2x2.json");
  const io::Plan plan = io::plan_from_json(doc);
  ASSERT_TRUE(std::holds_alternative<GeneralPlan>(plan));
  EXPECT_EQ(io::plan_to_json(plan), doc);
}

TEST(Io, MalformedPlans) {
  EXPECT_THROW(io::plan_from_json(json{{"kind", "fold"}}), UsageError);
  EXPECT_THROW(io::plan_from_json(json::object()), UsageError);
  json doc = io::read_json_file(CONVCODE_FIXTURES "/hand_plan_2x2.json");
  doc["layout"][0][0] = {9, 1};
  EXPECT_THROW(io::plan_from_json(doc), UsageError);
  EXPECT_THROW(io::read_json_file("/nonexistent/plan.json"), UsageError);
}

TEST(Io, ReportDocument) {
  const MergePlan plan = build_merge(ConvertParams::merge({{5, 3}, {5, 3}}, 2), Field::binary(3));
  const json rep = io::report_to_json(access_report(plan), true);
  EXPECT_EQ(rep["rho_r"], 4);
  EXPECT_EQ(rep["rho_w"], 2);
  EXPECT_EQ(rep["rho"], 6);
  EXPECT_EQ(rep["bound"], 6);
  EXPECT_EQ(rep["optimal"], true);
  EXPECT_EQ(rep["trace"].size(), 12u);
  EXPECT_EQ(rep["trace"][0]["symbol"], json::array({1, 1}));
  EXPECT_EQ(rep["trace"][0]["role"], "unchanged");
  EXPECT_FALSE(io::report_to_json(access_report(plan), false).contains("trace"));
  const std::string table = io::trace_table(access_report(plan));
  EXPECT_NE(table.find("written"), std::string::npos);
}

TEST(Io, Configs) {
  const auto merge = io::config_from_json(io::read_json_file(CONVCODE_FIXTURES "/merge_config.json"));
  EXPECT_EQ(merge.regime, io::ScenarioConfig::Regime::merge);
  EXPECT_EQ(merge.q, 8u);
  EXPECT_EQ(merge.params.final.front().n, 8u);
  EXPECT_EQ(io::required_order(merge), 7u);
  const auto split = io::config_from_json(io::read_json_file(CONVCODE_FIXTURES "/split_config.json"));
  EXPECT_EQ(split.regime, io::ScenarioConfig::Regime::split);
  EXPECT_FALSE(split.q.has_value());
  EXPECT_EQ(io::required_order(split), 9u);
  EXPECT_THROW(io::config_from_json(json{{"regime", "merge"}}), UsageError);
  EXPECT_THROW(io::config_from_json(json{{"regime", "other"}}), UsageError);
  EXPECT_THROW(io::config_from_json(json::parse(R"({"regime":"merge","initial":[{"n":5,"k":3}],"final":[{"n":6,"k":4}]})")),
               UsageError);
}

TEST(Io, Words) {
  const Field f = Field::prime(7);
  std::istringstream in("1 2 3\n# comment\n\n4 5 6 # trailing\n");
  const auto words = io::read_words(in, f);
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[1], (Word{4, 5, 6}));
  std::ostringstream out;
  io::write_words(out, words);
  EXPECT_EQ(out.str(), "1 2 3\n4 5 6\n");
  std::istringstream big("1 7\n");
  EXPECT_THROW(io::read_words(big, f), UsageError);
  std::istringstream junk("1 x\n");
  EXPECT_THROW(io::read_words(junk, f), UsageError);
  std::istringstream neg("-1\n");
  EXPECT_THROW(io::read_words(neg, f), UsageError);
  std::istringstream none("");
  EXPECT_TRUE(io::read_words(none, f).empty());
}
