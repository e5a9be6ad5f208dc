#include <gtest/gtest.h>

#include <random>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"
#include "convcode/io.hpp"
#include "test_util.hpp"

using namespace convcode;

namespace {

GeneralPlan example_plan() {
  return std::get<GeneralPlan>(io::plan_from_json(io::read_json_file(CONVCODE_FIXTURES "/hand_plan_2x2.json")));
}

}  // namespace

TEST(General, ExampleCosts) {
  const GeneralPlan plan = example_plan();
  const AccessReport rep = access_report(plan);
  EXPECT_EQ(rep.rho_r, 4u);
  EXPECT_EQ(rep.rho_w, 5u);
  EXPECT_EQ(rep.rho, 9u);
  EXPECT_EQ(rep.per_initial_reads, (std::vector<std::size_t>{2, 2}));
  EXPECT_FALSE(rep.bound.has_value());
  EXPECT_TRUE(verify_general_structure(plan).ok);
}

TEST(General, ExampleOutputsKeepUnchangedSymbols) {
  const GeneralPlan plan = example_plan();
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    std::vector<Word> inputs;
    for (const auto& c : plan.initial) inputs.push_back(encode(c, testutil::random_word(plan.field, c.k(), rng)));
    const GeneralResult res = general_convert(plan, inputs);
    ASSERT_EQ(res.final_words.size(), 2u);
    // F1 = (c11, c22, c23, c14 + c25, c15 + c25, c26) with sigma from the fixture.
    const Field& f = plan.field;
    const Word& a = inputs[0];
    const Word& b = inputs[1];
    EXPECT_EQ(res.final_words[0], (Word{a[0], b[1], b[2], a[3], f.add(a[4], b[4]), f.add(a[3], b[5])}));
    EXPECT_EQ(res.final_words[1], (Word{f.add(a[4], b[4]), a[1], a[2], b[3], a[4]}));
  }
}

TEST(General, EmptyUnchangedWritesEverything) {
  const Field f = Field::prime(5);
  GeneralPlan plan{f, {ExtGrsSpec::standard(f, 4, 2)}, {}};
  GeneralFinal fin{{4, 2}, {{}}, {{0, 1}}, {}, Matrix(f, 2, 4)};
  for (std::size_t p = 0; p < 4; ++p) fin.layout.push_back({1, p});
  plan.finals.push_back(fin);
  EXPECT_TRUE(verify_general_structure(plan).ok);
  EXPECT_EQ(access_report(plan).rho_w, 4u);
}

TEST(General, MalformedLayoutRejected) {
  GeneralPlan plan = example_plan();
  std::swap(plan.finals[0].layout[0], plan.finals[1].layout[1]);
  EXPECT_FALSE(verify_general_structure(plan).ok);
  plan = example_plan();
  plan.finals[1].unchanged[0].push_back(0);  // already unchanged in final 1
  EXPECT_THROW(plan.check_well_formed(), UsageError);
}
