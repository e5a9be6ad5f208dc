#include <gtest/gtest.h>

#include <random>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"
#include "convcode/oracle.hpp"
#include "test_util.hpp"

using namespace convcode;

namespace {

const ConvertParams kSevenToFourThree = ConvertParams::split({10, 7}, {{6, 4}, {5, 3}});

Word oracle_final(const ExtGrsSpec& code, const Word& kept) {
  std::map<std::size_t, Symbol> known;
  for (std::size_t p = 0; p < kept.size(); ++p) known[p] = kept[p];
  return recover_erasures(code, known);
}

}  // namespace

TEST(Split, SevenToFourPlusThree) {
  const SplitPlan plan = build_split(kSevenToFourThree, Field::binary(4));
  ASSERT_TRUE(plan.privileged.has_value());
  EXPECT_EQ(*plan.privileged, 0u);
  const StructureCheck check = verify_split_structure(plan);
  EXPECT_TRUE(check.ok) << check.diagnostic;
  const AccessReport rep = access_report(plan);
  EXPECT_EQ(rep.rho_r, 5u);
  EXPECT_EQ(rep.rho_w, 4u);
  EXPECT_EQ(rep.rho, 9u);
  EXPECT_EQ(rep.read_bound, 5u);
  EXPECT_EQ(rep.optimal, true);
  for (const auto& f : plan.finals) EXPECT_TRUE(oracle::mds_exhaustive(parity_check(f)));
}

TEST(Split, ConvertOutputsAreCodewords) {
  const SplitPlan plan = build_split(kSevenToFourThree, Field::binary(4));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const Word c = encode(plan.initial, testutil::random_word(plan.field(), plan.initial.k(), rng));
    const SplitResult res = split_convert(plan, c);
    ASSERT_EQ(res.final_words.size(), 2u);
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_TRUE(is_codeword(plan.finals[j], res.final_words[j]));
      EXPECT_EQ(res.final_words[j], oracle_final(plan.finals[j], restrict_to(c, plan.unchanged[j])));
    }
  }
}

TEST(Split, ZeroInput) {
  const SplitPlan plan = build_split(kSevenToFourThree, Field::binary(4));
  const SplitResult res = split_convert(plan, Word(10, 0));
  EXPECT_EQ(res.final_words[0], Word(6, 0));
  EXPECT_EQ(res.final_words[1], Word(5, 0));
}

TEST(Split, NoFeasibleFinal) {
  const ConvertParams p = ConvertParams::split({8, 6}, {{6, 3}, {6, 3}});
  const SplitPlan plan = build_split(p, Field::prime(7));
  EXPECT_FALSE(plan.privileged.has_value());
  EXPECT_TRUE(verify_split_structure(plan).ok);
  const AccessReport rep = access_report(plan);
  EXPECT_EQ(rep.rho_r, 6u);
  EXPECT_EQ(rep.optimal, true);
  std::mt19937_64 rng(22);
  const Word c = encode(plan.initial, testutil::random_word(plan.field(), 6, rng));
  for (const Word& w : split_convert(plan, c).final_words) EXPECT_EQ(w.size(), 6u);
}

TEST(Split, DegenerateSingleFinal) {
  const ConvertParams p = ConvertParams::split({8, 5}, {{7, 5}});
  const SplitPlan plan = build_split(p, Field::prime(7));
  EXPECT_TRUE(verify_split_structure(plan).ok);
  const AccessReport rep = access_report(plan);
  EXPECT_EQ(rep.rho, split_lower_bound(p).total);
  std::mt19937_64 rng(23);
  const Word c = encode(plan.initial, testutil::random_word(plan.field(), 5, rng));
  const Word out = split_convert(plan, c).final_words.front();
  EXPECT_TRUE(is_codeword(plan.finals.front(), out));
}

TEST(Split, TamperedInput) {
  const SplitPlan plan = build_split(kSevenToFourThree, Field::binary(4));
  Word c(10, 0);
  c[3] = 1;
  EXPECT_THROW(split_convert(plan, c), CorruptionError);
}

TEST(Split, FieldTooSmall) {
  EXPECT_THROW(build_split(kSevenToFourThree, Field::prime(7)), ParameterError);
}

TEST(Split, PerturbedPunctureIsDiagnosed) {
  SplitPlan plan = build_split(kSevenToFourThree, Field::binary(4));
  Matrix& h = *plan.punctured_check;
  h(1, 0) = plan.field().add(h(1, 0), 1);
  const StructureCheck check = verify_split_structure(plan);
  EXPECT_FALSE(check.ok);
}

TEST(Split, WrongVSizeIsDiagnosed) {
  SplitPlan plan = build_split(kSevenToFourThree, Field::binary(4));
  plan.extra_reads.erase(plan.extra_reads.begin());
  const StructureCheck check = verify_split_structure(plan);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.diagnostic.rfind("cardinality", 0), 0u) << check.diagnostic;
}
