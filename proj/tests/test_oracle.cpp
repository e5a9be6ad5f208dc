#include <gtest/gtest.h>

#include "convcode/errors.hpp"
#include "convcode/oracle.hpp"
#include "test_util.hpp"

using namespace convcode;

namespace {

const Field F5 = Field::prime(5);

}  // namespace

TEST(Oracle, MdsExamples) {
  EXPECT_TRUE(oracle::mds_exhaustive(vandermonde_ext(F5, 2, 4, Word{0, 1, 2}, Word{1, 1, 1, 1})));
  EXPECT_FALSE(oracle::mds_exhaustive(Matrix::from_rows(F5, {{1, 1, 0}, {2, 2, 1}})));
  EXPECT_THROW(oracle::mds_exhaustive(Matrix(Field::binary(4), 2, 15)), UsageError);
}

TEST(Oracle, CodebookTrivialCases) {
  const ExtGrsSpec s = ExtGrsSpec::make(F5, 4, 2, {0, 1, 2}, {1, 1, 1, 1});
  const auto empty = oracle::codebook(s, IndexSet{});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty.begin()->empty());
  EXPECT_EQ(oracle::codebook(s, IndexSet{0, 1, 2, 3}).size(), 25u);

  const Field f2 = Field::binary(1);
  const ExtGrsSpec rep = ExtGrsSpec::make(f2, 2, 1, {0}, {1, 1});
  EXPECT_EQ(oracle::codebook(rep, IndexSet{0, 1}).size(), 2u);
  EXPECT_THROW(oracle::codebook(ExtGrsSpec::standard(Field::binary(8), 5, 2), IndexSet{}), UsageError);
}

TEST(Oracle, CanGenerateExamples) {
  const ExtGrsSpec s = ExtGrsSpec::standard(F5, 5, 2);  // k = 3
  EXPECT_TRUE(oracle::can_generate(s, IndexSet{0, 1}, s, IndexSet{1}));
  EXPECT_TRUE(oracle::can_generate(s, IndexSet{0, 1, 2}, s, IndexSet{3, 4}));
  EXPECT_FALSE(oracle::can_generate(s, IndexSet{0, 1}, s, IndexSet{3}));
  EXPECT_TRUE(oracle::can_generate(s, IndexSet{0, 1, 2, 3, 4}, s, IndexSet{}));
}

TEST(Oracle, CanGenerateAcrossCodesIsRankComparison) {
  const ExtGrsSpec a = ExtGrsSpec::standard(F5, 5, 2);
  const ExtGrsSpec b = ExtGrsSpec::standard(F5, 4, 2);
  EXPECT_TRUE(oracle::can_generate(a, IndexSet{0, 1}, b, IndexSet{0, 1, 2}));
  EXPECT_FALSE(oracle::can_generate(a, IndexSet{0}, b, IndexSet{0, 1}));
}
