#include <gtest/gtest.h>

#include <random>

#include "convcode/errors.hpp"
#include "convcode/matrix.hpp"
#include "test_util.hpp"

using namespace convcode;

namespace {

const Field F5 = Field::prime(5);

Matrix h_example() { return Matrix::from_rows(F5, {{1, 1, 1, 0}, {0, 1, 2, 1}}); }

}  // namespace

TEST(Matrix, ConstructionValidatesEntries) {
  EXPECT_THROW(Matrix(F5, 1, 2, {1, 5}), UsageError);
  EXPECT_THROW(Matrix(F5, 2, 2, {1, 2, 3}), UsageError);
  EXPECT_THROW(Matrix::from_rows(F5, {{1, 2}, {3}}), UsageError);
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(h_example()), 2u);
  EXPECT_EQ(rank(Matrix(F5, 3, 4)), 0u);
  EXPECT_EQ(rank(Matrix::identity(F5, 4)), 4u);
  EXPECT_EQ(rank(Matrix::from_rows(F5, {{1, 2}, {2, 4}})), 1u);
}

TEST(Matrix, KernelExamples) {
  EXPECT_EQ(right_kernel_basis(Matrix::identity(F5, 3)).rows(), 0u);
  EXPECT_EQ(right_kernel_basis(Matrix(F5, 1, 4)).rows(), 4u);
  const Matrix h = h_example();
  const Matrix k = right_kernel_basis(h);
  ASSERT_EQ(k.rows(), 2u);
  const Matrix prod = matmul(h, transpose(k));
  EXPECT_EQ(prod, Matrix(F5, 2, 2));
}

TEST(Matrix, SubmatrixExamples) {
  const Matrix h = h_example();
  const IndexSet all{0, 1, 2, 3};
  EXPECT_EQ(submatrix_cols(h, all), h);
  EXPECT_EQ(submatrix_cols(h, IndexSet{}).cols(), 0u);
  EXPECT_EQ(submatrix_cols(h, IndexSet{}).rows(), 2u);
  EXPECT_EQ(submatrix_cols(h, IndexSet{0, 1, 3}), Matrix::from_rows(F5, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_THROW(submatrix_cols(h, IndexSet{4}), UsageError);
}

TEST(Matrix, SolveLinear) {
  const Matrix id = Matrix::identity(F5, 3);
  const Word b{1, 4, 2};
  EXPECT_EQ(solve_linear(id, b), b);
  const Matrix a = Matrix::from_rows(F5, {{1, 2}, {2, 4}});
  EXPECT_FALSE(solve_linear(a, Word{1, 1}).has_value());
  auto x = solve_linear(a, Word{1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->size(), 2u);
  EXPECT_THROW(solve_linear(a, Word{1}), UsageError);
}

TEST(Matrix, InvertRoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Matrix m(F5, 4, 4, testutil::random_word(F5, 16, rng));
    if (rank(m) < 4) {
      EXPECT_THROW(invert(m), DomainError);
      continue;
    }
    EXPECT_EQ(matmul(m, invert(m)), Matrix::identity(F5, 4));
  }
  EXPECT_THROW(invert(Matrix(F5, 2, 3)), UsageError);
}

TEST(Matrix, RowReduceIsCanonical) {
  const Echelon e = row_reduce(Matrix::from_rows(F5, {{0, 2, 4}, {3, 1, 0}}));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced, Matrix::from_rows(F5, {{1, 0, 1}, {0, 1, 2}}));
}

TEST(Matrix, VandermondeExamples) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(vandermonde_ext(f7, 2, 3, Word{0, 1}, Word{1, 1, 1}), Matrix::from_rows(f7, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(vandermonde_ext(F5, 2, 4, Word{0, 1, 2}, Word{1, 1, 1, 1}), h_example());
  const Matrix single = vandermonde_ext(F5, 1, 4, Word{0, 1, 2}, Word{2, 3, 4, 1});
  EXPECT_EQ(single, Matrix::from_rows(F5, {{2, 3, 4, 1}}));
  EXPECT_THROW(vandermonde_ext(F5, 2, 4, Word{0, 1, 2}, Word{1, 0, 1, 1}), UsageError);
}

TEST(Matrix, TextRoundTrip) {
  const Matrix h = h_example();
  EXPECT_EQ(to_text(h), "2 4 5\n1 1 1 0\n0 1 2 1\n");
  EXPECT_EQ(matrix_from_text(F5, to_text(h)), h);
  EXPECT_EQ(matrix_from_lines(F5, to_lines(h)), h);
  EXPECT_THROW(matrix_from_text(F5, "2 4 7\n1 1 1 0\n0 1 2 1\n"), UsageError);
  EXPECT_THROW(matrix_from_text(F5, "1 2 5\n1 9\n"), UsageError);
}

TEST(Matrix, StackAndTranspose) {
  const Matrix h = h_example();
  EXPECT_EQ(transpose(transpose(h)), h);
  EXPECT_EQ(vstack(h, h).rows(), 4u);
  EXPECT_EQ(hstack(h, h).cols(), 8u);
  EXPECT_THROW(hstack(h, Matrix(F5, 3, 1)), UsageError);
}

TEST(Matrix, RankNullityRandom) {
  std::mt19937_64 rng(11);
  const Field f = Field::binary(4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
    Matrix m(f, r, c, testutil::random_word(f, r * c, rng));
    const Matrix k = right_kernel_basis(m);
    EXPECT_EQ(rank(m) + k.rows(), c);
    if (k.rows()) EXPECT_EQ(matmul(m, transpose(k)), Matrix(f, r, k.rows()));
  }
}
