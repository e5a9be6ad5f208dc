#pragma once

// Dense matrices over a finite field.
//
// All elimination routines share one pivot convention so kernels and
// generator matrices come out identical across runs: scan columns left to
// right, take the first row at or below the current one with a nonzero entry,
// scale it so the pivot is 1, and clear the column everywhere else.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convcode/field.hpp"

namespace convcode {

using Word = std::vector<Symbol>;
using IndexSet = std::vector<std::size_t>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Word>& rows);
  /// Concatenate rows; every row must have the same length (cols).
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Word>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Word column(std::size_t c) const;
  const std::vector<Symbol>& entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);
/// Row vector times matrix: x * M.
Word vec_mul(const Field& field, std::span<const Symbol> x, const Matrix& m);
/// Throws DomainError when m is singular, UsageError when not square.
Matrix invert(const Matrix& m);

/// Rows form a basis of { x : M x^T = 0 }, one row per free column of the
/// reduced form (free entry 1, other free entries 0).
Matrix right_kernel_basis(const Matrix& m);

/// Columns of m in the order given by `cols` (relative order is the caller's).
Matrix submatrix_cols(const Matrix& m, std::span<const std::size_t> cols);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Some x with A x^T = b^T (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<Word> solve_linear(const Matrix& a, std::span<const Symbol> b);

/// Extended Vandermonde-type matrix with r rows and n columns. Column j < n-1
/// is w_j * (1, g_j, ..., g_j^{r-1})^T and the last column is (0, ..., 0, w_{n-1})^T.
Matrix vandermonde_ext(const Field& field, std::size_t r, std::size_t n,
                       std::span<const Symbol> gamma, std::span<const Symbol> w);

/// Text dump: "rows cols q" on the first line, then one space-separated row per line.
std::string to_text(const Matrix& m);
std::vector<std::string> to_lines(const Matrix& m);
Matrix matrix_from_text(const Field& field, const std::string& text);
Matrix matrix_from_lines(const Field& field, const std::vector<std::string>& lines);

}  // namespace convcode
