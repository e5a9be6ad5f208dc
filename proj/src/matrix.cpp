#include "convcode/matrix.hpp"

#include <sstream>

#include "convcode/errors.hpp"

namespace convcode {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw UsageError("matrix entry count " + std::to_string(data_.size()) + " != " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
  for (Symbol s : data_)
    if (!field_.contains(s))
      throw UsageError("matrix entry " + std::to_string(s) + " out of range for " +
                       field_.spec().describe());
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Word>& rows) {
  return from_rows(std::move(field), rows.empty() ? 0 : rows.front().size(), rows);
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Word>& rows) {
  std::vector<Symbol> data;
  data.reserve(rows.size() * cols);
  for (const Word& r : rows) {
    if (r.size() != cols) throw UsageError("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Word Matrix::column(std::size_t c) const {
  Word out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Echelon row_reduce(Matrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Symbol scale = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Symbol factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw UsageError("matmul: operands from different fields");
  if (a.cols() != b.rows())
    throw UsageError("matmul: shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Word vec_mul(const Field& field, std::span<const Symbol> x, const Matrix& m) {
  if (x.size() != m.rows())
    throw UsageError("vec_mul: vector length " + std::to_string(x.size()) + " != " +
                     std::to_string(m.rows()) + " rows");
  Word out(m.cols(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = field.add(out[j], field.mul(x[k], m(k, j)));
  }
  return out;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("invert: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  auto ech = row_reduce(hstack(m, Matrix::identity(m.field(), n)));
  if (ech.pivots.size() < n || ech.pivots[n - 1] >= n) throw DomainError("invert: matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = ech.reduced(r, n + c);
  return out;
}

Matrix right_kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<Word> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Word v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(f, m.cols(), basis);
}

Matrix submatrix_cols(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= m.cols())
      throw UsageError("column index " + std::to_string(cols[j]) + " out of range (" +
                       std::to_string(m.cols()) + " columns)");
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = m(r, cols[j]);
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw UsageError("hstack: row count mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw UsageError("vstack: column count mismatch");
  std::vector<Symbol> data = a.entries();
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

std::optional<Word> solve_linear(const Matrix& a, std::span<const Symbol> b) {
  if (b.size() != a.rows())
    throw UsageError("solve_linear: rhs length " + std::to_string(b.size()) + " != " +
                     std::to_string(a.rows()) + " rows");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto ech = row_reduce(std::move(aug));
  Word x(a.cols(), 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;  // 0 = nonzero
    x[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

Matrix vandermonde_ext(const Field& field, std::size_t r, std::size_t n,
                       std::span<const Symbol> gamma, std::span<const Symbol> w) {
  if (r == 0 || r >= n)
    throw UsageError("vandermonde_ext: need 0 < r < n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  if (gamma.size() != n - 1 || w.size() != n)
    throw UsageError("vandermonde_ext: expected |gamma| = n-1 and |w| = n");
  for (Symbol x : gamma)
    if (!field.contains(x)) throw UsageError("vandermonde_ext: gamma entry out of range");
  for (Symbol x : w)
    if (x == 0 || !field.contains(x)) throw UsageError("vandermonde_ext: weights must be nonzero field elements");
  Matrix m(field, r, n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Symbol v = w[j];
    for (std::size_t i = 0; i < r; ++i) {
      m(i, j) = v;
      v = field.mul(v, gamma[j]);
    }
  }
  m(r - 1, n - 1) = w[n - 1];
  return m;
}

std::vector<std::string> to_lines(const Matrix& m) {
  std::vector<std::string> lines;
  lines.push_back(std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                  std::to_string(m.field().order()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) line += ' ';
      line += std::to_string(m(r, c));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string to_text(const Matrix& m) {
  std::string out;
  for (const auto& l : to_lines(m)) out += l + "\n";
  return out;
}

Matrix matrix_from_lines(const Field& field, const std::vector<std::string>& lines) {
  if (lines.empty()) throw UsageError("matrix text: missing header line");
  std::istringstream header(lines.front());
  std::size_t rows = 0, cols = 0;
  std::uint64_t q = 0;
  if (!(header >> rows >> cols >> q)) throw UsageError("matrix text: header must be 'rows cols q'");
  if (q != field.order())
    throw UsageError("matrix text: q=" + std::to_string(q) + " does not match field order " +
                     std::to_string(field.order()));
  if (lines.size() != rows + 1)
    throw UsageError("matrix text: expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(lines.size() - 1));
  std::vector<Symbol> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::istringstream in(lines[r + 1]);
    std::uint64_t v = 0;
    std::size_t count = 0;
    while (in >> v) {
      if (!field.contains(v)) throw UsageError("matrix text: symbol " + std::to_string(v) + " >= q");
      data.push_back(static_cast<Symbol>(v));
      ++count;
    }
    if (!in.eof() || count != cols)
      throw UsageError("matrix text: row " + std::to_string(r + 1) + " malformed");
  }
  return Matrix(field, rows, cols, std::move(data));
}

Matrix matrix_from_text(const Field& field, const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return matrix_from_lines(field, lines);
}

}  // namespace convcode
