#include "convcode/oracle.hpp"

#include <vector>

#include "convcode/errors.hpp"

namespace convcode::oracle {

bool mds_exhaustive(const Matrix& h) {
  const std::size_t n = h.cols();
  const std::size_t r = h.rows();
  if (n > kMaxMdsLength)
    throw UsageError("mds_exhaustive: n = " + std::to_string(n) + " exceeds guard " +
                     std::to_string(kMaxMdsLength));
  if (r > n) return false;
  // Walk all r-subsets as bitmasks with exactly r bits set.
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    IndexSet cols;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1U) cols.push_back(j);
    if (rank(submatrix_cols(h, cols)) != r) return false;
  }
  return true;
}

std::set<Word> codebook(const ExtGrsSpec& spec, std::span<const std::size_t> t) {
  const std::uint64_t q = spec.field.order();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    size *= q;
    if (size > kMaxCodebookSize)
      throw UsageError("codebook: q^k exceeds guard 2^16");
  }
  const Matrix g = generator(spec);
  std::set<Word> out;
  Word msg(spec.k(), 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t v = idx;
    for (auto& s : msg) {
      s = static_cast<Symbol>(v % q);
      v /= q;
    }
    out.insert(restrict_to(vec_mul(spec.field, msg, g), t));
  }
  return out;
}

bool can_generate(const ExtGrsSpec& source, std::span<const std::size_t> b, const ExtGrsSpec& target,
                  std::span<const std::size_t> a) {
  if (source.n > kMaxMdsLength || target.n > kMaxMdsLength)
    throw UsageError("can_generate: code length exceeds guard");
  const Matrix gb = submatrix_cols(generator(source), b);
  const Matrix ga = submatrix_cols(generator(target), a);
  if (!(source == target)) return rank(ga) <= rank(gb);
  // Same code: each target column must lie in the column span of G|_B.
  for (std::size_t c = 0; c < ga.cols(); ++c)
    if (!solve_linear(gb, ga.column(c))) return false;
  return true;
}

}  // namespace convcode::oracle
