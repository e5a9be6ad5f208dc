#include "convcode/grs.hpp"

#include <algorithm>
#include <set>

#include "convcode/errors.hpp"

namespace convcode {

void ExtGrsSpec::validate() const {
  if (r == 0 || r >= n)
    throw UsageError("extended GRS code needs 0 < r < n, got n=" + std::to_string(n) +
                     " r=" + std::to_string(r));
  if (gamma.size() != n - 1)
    throw UsageError("gamma must have n-1 = " + std::to_string(n - 1) + " entries, got " +
                     std::to_string(gamma.size()));
  if (w.size() != n)
    throw UsageError("w must have n = " + std::to_string(n) + " entries, got " +
                     std::to_string(w.size()));
  std::set<Symbol> seen;
  for (Symbol g : gamma) {
    if (!field.contains(g)) throw UsageError("gamma entry " + std::to_string(g) + " >= q");
    if (!seen.insert(g).second)
      throw UsageError("gamma entries must be pairwise distinct (repeated " + std::to_string(g) + ")");
  }
  for (Symbol x : w)
    if (x == 0 || !field.contains(x)) throw UsageError("w entries must be nonzero field elements");
}

ExtGrsSpec ExtGrsSpec::make(Field field, std::size_t n, std::size_t r, Word gamma, Word w) {
  ExtGrsSpec s{std::move(field), n, r, std::move(gamma), std::move(w)};
  s.validate();
  return s;
}

ExtGrsSpec ExtGrsSpec::standard(Field field, std::size_t n, std::size_t r) {
  if (n == 0 || n - 1 > field.order())
    throw ParameterError("length " + std::to_string(n) + " needs q >= " + std::to_string(n - 1) +
                             ", have q = " + std::to_string(field.order()),
                         n - 1);
  Word gamma(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) gamma[j] = static_cast<Symbol>(j);
  return make(std::move(field), n, r, std::move(gamma), Word(n, 1));
}

Matrix parity_check(const ExtGrsSpec& spec) {
  return vandermonde_ext(spec.field, spec.r, spec.n, spec.gamma, spec.w);
}

Matrix generator(const ExtGrsSpec& spec) { return right_kernel_basis(parity_check(spec)); }

Word encode(const ExtGrsSpec& spec, std::span<const Symbol> message) {
  if (message.size() != spec.k())
    throw UsageError("message length " + std::to_string(message.size()) + " != k = " +
                     std::to_string(spec.k()));
  for (Symbol s : message)
    if (!spec.field.contains(s)) throw UsageError("message symbol " + std::to_string(s) + " >= q");
  return vec_mul(spec.field, message, generator(spec));
}

bool is_codeword(const ExtGrsSpec& spec, std::span<const Symbol> v) {
  if (v.size() != spec.n) return false;
  for (Symbol s : v)
    if (!spec.field.contains(s)) return false;
  const Word syndrome = vec_mul(spec.field, v, transpose(parity_check(spec)));
  return std::all_of(syndrome.begin(), syndrome.end(), [](Symbol s) { return s == 0; });
}

Word recover_erasures(const ExtGrsSpec& spec, const std::map<std::size_t, Symbol>& known) {
  const Field& f = spec.field;
  for (const auto& [pos, val] : known) {
    if (pos >= spec.n) throw UsageError("known position " + std::to_string(pos) + " >= n");
    if (!f.contains(val)) throw UsageError("known symbol " + std::to_string(val) + " >= q");
  }
  if (known.size() < spec.k())
    throw InsufficientDataError("need at least k = " + std::to_string(spec.k()) +
                                " known symbols, got " + std::to_string(known.size()));
  const Matrix h = parity_check(spec);
  IndexSet erased;
  for (std::size_t j = 0; j < spec.n; ++j)
    if (!known.contains(j)) erased.push_back(j);

  // H|_E x_E^T = -sum_{j known} x_j H[:, j]
  Word rhs(spec.r, 0);
  for (const auto& [pos, val] : known)
    for (std::size_t i = 0; i < spec.r; ++i) rhs[i] = f.sub(rhs[i], f.mul(val, h(i, pos)));

  Word out(spec.n, 0);
  for (const auto& [pos, val] : known) out[pos] = val;
  if (erased.empty()) {
    if (std::any_of(rhs.begin(), rhs.end(), [](Symbol s) { return s != 0; }))
      throw CorruptionError("supplied word is not a codeword");
    return out;
  }
  auto x = solve_linear(submatrix_cols(h, erased), rhs);
  if (!x) throw CorruptionError("known symbols are not a restriction of any codeword");
  for (std::size_t e = 0; e < erased.size(); ++e) out[erased[e]] = (*x)[e];
  return out;
}

Word restrict_to(std::span<const Symbol> v, std::span<const std::size_t> t) {
  Word out;
  out.reserve(t.size());
  for (std::size_t j : t) {
    if (j >= v.size()) throw UsageError("restriction index " + std::to_string(j) + " out of range");
    out.push_back(v[j]);
  }
  return out;
}

ExtGrsSpec puncture(const ExtGrsSpec& spec, std::span<const std::size_t> t) {
  const Field& f = spec.field;
  if (!std::is_sorted(t.begin(), t.end()) ||
      std::adjacent_find(t.begin(), t.end()) != t.end())
    throw UsageError("puncture: T must be strictly increasing");
  if (t.empty() || t.back() != spec.n - 1)
    throw UsageError("puncture: T must contain the last position n");
  if (t.size() <= spec.k())
    throw UsageError("puncture: |T| = " + std::to_string(t.size()) + " must exceed k = " +
                     std::to_string(spec.k()));
  const std::size_t len = t.size();
  const std::size_t r_new = spec.r - (spec.n - len);

  const Matrix h = parity_check(spec);
  IndexSet complement;
  for (std::size_t j = 0, it = 0; j < spec.n; ++j) {
    if (it < len && t[it] == j) {
      ++it;
      continue;
    }
    complement.push_back(j);
  }

  // Dual codewords vanishing off T, restricted to T: they span (C|_T)^perp.
  const Matrix combos = right_kernel_basis(transpose(submatrix_cols(h, complement)));
  const Matrix dual_on_t = matmul(combos, submatrix_cols(h, t));
  // Generator of C|_T.
  const Matrix gen_t = right_kernel_basis(dual_on_t);

  Word gamma_new(len - 1);
  for (std::size_t j = 0; j + 1 < len; ++j) gamma_new[j] = spec.gamma[t[j]];

  // Row l of the target parity check is theta o v_l. It must be orthogonal to
  // every row of gen_t, which is linear in theta.
  std::vector<Word> equations;
  for (std::size_t l = 0; l < r_new; ++l) {
    Word v(len, 0);
    for (std::size_t j = 0; j + 1 < len; ++j) v[j] = f.pow(gamma_new[j], l);
    v[len - 1] = (l + 1 == r_new) ? 1 : 0;
    for (std::size_t g = 0; g < gen_t.rows(); ++g) {
      Word eq(len);
      for (std::size_t j = 0; j < len; ++j) eq[j] = f.mul(v[j], gen_t(g, j));
      equations.push_back(std::move(eq));
    }
  }
  const Matrix solutions = right_kernel_basis(Matrix::from_rows(f, len, equations));

  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    auto row = solutions.row(s);
    if (std::any_of(row.begin(), row.end(), [](Symbol x) { return x == 0; })) continue;
    const Symbol scale = f.inv(row[len - 1]);
    Word theta(len);
    for (std::size_t j = 0; j < len; ++j) theta[j] = f.mul(row[j], scale);
    return ExtGrsSpec::make(f, len, r_new, std::move(gamma_new), std::move(theta));
  }
  throw InternalError("puncture: no all-nonzero multiplier vector found (" +
                      std::to_string(solutions.rows()) + "-dimensional solution space)");
}

}  // namespace convcode
