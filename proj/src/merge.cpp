#include <algorithm>
#include <numeric>
#include <set>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"

namespace convcode {

namespace {

IndexSet iota_set(std::size_t first, std::size_t count) {
  IndexSet out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

IndexSet sorted_union(const IndexSet& a, const IndexSet& b) {
  std::set<std::size_t> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

// Column indices, within `universe`, of each element of `subset`.
IndexSet locate(const IndexSet& universe, const IndexSet& subset) {
  IndexSet out;
  for (std::size_t p : subset) {
    auto it = std::find(universe.begin(), universe.end(), p);
    if (it == universe.end()) throw UsageError("position " + std::to_string(p) + " not in punctured set");
    out.push_back(static_cast<std::size_t>(it - universe.begin()));
  }
  return out;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void require_codeword(const ExtGrsSpec& spec, const Word& c, std::size_t index) {
  if (!is_codeword(spec, c))
    throw CorruptionError("input " + std::to_string(index + 1) + " is not a codeword of its initial code");
}

}  // namespace

std::size_t MergePlan::written_count() const {
  std::size_t kept = 0;
  for (const auto& u : unchanged) kept += u.size();
  return final_code.n >= kept ? final_code.n - kept : 0;
}

IndexSet MergePlan::final_positions_of(std::size_t i) const {
  std::size_t offset = 0;
  for (std::size_t a = 0; a < i; ++a) offset += unchanged[a].size();
  return iota_set(offset, unchanged[i].size());
}

IndexSet MergePlan::written_positions() const {
  return iota_set(final_code.n - written_count(), written_count());
}

AccessLayout MergePlan::layout() const {
  AccessLayout l;
  for (const auto& c : initial) l.initial_lengths.push_back(c.n);
  l.final_lengths = {final_code.n};
  for (std::size_t i = 0; i < initial.size(); ++i) {
    l.unchanged.push_back({unchanged[i]});
    l.read.push_back({read[i]});
  }
  return l;
}

void MergePlan::check_well_formed() const {
  params.validate();
  if (!params.is_merge()) throw UsageError("merge plan needs exactly one final code");
  const std::size_t t1 = params.t1();
  if (initial.size() != t1 || unchanged.size() != t1 || read.size() != t1 ||
      punctured_positions.size() != t1 || punctured_checks.size() != t1 ||
      unchanged_blocks.size() != t1)
    throw UsageError("merge plan: per-code lists must all have t1 = " + std::to_string(t1) + " entries");
  std::size_t kept = 0;
  for (std::size_t i = 0; i < t1; ++i) {
    const ExtGrsSpec& c = initial[i];
    if (!(c.field == field())) throw UsageError("merge plan: codes over different fields");
    if (c.n != params.initial[i].n || c.k() != params.initial[i].k)
      throw UsageError("merge plan: initial code " + std::to_string(i + 1) + " does not match params");
    std::set<std::size_t> u(unchanged[i].begin(), unchanged[i].end());
    if (u.size() != unchanged[i].size())
      throw UsageError("merge plan: repeated position in U_" + std::to_string(i + 1));
    for (std::size_t p : unchanged[i])
      if (p >= c.n) throw UsageError("merge plan: U position out of range");
    for (std::size_t p : read[i])
      if (p >= c.n) throw UsageError("merge plan: R position out of range");
    // An MDS final code cannot contain more than k_i symbols of one initial code.
    if (unchanged[i].size() > c.k())
      throw UsageError("merge plan: |U_" + std::to_string(i + 1) + "| = " +
                       std::to_string(unchanged[i].size()) + " exceeds k = " + std::to_string(c.k()));
    kept += unchanged[i].size();
  }
  if (final_code.n != params.final.front().n || final_code.k() != params.final.front().k)
    throw UsageError("merge plan: final code does not match params");
  if (kept > final_code.n) throw UsageError("merge plan: more unchanged symbols than final length");
  if (written_block.rows() != final_code.r || written_block.cols() != written_count())
    throw UsageError("merge plan: written block must be r_F x |W|");
}

MergePlan build_merge(const ConvertParams& params, const Field& field) {
  params.validate();
  if (!params.is_merge()) throw UsageError("build_merge needs t2 = 1");
  const std::size_t t1 = params.t1();
  const CodeParams fin = params.final.front();
  const std::size_t r_f = fin.r();

  std::size_t longest = fin.n;
  for (const auto& c : params.initial) longest = std::max(longest, c.n);
  if (field.order() < longest - 1)
    throw ParameterError("field too small: need q >= " + std::to_string(longest - 1) + ", have q = " +
                             std::to_string(field.order()),
                         longest - 1);

  // Distinct pool for every unchanged coordinate plus gamma'; each code's
  // remaining coordinates only need to avoid that code's own values.
  std::size_t next = 0;
  std::vector<Word> gammas(t1);
  Word gamma_star;
  for (std::size_t i = 0; i < t1; ++i) {
    for (std::size_t j = 0; j < params.initial[i].k; ++j) gammas[i].push_back(static_cast<Symbol>(next++));
    gamma_star.insert(gamma_star.end(), gammas[i].begin(), gammas[i].end());
  }
  for (std::size_t j = 0; j + 1 < r_f; ++j) gamma_star.push_back(static_cast<Symbol>(next++));
  for (std::size_t i = 0; i < t1; ++i) {
    std::set<Symbol> used(gammas[i].begin(), gammas[i].end());
    for (Symbol e = 0; gammas[i].size() + 1 < params.initial[i].n; ++e)
      if (!used.contains(e)) gammas[i].push_back(e);
  }

  MergePlan plan{params,
                 {},
                 ExtGrsSpec{field, 0, 0, {}, {}},
                 classify_s(params),
                 {},
                 {},
                 std::vector<IndexSet>(t1),
                 std::vector<std::optional<Matrix>>(t1),
                 std::vector<std::optional<Matrix>>(t1),
                 Matrix(field, 0, 0)};

  Word w_star;
  for (std::size_t i = 0; i < t1; ++i) {
    const CodeParams& c = params.initial[i];
    plan.initial.push_back(ExtGrsSpec::make(field, c.n, c.r(), gammas[i], Word(c.n, 1)));
    plan.unchanged.push_back(iota_set(0, c.k));
    if (contains(plan.s, i)) {
      // Trailing r_F positions, which include the extension position.
      plan.read.push_back(iota_set(c.n - r_f, r_f));
      plan.punctured_positions[i] = sorted_union(plan.unchanged[i], plan.read[i]);
      const ExtGrsSpec punctured = puncture(plan.initial[i], plan.punctured_positions[i]);
      plan.punctured_checks[i] = parity_check(punctured);
      for (std::size_t col : locate(plan.punctured_positions[i], plan.unchanged[i]))
        w_star.push_back(punctured.w[col]);
    } else {
      plan.read.push_back(plan.unchanged[i]);
      for (std::size_t p : plan.unchanged[i]) w_star.push_back(plan.initial[i].w[p]);
    }
  }
  w_star.insert(w_star.end(), r_f, 1);
  plan.final_code = ExtGrsSpec::make(field, fin.n, r_f, gamma_star, w_star);

  const Matrix h_final = parity_check(plan.final_code);
  for (std::size_t i = 0; i < t1; ++i)
    if (!contains(plan.s, i)) plan.unchanged_blocks[i] = submatrix_cols(h_final, plan.final_positions_of(i));
  plan.written_block = submatrix_cols(h_final, plan.written_positions());
  return plan;
}

MergeResult merge_convert(const MergePlan& plan, const std::vector<Word>& inputs) {
  plan.check_well_formed();
  const Field& f = plan.field();
  const std::size_t t1 = plan.params.t1();
  if (inputs.size() != t1)
    throw UsageError("merge_convert: expected " + std::to_string(t1) + " input codewords, got " +
                     std::to_string(inputs.size()));
  for (std::size_t i = 0; i < t1; ++i) require_codeword(plan.initial[i], inputs[i], i);

  // c_W (H_F|_W)^T = sum_{i in S} c_i|_R (Hbar_i|_R)^T - sum_{i not in S} c_i|_U (H_F|_U)^T
  Word rhs(plan.final_code.r, 0);
  for (std::size_t i = 0; i < t1; ++i) {
    Word part;
    if (contains(plan.s, i)) {
      const Matrix& hbar = plan.punctured_checks[i].value();
      const Matrix block = submatrix_cols(hbar, locate(plan.punctured_positions[i], plan.read[i]));
      part = vec_mul(f, restrict_to(inputs[i], plan.read[i]), transpose(block));
    } else {
      const Matrix& block = plan.unchanged_blocks[i].value();
      part = vec_mul(f, restrict_to(inputs[i], plan.read[i]), transpose(block));
      for (Symbol& s : part) s = f.neg(s);
    }
    for (std::size_t row = 0; row < rhs.size(); ++row) rhs[row] = f.add(rhs[row], part[row]);
  }
  const Word written = vec_mul(f, rhs, invert(transpose(plan.written_block)));

  MergeResult out;
  for (std::size_t i = 0; i < t1; ++i) {
    const Word kept = restrict_to(inputs[i], plan.unchanged[i]);
    out.final_word.insert(out.final_word.end(), kept.begin(), kept.end());
  }
  out.final_word.insert(out.final_word.end(), written.begin(), written.end());
  out.report = access_report(plan);
  return out;
}

AccessReport access_report(const MergePlan& plan) {
  AccessReport rep = access_report(plan.layout());
  const MergeBound bound = merge_lower_bound(plan.params);
  rep.bound = bound.total;
  rep.read_bound = bound.read;
  rep.optimal = rep.rho == bound.total && rep.per_initial_reads == bound.per_code_reads;
  std::size_t kept = 0, max_kept = 0;
  for (std::size_t i = 0; i < plan.unchanged.size(); ++i) {
    kept += plan.unchanged[i].size();
    max_kept += plan.params.initial[i].k;
  }
  rep.stable = kept == max_kept;
  return rep;
}

StructureCheck verify_optimal_structure(const MergePlan& plan) {
  auto fail = [](std::string msg) { return StructureCheck{false, std::move(msg)}; };
  try {
    plan.check_well_formed();
  } catch (const UsageError& e) {
    return fail(std::string("malformed plan: ") + e.what());
  }
  const std::size_t t1 = plan.params.t1();
  const std::size_t r_f = plan.final_code.r;
  if (plan.s != classify_s(plan.params)) return fail("set S does not match r_F < k_i and r_F <= r_i");

  for (std::size_t i = 0; i < t1; ++i) {
    const std::string name = std::to_string(i + 1);
    const std::size_t k = plan.initial[i].k();
    if (plan.unchanged[i].size() != k)
      return fail("cardinality: |U_" + name + "| = " + std::to_string(plan.unchanged[i].size()) +
                  ", expected k = " + std::to_string(k));
    const std::set<std::size_t> r(plan.read[i].begin(), plan.read[i].end());
    if (r.size() != plan.read[i].size()) return fail("cardinality: repeated position in R_" + name);
    if (contains(plan.s, i)) {
      if (r.size() != r_f)
        return fail("cardinality: |R_" + name + "| = " + std::to_string(r.size()) + ", expected r_F = " +
                    std::to_string(r_f));
      for (std::size_t p : plan.unchanged[i])
        if (r.contains(p)) return fail("overlap: U_" + name + " and R_" + name + " intersect");
    } else if (r.size() != k) {
      return fail("cardinality: |R_" + name + "| = " + std::to_string(r.size()) + ", expected k = " +
                  std::to_string(k));
    }
  }

  const Matrix h_final = parity_check(plan.final_code);
  for (std::size_t i = 0; i < t1; ++i) {
    const std::string name = std::to_string(i + 1);
    const Matrix final_block = submatrix_cols(h_final, plan.final_positions_of(i));
    if (contains(plan.s, i)) {
      if (!plan.punctured_checks[i]) return fail("missing punctured parity check for code " + name);
      const Matrix& hbar = *plan.punctured_checks[i];
      if (plan.punctured_positions[i] != sorted_union(plan.unchanged[i], plan.read[i]))
        return fail("punctured positions of code " + name + " are not U_" + name + " u R_" + name);
      if (hbar.rows() != r_f || hbar.cols() != plan.punctured_positions[i].size())
        return fail("punctured parity check of code " + name + " has the wrong shape");
      const Matrix hbar_u = submatrix_cols(hbar, locate(plan.punctured_positions[i], plan.unchanged[i]));
      if (!(hbar_u == final_block))
        return fail("block mismatch: final parity check on U_" + name +
                    " differs from the punctured parity check of code " + name);
      const Matrix g = submatrix_cols(generator(plan.initial[i]), plan.punctured_positions[i]);
      const Matrix prod = matmul(g, transpose(hbar));
      if (rank(hbar) != r_f ||
          std::any_of(prod.entries().begin(), prod.entries().end(), [](Symbol s) { return s != 0; }))
        return fail("punctured parity check of code " + name + " is not a parity check of C_" + name +
                    " restricted to U u R");
    } else {
      if (!plan.unchanged_blocks[i] || !(*plan.unchanged_blocks[i] == final_block))
        return fail("block mismatch: stored final-code block for U_" + name + " is stale");
    }
  }
  if (!(plan.written_block == submatrix_cols(h_final, plan.written_positions())))
    return fail("block mismatch: stored written block differs from the final parity check");
  if (rank(plan.written_block) != plan.written_block.rows())
    return fail("written block is singular");
  return {};
}

}  // namespace convcode
