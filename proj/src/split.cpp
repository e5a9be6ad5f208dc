#include <algorithm>
#include <numeric>
#include <set>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"

namespace convcode {

namespace {

IndexSet locate(const IndexSet& universe, const IndexSet& subset) {
  IndexSet out;
  for (std::size_t p : subset) {
    auto it = std::find(universe.begin(), universe.end(), p);
    if (it == universe.end()) throw UsageError("position " + std::to_string(p) + " not in punctured set");
    out.push_back(static_cast<std::size_t>(it - universe.begin()));
  }
  return out;
}

IndexSet concat_sorted(const std::vector<IndexSet>& parts) {
  std::set<std::size_t> s;
  for (const auto& p : parts) s.insert(p.begin(), p.end());
  return {s.begin(), s.end()};
}

}  // namespace

IndexSet SplitPlan::reads_for(std::size_t j) const {
  if (privileged && *privileged == j) {
    std::vector<IndexSet> parts;
    for (std::size_t a = 0; a < unchanged.size(); ++a)
      if (a != j) parts.push_back(unchanged[a]);
    parts.push_back(extra_reads);
    return concat_sorted(parts);
  }
  return unchanged[j];
}

AccessLayout SplitPlan::layout() const {
  AccessLayout l;
  l.initial_lengths = {initial.n};
  for (const auto& f : finals) l.final_lengths.push_back(f.n);
  l.unchanged = {unchanged};
  l.read.emplace_back();
  for (std::size_t j = 0; j < finals.size(); ++j) l.read[0].push_back(reads_for(j));
  return l;
}

void SplitPlan::check_well_formed() const {
  params.validate();
  if (!params.is_split()) throw UsageError("split plan needs exactly one initial code");
  const std::size_t t2 = params.t2();
  if (finals.size() != t2 || unchanged.size() != t2)
    throw UsageError("split plan: per-final lists must have t2 = " + std::to_string(t2) + " entries");
  if (initial.n != params.initial.front().n || initial.k() != params.initial.front().k)
    throw UsageError("split plan: initial code does not match params");
  std::set<std::size_t> seen;
  for (std::size_t j = 0; j < t2; ++j) {
    if (!(finals[j].field == field())) throw UsageError("split plan: codes over different fields");
    if (finals[j].n != params.final[j].n || finals[j].k() != params.final[j].k)
      throw UsageError("split plan: final code " + std::to_string(j + 1) + " does not match params");
    if (unchanged[j].size() > finals[j].k())
      throw UsageError("split plan: |U_" + std::to_string(j + 1) + "| exceeds k_F");
    for (std::size_t p : unchanged[j]) {
      if (p >= initial.n) throw UsageError("split plan: U position out of range");
      if (!seen.insert(p).second) throw UsageError("split plan: unchanged sets overlap");
    }
  }
  if (privileged) {
    if (*privileged >= t2) throw UsageError("split plan: privileged index out of range");
    for (std::size_t p : extra_reads) {
      if (p >= initial.n) throw UsageError("split plan: V position out of range");
      if (seen.contains(p)) throw UsageError("split plan: V intersects an unchanged set");
    }
    if (!punctured_check) throw UsageError("split plan: privileged final needs a punctured parity check");
  }
}

SplitPlan build_split(const ConvertParams& params, const Field& field) {
  params.validate();
  if (!params.is_split()) throw UsageError("build_split needs t1 = 1");
  const CodeParams init = params.initial.front();
  const std::size_t t2 = params.t2();

  const std::optional<std::size_t> privileged = privileged_final(params);

  std::size_t longest = init.n;
  for (std::size_t j = 0; j < t2; ++j)
    if (j != privileged) longest = std::max(longest, params.final[j].n);
  if (field.order() < longest - 1)
    throw ParameterError("field too small: need q >= " + std::to_string(longest - 1) + ", have q = " +
                             std::to_string(field.order()),
                         longest - 1);

  SplitPlan plan{params, ExtGrsSpec::standard(field, init.n, init.r()), {}, {}, privileged, {}, {}, {}};
  std::size_t offset = 0;
  for (std::size_t j = 0; j < t2; ++j) {
    IndexSet u(params.final[j].k);
    std::iota(u.begin(), u.end(), offset);
    offset += u.size();
    plan.unchanged.push_back(std::move(u));
  }

  std::optional<ExtGrsSpec> privileged_code;
  if (privileged) {
    const std::size_t r_f = params.final[*privileged].r();
    for (std::size_t p = init.n - r_f; p < init.n; ++p) plan.extra_reads.push_back(p);
    std::vector<IndexSet> parts = plan.unchanged;
    parts.push_back(plan.extra_reads);
    plan.punctured_positions = concat_sorted(parts);
    const ExtGrsSpec punctured = puncture(plan.initial, plan.punctured_positions);
    plan.punctured_check = parity_check(punctured);

    // The final code's parity check is the punctured one on U_{j*} u V. V
    // ends with the extension position, so the result is extended GRS again.
    IndexSet cols = locate(plan.punctured_positions, plan.unchanged[*privileged]);
    const IndexSet v_cols = locate(plan.punctured_positions, plan.extra_reads);
    cols.insert(cols.end(), v_cols.begin(), v_cols.end());
    Word gamma, w;
    for (std::size_t c : cols) {
      if (c + 1 < punctured.n) gamma.push_back(punctured.gamma[c]);
      w.push_back(punctured.w[c]);
    }
    privileged_code = ExtGrsSpec::make(field, cols.size(), r_f, std::move(gamma), std::move(w));
  }
  for (std::size_t j = 0; j < t2; ++j) {
    if (j == privileged)
      plan.finals.push_back(*privileged_code);
    else
      plan.finals.push_back(ExtGrsSpec::standard(field, params.final[j].n, params.final[j].r()));
  }
  return plan;
}

SplitResult split_convert(const SplitPlan& plan, const Word& input) {
  plan.check_well_formed();
  const Field& f = plan.field();
  if (!is_codeword(plan.initial, input)) throw CorruptionError("input is not a codeword of the initial code");

  SplitResult out;
  for (std::size_t j = 0; j < plan.finals.size(); ++j) {
    const ExtGrsSpec& code = plan.finals[j];
    const Word kept = restrict_to(input, plan.unchanged[j]);
    Word word;
    if (j == plan.privileged) {
      // c_W (Hbar|_V)^T = c|_reads (Hbar|_reads)^T, reads = other U's and V.
      const Matrix& hbar = *plan.punctured_check;
      const IndexSet reads = plan.reads_for(j);
      const Word rhs = vec_mul(f, restrict_to(input, reads),
                               transpose(submatrix_cols(hbar, locate(plan.punctured_positions, reads))));
      const Matrix hv = submatrix_cols(hbar, locate(plan.punctured_positions, plan.extra_reads));
      const Word written = vec_mul(f, rhs, invert(transpose(hv)));
      word = kept;
      word.insert(word.end(), written.begin(), written.end());
    } else {
      std::map<std::size_t, Symbol> known;
      for (std::size_t p = 0; p < kept.size(); ++p) known[p] = kept[p];
      word = recover_erasures(code, known);
    }
    out.final_words.push_back(std::move(word));
  }
  out.report = access_report(plan);
  return out;
}

AccessReport access_report(const SplitPlan& plan) {
  AccessReport rep = access_report(plan.layout());
  const SplitBound bound = split_lower_bound(plan.params);
  rep.bound = bound.total;
  rep.read_bound = bound.read;
  rep.optimal = rep.rho_r == bound.read && rep.rho == bound.total;
  std::size_t kept = 0, max_kept = 0;
  for (std::size_t j = 0; j < plan.unchanged.size(); ++j) {
    kept += plan.unchanged[j].size();
    max_kept += plan.params.final[j].k;
  }
  rep.stable = kept == max_kept;
  return rep;
}

StructureCheck verify_split_structure(const SplitPlan& plan) {
  auto fail = [](std::string msg) { return StructureCheck{false, std::move(msg)}; };
  try {
    plan.check_well_formed();
  } catch (const UsageError& e) {
    return fail(std::string("malformed plan: ") + e.what());
  }
  for (std::size_t j = 0; j < plan.finals.size(); ++j)
    if (plan.unchanged[j].size() != plan.finals[j].k())
      return fail("cardinality: |U_" + std::to_string(j + 1) + "| != k_F");

  const auto feasible = split_feasible(plan.params);
  if (feasible.empty() != !plan.privileged)
    return fail(plan.privileged ? "privileged final chosen but none is feasible"
                                : "a feasible final exists but none is privileged");
  if (!plan.privileged) return {};

  const std::size_t js = *plan.privileged;
  if (std::find(feasible.begin(), feasible.end(), js) == feasible.end())
    return fail("privileged final " + std::to_string(js + 1) + " violates r_F <= min(k_F, r_I)");
  const std::size_t r_f = plan.finals[js].r;
  if (plan.extra_reads.size() != r_f) return fail("cardinality: |V| != r_F of the privileged final");
  if (std::find(plan.extra_reads.begin(), plan.extra_reads.end(), plan.initial.n - 1) == plan.extra_reads.end())
    return fail("V must contain the extension position of the initial code");
  std::vector<IndexSet> parts = plan.unchanged;
  parts.push_back(plan.extra_reads);
  if (plan.punctured_positions != concat_sorted(parts))
    return fail("punctured positions are not (union of U) u V");
  const Matrix& hbar = *plan.punctured_check;
  if (hbar.rows() != r_f || hbar.cols() != plan.punctured_positions.size())
    return fail("punctured parity check has the wrong shape");
  const Matrix g = submatrix_cols(generator(plan.initial), plan.punctured_positions);
  const Matrix prod = matmul(g, transpose(hbar));
  if (rank(hbar) != r_f ||
      std::any_of(prod.entries().begin(), prod.entries().end(), [](Symbol s) { return s != 0; }))
    return fail("punctured parity check does not annihilate the punctured initial code");
  IndexSet cols = locate(plan.punctured_positions, plan.unchanged[js]);
  const IndexSet v_cols = locate(plan.punctured_positions, plan.extra_reads);
  cols.insert(cols.end(), v_cols.begin(), v_cols.end());
  if (!(submatrix_cols(hbar, cols) == parity_check(plan.finals[js])))
    return fail("block mismatch: privileged final code is not the punctured parity check on U u V");
  return {};
}

}  // namespace convcode
