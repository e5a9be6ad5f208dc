#include <set>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"

namespace convcode {

std::size_t GeneralFinal::written_count() const {
  std::size_t kept = 0;
  for (const auto& u : unchanged) kept += u.size();
  return params.n >= kept ? params.n - kept : 0;
}

ConvertParams GeneralPlan::params() const {
  ConvertParams p;
  for (const auto& c : initial) p.initial.push_back({c.n, c.k()});
  for (const auto& f : finals) p.final.push_back(f.params);
  return p;
}

AccessLayout GeneralPlan::layout() const {
  AccessLayout l;
  for (const auto& c : initial) l.initial_lengths.push_back(c.n);
  for (const auto& f : finals) l.final_lengths.push_back(f.params.n);
  l.unchanged.assign(initial.size(), {});
  l.read.assign(initial.size(), {});
  for (std::size_t i = 0; i < initial.size(); ++i)
    for (const auto& f : finals) {
      l.unchanged[i].push_back(f.unchanged[i]);
      l.read[i].push_back(f.read[i]);
    }
  return l;
}

void GeneralPlan::check_well_formed() const {
  params().validate();
  const std::size_t t1 = initial.size();
  for (const auto& c : initial)
    if (!(c.field == field)) throw UsageError("general plan: initial codes over different fields");
  // Unchanged sets of one initial code must be disjoint across final codes.
  std::vector<std::set<std::size_t>> kept(t1);
  for (std::size_t j = 0; j < finals.size(); ++j) {
    const GeneralFinal& fin = finals[j];
    const std::string name = "final " + std::to_string(j + 1);
    if (fin.unchanged.size() != t1 || fin.read.size() != t1)
      throw UsageError(name + ": unchanged/read need one list per initial code");
    std::size_t reads = 0;
    std::set<SymbolId> expected;
    for (std::size_t i = 0; i < t1; ++i) {
      for (std::size_t p : fin.unchanged[i]) {
        if (p >= initial[i].n) throw UsageError(name + ": unchanged position out of range");
        if (!kept[i].insert(p).second)
          throw UsageError(name + ": symbol (" + std::to_string(i + 1) + "," + std::to_string(p + 1) +
                           ") is unchanged in two final codes");
        expected.insert({i, p});
      }
      for (std::size_t p : fin.read[i])
        if (p >= initial[i].n) throw UsageError(name + ": read position out of range");
      reads += fin.read[i].size();
    }
    std::size_t kept_here = expected.size();
    if (kept_here > fin.params.n) throw UsageError(name + ": more unchanged symbols than its length");
    for (std::size_t p = 0; p < fin.written_count(); ++p) expected.insert({t1 + j, p});
    const std::set<SymbolId> got(fin.layout.begin(), fin.layout.end());
    if (fin.layout.size() != fin.params.n || got != expected)
      throw UsageError(name + ": layout must list every unchanged and written symbol exactly once");
    if (fin.sigma.rows() != reads || fin.sigma.cols() != fin.written_count())
      throw UsageError(name + ": sigma must be " + std::to_string(reads) + " x " +
                       std::to_string(fin.written_count()));
    if (!(fin.sigma.field() == field)) throw UsageError(name + ": sigma over a different field");
  }
}

GeneralResult general_convert(const GeneralPlan& plan, const std::vector<Word>& inputs) {
  plan.check_well_formed();
  const std::size_t t1 = plan.initial.size();
  if (inputs.size() != t1)
    throw UsageError("general_convert: expected " + std::to_string(t1) + " input codewords");
  for (std::size_t i = 0; i < t1; ++i)
    if (!is_codeword(plan.initial[i], inputs[i]))
      throw CorruptionError("input " + std::to_string(i + 1) + " is not a codeword of its initial code");

  GeneralResult out;
  for (std::size_t j = 0; j < plan.finals.size(); ++j) {
    const GeneralFinal& fin = plan.finals[j];
    Word reads;
    for (std::size_t i = 0; i < t1; ++i) {
      const Word part = restrict_to(inputs[i], fin.read[i]);
      reads.insert(reads.end(), part.begin(), part.end());
    }
    const Word written = vec_mul(plan.field, reads, fin.sigma);
    Word word;
    for (const SymbolId& id : fin.layout)
      word.push_back(id.code < t1 ? inputs[id.code][id.position] : written[id.position]);
    out.final_words.push_back(std::move(word));
  }
  out.report = access_report(plan);
  return out;
}

AccessReport access_report(const GeneralPlan& plan) { return access_report(plan.layout()); }

StructureCheck verify_general_structure(const GeneralPlan& plan) {
  try {
    plan.check_well_formed();
  } catch (const UsageError& e) {
    return {false, std::string("malformed plan: ") + e.what()};
  }
  return {};
}

}  // namespace convcode
