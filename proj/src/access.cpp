#include <set>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"

namespace convcode {

const char* role_name(Role role) {
  switch (role) {
    case Role::unchanged: return "unchanged";
    case Role::read: return "read";
    case Role::retired: return "retired";
    case Role::written: return "written";
  }
  return "?";
}

AccessReport access_report(const AccessLayout& layout) {
  const std::size_t t1 = layout.initial_lengths.size();
  const std::size_t t2 = layout.final_lengths.size();
  if (layout.unchanged.size() != t1 || layout.read.size() != t1)
    throw UsageError("access layout: expected per-initial-code sets for " + std::to_string(t1) + " codes");

  AccessReport rep;
  std::vector<std::size_t> kept_per_final(t2, 0);
  for (std::size_t i = 0; i < t1; ++i) {
    if (layout.unchanged[i].size() != t2 || layout.read[i].size() != t2)
      throw UsageError("access layout: expected " + std::to_string(t2) + " sets per initial code");
    std::vector<std::optional<std::size_t>> dest(layout.initial_lengths[i]);
    std::vector<bool> is_read(layout.initial_lengths[i], false);
    std::set<std::size_t> reads;
    for (std::size_t j = 0; j < t2; ++j) {
      for (std::size_t p : layout.unchanged[i][j]) {
        if (p >= dest.size()) throw UsageError("access layout: unchanged position out of range");
        dest[p] = j;
      }
      kept_per_final[j] += layout.unchanged[i][j].size();
      for (std::size_t p : layout.read[i][j]) {
        if (p >= dest.size()) throw UsageError("access layout: read position out of range");
        is_read[p] = true;
        reads.insert(p);
      }
    }
    rep.per_initial_reads.push_back(reads.size());
    rep.rho_r += reads.size();
    for (std::size_t p = 0; p < dest.size(); ++p) {
      TraceEntry e;
      e.symbol = {i, p};
      e.read = is_read[p];
      e.final_code = dest[p];
      e.role = dest[p] ? Role::unchanged : (is_read[p] ? Role::read : Role::retired);
      rep.trace.push_back(e);
    }
  }
  for (std::size_t j = 0; j < t2; ++j) {
    if (kept_per_final[j] > layout.final_lengths[j])
      throw UsageError("access layout: final code " + std::to_string(j + 1) +
                       " keeps more symbols than its length");
    const std::size_t written = layout.final_lengths[j] - kept_per_final[j];
    rep.rho_w += written;
    for (std::size_t p = 0; p < written; ++p)
      rep.trace.push_back(TraceEntry{{t1 + j, p}, Role::written, false, j});
  }
  rep.rho = rep.rho_r + rep.rho_w;
  return rep;
}

}  // namespace convcode
