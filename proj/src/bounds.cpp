#include "convcode/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "convcode/errors.hpp"

namespace convcode {

void ConvertParams::validate() const {
  if (initial.empty() || final.empty()) throw UsageError("need at least one initial and one final code");
  auto check = [](const CodeParams& c, const char* what) {
    if (c.k == 0 || c.n <= c.k)
      throw UsageError(std::string(what) + " code needs n > k > 0, got [" + std::to_string(c.n) +
                       ", " + std::to_string(c.k) + "]");
  };
  for (const auto& c : initial) check(c, "initial");
  for (const auto& c : final) check(c, "final");
  auto sum_k = [](const std::vector<CodeParams>& v) {
    return std::accumulate(v.begin(), v.end(), std::size_t{0},
                           [](std::size_t s, const CodeParams& c) { return s + c.k; });
  };
  if (sum_k(initial) != sum_k(final))
    throw UsageError("dimension mismatch: sum of initial k = " + std::to_string(sum_k(initial)) +
                     ", sum of final k = " + std::to_string(sum_k(final)));
}

ConvertParams ConvertParams::merge(std::vector<CodeParams> initial, std::size_t r_final) {
  std::size_t k = 0;
  for (const auto& c : initial) k += c.k;
  ConvertParams p{std::move(initial), {CodeParams{k + r_final, k}}};
  p.validate();
  return p;
}

ConvertParams ConvertParams::split(CodeParams initial, std::vector<CodeParams> final) {
  ConvertParams p{{initial}, std::move(final)};
  p.validate();
  return p;
}

std::vector<std::size_t> classify_s(const ConvertParams& params) {
  if (!params.is_merge()) throw UsageError("classify_s applies to the merge regime (t2 = 1)");
  const std::size_t r_f = params.final.front().r();
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < params.t1(); ++i)
    if (r_f < params.initial[i].k && r_f <= params.initial[i].r()) s.push_back(i);
  return s;
}

MergeBound merge_lower_bound(const ConvertParams& params) {
  if (!params.is_merge()) throw UsageError("merge bound applies to t2 = 1");
  const std::size_t r_f = params.final.front().r();
  MergeBound b;
  for (const auto& c : params.initial) {
    const std::size_t reads = r_f <= std::min(c.k, c.r()) ? r_f : c.k;
    b.per_code_reads.push_back(reads);
    b.read += reads;
  }
  b.write = r_f;
  b.total = b.read + b.write;
  return b;
}

std::vector<std::size_t> split_feasible(const ConvertParams& params) {
  if (!params.is_split()) throw UsageError("split bound applies to t1 = 1");
  const std::size_t r_i = params.initial.front().r();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < params.t2(); ++j) {
    const auto& c = params.final[j];
    if (c.r() <= std::min(c.k, r_i)) out.push_back(j);
  }
  return out;
}

std::optional<std::size_t> privileged_final(const ConvertParams& params) {
  std::optional<std::size_t> best;
  const auto gain = [&](std::size_t a) {
    return static_cast<long long>(params.final[a].k) - static_cast<long long>(params.final[a].r());
  };
  for (std::size_t j : split_feasible(params))
    if (!best || gain(j) > gain(*best)) best = j;
  return best;
}

SplitBound split_lower_bound(const ConvertParams& params) {
  const auto feasible = split_feasible(params);
  std::size_t saving = 0;
  for (std::size_t j : feasible) saving = std::max(saving, params.final[j].k - params.final[j].r());
  SplitBound b;
  b.read = params.initial.front().k - saving;
  for (const auto& c : params.final) b.write += c.r();
  b.total = b.read + b.write;
  return b;
}

std::size_t merge_bound_identical_initial(std::size_t t1, std::size_t k_i, std::size_t r_i,
                                          std::size_t r_f) {
  if (r_f <= std::min(k_i, r_i)) return t1 * r_f + r_f;
  return t1 * k_i + r_f;
}

std::size_t merge_bound_equal_redundancy(const std::vector<std::size_t>& k_i, std::size_t r_i,
                                         std::size_t r_f) {
  std::size_t total = r_f;
  if (r_f <= r_i) {
    for (std::size_t k : k_i) total += r_f <= k ? r_f : k;
  } else {
    for (std::size_t k : k_i) total += k;
  }
  return total;
}

std::size_t split_bound_identical_final(std::size_t t2, std::size_t k_f, std::size_t r_f,
                                        std::size_t r_i) {
  if (r_i > r_f) return (t2 - 1) * k_f + std::min(r_f, k_f) + t2 * r_f;
  return t2 * (k_f + r_f);
}

std::size_t split_bound_equal_redundancy(std::size_t k_i, std::size_t r_i,
                                         const std::vector<std::size_t>& k_f, std::size_t r_f) {
  std::size_t saving = 0;
  if (r_f <= r_i) {
    const std::size_t kmax = *std::max_element(k_f.begin(), k_f.end());
    saving = kmax > r_f ? kmax - r_f : 0;
  }
  return k_i - saving + k_f.size() * r_f;
}

std::optional<std::string> corollary_label(const ConvertParams& params) {
  auto all_same = [](const std::vector<CodeParams>& v, auto key) {
    return std::all_of(v.begin(), v.end(), [&](const CodeParams& c) { return key(c) == key(v.front()); });
  };
  auto nk = [](const CodeParams& c) { return std::make_pair(c.n, c.k); };
  auto red = [](const CodeParams& c) { return c.r(); };
  if (params.is_merge() && params.t1() > 1) {
    if (all_same(params.initial, nk)) return "Corollary 2 (identical initial codes)";
    if (all_same(params.initial, red)) return "Corollary 3 (equal initial redundancy)";
  } else if (params.is_split() && params.t2() > 1) {
    if (all_same(params.final, nk)) return "Corollary 5 (identical final codes)";
    if (all_same(params.final, red)) return "Corollary 6 (equal final redundancy)";
  }
  return std::nullopt;
}

}  // namespace convcode
