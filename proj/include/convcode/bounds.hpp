#pragma once

// Conversion parameters and access-cost lower bounds for the merge
// (many codes -> one) and split (one code -> many) regimes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace convcode {

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r() const { return n - k; }
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct ConvertParams {
  std::vector<CodeParams> initial;
  std::vector<CodeParams> final;

  std::size_t t1() const { return initial.size(); }
  std::size_t t2() const { return final.size(); }
  bool is_merge() const { return t2() == 1; }
  bool is_split() const { return t1() == 1; }

  /// Throws UsageError unless n > k > 0 everywhere and the dimensions balance.
  void validate() const;

  /// Merge parameters: the final code has k = sum of initial k and redundancy r_final.
  static ConvertParams merge(std::vector<CodeParams> initial, std::size_t r_final);
  static ConvertParams split(CodeParams initial, std::vector<CodeParams> final);

  friend bool operator==(const ConvertParams&, const ConvertParams&) = default;
};

/// Initial codes whose read set is disjoint from their unchanged set in an
/// access-optimal merge: r_F < k_i and r_F <= r_i. Zero-based indices.
std::vector<std::size_t> classify_s(const ConvertParams& params);

struct MergeBound {
  std::vector<std::size_t> per_code_reads;  // minimum |R_i| for each initial code
  std::size_t read = 0;
  std::size_t write = 0;
  std::size_t total = 0;
};

struct SplitBound {
  std::size_t read = 0;
  std::size_t write = 0;
  std::size_t total = 0;
};

MergeBound merge_lower_bound(const ConvertParams& params);
SplitBound split_lower_bound(const ConvertParams& params);

/// Final codes that can be produced from fewer than k_I reads:
/// r_F <= min(k_F, r_I). Zero-based.
std::vector<std::size_t> split_feasible(const ConvertParams& params);

/// Feasible final code with the largest k_F - r_F (lowest index on ties);
/// the one an optimal split reads its extra parities for.
std::optional<std::size_t> privileged_final(const ConvertParams& params);

// Closed forms for the classical special cases. Each is written directly
// from its own case split so it can be cross-checked against the general
// bounds above.

/// Merge with identical initial codes (same n and k).
std::size_t merge_bound_identical_initial(std::size_t t1, std::size_t k_i, std::size_t r_i,
                                          std::size_t r_f);
/// Merge with equal initial redundancies r_I.
std::size_t merge_bound_equal_redundancy(const std::vector<std::size_t>& k_i, std::size_t r_i,
                                         std::size_t r_f);
/// Split into identical final codes.
std::size_t split_bound_identical_final(std::size_t t2, std::size_t k_f, std::size_t r_f,
                                        std::size_t r_i);
/// Split into final codes with equal redundancy r_F.
std::size_t split_bound_equal_redundancy(std::size_t k_i, std::size_t r_i,
                                         const std::vector<std::size_t>& k_f, std::size_t r_f);

/// Which classical special case the parameters fall into, if any.
std::optional<std::string> corollary_label(const ConvertParams& params);

}  // namespace convcode
