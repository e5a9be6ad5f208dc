#pragma once

// Brute-force reference checks. Slow on purpose; they exist to validate the
// fast paths and are guarded so they never run unbounded.

#include <cstddef>
#include <set>
#include <span>

#include "convcode/grs.hpp"
#include "convcode/matrix.hpp"

namespace convcode::oracle {

inline constexpr std::size_t kMaxMdsLength = 14;
inline constexpr std::uint64_t kMaxCodebookSize = std::uint64_t{1} << 16;

/// Every choice of rows() columns of h is independent. Requires cols <= 14.
bool mds_exhaustive(const Matrix& h);

/// {(m G)|_T : m in F_q^k}. Requires q^k <= 2^16.
std::set<Word> codebook(const ExtGrsSpec& spec, std::span<const std::size_t> t);

/// Whether C|_A is linearly generated by C'|_B. For the same code this means
/// every symbol in A is a fixed linear function of the symbols in B; for two
/// different codes the mixing matrix on the message side is free, which
/// reduces to rank(G|_A) <= rank(G'|_B).
bool can_generate(const ExtGrsSpec& source, std::span<const std::size_t> b, const ExtGrsSpec& target,
                  std::span<const std::size_t> a);

}  // namespace convcode::oracle
