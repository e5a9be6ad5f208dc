#pragma once

// Extended generalized Reed-Solomon codes.
//
// An ExtGrsSpec (gamma, w) defines the [n, n-r] code whose parity-check
// matrix is vandermonde_ext(r, n, gamma, w). With distinct gamma and nonzero w
// the code is MDS, and puncturing it to any coordinate set that keeps the
// last (extension) position yields another code of the same family.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "convcode/field.hpp"
#include "convcode/matrix.hpp"

namespace convcode {

struct ExtGrsSpec {
  Field field;
  std::size_t n = 0;
  std::size_t r = 0;
  Word gamma;  // n-1 pairwise distinct elements
  Word w;      // n nonzero multipliers

  /// Validating constructor; throws UsageError on any invariant violation.
  static ExtGrsSpec make(Field field, std::size_t n, std::size_t r, Word gamma, Word w);
  /// gamma = (0, 1, ..., n-2), w = all ones. Needs q >= n-1.
  static ExtGrsSpec standard(Field field, std::size_t n, std::size_t r);

  std::size_t k() const { return n - r; }
  void validate() const;

  friend bool operator==(const ExtGrsSpec& a, const ExtGrsSpec& b) {
    return a.field == b.field && a.n == b.n && a.r == b.r && a.gamma == b.gamma && a.w == b.w;
  }
};

Matrix parity_check(const ExtGrsSpec& spec);
/// Canonical k x n generator: the kernel basis of the parity check.
Matrix generator(const ExtGrsSpec& spec);

Word encode(const ExtGrsSpec& spec, std::span<const Symbol> message);
bool is_codeword(const ExtGrsSpec& spec, std::span<const Symbol> v);

/// The unique codeword agreeing with `known` (position -> symbol).
/// InsufficientDataError with fewer than k known positions, CorruptionError
/// when the known symbols are not a restriction of any codeword.
Word recover_erasures(const ExtGrsSpec& spec, const std::map<std::size_t, Symbol>& known);

/// Restriction of a word to the positions in `t`, in that order.
Word restrict_to(std::span<const Symbol> v, std::span<const std::size_t> t);

/// The punctured code C|_T as an ExtGrsSpec. T must be strictly increasing,
/// contain the last position n-1, and have more than k elements. The
/// multiplier vector is recovered by linear solving and normalised so its
/// last entry is 1.
ExtGrsSpec puncture(const ExtGrsSpec& spec, std::span<const std::size_t> t);

}  // namespace convcode
