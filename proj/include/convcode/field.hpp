#pragma once

// Exact arithmetic in GF(p) and GF(2^m).
//
// Every symbol is stored in its canonical integer encoding: the residue in
// [0, p) for prime fields, or the bit-packed coefficient vector in [0, 2^m)
// for binary extension fields (bit i holds the coefficient of x^i). The same
// integers are what every text and JSON document carries.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace convcode {

using Symbol = std::uint32_t;

struct FieldSpec {
  std::uint32_t characteristic = 2;
  unsigned degree = 1;
  // Irreducible polynomial as a bitmask including the x^m term; 0 when degree == 1.
  std::uint32_t modulus = 0;

  std::uint64_t order() const;
  std::string describe() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {
struct FieldTables;
}

class FieldElement;

/// Handle to an immutable finite field. Copies share the same lookup tables.
class Field {
 public:
  /// GF(p); p must be prime and below 2^31.
  static Field prime(std::uint32_t p);
  /// GF(2^m) with the pinned modulus for m (1 <= m <= 16).
  static Field binary(unsigned m);
  /// GF(2^m) with a caller-chosen modulus; rejected unless irreducible.
  static Field binary(unsigned m, std::uint32_t modulus);
  /// GF(q) for q prime or q = 2^m, m <= 16. Anything else is a UsageError.
  static Field of_order(std::uint64_t q);
  static Field from_spec(const FieldSpec& spec);

  static bool is_supported_order(std::uint64_t q);
  /// Smallest q' >= max(q, 2) such that GF(q') is supported here.
  static std::uint64_t smallest_supported_order(std::uint64_t q);
  /// Pinned modulus for GF(2^m).
  static std::uint32_t pinned_modulus(unsigned m);

  const FieldSpec& spec() const;
  std::uint32_t order() const;
  std::uint32_t characteristic() const { return spec().characteristic; }
  bool is_binary() const { return spec().characteristic == 2; }

  bool contains(std::uint64_t v) const { return v < order(); }

  Symbol add(Symbol a, Symbol b) const;
  Symbol sub(Symbol a, Symbol b) const;
  Symbol neg(Symbol a) const;
  Symbol mul(Symbol a, Symbol b) const;
  /// Throws DomainError for a == 0.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  /// pow(a, 0) == 1 for every a, including 0.
  Symbol pow(Symbol a, std::uint64_t e) const;

  FieldElement element(std::uint64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// All q elements in ascending canonical encoding.
  std::vector<Symbol> all_elements() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : tables_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> tables_;
};

/// A symbol together with the field it lives in. Mixing elements of
/// different fields raises UsageError.
class FieldElement {
 public:
  FieldElement(Field field, Symbol value);

  Symbol value() const { return value_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  Symbol value_;
};

}  // namespace convcode
