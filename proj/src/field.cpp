#include "convcode/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <tuple>

#include "convcode/errors.hpp"

namespace convcode {

namespace detail {

struct FieldTables {
  FieldSpec spec;
  std::uint32_t q = 0;
  // Binary fields only: exp has 2(q-1) entries so log a + log b never wraps.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

constexpr unsigned kMaxBinaryDegree = 16;

// Pinned moduli. Degrees 2, 3, 4 and 8 are fixed for interoperability; the
// rest are the usual low-weight irreducible trinomials / pentanomials.
constexpr std::array<std::uint32_t, kMaxBinaryDegree + 1> kPinnedModuli = {
    0,        // unused
    0,        // GF(2) is the prime field; no modulus
    0b111,    // x^2+x+1
    0b1011,   // x^3+x+1
    0b10011,  // x^4+x+1
    0x25,     // x^5+x^2+1
    0x43,     // x^6+x+1
    0x83,     // x^7+x+1
    0x11B,    // x^8+x^4+x^3+x+1
    0x211,    // x^9+x^4+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1053,   // x^12+x^6+x^4+x+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4443,   // x^14+x^10+x^6+x+1
    0x8003,   // x^15+x+1
    0x1100B,  // x^16+x^12+x^3+x+1
};

int poly_degree(std::uint64_t a) {
  int d = -1;
  while (a != 0) {
    a >>= 1;
    ++d;
  }
  return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

// Carry-less product reduced by the modulus; only used to build tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < m; ++i)
    if ((b >> i) & 1U) acc ^= static_cast<std::uint64_t>(a) << i;
  return static_cast<std::uint32_t>(poly_mod(acc, modulus));
}

bool is_irreducible_gf2(std::uint32_t modulus, unsigned m) {
  if (m == 1) return modulus == 0;
  if (poly_degree(modulus) != static_cast<int>(m)) return false;
  // Trial division by every polynomial of degree 1..m/2.
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (m / 2 + 1)); ++d)
    if (poly_mod(modulus, d) == 0) return false;
  return true;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<unsigned> log2_exact(std::uint64_t q) {
  if (q < 2 || (q & (q - 1)) != 0) return std::nullopt;
  unsigned m = 0;
  while ((std::uint64_t{1} << m) != q) ++m;
  return m;
}

std::shared_ptr<const detail::FieldTables> build_binary(unsigned m, std::uint32_t modulus) {
  auto t = std::make_shared<detail::FieldTables>();
  t->spec = FieldSpec{2, m, modulus};
  t->q = 1U << m;
  const std::uint32_t n = t->q - 1;
  t->exp.assign(2 * static_cast<std::size_t>(n), 0);
  t->log.assign(t->q, 0);
  if (m == 1) {
    t->exp = {1, 1};
    return t;
  }
  // The modulus need not be primitive (0x11B is not), so search for a generator.
  for (std::uint32_t g = 2; g < t->q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t ord = 0;
    do {
      x = slow_mul(x, g, modulus, m);
      ++ord;
    } while (x != 1);
    if (ord != n) continue;
    x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      t->exp[i] = t->exp[i + n] = x;
      t->log[x] = i;
      x = slow_mul(x, g, modulus, m);
    }
    return t;
  }
  throw InternalError("no primitive element found in " + t->spec.describe());
}

// Tables are immutable; cache them so repeated Field::binary(8) calls share.
std::shared_ptr<const detail::FieldTables> cached(const FieldSpec& spec) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, unsigned, std::uint32_t>,
                  std::shared_ptr<const detail::FieldTables>>
      cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(spec.characteristic, spec.degree, spec.modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const detail::FieldTables> t;
  if (spec.characteristic == 2) {
    t = build_binary(spec.degree, spec.modulus);
  } else {
    auto p = std::make_shared<detail::FieldTables>();
    p->spec = spec;
    p->q = spec.characteristic;
    t = std::move(p);
  }
  cache.emplace(key, t);
  return t;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) q *= characteristic;
  return q;
}

std::string FieldSpec::describe() const {
  if (degree == 1) return "GF(" + std::to_string(characteristic) + ")";
  std::string bits;
  for (std::uint32_t m = modulus; m; m >>= 1) bits.insert(bits.begin(), (m & 1U) ? '1' : '0');
  return "GF(" + std::to_string(order()) + ") = GF(2^" + std::to_string(degree) + "), modulus 0b" + bits;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p))
    throw UsageError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  if (p == 2) return binary(1);
  return Field(cached(FieldSpec{p, 1, 0}));
}

Field Field::binary(unsigned m) {
  if (m < 1 || m > kMaxBinaryDegree)
    throw UsageError("GF(2^m) supported for 1 <= m <= 16, got m=" + std::to_string(m));
  return Field(cached(FieldSpec{2, m, kPinnedModuli[m]}));
}

Field Field::binary(unsigned m, std::uint32_t modulus) {
  if (m < 1 || m > kMaxBinaryDegree)
    throw UsageError("GF(2^m) supported for 1 <= m <= 16, got m=" + std::to_string(m));
  if (!is_irreducible_gf2(modulus, m))
    throw UsageError("modulus " + std::to_string(modulus) + " is not an irreducible degree-" +
                     std::to_string(m) + " polynomial over GF(2)");
  return Field(cached(FieldSpec{2, m, modulus}));
}

Field Field::of_order(std::uint64_t q) {
  if (auto m = log2_exact(q); m && *m <= kMaxBinaryDegree) return binary(*m);
  if (q < (1ULL << 31) && is_prime(q)) return prime(static_cast<std::uint32_t>(q));
  throw UsageError("unsupported field order " + std::to_string(q) +
                   " (expected a prime or 2^m with m <= 16)");
}

Field Field::from_spec(const FieldSpec& spec) {
  if (spec.degree == 1) return prime(spec.characteristic);
  if (spec.characteristic != 2)
    throw UsageError("extension fields are only supported in characteristic 2");
  return binary(spec.degree, spec.modulus);
}

bool Field::is_supported_order(std::uint64_t q) {
  if (auto m = log2_exact(q)) return *m <= kMaxBinaryDegree;
  return q < (1ULL << 31) && is_prime(q);
}

std::uint64_t Field::smallest_supported_order(std::uint64_t q) {
  q = std::max<std::uint64_t>(q, 2);
  while (!is_supported_order(q)) ++q;
  return q;
}

std::uint32_t Field::pinned_modulus(unsigned m) {
  if (m < 1 || m > kMaxBinaryDegree) throw UsageError("no pinned modulus for m=" + std::to_string(m));
  return kPinnedModuli[m];
}

const FieldSpec& Field::spec() const { return tables_->spec; }
std::uint32_t Field::order() const { return tables_->q; }

Symbol Field::add(Symbol a, Symbol b) const {
  if (is_binary()) return a ^ b;
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Symbol>(s >= tables_->q ? s - tables_->q : s);
}

Symbol Field::neg(Symbol a) const {
  if (is_binary() || a == 0) return a;
  return tables_->q - a;
}

Symbol Field::sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

Symbol Field::mul(Symbol a, Symbol b) const {
  if (a == 0 || b == 0) return 0;
  if (is_binary()) {
    if (spec().degree == 1) return 1;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  return static_cast<Symbol>((std::uint64_t{a} * b) % tables_->q);
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (is_binary()) {
    // Extended Euclid on GF(2)[x]: keep s with s*a == r (mod modulus).
    if (spec().degree == 1) return 1;
    std::uint64_t r0 = spec().modulus, r1 = a;
    std::uint64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      while (poly_degree(r0) >= poly_degree(r1)) {
        const int shift = poly_degree(r0) - poly_degree(r1);
        r0 ^= r1 << shift;
        s0 ^= s1 << shift;
      }
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
    if (r0 != 1) throw InternalError("modulus is reducible");
    return static_cast<Symbol>(poly_mod(s0, spec().modulus));
  }
  std::int64_t r0 = tables_->q, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    r0 -= quot * r1;
    s0 -= quot * s1;
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  const std::int64_t q = tables_->q;
  return static_cast<Symbol>(((s0 % q) + q) % q);
}

Symbol Field::pow(Symbol a, std::uint64_t e) const {
  Symbol result = 1;
  Symbol base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::element(std::uint64_t value) const {
  if (!contains(value))
    throw UsageError("symbol " + std::to_string(value) + " out of range for " + spec().describe());
  return FieldElement(*this, static_cast<Symbol>(value));
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<Symbol> Field::all_elements() const {
  std::vector<Symbol> out(order());
  for (std::uint32_t i = 0; i < order(); ++i) out[i] = i;
  return out;
}

bool operator==(const Field& a, const Field& b) {
  return a.tables_ == b.tables_ || a.spec() == b.spec();
}

FieldElement::FieldElement(Field field, Symbol value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value))
    throw UsageError("symbol " + std::to_string(value) + " out of range for " +
                     field_.spec().describe());
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw UsageError("operands from different fields: " + a.field().spec().describe() + " vs " +
                     b.field().spec().describe());
  return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(value_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field_, field_.pow(value_, e)); }
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(value_)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.div(a.value_, b.value_));
}

}  // namespace convcode
