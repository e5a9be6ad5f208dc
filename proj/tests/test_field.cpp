#include <gtest/gtest.h>

#include "convcode/errors.hpp"
#include "convcode/field.hpp"

using namespace convcode;

TEST(Field, PrimeExamples) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.add(3, 5), 1u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
}

TEST(Field, BinaryExamples) {
  const Field f = Field::binary(3);
  EXPECT_EQ(f.spec().modulus, 0b1011u);
  EXPECT_EQ(f.add(0b011, 0b101), 0b110u);
  // x * x^2 = x^3 = x + 1 mod x^3 + x + 1
  EXPECT_EQ(f.mul(2, 4), 3u);
  EXPECT_EQ(f.mul(f.inv(6), 6), 1u);
}

TEST(Field, PinnedModuli) {
  EXPECT_EQ(Field::pinned_modulus(2), 0b111u);
  EXPECT_EQ(Field::pinned_modulus(3), 0b1011u);
  EXPECT_EQ(Field::pinned_modulus(4), 0b10011u);
  EXPECT_EQ(Field::pinned_modulus(8), 0x11Bu);
}

TEST(Field, Gf256AesModulus) {
  // 0x53 * 0xCA = 1 in the AES field.
  const Field f = Field::binary(8);
  EXPECT_EQ(f.mul(0x53, 0xCA), 1u);
  EXPECT_EQ(f.inv(0x53), 0xCAu);
  EXPECT_EQ(f.mul(0x57, 0x83), 0xC1u);
}

TEST(Field, InverseOfZeroThrows) {
  EXPECT_THROW(Field::prime(5).inv(0), DomainError);
  EXPECT_THROW(Field::binary(4).inv(0), DomainError);
  EXPECT_THROW(Field::prime(5).div(1, 0), DomainError);
}

TEST(Field, PowZeroIsOne) {
  for (std::uint64_t q : {2u, 5u, 8u, 13u}) {
    const Field f = Field::of_order(q);
    EXPECT_EQ(f.pow(0, 0), 1u);
    EXPECT_EQ(f.pow(0, 3), 0u);
    for (Symbol a = 1; a < f.order(); ++a) EXPECT_EQ(f.pow(a, q - 1), 1u) << "q=" << q << " a=" << a;
  }
}

TEST(Field, SupportedOrders) {
  EXPECT_TRUE(Field::is_supported_order(2));
  EXPECT_TRUE(Field::is_supported_order(7));
  EXPECT_TRUE(Field::is_supported_order(1024));
  EXPECT_FALSE(Field::is_supported_order(1));
  EXPECT_FALSE(Field::is_supported_order(6));
  EXPECT_FALSE(Field::is_supported_order(9));
  EXPECT_FALSE(Field::is_supported_order(1u << 17));
  EXPECT_EQ(Field::smallest_supported_order(6), 7u);
  EXPECT_EQ(Field::smallest_supported_order(9), 11u);
  EXPECT_EQ(Field::smallest_supported_order(15), 16u);
  EXPECT_EQ(Field::smallest_supported_order(0), 2u);
  EXPECT_THROW(Field::of_order(9), UsageError);
  EXPECT_THROW(Field::prime(15), UsageError);
}

TEST(Field, RejectsReducibleModulus) {
  EXPECT_THROW(Field::binary(3, 0b1001), UsageError);  // x^3 + 1 = (x+1)(x^2+x+1)
  EXPECT_NO_THROW(Field::binary(3, 0b1101));
  EXPECT_THROW(Field::binary(17), UsageError);
}

TEST(Field, ElementsMixingFieldsThrow) {
  const auto a = Field::prime(5).element(2);
  const auto b = Field::prime(7).element(2);
  EXPECT_THROW((void)(a + b), UsageError);
  EXPECT_THROW(Field::prime(5).element(5), UsageError);
}

TEST(Field, ElementOperators) {
  const Field f = Field::prime(11);
  const auto a = f.element(4);
  const auto b = f.element(9);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a - b).value(), 6u);
  EXPECT_EQ((a * b).value(), 3u);
  EXPECT_EQ(((a / b) * b), a);
  EXPECT_EQ((-a).value(), 7u);
  EXPECT_EQ(a.pow(10), f.one());
}

TEST(Field, SmallFieldAxiomsExhaustive) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const Field f = Field::of_order(q);
    const auto el = f.all_elements();
    ASSERT_EQ(el.size(), q);
    for (Symbol a : el) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      for (Symbol b : el) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (Symbol c : el) EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST(Field, SpecDescribeAndEquality) {
  EXPECT_EQ(Field::prime(2), Field::binary(1));
  EXPECT_FALSE(Field::binary(3) == Field::binary(3, 0b1101));
  EXPECT_NE(Field::binary(3).spec().describe().find("8"), std::string::npos);
}
