#include <gtest/gtest.h>

#include <cstdint>

#include "jordan/scalar/dual.hpp"
#include "jordan/scalar/float_scalar.hpp"
#include "jordan/scalar/parse.hpp"
#include "jordan/scalar/prime_field.hpp"
#include "jordan/scalar/random.hpp"
#include "jordan/scalar/rational.hpp"
#include "jordan/scalar/second_dual.hpp"

using namespace jordan;

namespace {

// Square-and-multiply mod p, independent of the field class.
std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

TEST(Rational, ArithmeticIsExact) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
}

TEST(Rational, ZeroIsNotAUnit) {
  EXPECT_FALSE(is_unit(Rational(0)));
  EXPECT_THROW(invert(Rational(0)), NonUnit);
  EXPECT_EQ(invert(Rational(-2, 7)), Rational(-7, 2));
}

TEST(Rational, ParsesFractions) {
  EXPECT_EQ(parse_scalar<Rational>("-2/5"), Rational(-2, 5));
  EXPECT_EQ(parse_scalar<Rational>("7"), Rational(7));
  EXPECT_THROW(parse_scalar<Rational>("1/0"), ParseError);
  EXPECT_THROW(parse_scalar<Rational>("x"), ParseError);
}

TEST(PrimeField, InverseMatchesFermat) {
  for (std::uint64_t p : {5U, 7U, 101U}) {
    PrimeFieldElement::ModulusScope scope(p);
    const auto ip = static_cast<std::int64_t>(p);
    for (std::int64_t a = 1; a < ip; ++a) {
      const PrimeFieldElement x(a);
      EXPECT_EQ(invert(x), PrimeFieldElement(power_mod(a, ip - 2, ip))) << a << " mod " << p;
    }
  }
}

TEST(PrimeField, ReducesNegatives) {
  PrimeFieldElement::ModulusScope scope(7);
  EXPECT_EQ(PrimeFieldElement(-1), PrimeFieldElement(6));
  EXPECT_EQ(PrimeFieldElement(3) * PrimeFieldElement(5), PrimeFieldElement(1));
  EXPECT_TRUE(is_zero(PrimeFieldElement(14)));
}

TEST(PrimeField, RejectsSmallAndCompositeModuli) {
  EXPECT_THROW(PrimeFieldElement::ModulusScope(2), InvalidInput);
  EXPECT_THROW(PrimeFieldElement::ModulusScope(3), InvalidInput);
  EXPECT_THROW(PrimeFieldElement::ModulusScope(9), InvalidInput);
}

TEST(PrimeField, MixedModuliThrow) {
  const PrimeFieldElement a(1, 5);
  const PrimeFieldElement b(1, 7);
  EXPECT_THROW(a + b, RingMismatch);
}

TEST(Dual, ProductRuleOnPolynomial) {
  // f(x) = x^3 - 2x, f'(x) = 3x^2 - 2, at x = 5/2.
  using D = Dual<Rational>;
  const Rational x0(5, 2);
  const D x(x0, Rational(1));
  const D f = x * x * x - Rational(2) * x;
  EXPECT_EQ(f.value(), x0 * x0 * x0 - Rational(2) * x0);
  EXPECT_EQ(f.eps(), Rational(3) * x0 * x0 - Rational(2));
}

TEST(Dual, InverseDerivative) {
  using D = Dual<Rational>;
  const D x(Rational(3), Rational(1));
  const D y = invert(x);
  EXPECT_EQ(y.value(), Rational(1, 3));
  EXPECT_EQ(y.eps(), Rational(-1, 9));
  EXPECT_THROW(invert(D(Rational(0), Rational(1))), NonUnit);
}

TEST(SecondDual, MixedPartOfProduct) {
  using T = SecondDual<Rational>;
  const T x(Rational(2), Rational(1), Rational(0), Rational(0));
  const T y(Rational(3), Rational(0), Rational(1), Rational(0));
  const T p = x * y;
  EXPECT_EQ(p.value(), Rational(6));
  EXPECT_EQ(p.eps1(), Rational(3));
  EXPECT_EQ(p.eps2(), Rational(2));
  EXPECT_EQ(p.eps12(), Rational(1));
}

TEST(FloatScalar, ZeroWithinTolerance) {
  EXPECT_TRUE(is_zero(FloatScalar(1e-12)));
  EXPECT_FALSE(is_zero(FloatScalar(1e-6)));
  EXPECT_DOUBLE_EQ((FloatScalar(1.0) / FloatScalar(4.0)).value(), 0.25);
}

TEST(Rng, SplitStreamsAreReproducible) {
  const Rng root(42);
  Rng a = root.split(3);
  Rng b = root.split(3);
  Rng c = root.split(4);
  const auto va = a.next();
  EXPECT_EQ(va, b.next());
  EXPECT_NE(va, c.next());
}
