#include <gtest/gtest.h>

#include "jordan/core/instances.hpp"
#include "jordan/lie/validators.hpp"
#include "jordan/scalar/random.hpp"

using namespace jordan;
using Q = Rational;
using F = PrimeFieldElement;

namespace {

Matrix<Q> scalar(Q v) { return Matrix<Q>(1, 1, {v}); }

}  // namespace

TEST(JordanPair, RectangularTripleProduct) {
  const auto p = rectangular_pair<Q>(2, 3);
  Rng rng(1);
  const Matrix<Q> x = random_matrix<Q>({2, 3}, rng);
  const Matrix<Q> a = random_matrix<Q>({3, 2}, rng);
  const Matrix<Q> y = random_matrix<Q>({2, 3}, rng);
  EXPECT_EQ(t_plus(p, x, a, y), x * a * y + y * a * x);
  EXPECT_EQ(q_plus(p, x, a), x * a * x);
  EXPECT_EQ(d_plus(p, x, a)(y), x * a * y + y * a * x);
}

TEST(JordanPair, ScalarQuasiInverse) {
  // T(x,a,y) = 2xay: B(x,a) = (1 - xa)^2 and x^a = x / (1 - xa).
  const auto p = as_pair(scalar_jts<Q>());
  for (int xn = -3; xn <= 3; ++xn)
    for (int an = -2; an <= 2; ++an) {
      const Q x(xn, 2);
      const Q a(an, 3);
      const Q d = Q(1) - x * a;
      EXPECT_EQ(bergman(p, scalar(x), scalar(a)).matrix()(0, 0), d * d);
      if (d == Q(0)) {
        EXPECT_FALSE(is_quasi_invertible(p, scalar(x), scalar(a)));
        EXPECT_THROW(quasi_inverse(p, scalar(x), scalar(a)), NotQuasiInvertible);
      } else {
        EXPECT_EQ(quasi_inverse(p, scalar(x), scalar(a)), scalar(x / d));
      }
    }
}

TEST(JordanPair, RectangularQuasiInverseIsResolvent) {
  // For rectangular matrices x^a = (1 - xa)^{-1} x.
  const auto p = rectangular_pair<Q>(2, 2);
  Rng rng(2);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const Matrix<Q> x = random_matrix<Q>({2, 2}, rng);
    const Matrix<Q> a = random_matrix<Q>({2, 2}, rng);
    const Matrix<Q> r = Matrix<Q>::identity(2) - x * a;
    if (!is_invertible(r)) continue;
    ASSERT_TRUE(is_quasi_invertible(p, x, a));
    EXPECT_EQ(quasi_inverse(p, x, a), inverse(r) * x);
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(JordanPair, RectangularAxiomsOnBasis) {
  for (std::uint64_t prime : {5U, 7U}) {
    PrimeFieldElement::ModulusScope scope(prime);
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
      const auto r = validate_jordan_pair(rectangular_pair<F>(p, q));
      EXPECT_TRUE(r.all_pass()) << r.instance;
    }
  }
  EXPECT_TRUE(validate_jordan_pair(rectangular_pair<Q>(2, 2)).all_pass());
}

TEST(JordanPair, ExhaustiveSweepOverGF5) {
  PrimeFieldElement::ModulusScope scope(5);
  const auto els = enumerate_elements({1, 1});
  ASSERT_EQ(els.size(), 5U);
  const auto r = validate_jordan_pair_on(rectangular_pair<F>(1, 1), els, els);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.axiom("LJP2+").checked, 5U * 5 * 5 * 5 * 5);
}

TEST(JordanPair, CorruptedTensorFailsWithWitness) {
  auto c = structure_tensor(rectangular_jts<Q>(1, 2));
  c.coefficients[0] = c.coefficients[0] + Q(1);
  const auto t = tensor_jts<Q>("corrupted", {1, 2}, c);
  const auto r = validate_jordan_pair(as_pair(t));
  EXPECT_FALSE(r.all_pass());
  bool witnessed = false;
  for (const auto& a : r.axioms)
    if (!a.pass) witnessed = witnessed || !a.witnesses.empty();
  EXPECT_TRUE(witnessed);
}

TEST(JordanPair, TensorRoundTrip) {
  const auto t = rectangular_jts<Q>(2, 2);
  const auto back = tensor_jts<Q>("copy", t.shape, structure_tensor(t));
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_matrix<Q>({2, 2}, rng);
    const auto y = random_matrix<Q>({2, 2}, rng);
    const auto z = random_matrix<Q>({2, 2}, rng);
    EXPECT_EQ(triple(back, x, y, z), triple(t, x, y, z));
  }
}

TEST(JordanPair, ShapeMismatchThrows) {
  const auto p = rectangular_pair<Q>(1, 2);
  EXPECT_THROW(t_plus(p, Matrix<Q>(1, 2), Matrix<Q>(1, 2), Matrix<Q>(1, 2)), ShapeMismatch);
}

TEST(JordanAlgebra, FullMatrixIsJordan) {
  PrimeFieldElement::ModulusScope scope(5);
  const auto r = validate_jordan_algebra(full_matrix_algebra<F>(2));
  EXPECT_TRUE(r.all_pass());
}

TEST(JordanAlgebra, SymmetricMatrixIsJordan) {
  const auto r = validate_jordan_algebra(symmetric_matrix_algebra<Q>(2), {200, 4, 5});
  EXPECT_TRUE(r.all_pass());
}

TEST(JordanAlgebra, UOperatorOfMatrices) {
  // U_x y = xyx in the full matrix algebra.
  const auto j = full_matrix_algebra<Q>(2);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_matrix<Q>({2, 2}, rng);
    const auto y = random_matrix<Q>({2, 2}, rng);
    EXPECT_EQ(u_apply(j, x, y), x * y * x);
    if (is_invertible(x)) EXPECT_EQ(jordan_inverse(j, x), inverse(x));
  }
}

TEST(JordanAlgebra, AssociatedPairMatchesAlgebra) {
  const auto j = full_matrix_algebra<Q>(2);
  const auto p = pair_from_algebra(j);
  Rng rng(5);
  const auto x = random_matrix<Q>({2, 2}, rng);
  const auto a = random_matrix<Q>({2, 2}, rng);
  EXPECT_EQ(q_plus(p, x, a), x * a * x);
}
