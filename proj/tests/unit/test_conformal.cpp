#include <gtest/gtest.h>

#include "jordan/chart/conformal.hpp"
#include "jordan/core/instances.hpp"
#include "jordan/scalar/random.hpp"
#include "jordan/spaces/u_a_space.hpp"

using namespace jordan;
using Q = Rational;
using F = PrimeFieldElement;

namespace {

Matrix<Q> scalar(Q v) { return Matrix<Q>(1, 1, {v}); }

template <class S>
int compare_with_closed_form(const JordanPair<S>& p, Rng& rng, int want) {
  int agreed = 0;
  int seen = 0;
  for (int i = 0; i < 40 * want && seen < want; ++i) {
    const auto a = random_matrix<S>(p.minus, rng);
    const auto x = random_matrix<S>(p.plus, rng);
    const auto y = random_matrix<S>(p.plus, rng);
    const auto u = u_a_space(p, a);
    if (!ua_member(u, x) || !ua_member(u, y)) continue;
    const auto g = sigma_geometric(p, a, x, y);
    if (!g.defined()) continue;
    Matrix<S> mu;
    try {
      mu = ua_mu(u, x, y);
    } catch (const NotMember&) {
      continue;
    }
    ++seen;
    if (*g.value == mu) ++agreed;
  }
  EXPECT_EQ(seen, want);
  return agreed;
}

}  // namespace

TEST(Conformal, PointReflectionOnTheLine) {
  // Reflection at z = 1 with opposite point 0 is x ↦ 2 − x.
  const auto p = as_pair(scalar_jts<Q>());
  const auto w = dilation_word(p, scalar(Q(1)), scalar(Q(0)));
  for (int k = -3; k <= 3; ++k) {
    const Q x(k, 3);
    const auto r = evaluate(p, w, scalar(x));
    ASSERT_TRUE(r.defined());
    EXPECT_EQ(*r.value, scalar(Q(2) - x));
  }
}

TEST(Conformal, DilationWordIsInvolutive) {
  const auto p = rectangular_pair<Q>(1, 2);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto z = random_matrix<Q>(p.plus, rng);
    const auto b = random_matrix<Q>(p.minus, rng);
    ConformalWord<Q> w;
    try {
      w = dilation_word(p, z, b);
    } catch (const NotQuasiInvertible&) {
      continue;
    }
    const auto y = random_matrix<Q>(p.plus, rng);
    const auto twice = evaluate(p, concat(w, w), y);
    if (twice.defined()) EXPECT_EQ(*twice.value, y);
  }
}

TEST(Conformal, Midpoint) {
  // On the line b^x = b / (1 − bx), so τ̃_{−1}(1) = 1/2.
  const auto p = as_pair(scalar_jts<Q>());
  EXPECT_EQ(midpoint(p, scalar(Q(2)), scalar(Q(1))), scalar(Q(1, 2)));
}

TEST(Conformal, UndefinedOutcomeIsReported) {
  const auto p = as_pair(scalar_jts<Q>());
  const auto r = evaluate(p, {Generator<Q>::quasi_translate(scalar(Q(1)))}, scalar(Q(1)));
  EXPECT_FALSE(r.defined());
  EXPECT_EQ(r.failed_at, 0U);
  EXPECT_EQ(r.witness_point, scalar(Q(1)));
}

TEST(Conformal, DilateNeedsUnit) {
  EXPECT_THROW(Generator<Q>::dilate(Q(0)), NonUnit);
  const auto p = as_pair(scalar_jts<Q>());
  const auto r = evaluate(p, {Generator<Q>::dilate(Q(3)), Generator<Q>::negate()}, scalar(Q(2)));
  EXPECT_EQ(*r.value, scalar(Q(-6)));
}

TEST(Conformal, LinearWithoutMinusMapThrows) {
  const auto p = as_pair(scalar_jts<Q>());
  const ConformalWord<Q> w{Generator<Q>::linear(LinearOperator<Q>::identity({1, 1}))};
  EXPECT_TRUE(evaluate(p, w, scalar(Q(1))).defined());
  EXPECT_THROW(evaluate_minus(p, w, scalar(Q(1))), InvalidInput);
}

TEST(Conformal, GeometricSigmaMatchesClosedFormRational) {
  Rng rng(2);
  EXPECT_EQ(compare_with_closed_form(rectangular_pair<Q>(1, 2), rng, 100), 100);
}

TEST(Conformal, GeometricSigmaMatchesClosedFormGF7) {
  PrimeFieldElement::ModulusScope scope(7);
  Rng rng(3);
  EXPECT_EQ(compare_with_closed_form(rectangular_pair<F>(1, 2), rng, 100), 100);
}

TEST(Conformal, AffinePartOfComposite) {
  const auto p = rectangular_pair<Q>(1, 2);
  Rng rng(4);
  int checked = 0;
  for (int i = 0; i < 50 && checked < 20; ++i) {
    const auto a = random_matrix<Q>(p.minus, rng);
    const auto x = random_matrix<Q>(p.plus, rng);
    AffinePart<Q> ap;
    try {
      ap = affine_part_at_origin(p, concat(sigma0_word(a), sigma_word(p, a, x)));
    } catch (const Error&) {
      continue;
    }
    // Q(x)a = xax for rectangular matrices.
    EXPECT_EQ(ap.translation, Q(2) * x + x * a * x);
    EXPECT_EQ(ap.linear, bergman_plus(p, x, -a));
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

TEST(Conformal, MidpointRelay) {
  const auto p = as_pair(scalar_jts<Q>());
  const auto a = scalar(Q(1));
  int checked = 0;
  for (const Q x : {Q(1, 3), Q(2), Q(-1, 2)})
    for (const Q y : {Q(0), Q(1, 5), Q(3)}) {
      const auto w = sigma_word(p, a, scalar(x));
      const auto sy = evaluate(p, w, scalar(y));
      const auto moved = evaluate_minus(p, w, midpoint(p, a, scalar(y)));
      if (!sy.defined() || !moved.defined()) continue;
      EXPECT_EQ(midpoint(p, a, *sy.value), *moved.value);
      ++checked;
    }
  EXPECT_GE(checked, 6);
}
