#include <gtest/gtest.h>

#include <cmath>

#include "jordan/core/instances.hpp"
#include "jordan/geometry/tensors.hpp"
#include "jordan/scalar/random.hpp"

using namespace jordan;
using Q = Rational;
using F = PrimeFieldElement;
using Fl = FloatScalar;

namespace {

template <class S>
Matrix<S> scalar(S v) {
  return Matrix<S>(1, 1, {v});
}

template <class S>
MAlphaSpace<S> line(int sign = 1) {
  const auto t = scalar_jts<S>();
  return m_alpha_space(t, certify(t, S(sign) * LinearOperator<S>::identity({1, 1})));
}

}  // namespace

TEST(Geometry, ChristoffelOnTheLine) {
  // α = id: C_x(u,v) = 4xuv / (1 + x²).
  const auto m = line<Q>();
  for (int k = -4; k <= 4; ++k) {
    const Q x(k, 3);
    const Q u(2);
    const Q v(-1, 2);
    const Q expected = Q(4) * x * u * v / (Q(1) + x * x);
    EXPECT_EQ(christoffel(m, scalar(x), scalar(u), scalar(v)), scalar(expected));
  }
  EXPECT_EQ(christoffel(m, scalar(Q(1, 2)), scalar(Q(1)), scalar(Q(1))), scalar(Q(8, 5)));
}

TEST(Geometry, ChristoffelMatchesSecondDifferential) {
  const auto t = rectangular_jts<Q>(1, 2);
  Rng rng(1);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 30; ++i) {
    const auto m = m_alpha_space(t, certify(t, quadratic(t, random_matrix<Q>(t.shape, rng))));
    const auto x = random_matrix<Q>(t.shape, rng);
    const auto u = random_matrix<Q>(t.shape, rng);
    const auto v = random_matrix<Q>(t.shape, rng);
    if (!m_alpha_member(m, x)) continue;
    EXPECT_EQ(christoffel(m, x, u, v), christoffel_from_second_differential(m, x, u, v));
    EXPECT_EQ(christoffel(m, x, u, v), christoffel(m, x, v, u));
    ++checked;
  }
  EXPECT_EQ(checked, 30);
}

TEST(Geometry, ChristoffelOverGF7) {
  PrimeFieldElement::ModulusScope scope(7);
  const auto t = rectangular_jts<F>(2, 2);
  const auto m = m_alpha_space(t, certify(t, LinearOperator<F>::identity(t.shape)));
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_matrix<F>(t.shape, rng);
    if (!m_alpha_member(m, x)) continue;
    const auto u = random_matrix<F>(t.shape, rng);
    const auto v = random_matrix<F>(t.shape, rng);
    try {
      EXPECT_EQ(christoffel(m, x, u, v), christoffel_from_second_differential(m, x, u, v));
    } catch (const NotMember&) {
    }
  }
}

TEST(Geometry, MetricAndCometricOnTheLine) {
  // B(x,−x) = (1 + x²)², trace form 2uv.
  const auto m = line<Q>();
  const Q x(1, 2);
  const Q b = (Q(1) + x * x) * (Q(1) + x * x);
  EXPECT_EQ(metric(m, scalar(x), scalar(Q(1)), scalar(Q(1))), Q(32, 25));
  EXPECT_EQ(metric(m, scalar(x), scalar(Q(3)), scalar(Q(2))), Q(12) / b);
  EXPECT_EQ(cometric(m, scalar(x), scalar(Q(3)), scalar(Q(2))), Q(12) * b);
}

TEST(Geometry, TraceFormOfRectangular) {
  // tr T(u,v,·) = (p + q) tr(u vᵗ) on M(p,q).
  const auto t = rectangular_jts<Q>(2, 3);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto u = random_matrix<Q>(t.shape, rng);
    const auto v = random_matrix<Q>(t.shape, rng);
    EXPECT_EQ(trace_form(t, u, v), Q(5) * trace(u * v.transpose()));
  }
  EXPECT_EQ(trace_form_rank(rectangular_jts<Q>(2, 2)), 4U);
}

TEST(Geometry, DensityOnTheLine) {
  const auto m = line<Fl>();
  for (double x : {-1.5, -0.3, 0.0, 0.7, 2.0}) EXPECT_NEAR(density(m, scalar(Fl(x))), 1.0 / (1.0 + x * x), 1e-14);
  const auto mneg = line<Fl>(-1);
  EXPECT_NEAR(density(mneg, scalar(Fl(0.5))), density(mneg, scalar(Fl(-0.5))), 1e-14);
}

TEST(Geometry, DensityInvarianceOnTheLine) {
  const auto m = line<Fl>();
  std::vector<Matrix<Fl>> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(scalar(Fl(-2.0 + 4.0 * (i + 0.5) / 20.0)));
  const auto rep = density_invariance_check(m, {scalar(Fl(0.5)), scalar(Fl(0.0))}, pts);
  EXPECT_EQ(rep.points.size() + rep.skipped, 20U);
  EXPECT_GE(rep.points.size(), 18U);
  EXPECT_LT(rep.max_analytic, 1e-8);
  EXPECT_LT(rep.max_finite_difference, 1e-6);
}

TEST(Geometry, FirstDifferentialMatchesFiniteDifferences) {
  const auto t = rectangular_jts<Fl>(2, 2);
  const auto m = m_alpha_space(t, certify(t, LinearOperator<Fl>::identity(t.shape)));
  Rng rng(4);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 50; ++i) {
    const auto x = Fl(0.5) * random_matrix<Fl>(t.shape, rng);
    const auto y = Fl(0.5) * random_matrix<Fl>(t.shape, rng);
    const auto err = sigma_differential_discrepancy(m, x, y);
    if (!err) continue;
    EXPECT_LT(*err, 1e-6);
    ++checked;
  }
  EXPECT_EQ(checked, 50);
}

TEST(Geometry, FiniteDifferenceJacobianOfPolynomial) {
  const auto f = [](const Matrix<Fl>& v) { return Matrix<Fl>(1, 1, {v[0] * v[0] * v[1]}); };
  const auto j = finite_difference_jacobian(f, Matrix<Fl>(1, 2, {Fl(1.5), Fl(-2.0)}));
  EXPECT_NEAR(j(0, 0).value(), -6.0, 1e-8);
  EXPECT_NEAR(j(0, 1).value(), 2.25, 1e-8);
}
