#include <gtest/gtest.h>

#include <map>

#include "jordan/catalog/assoc_group.hpp"
#include "jordan/catalog/grassmann.hpp"
#include "jordan/catalog/peirce.hpp"
#include "jordan/core/instances.hpp"
#include "jordan/scalar/random.hpp"
#include "jordan/spaces/m_alpha_space.hpp"
#include "jordan/spaces/u_a_space.hpp"

using namespace jordan;
using Q = Rational;
using F = PrimeFieldElement;

TEST(DeformedGroup, ProductAndInverse) {
  const auto g = deformed_group(matrix_algebra<Q>(2), block_idempotent<Q>(2, 1));
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_matrix<Q>({2, 2}, rng);
    const auto y = random_matrix<Q>({2, 2}, rng);
    const bool member = is_invertible(Matrix<Q>::identity(2) + g.a * x);
    EXPECT_EQ(group_member(g, x), member);
    if (!member || !group_member(g, y)) continue;
    EXPECT_EQ(group_product(g, x, y), x * g.a * y + x + y);
    const auto xi = group_inverse(g, x);
    EXPECT_TRUE(group_product(g, x, xi).is_zero_matrix());
    EXPECT_TRUE(group_product(g, xi, x).is_zero_matrix());
  }
}

TEST(DeformedGroup, NonMemberThrows) {
  const auto g = deformed_group(matrix_algebra<Q>(1), Matrix<Q>::identity(1));
  EXPECT_THROW(group_inverse(g, Matrix<Q>(1, 1, {Q(-1)})), NotMember);
}

TEST(DeformedGroup, ExhaustiveAxiomsGF5) {
  PrimeFieldElement::ModulusScope scope(5);
  const auto g = deformed_group(matrix_algebra<F>(2), block_idempotent<F>(2, 1));
  std::vector<Matrix<F>> members;
  for (const auto& x : enumerate_elements({2, 2}))
    if (group_member(g, x)) members.push_back(x);
  ASSERT_EQ(members.size(), 500U);
  for (const auto& r : group_axiom_sweep(g, members)) EXPECT_TRUE(r.pass) << r.name;
}

TEST(DeformedGroup, SemidirectFactorizationIsUnique) {
  PrimeFieldElement::ModulusScope scope(5);
  const auto g = deformed_group(matrix_algebra<F>(2), block_idempotent<F>(2, 1));
  std::vector<Matrix<F>> ls;
  std::vector<Matrix<F>> hs;
  for (const auto& x : enumerate_elements({2, 2})) {
    if (!group_member(g, x)) continue;
    if (in_block_l(x, 1)) ls.push_back(x);
    if (in_block_h(x, 1)) hs.push_back(x);
  }
  std::map<std::vector<std::string>, int> hits;
  for (const auto& l : ls)
    for (const auto& h : hs) ++hits[coordinate_strings(group_product(g, l, h))];
  EXPECT_EQ(hits.size(), 500U);
  for (const auto& [k, n] : hits) EXPECT_EQ(n, 1);
  for (const auto& l : ls)
    for (const auto& h : hs) {
      const auto x = group_product(g, l, h);
      const auto f = semidirect_factor(g, x, 1);
      EXPECT_EQ(f.l, l);
      EXPECT_EQ(f.h, h);
    }
}

TEST(DeformedGroup, BracketAndUnimodularity) {
  const auto alg = matrix_algebra<Q>(2);
  Rng rng(2);
  for (const auto& a : {Matrix<Q>(2, 2), block_idempotent<Q>(2, 1), Matrix<Q>::identity(2)}) {
    const auto g = deformed_group(alg, a);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_matrix<Q>({2, 2}, rng);
      const auto y = random_matrix<Q>({2, 2}, rng);
      EXPECT_EQ(group_bracket_at_identity(g, x, y), x * a * y - y * a * x);
      if (group_member(g, x)) EXPECT_EQ(adjoint_and_modular(g, x).second, Q(1));
    }
  }
}

TEST(Peirce, ProjectionsAreEigenprojections) {
  const auto p = rectangular_pair<Q>(2, 3);
  Matrix<Q> em(3, 2);
  em(0, 0) = Q(1);
  const auto e = rectangular_idempotent(p, em);
  ASSERT_TRUE(is_idempotent(p, e));
  const auto pd = peirce(p, e);
  const auto id = LinearOperator<Q>::identity(p.plus);
  const auto d = d_plus(p, e.plus, e.minus);
  EXPECT_EQ(pd.p0 + pd.p1 + pd.p2, id);
  EXPECT_EQ(d * pd.p1, pd.p1);
  EXPECT_EQ(d * pd.p2, Q(2) * pd.p2);
  EXPECT_TRUE((d * pd.p0).matrix().is_zero_matrix());
  EXPECT_EQ(rank(pd.p2.matrix()), 1U);
  EXPECT_EQ(rank(pd.p1.matrix()), 3U);
  EXPECT_EQ(rank(pd.p0.matrix()), 2U);
}

TEST(Peirce, NonIdempotentRejected) {
  const auto p = rectangular_pair<Q>(2, 2);
  const IdempotentPair<Q> e{Q(2) * Matrix<Q>::identity(2), Matrix<Q>::identity(2)};
  EXPECT_THROW(peirce(p, e), NotIdempotent);
}

class PeirceGF5 : public ::testing::Test {
 protected:
  PrimeFieldElement::ModulusScope scope{5};
  JordanPair<F> p = rectangular_pair<F>(2, 2);
  IdempotentPair<F> e = rectangular_idempotent(p, block_idempotent<F>(2, 1));
  UaSpace<F> u = u_a_space(p, e.minus);
  std::vector<Matrix<F>> all = enumerate_elements({2, 2});

  std::vector<Matrix<F>> fiber() const {
    const auto pd = peirce(p, e);
    std::vector<Matrix<F>> out;
    for (const auto& x : all)
      if (pd.p2(x).is_zero_matrix()) out.push_back(x);
    return out;
  }
};

TEST_F(PeirceGF5, MembershipAgreesWithBergman) {
  for (const auto& x : all) EXPECT_EQ(peirce_membership(p, e, x).member, ua_member(u, x));
}

TEST_F(PeirceGF5, FiberIsFlat) {
  const auto fib = fiber();
  ASSERT_EQ(fib.size(), 125U);
  for (const auto& x : fib) {
    EXPECT_EQ(fiber_flat_iso_inverse(p, e, fiber_flat_iso(p, e, x)), x);
    for (const auto& y : fib) {
      const auto lhs = fiber_flat_iso(p, e, ua_mu(u, x, y));
      EXPECT_EQ(lhs, F(2) * fiber_flat_iso(p, e, x) - fiber_flat_iso(p, e, y));
    }
  }
  EXPECT_THROW(fiber_flat_iso(p, e, Matrix<F>::identity(2)), NotInFiber);
}

TEST_F(PeirceGF5, BaseSymmetryBlockFormula) {
  for (const auto& x : fiber()) {
    const F b = x(0, 1);
    const F c = x(1, 0);
    const F d = x(1, 1);
    EXPECT_EQ(ua_sigma0(u, x), (Matrix<F>{{0, -b}, {-c, -d + c * b}}));
  }
}

TEST_F(PeirceGF5, BaseIsGroupCase) {
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) {
      const F a(i);
      const F b(j);
      if (a == F(-1) || b == F(-1)) continue;
      const F r = (F(1) + a) * invert(F(1) + b) * (F(1) + a) - F(1);
      EXPECT_EQ(ua_mu(u, Matrix<F>{{a, 0}, {0, 0}}, Matrix<F>{{b, 0}, {0, 0}}), (Matrix<F>{{r, 0}, {0, 0}}));
    }
}

namespace {

std::vector<SplitBilinearForm<Q>> test_forms() {
  return {split_form<Q>(Matrix<Q>::identity(2), Matrix<Q>::identity(2), false),
          split_form<Q>(Matrix<Q>::identity(2), Matrix<Q>{{1, 0}, {0, 0}}, false),
          split_form<Q>(Matrix<Q>{{0, 1}, {-1, 0}}, Matrix<Q>{{0, 1}, {-1, 0}}, true)};
}

}  // namespace

TEST(Grassmann, GraphCoordinates) {
  Rng rng(3);
  const auto x = random_matrix<Q>({2, 3}, rng);
  const auto g = graph(x);
  EXPECT_EQ(g.dimension(), 3U);
  EXPECT_EQ(chart_coordinate(g, 3), x);
  EXPECT_FALSE(chart_coordinate(cograph(Matrix<Q>(3, 2)), 3).has_value());
}

TEST(Grassmann, ComplementOfGraph) {
  Rng rng(4);
  for (const auto& beta : test_forms())
    for (int i = 0; i < 30; ++i) {
      const auto x = random_matrix<Q>({2, 2}, rng);
      const auto c = grassmann_complement(beta, graph(x));
      // Every column w of the complement satisfies Eᵗβw = 0.
      const Matrix<Q> e = graph(x).basis();
      EXPECT_TRUE((e.transpose() * beta.matrix() * c.basis()).is_zero_matrix());
      EXPECT_EQ(c, cograph<Q>(Q(-1) * inverse(beta.b1) * x.transpose() * beta.b2));
    }
}

TEST(Grassmann, SigmaMatchesChartProduct) {
  Rng rng(5);
  for (const auto& beta : test_forms()) {
    const auto m = m_alpha_space(rectangular_jts<Q>(2, 2), grassmann_alpha(beta));
    int checked = 0;
    for (int i = 0; i < 400 && checked < 40; ++i) {
      const auto x = random_matrix<Q>({2, 2}, rng);
      const auto y = random_matrix<Q>({2, 2}, rng);
      if (!m_alpha_member(m, x) || !m_alpha_member(m, y)) continue;
      Matrix<Q> mu;
      try {
        mu = m_alpha_mu(m, x, y);
      } catch (const Error&) {
        continue;
      }
      const auto s = grassmann_sigma(beta, graph(x), graph(y));
      EXPECT_EQ(s, graph(mu));
      EXPECT_EQ(grassmann_sigma(beta, graph(x), s), graph(y));
      ++checked;
    }
    EXPECT_EQ(checked, 40);
  }
}

TEST(Grassmann, IsotropicGraphRejected) {
  // Symplectic blocks: β restricted to Γ_X is (1 + det X)J, zero at det X = −1.
  const auto beta = split_form<Q>(Matrix<Q>{{0, 1}, {-1, 0}}, Matrix<Q>{{0, 1}, {-1, 0}}, true);
  const Matrix<Q> x{{1, 0}, {0, -1}};
  EXPECT_EQ(grassmann_complement(beta, graph(x)), graph(x));
  EXPECT_THROW(grassmann_sigma(beta, graph(x), graph(Matrix<Q>(2, 2))), NotMember);
  const auto m = m_alpha_space(rectangular_jts<Q>(2, 2), grassmann_alpha(beta));
  EXPECT_FALSE(m_alpha_member(m, x));
}

TEST(Grassmann, FormValidation) {
  EXPECT_THROW(split_form<Q>(Matrix<Q>{{1, 1}, {1, 1}}, Matrix<Q>::identity(2), false), InvalidInput);
  EXPECT_THROW(split_form<Q>(Matrix<Q>{{1, 2}, {0, 1}}, Matrix<Q>::identity(2), false), InvalidInput);
}
