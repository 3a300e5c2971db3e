#include <gtest/gtest.h>

#include "jordan/core/instances.hpp"
#include "jordan/homotopy/structural.hpp"
#include "jordan/lie/validators.hpp"
#include "jordan/scalar/random.hpp"

using namespace jordan;
using Q = Rational;
using F = PrimeFieldElement;

TEST(Structural, CertifiesStructureVarietyMembers) {
  const auto t = rectangular_jts<Q>(1, 2);
  Rng rng(1);
  StructureVarietyRequest<Q> req;
  req.signs = true;
  req.scalars = {Q(0), Q(2)};
  req.quadratic = {random_matrix<Q>(t.shape, rng)};
  req.bergman_diagonal = {random_matrix<Q>(t.shape, rng)};
  const auto members = structure_variety_members(t, req);
  ASSERT_EQ(members.size(), 6U);
  for (const auto& [name, s] : members) {
    EXPECT_TRUE(s.certified_against(t)) << name;
    EXPECT_TRUE(validate_jts(alpha_homotope(t, s)).all_pass()) << name;
  }
}

TEST(Structural, ShearIsRejected) {
  const auto t = rectangular_jts<Q>(1, 2);
  const LinearOperator<Q> shear(t.shape, t.shape, Matrix<Q>{{1, 1}, {0, 1}});
  EXPECT_FALSE(is_structural(t, shear));
  EXPECT_THROW(certify(t, shear), NotStructural);
}

TEST(Structural, OperatorIdentitiesOfHomotope) {
  PrimeFieldElement::ModulusScope scope(7);
  const auto t = rectangular_jts<F>(2, 2);
  Rng rng(2);
  const auto alpha = certify(t, quadratic(t, random_matrix<F>(t.shape, rng)));
  const auto ta = alpha_homotope(t, alpha);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_matrix<F>(t.shape, rng);
    const auto y = random_matrix<F>(t.shape, rng);
    EXPECT_EQ(quadratic(ta, x), quadratic(t, x) * alpha.alpha);
    EXPECT_EQ(bergman(ta, x, y), bergman(t, x, alpha.alpha(y)));
  }
}

TEST(Structural, ScalingKeepsCertificate) {
  const auto t = rectangular_jts<Q>(2, 1);
  const auto s = certify(t, LinearOperator<Q>::identity(t.shape));
  const auto s3 = scaled(s, Q(3));
  EXPECT_TRUE(s3.certified_against(t));
  EXPECT_TRUE(is_structural(t, s3.alpha));
}

TEST(Structural, HomotopeOfOtherSystemIsRecertified) {
  const auto t1 = rectangular_jts<Q>(1, 2);
  const auto t2 = rectangular_jts<Q>(1, 2);
  const auto s = certify(t1, LinearOperator<Q>::identity(t1.shape));
  EXPECT_FALSE(s.certified_against(t2));
  EXPECT_TRUE(ensure_certified(t2, s).certified_against(t2));
}

TEST(Structural, MixedPairHomomorphisms) {
  // (f, g) = (B(x,a), B(a,x)) on rectangular(1,2).
  const auto v = rectangular_pair<Q>(1, 2);
  const Matrix<Q> x{{1, 3}};
  const Matrix<Q> a{{1}, {2}};
  const StructuralPair<Q> fg{bergman_plus(v, x, a), bergman_minus(v, a, x)};
  ASSERT_TRUE(is_structural_pair(fg, v, v));
  const auto r = mixed_structural_pair(fg, v, v);
  EXPECT_TRUE(r.phi_is_homomorphism);
  EXPECT_TRUE(r.psi_is_homomorphism);
  EXPECT_TRUE(validate_jordan_pair(r.pair).all_pass());
}
