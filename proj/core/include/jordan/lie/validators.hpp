#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#include "jordan/core/jordan_algebra.hpp"
#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/triple_system.hpp"
#include "jordan/lie/identity_check.hpp"
#include "jordan/lie/lts.hpp"
#include "jordan/scalar/random.hpp"

namespace jordan {

// Residuals. Each returns the difference of the two sides of the identity.

template <class S>
IdentityResidual<S> lt1_residual(const LieTripleSystem<S>& l) {
  // Polarized R(X,X) = 0: [x,y,z] + [y,x,z].
  return [b = l.bracket](const std::vector<Matrix<S>>& a) { return b(a[0], a[1], a[2]) + b(a[1], a[0], a[2]); };
}

template <class S>
IdentityResidual<S> lt2_residual(const LieTripleSystem<S>& l) {
  return [b = l.bracket](const std::vector<Matrix<S>>& a) {
    return b(a[0], a[1], a[2]) + b(a[1], a[2], a[0]) + b(a[2], a[0], a[1]);
  };
}

template <class S>
IdentityResidual<S> lt3_residual(const LieTripleSystem<S>& l) {
  return [b = l.bracket](const std::vector<Matrix<S>>& a) {
    const auto& x = a[0];
    const auto& y = a[1];
    const auto& u = a[2];
    const auto& v = a[3];
    const auto& w = a[4];
    return b(x, y, b(u, v, w)) - b(b(x, y, u), v, w) - b(u, b(x, y, v), w) - b(u, v, b(x, y, w));
  };
}

template <class S>
IdentityResidual<S> outer_symmetry_residual(Trilinear<S> t) {
  return [t = std::move(t)](const std::vector<Matrix<S>>& a) { return t(a[0], a[1], a[2]) - t(a[2], a[1], a[0]); };
}

/// T(u,v,T(x,y,z)) − T(T(u,v,x),y,z) + T(x,T'(v,u,y),z) − T(x,y,T(u,v,z)),
/// where T' is the opposite map of the pair (T itself for a triple system).
template <class S>
IdentityResidual<S> fifth_identity_residual(Trilinear<S> t, Trilinear<S> t_opposite) {
  return [t = std::move(t), o = std::move(t_opposite)](const std::vector<Matrix<S>>& a) {
    const auto& u = a[0];
    const auto& v = a[1];
    const auto& x = a[2];
    const auto& y = a[3];
    const auto& z = a[4];
    return t(u, v, t(x, y, z)) - t(t(u, v, x), y, z) + t(x, o(v, u, y), z) - t(x, y, t(u, v, z));
  };
}

template <class S>
IdentityResidual<S> commutativity_residual(const JordanAlgebra<S>& j) {
  return [p = j.product](const std::vector<Matrix<S>>& a) { return p(a[0], a[1]) - p(a[1], a[0]); };
}

template <class S>
IdentityResidual<S> j2_residual(const JordanAlgebra<S>& j) {
  return [p = j.product](const std::vector<Matrix<S>>& a) {
    const Matrix<S> x2 = p(a[0], a[0]);
    return p(a[0], p(x2, a[1])) - p(x2, p(a[0], a[1]));
  };
}

// Validators.

template <class S>
ValidatorReport validate_lts(const LieTripleSystem<S>& l, std::size_t cap = kDefaultWitnessCap) {
  const Shape s = l.shape;
  ValidatorReport r{l.name, {}};
  r.axioms.push_back(check_on_basis<S>("LT1", lt1_residual(l), {s, s, s}, cap));
  r.axioms.push_back(check_on_basis<S>("LT2", lt2_residual(l), {s, s, s}, cap));
  r.axioms.push_back(check_on_basis<S>("LT3", lt3_residual(l), {s, s, s, s, s}, cap));
  return r;
}

template <class S>
ValidatorReport validate_jts(const JordanTripleSystem<S>& t, std::size_t cap = kDefaultWitnessCap) {
  const Shape s = t.shape;
  ValidatorReport r{t.name, {}};
  r.axioms.push_back(check_on_basis<S>("LJT1", outer_symmetry_residual(t.t), {s, s, s}, cap));
  r.axioms.push_back(check_on_basis<S>("LJT2", fifth_identity_residual(t.t, t.t), {s, s, s, s, s}, cap));
  return r;
}

template <class S>
ValidatorReport validate_jordan_pair(const JordanPair<S>& p, std::size_t cap = kDefaultWitnessCap) {
  const Shape a = p.plus;
  const Shape b = p.minus;
  ValidatorReport r{p.name, {}};
  r.axioms.push_back(check_on_basis<S>("LJP1+", outer_symmetry_residual(p.t_plus), {a, b, a}, cap));
  r.axioms.push_back(check_on_basis<S>("LJP1-", outer_symmetry_residual(p.t_minus), {b, a, b}, cap));
  r.axioms.push_back(
      check_on_basis<S>("LJP2+", fifth_identity_residual(p.t_plus, p.t_minus), {a, b, a, b, a}, cap));
  r.axioms.push_back(
      check_on_basis<S>("LJP2-", fifth_identity_residual(p.t_minus, p.t_plus), {b, a, b, a, b}, cap));
  return r;
}

/// The pair identities on every tuple of the given elements (not just basis
/// tuples): an exhaustive element sweep when the sets are whole modules.
template <class S>
ValidatorReport validate_jordan_pair_on(const JordanPair<S>& p, const std::vector<Matrix<S>>& plus,
                                        const std::vector<Matrix<S>>& minus, std::size_t cap = kDefaultWitnessCap) {
  ValidatorReport r{p.name, {}};
  r.axioms.push_back(check_on_elements<S>("LJP1+", outer_symmetry_residual(p.t_plus), {plus, minus, plus}, cap));
  r.axioms.push_back(check_on_elements<S>("LJP1-", outer_symmetry_residual(p.t_minus), {minus, plus, minus}, cap));
  r.axioms.push_back(check_on_elements<S>("LJP2+", fifth_identity_residual(p.t_plus, p.t_minus),
                                          {plus, minus, plus, minus, plus}, cap));
  r.axioms.push_back(check_on_elements<S>("LJP2-", fifth_identity_residual(p.t_minus, p.t_plus),
                                          {minus, plus, minus, plus, minus}, cap));
  return r;
}

struct AlgebraValidationOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultWitnessCap;
};

/// Commutativity on basis pairs; J2 exhaustively in x when the ring is GF(5)
/// and the rank is at most 2, on seeded samples of x otherwise (J2 is linear
/// in y, so y runs over a basis).
template <class S>
ValidatorReport validate_jordan_algebra(const JordanAlgebra<S>& j, const AlgebraValidationOptions& opt = {}) {
  const Shape s = j.shape;
  ValidatorReport r{j.name, {}};
  r.axioms.push_back(check_on_basis<S>("commutativity", commutativity_residual(j), {s, s}, opt.cap));
  std::vector<Matrix<S>> xs;
  bool exhaustive = false;
  if constexpr (std::is_same_v<S, PrimeFieldElement>) {
    if (PrimeFieldElement::ambient_modulus() == 5 && s.size() <= 2) {
      xs = enumerate_elements(s);
      exhaustive = true;
    }
  }
  if (!exhaustive) {
    Rng rng = Rng(opt.seed).split(0x4a32);
    xs.reserve(opt.samples);
    for (std::size_t i = 0; i < opt.samples; ++i) xs.push_back(random_matrix<S>(s, rng));
  }
  r.axioms.push_back(check_on_elements<S>("J2", j2_residual(j), {xs, basis_of<S>(s)}, opt.cap));
  return r;
}

}  // namespace jordan
