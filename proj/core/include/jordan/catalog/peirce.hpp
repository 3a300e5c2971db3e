#pragma once

#include <string>

#include "jordan/core/jordan_pair.hpp"
#include "jordan/errors.hpp"
#include "jordan/linalg/elimination.hpp"

namespace jordan {

/// (e⁺, e⁻) with Q(e⁺)e⁻ = e⁺ and Q(e⁻)e⁺ = e⁻.
template <class S>
struct IdempotentPair {
  Matrix<S> plus;
  Matrix<S> minus;
};

template <class S>
bool is_idempotent(const JordanPair<S>& p, const IdempotentPair<S>& e) {
  return q_plus(p, e.plus, e.minus) == e.plus && q_minus(p, e.minus, e.plus) == e.minus;
}

/// For a rectangular pair the completion of e⁻ is its transpose pattern:
/// e⁺ = (e⁻)ᵗ works whenever e⁻ is a partial permutation matrix.
template <class S>
IdempotentPair<S> rectangular_idempotent(const JordanPair<S>& p, const Matrix<S>& e_minus) {
  IdempotentPair<S> e{e_minus.transpose(), e_minus};
  if (e.plus.shape() != p.plus || !is_idempotent(p, e)) throw NotIdempotent("no transpose completion of " + to_string(e_minus));
  return e;
}

template <class S>
struct PeirceDecomposition {
  LinearOperator<S> p2;
  LinearOperator<S> p1;
  LinearOperator<S> p0;
};

/// Projections onto the eigenspaces of D = T(e⁺,e⁻) on V⁺:
/// P₀ = ½(D−1)(D−2), P₁ = D(2−D), P₂ = ½D(D−1).
template <class S>
PeirceDecomposition<S> peirce(const JordanPair<S>& p, const IdempotentPair<S>& e) {
  if (!is_idempotent(p, e)) throw NotIdempotent("Q(e+)e- = e+ and Q(e-)e+ = e- required");
  const LinearOperator<S> d = d_plus(p, e.plus, e.minus);
  const LinearOperator<S> id = LinearOperator<S>::identity(p.plus);
  const S h = half<S>();
  return {h * (d * (d - id)), d * (S(2) * id - d), h * ((d - id) * (d - S(2) * id))};
}

template <class S>
struct PeirceParts {
  Matrix<S> x2;
  Matrix<S> x1;
  Matrix<S> x0;
};

template <class S>
PeirceParts<S> peirce_parts(const PeirceDecomposition<S>& pd, const Matrix<S>& x) {
  return {pd.p2(x), pd.p1(x), pd.p0(x)};
}

template <class S>
struct PeirceMembership {
  bool member = false;
  PeirceParts<S> parts;
};

/// x ∈ U_{e⁻} iff x₂ + e⁺ is invertible in the unital Jordan algebra V₂⁺,
/// i.e. Q(x₂+e⁺)Q(e⁻) has full rank on V₂⁺.
template <class S>
PeirceMembership<S> peirce_membership(const JordanPair<S>& p, const IdempotentPair<S>& e, const Matrix<S>& x) {
  const PeirceDecomposition<S> pd = peirce(p, e);
  const PeirceParts<S> parts = peirce_parts(pd, x);
  const LinearOperator<S> u = quadratic_plus(p, parts.x2 + e.plus) * quadratic_minus(p, e.minus) * pd.p2;
  return {rank(u.matrix()) == rank(pd.p2.matrix()), parts};
}

template <class S>
void require_fiber(const PeirceDecomposition<S>& pd, const Matrix<S>& z) {
  if (!pd.p2(z).is_zero_matrix()) throw NotInFiber("V2 component of " + to_string(z) + " is nonzero");
}

/// F(z) = z − ½Q(z)e⁻ on V₀⁺ ⊕ V₁⁺, carrying the fiber of U_{e⁻} over 0
/// to the flat space with σ_x(y) = 2x − y.
template <class S>
Matrix<S> fiber_flat_iso(const JordanPair<S>& p, const IdempotentPair<S>& e, const Matrix<S>& z) {
  require_fiber(peirce(p, e), z);
  return z - half<S>() * q_plus(p, z, e.minus);
}

template <class S>
Matrix<S> fiber_flat_iso_inverse(const JordanPair<S>& p, const IdempotentPair<S>& e, const Matrix<S>& w) {
  require_fiber(peirce(p, e), w);
  return w + half<S>() * q_plus(p, w, e.minus);
}

}  // namespace jordan
