#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan/core/scalar_extend.hpp"
#include "jordan/core/triple_system.hpp"
#include "jordan/homotopy/structural.hpp"
#include "jordan/lie/lts.hpp"
#include "jordan/scalar/second_dual.hpp"
#include "jordan/spaces/reflection.hpp"
#include "jordan/spaces/u_a_space.hpp"

namespace jordan {

/// M_α = {x : B(x,−αx) invertible} for a structural α, carried in the chart
/// of the triple system with the homotope T_α.
template <class S>
struct MAlphaSpace {
  JordanTripleSystem<S> t;
  StructuralTransformation<S> alpha;
  JordanTripleSystem<S> t_alpha;
};

template <class S>
MAlphaSpace<S> m_alpha_space(const JordanTripleSystem<S>& t, const StructuralTransformation<S>& alpha) {
  const StructuralTransformation<S> c = ensure_certified(t, alpha);
  return {t, c, alpha_homotope(t, c)};
}

/// The same space over an extension ring A ⊃ S. Structurality is an identity
/// of multilinear maps, so the certificate carries over.
template <class A>
MAlphaSpace<A> extend_space(const MAlphaSpace<BaseOf<A>>& m) {
  const JordanTripleSystem<A> t = scalar_extend<A>(m.t);
  const StructuralTransformation<A> alpha{embed<A>(m.alpha.alpha), t.id};
  return {t, alpha, alpha_homotope(t, alpha)};
}

/// B_α(x,y) = B(x, αy).
template <class S>
LinearOperator<S> bergman_alpha(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& y) {
  return bergman(m.t_alpha, x, y);
}

template <class S>
Matrix<S> quasi_inverse_alpha(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& y) {
  return quasi_inverse(m.t_alpha, x, y);
}

template <class S>
bool m_alpha_member(const MAlphaSpace<S>& m, const Matrix<S>& x) {
  return is_invertible(bergman(m.t, x, -m.alpha.alpha(x)));
}

template <class S>
void require_m_alpha_member(const MAlphaSpace<S>& m, const Matrix<S>& x) {
  if (!m_alpha_member(m, x)) throw NotMember("B(x,-ax) is singular for x = " + to_string(x));
}

/// x² = σ_x(0) = 2(id − Q_α(x))⁻¹x.
template <class S>
Matrix<S> m_alpha_square(const MAlphaSpace<S>& m, const Matrix<S>& x) {
  require_m_alpha_member(m, x);
  const LinearOperator<S> op = LinearOperator<S>::identity(m.t.shape) - quadratic(m.t_alpha, x);
  try {
    return S(2) * solve(op, x);
  } catch (const NotInvertible&) {
    throw SingularSquare("id - Q(x) is singular for x = " + to_string(x));
  }
}

/// σ_x(y) = x + τ̃_c(x − y) with c = 2τ̃_{−x}(x), the chart form of the
/// conjugated point reflection. Defined on all member pairs.
template <class S>
Matrix<S> m_alpha_mu_word(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& y) {
  require_m_alpha_member(m, x);
  require_m_alpha_member(m, y);
  const Matrix<S> c = S(2) * quasi_inverse_alpha(m, x, -x);
  Matrix<S> r;
  try {
    r = x + quasi_inverse_alpha(m, x - y, c);
  } catch (const NotQuasiInvertible&) {
    throw NotMember("sigma_x(y) leaves the chart");
  }
  require_m_alpha_member(m, r);
  return r;
}

/// σ_x(y) = s + B_α(s,−x) τ̃_s(−y) with s = 2τ̃_x(x). Needs B_α(x,x)
/// invertible (SingularSquare otherwise).
template <class S>
Matrix<S> m_alpha_mu_closed(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& y) {
  require_m_alpha_member(m, x);
  require_m_alpha_member(m, y);
  Matrix<S> s;
  try {
    s = S(2) * quasi_inverse_alpha(m, x, x);
  } catch (const NotQuasiInvertible&) {
    throw SingularSquare("B(x, ax) is singular for x = " + to_string(x));
  }
  Matrix<S> r;
  try {
    r = s + bergman_alpha(m, s, -x)(quasi_inverse_alpha(m, -y, s));
  } catch (const NotQuasiInvertible&) {
    throw NotMember("sigma_x(y) leaves the chart");
  }
  require_m_alpha_member(m, r);
  return r;
}

/// Product of M_α: the closed form when the square of x exists, the word
/// form otherwise.
template <class S>
Matrix<S> m_alpha_mu(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& y) {
  try {
    return m_alpha_mu_closed(m, x, y);
  } catch (const SingularSquare&) {
    return m_alpha_mu_word(m, x, y);
  }
}

template <class S>
ReflectionSpace<Matrix<S>> m_alpha_reflection(const MAlphaSpace<S>& m) {
  return {"M_alpha(" + m.t.name + ")", [m](const Matrix<S>& x) { return m_alpha_member(m, x); },
          [m](const Matrix<S>& x, const Matrix<S>& y) { return m_alpha_mu(m, x, y); }, points_equal<S>,
          describe_point<S>};
}

template <class S>
LieTripleSystem<S> m_alpha_lts(const MAlphaSpace<S>& m) {
  return deformed_bracket(m.t, m.alpha);
}

/// Coefficients of σ_x(x + ε₁v₁ + ε₂v₂) in the basis 1, ε₁, ε₂, ε₁ε₂.
template <class S>
struct SecondOrderExpansion {
  Matrix<S> value;
  Matrix<S> eps1;
  Matrix<S> eps2;
  Matrix<S> eps12;
};

template <class S>
SecondOrderExpansion<S> second_differential_sigma(const MAlphaSpace<S>& m, const Matrix<S>& x, const Matrix<S>& v1,
                                                  const Matrix<S>& v2) {
  using T = SecondDual<S>;
  require_m_alpha_member(m, x);
  const MAlphaSpace<T> mt = extend_space<T>(m);
  const Matrix<T> xt = embed<T>(x);
  Matrix<T> y = xt;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = y[k] + T(S(0), v1[k], v2[k], S(0));
  const auto c = components<T>(m_alpha_mu_word(mt, xt, y));
  return {c[0], c[1], c[2], c[3]};
}

}  // namespace jordan
