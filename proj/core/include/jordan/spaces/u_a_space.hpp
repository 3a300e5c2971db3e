#pragma once

#include <string>
#include <vector>

#include "jordan/core/differential.hpp"
#include "jordan/core/jordan_algebra.hpp"
#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/scalar_extend.hpp"
#include "jordan/lie/lts.hpp"
#include "jordan/spaces/reflection.hpp"

namespace jordan {

template <class S>
bool points_equal(const Matrix<S>& a, const Matrix<S>& b) {
  return matrices_close(a, b);
}

template <class S>
std::string describe_point(const Matrix<S>& x) {
  return to_string(x);
}

// ---------------------------------------------------------------------------
// J^× for a unital Jordan algebra.

/// Invertible elements with σ_x(y) = U_x(y⁻¹).
template <class S>
ReflectionSpace<Matrix<S>> jx_space(const JordanAlgebra<S>& j) {
  if (!j.unit) throw InvalidInput("J^x needs a unital Jordan algebra");
  return {"Jx(" + j.name + ")", [j](const Matrix<S>& x) { return is_jordan_invertible(j, x); },
          [j](const Matrix<S>& x, const Matrix<S>& y) {
            if (!is_jordan_invertible(j, x)) throw NotInvertible("sigma_x needs invertible x");
            return u_apply(j, x, jordan_inverse(j, y));
          },
          points_equal<S>, describe_point<S>};
}

/// (J^×, 1; U, inversion) as pointed data.
template <class S>
PointedSpaceData<Matrix<S>> jx_pointed(const JordanAlgebra<S>& j) {
  if (!j.unit) throw InvalidInput("J^x needs a unital Jordan algebra");
  return {"Jx(" + j.name + ")",
          *j.unit,
          [j](const Matrix<S>& x) { return is_jordan_invertible(j, x); },
          [j](const Matrix<S>& x, const Matrix<S>& y) { return u_apply(j, x, y); },
          [j](const Matrix<S>& y) { return jordan_inverse(j, y); },
          points_equal<S>,
          describe_point<S>};
}

/// Differential of y ↦ σ_x(y) at y = x, computed over the dual numbers.
template <class S>
LinearOperator<S> jx_sigma_differential(const JordanAlgebra<S>& j, const Matrix<S>& x) {
  const JordanAlgebra<Dual<S>> jd = scalar_extend<Dual<S>>(j);
  const Matrix<Dual<S>> xd = embed<Dual<S>>(x);
  return differential<S>([&](const Matrix<Dual<S>>& y) { return u_apply(jd, xd, jordan_inverse(jd, y)); }, x,
                         j.shape);
}

// ---------------------------------------------------------------------------
// U_a = {x : B(x,−a) invertible}.

template <class S>
struct UaSpace {
  JordanPair<S> pair;
  Matrix<S> a;
};

template <class S>
UaSpace<S> u_a_space(const JordanPair<S>& p, const Matrix<S>& a) {
  detail::expect_shape(a.shape(), p.minus, "deformation element");
  return {p, a};
}

template <class S>
bool ua_member(const UaSpace<S>& u, const Matrix<S>& x) {
  return is_invertible(bergman_plus(u.pair, x, -u.a));
}

template <class S>
void require_ua_member(const UaSpace<S>& u, const Matrix<S>& x) {
  if (!ua_member(u, x)) throw NotMember("B(x,-a) is singular for x = " + to_string(x));
}

/// 𝒬(x)y = 2x + Q(x)a + B(x,−a)y.
template <class S>
Matrix<S> ua_quad(const UaSpace<S>& u, const Matrix<S>& x, const Matrix<S>& y) {
  require_ua_member(u, x);
  return S(2) * x + q_plus(u.pair, x, u.a) + bergman_plus_apply(u.pair, x, -u.a, y);
}

/// σ₀(y) = −τ̃_{−a}(y) = −y^{−a}.
template <class S>
Matrix<S> ua_sigma0(const UaSpace<S>& u, const Matrix<S>& y) {
  require_ua_member(u, y);
  return -quasi_inverse_plus(u.pair, y, -u.a);
}

/// μ(x,y) = 𝒬(x)σ₀(y); the result is checked to be a member.
template <class S>
Matrix<S> ua_mu(const UaSpace<S>& u, const Matrix<S>& x, const Matrix<S>& y) {
  const Matrix<S> r = ua_quad(u, x, ua_sigma0(u, y));
  require_ua_member(u, r);
  return r;
}

template <class S>
PointedSpaceData<Matrix<S>> ua_pointed(const UaSpace<S>& u) {
  return {"U_a(" + u.pair.name + ")",
          Matrix<S>(u.pair.plus),
          [u](const Matrix<S>& x) { return ua_member(u, x); },
          [u](const Matrix<S>& x, const Matrix<S>& y) { return ua_quad(u, x, y); },
          [u](const Matrix<S>& y) { return ua_sigma0(u, y); },
          points_equal<S>,
          describe_point<S>};
}

template <class S>
ReflectionSpace<Matrix<S>> ua_reflection(const UaSpace<S>& u) {
  return {"U_a(" + u.pair.name + ")", [u](const Matrix<S>& x) { return ua_member(u, x); },
          [u](const Matrix<S>& x, const Matrix<S>& y) { return ua_mu(u, x, y); }, points_equal<S>,
          describe_point<S>};
}

template <class S>
std::vector<Matrix<S>> ua_members(const UaSpace<S>& u, const std::vector<Matrix<S>>& candidates) {
  std::vector<Matrix<S>> out;
  for (const auto& x : candidates)
    if (ua_member(u, x)) out.push_back(x);
  return out;
}

/// Differential of y ↦ μ(x,y) at y = x, over the dual numbers.
template <class S>
LinearOperator<S> ua_sigma_differential(const UaSpace<S>& u, const Matrix<S>& x) {
  using D = Dual<S>;
  const UaSpace<D> ud{scalar_extend<D>(u.pair), embed<D>(u.a)};
  const Matrix<D> xd = embed<D>(x);
  return differential<S>([&](const Matrix<D>& y) { return ua_mu(ud, xd, y); }, x, u.pair.plus);
}

/// B(x,a)B(y,a)B(x,a) − B(2x − Q(x)a + B(x,a)y, a), as a matrix.
template <class S>
Matrix<S> bergman_cocycle_residual(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x,
                                   const Matrix<S>& y) {
  const LinearOperator<S> bx = bergman_plus(p, x, a);
  const LinearOperator<S> lhs = bx * bergman_plus(p, y, a) * bx;
  const Matrix<S> z = S(2) * x - q_plus(p, x, a) + bx(y);
  return (lhs - bergman_plus(p, z, a)).matrix();
}

/// Translate to J^×: U_{x+a⁻¹}((y+a⁻¹)⁻¹) − a⁻¹ for invertible a.
template <class S>
Matrix<S> translated_jx_product(const JordanAlgebra<S>& j, const Matrix<S>& a, const Matrix<S>& x,
                                const Matrix<S>& y) {
  if (!is_jordan_invertible(j, a)) throw InvalidInput("translated product needs invertible a");
  const Matrix<S> ainv = jordan_inverse(j, a);
  const Matrix<S> u = x + ainv;
  const Matrix<S> w = y + ainv;
  if (!is_jordan_invertible(j, u) || !is_jordan_invertible(j, w)) {
    throw NotMember("x + a^-1 or y + a^-1 is not invertible");
  }
  return u_apply(j, u, jordan_inverse(j, w)) - ainv;
}

/// [x,y,z] = S(x,y,z) − S(y,x,z) with S(u,v,w) = T⁺(u, Q(a)v, w).
template <class S>
LieTripleSystem<S> lts_of_u_a(const JordanPair<S>& p, const Matrix<S>& a) {
  const LinearOperator<S> qa = quadratic_minus(p, a);
  const Trilinear<S> t = p.t_plus;
  return {"lie_U_a(" + p.name + ")", p.plus, [t, qa](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
            return t(x, qa(y), z) - t(y, qa(x), z);
          }};
}

}  // namespace jordan
