#pragma once

#include <functional>
#include <string>
#include <utility>

#include "jordan/errors.hpp"
#include "jordan/linalg/elimination.hpp"
#include "jordan/linalg/matrix.hpp"

namespace jordan {

template <class S>
using Trilinear = std::function<Matrix<S>(const Matrix<S>&, const Matrix<S>&, const Matrix<S>&)>;
template <class S>
using Bilinear = std::function<Matrix<S>(const Matrix<S>&, const Matrix<S>&)>;

/// Linear Jordan pair (V⁺, V⁻) with T⁺: V⁺×V⁻×V⁺ → V⁺ and
/// T⁻: V⁻×V⁺×V⁻ → V⁻.
template <class S>
struct JordanPair {
  std::string name;
  Shape plus;
  Shape minus;
  Trilinear<S> t_plus;
  Trilinear<S> t_minus;
};

namespace detail {

inline void expect_shape(const Shape& got, const Shape& want, const char* what) {
  if (got != want) {
    throw ShapeMismatch(std::string(what) + ": expected " + to_string(want) + ", got " + to_string(got));
  }
}

}  // namespace detail

template <class S>
Matrix<S> t_plus(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a, const Matrix<S>& y) {
  detail::expect_shape(x.shape(), p.plus, "T+ first argument");
  detail::expect_shape(a.shape(), p.minus, "T+ middle argument");
  detail::expect_shape(y.shape(), p.plus, "T+ last argument");
  return p.t_plus(x, a, y);
}

template <class S>
Matrix<S> t_minus(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x, const Matrix<S>& b) {
  detail::expect_shape(a.shape(), p.minus, "T- first argument");
  detail::expect_shape(x.shape(), p.plus, "T- middle argument");
  detail::expect_shape(b.shape(), p.minus, "T- last argument");
  return p.t_minus(a, x, b);
}

/// Q(x)a = ½T⁺(x,a,x).
template <class S>
Matrix<S> q_plus(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  return half<S>() * t_plus(p, x, a, x);
}

template <class S>
Matrix<S> q_minus(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x) {
  return half<S>() * t_minus(p, a, x, a);
}

/// Q(x): V⁻ → V⁺.
template <class S>
LinearOperator<S> quadratic_plus(const JordanPair<S>& p, const Matrix<S>& x) {
  return operator_from<S>(p.minus, p.plus, [&](const Matrix<S>& a) { return q_plus(p, x, a); });
}

/// Q(a): V⁺ → V⁻.
template <class S>
LinearOperator<S> quadratic_minus(const JordanPair<S>& p, const Matrix<S>& a) {
  return operator_from<S>(p.plus, p.minus, [&](const Matrix<S>& x) { return q_minus(p, a, x); });
}

/// D(x,a) = T⁺(x,a,·) on V⁺.
template <class S>
LinearOperator<S> d_plus(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  return operator_from<S>(p.plus, p.plus, [&](const Matrix<S>& z) { return t_plus(p, x, a, z); });
}

template <class S>
LinearOperator<S> d_minus(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x) {
  return operator_from<S>(p.minus, p.minus, [&](const Matrix<S>& b) { return t_minus(p, a, x, b); });
}

/// B(x,a)z = z − T⁺(x,a,z) + Q(x)Q(a)z, without building the operator.
template <class S>
Matrix<S> bergman_plus_apply(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a, const Matrix<S>& z) {
  return z - t_plus(p, x, a, z) + q_plus(p, x, q_minus(p, a, z));
}

template <class S>
Matrix<S> bergman_minus_apply(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x, const Matrix<S>& b) {
  return b - t_minus(p, a, x, b) + q_minus(p, a, q_plus(p, x, b));
}

/// B(x,a) = id − T⁺(x,a,·) + Q(x)Q(a) on V⁺.
template <class S>
LinearOperator<S> bergman_plus(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  detail::expect_shape(x.shape(), p.plus, "B+ first argument");
  detail::expect_shape(a.shape(), p.minus, "B+ second argument");
  return operator_from<S>(p.plus, p.plus, [&](const Matrix<S>& z) { return bergman_plus_apply(p, x, a, z); });
}

/// B(a,x) on V⁻.
template <class S>
LinearOperator<S> bergman_minus(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x) {
  detail::expect_shape(a.shape(), p.minus, "B- first argument");
  detail::expect_shape(x.shape(), p.plus, "B- second argument");
  return operator_from<S>(p.minus, p.minus, [&](const Matrix<S>& b) { return bergman_minus_apply(p, a, x, b); });
}

template <class S>
bool is_quasi_invertible(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  return is_invertible(bergman_plus(p, x, a));
}

/// x^a = B(x,a)⁻¹(x − Q(x)a).
template <class S>
Matrix<S> quasi_inverse_plus(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  const LinearOperator<S> b = bergman_plus(p, x, a);
  try {
    return solve(b, x - q_plus(p, x, a));
  } catch (const NotInvertible&) {
    throw NotQuasiInvertible("B(x,y) is singular for x = " + to_string(x) + ", y = " + to_string(a));
  }
}

/// a^x = B(a,x)⁻¹(a − Q(a)x) on the V⁻ side.
template <class S>
Matrix<S> quasi_inverse_minus(const JordanPair<S>& p, const Matrix<S>& a, const Matrix<S>& x) {
  const LinearOperator<S> b = bergman_minus(p, a, x);
  try {
    return solve(b, a - q_minus(p, a, x));
  } catch (const NotInvertible&) {
    throw NotQuasiInvertible("B(a,x) is singular for a = " + to_string(a) + ", x = " + to_string(x));
  }
}

template <class S>
LinearOperator<S> bergman(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  return bergman_plus(p, x, a);
}

template <class S>
Matrix<S> quasi_inverse(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a) {
  return quasi_inverse_plus(p, x, a);
}

/// x •_a y = ½T⁺(x,a,y).
template <class S>
Matrix<S> homotope_product(const JordanPair<S>& p, const Matrix<S>& x, const Matrix<S>& a, const Matrix<S>& y) {
  return half<S>() * t_plus(p, x, a, y);
}

/// The pair with the roles of V⁺ and V⁻ exchanged.
template <class S>
JordanPair<S> opposite(const JordanPair<S>& p) {
  return {p.name + "^op", p.minus, p.plus, p.t_minus, p.t_plus};
}

/// All coordinate basis elements of a shape.
template <class S>
std::vector<Matrix<S>> basis_of(Shape s) {
  std::vector<Matrix<S>> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(Matrix<S>::unit(s, i));
  return out;
}

}  // namespace jordan
