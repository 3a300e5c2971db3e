#pragma once

#include <optional>
#include <string>
#include <utility>

#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/triple_system.hpp"

namespace jordan {

/// Commutative algebra expected to satisfy x•(x²•y) = x²•(x•y).
template <class S>
struct JordanAlgebra {
  std::string name;
  Shape shape;
  Bilinear<S> product;
  std::optional<Matrix<S>> unit;
};

template <class S>
Matrix<S> jordan_product(const JordanAlgebra<S>& j, const Matrix<S>& x, const Matrix<S>& y) {
  detail::expect_shape(x.shape(), j.shape, "Jordan product left");
  detail::expect_shape(y.shape(), j.shape, "Jordan product right");
  return j.product(x, y);
}

template <class S>
LinearOperator<S> left_multiplication(const JordanAlgebra<S>& j, const Matrix<S>& x) {
  return operator_from<S>(j.shape, j.shape, [&](const Matrix<S>& y) { return jordan_product(j, x, y); });
}

/// U_x = 2L_x² − L_{x²}.
template <class S>
LinearOperator<S> u_operator(const JordanAlgebra<S>& j, const Matrix<S>& x) {
  const LinearOperator<S> l = left_multiplication(j, x);
  const LinearOperator<S> l2 = left_multiplication(j, jordan_product(j, x, x));
  return S(2) * (l * l) - l2;
}

template <class S>
Matrix<S> u_apply(const JordanAlgebra<S>& j, const Matrix<S>& x, const Matrix<S>& y) {
  const Matrix<S> xy = jordan_product(j, x, y);
  return S(2) * jordan_product(j, x, xy) - jordan_product(j, jordan_product(j, x, x), y);
}

template <class S>
bool is_jordan_invertible(const JordanAlgebra<S>& j, const Matrix<S>& x) {
  return is_invertible(u_operator(j, x));
}

/// x⁻¹ = U_x⁻¹ x.
template <class S>
Matrix<S> jordan_inverse(const JordanAlgebra<S>& j, const Matrix<S>& x) {
  try {
    return solve(u_operator(j, x), x);
  } catch (const NotInvertible&) {
    throw NotInvertible("U_x is singular for x = " + to_string(x));
  }
}

/// K·1 ⊕ J with coordinates (s, x) stored as the column (s, x₁, …, x_n).
template <class S>
JordanAlgebra<S> unitalize(const JordanAlgebra<S>& j) {
  const std::size_t n = j.shape.size();
  const Shape shape{n + 1, 1};
  auto split = [j](const Matrix<S>& v) {
    std::vector<S> xs(v.data().begin() + 1, v.data().end());
    return std::pair<S, Matrix<S>>(v[0], Matrix<S>(j.shape.rows, j.shape.cols, std::move(xs)));
  };
  Bilinear<S> product = [j, split](const Matrix<S>& u, const Matrix<S>& v) {
    const auto [s, x] = split(u);
    const auto [t, y] = split(v);
    const Matrix<S> rest = s * y + t * x + j.product(x, y);
    std::vector<S> out;
    out.reserve(rest.size() + 1);
    out.push_back(s * t);
    out.insert(out.end(), rest.data().begin(), rest.data().end());
    return Matrix<S>::column(std::move(out));
  };
  Matrix<S> one(shape);
  one[0] = S(1);
  return {"unitalized(" + j.name + ")", shape, std::move(product), std::move(one)};
}

/// (s, x) as an element of the unitalized algebra.
template <class S>
Matrix<S> unitalized_element(const S& s, const Matrix<S>& x) {
  std::vector<S> out;
  out.reserve(x.size() + 1);
  out.push_back(s);
  out.insert(out.end(), x.data().begin(), x.data().end());
  return Matrix<S>::column(std::move(out));
}

/// The J-part of an element of the unitalized algebra.
template <class S>
Matrix<S> unitalized_part(const Matrix<S>& v, Shape shape) {
  std::vector<S> xs(v.data().begin() + 1, v.data().end());
  return Matrix<S>(shape.rows, shape.cols, std::move(xs));
}

/// Jordan pair (J, J) with T(x,a,y) = 2[(x•a)•y + x•(a•y) − a•(x•y)], so
/// that Q(x) = U_x.
template <class S>
Trilinear<S> triple_from_algebra(const JordanAlgebra<S>& j) {
  return [j](const Matrix<S>& x, const Matrix<S>& a, const Matrix<S>& y) {
    const Matrix<S> r = j.product(j.product(x, a), y) + j.product(x, j.product(a, y)) - j.product(a, j.product(x, y));
    return S(2) * r;
  };
}

template <class S>
JordanPair<S> pair_from_algebra(const JordanAlgebra<S>& j) {
  const Trilinear<S> t = triple_from_algebra(j);
  return {"pair(" + j.name + ")", j.shape, j.shape, t, t};
}

template <class S>
JordanTripleSystem<S> jts_from_algebra(const JordanAlgebra<S>& j) {
  return make_jts("jts(" + j.name + ")", j.shape, triple_from_algebra(j));
}

/// The homotope V⁺_a with x •_a y = ½T⁺(x,a,y) (no unit recorded).
template <class S>
JordanAlgebra<S> homotope_algebra(const JordanPair<S>& p, const Matrix<S>& a) {
  detail::expect_shape(a.shape(), p.minus, "homotope parameter");
  Bilinear<S> product = [p, a](const Matrix<S>& x, const Matrix<S>& y) { return homotope_product(p, x, a, y); };
  return {p.name + "_a", p.plus, std::move(product), std::nullopt};
}

}  // namespace jordan
