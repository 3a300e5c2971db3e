#pragma once

#include <array>
#include <cstddef>

#include "jordan/core/jordan_algebra.hpp"
#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/triple_system.hpp"
#include "jordan/linalg/elimination.hpp"
#include "jordan/scalar/extension.hpp"

namespace jordan {

template <class A>
using BaseOf = typename ExtensionTraits<A>::base;

/// Base-ring matrix viewed over the extension A.
template <class A>
Matrix<A> embed(const Matrix<BaseOf<A>>& m) {
  return map_entries<A>(m, [](const BaseOf<A>& s) { return ExtensionTraits<A>::embed(s); });
}

template <class A>
LinearOperator<A> embed(const LinearOperator<BaseOf<A>>& op) {
  return {op.domain(), op.codomain(), embed<A>(op.matrix())};
}

/// Coordinates of an A-matrix in the fixed S-basis of A.
template <class A>
std::array<Matrix<BaseOf<A>>, ExtensionTraits<A>::rank> components(const Matrix<A>& m) {
  using S = BaseOf<A>;
  constexpr std::size_t r = ExtensionTraits<A>::rank;
  std::array<Matrix<S>, r> out;
  for (auto& c : out) c = Matrix<S>(m.shape());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto parts = ExtensionTraits<A>::components(m[k]);
    for (std::size_t i = 0; i < r; ++i) out[i][k] = parts[i];
  }
  return out;
}

/// Value (ε-free) part.
template <class A>
Matrix<BaseOf<A>> base_part(const Matrix<A>& m) {
  return components<A>(m)[0];
}

/// T_A(x,y,z) = Σ b_i b_j b_k T(x_i, y_j, z_k) over the S-basis {b_i} of A.
template <class A>
Trilinear<A> extend_trilinear(Trilinear<BaseOf<A>> t) {
  using S = BaseOf<A>;
  constexpr std::size_t r = ExtensionTraits<A>::rank;
  return [t = std::move(t)](const Matrix<A>& x, const Matrix<A>& y, const Matrix<A>& z) {
    const auto xs = components<A>(x);
    const auto ys = components<A>(y);
    const auto zs = components<A>(z);
    Matrix<A> out;
    bool first = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (xs[i].is_zero_matrix()) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (ys[j].is_zero_matrix()) continue;
        for (std::size_t k = 0; k < r; ++k) {
          if (zs[k].is_zero_matrix()) continue;
          const A coef = ExtensionTraits<A>::basis(i) * ExtensionTraits<A>::basis(j) * ExtensionTraits<A>::basis(k);
          if (is_zero(coef)) continue;
          Matrix<A> term = coef * embed<A>(t(xs[i], ys[j], zs[k]));
          if (first) {
            out = std::move(term);
            first = false;
          } else {
            out += term;
          }
        }
      }
    }
    if (first) {
      // All contributions vanish; evaluate once at zero to learn the shape.
      out = Matrix<A>(t(Matrix<S>(x.shape()), Matrix<S>(y.shape()), Matrix<S>(z.shape())).shape());
    }
    return out;
  };
}

template <class A>
Bilinear<A> extend_bilinear(Bilinear<BaseOf<A>> f) {
  using S = BaseOf<A>;
  constexpr std::size_t r = ExtensionTraits<A>::rank;
  return [f = std::move(f)](const Matrix<A>& x, const Matrix<A>& y) {
    const auto xs = components<A>(x);
    const auto ys = components<A>(y);
    Matrix<A> out(f(Matrix<S>(x.shape()), Matrix<S>(y.shape())).shape());
    for (std::size_t i = 0; i < r; ++i) {
      if (xs[i].is_zero_matrix()) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (ys[j].is_zero_matrix()) continue;
        const A coef = ExtensionTraits<A>::basis(i) * ExtensionTraits<A>::basis(j);
        if (is_zero(coef)) continue;
        out += coef * embed<A>(f(xs[i], ys[j]));
      }
    }
    return out;
  };
}

/// Scalar extension of a Jordan pair to A ⊃ S (e.g. dual numbers).
template <class A>
JordanPair<A> scalar_extend(const JordanPair<BaseOf<A>>& p) {
  return {p.name + "[ext]", p.plus, p.minus, extend_trilinear<A>(p.t_plus), extend_trilinear<A>(p.t_minus)};
}

template <class A>
JordanTripleSystem<A> scalar_extend(const JordanTripleSystem<BaseOf<A>>& t) {
  return make_jts<A>(t.name + "[ext]", t.shape, extend_trilinear<A>(t.t));
}

template <class A>
JordanAlgebra<A> scalar_extend(const JordanAlgebra<BaseOf<A>>& j) {
  std::optional<Matrix<A>> unit;
  if (j.unit) unit = embed<A>(*j.unit);
  return {j.name + "[ext]", j.shape, extend_bilinear<A>(j.product), std::move(unit)};
}

}  // namespace jordan
