#pragma once

#include "jordan/core/scalar_extend.hpp"
#include "jordan/linalg/elimination.hpp"
#include "jordan/scalar/dual.hpp"

namespace jordan {

/// Algebraic differential of f at x: column j is the ε-part of
/// f(x + εe_j), where f is written over the dual numbers of S.
template <class S, class F>
LinearOperator<S> differential(F&& f, const Matrix<S>& x, Shape codomain) {
  using D = Dual<S>;
  const Matrix<D> base = embed<D>(x);
  Matrix<S> m(codomain.size(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Matrix<D> arg = base;
    arg[j] = arg[j] + D(S(0), S(1));
    const Matrix<D> image = f(arg);
    if (image.shape() != codomain) throw ShapeMismatch("differential: image has wrong shape");
    const Matrix<S> eps = components<D>(image)[1];
    for (std::size_t i = 0; i < codomain.size(); ++i) m(i, j) = eps[i];
  }
  return {x.shape(), codomain, std::move(m)};
}

/// Directional derivative of f at x along v.
template <class S, class F>
Matrix<S> directional_derivative(F&& f, const Matrix<S>& x, const Matrix<S>& v) {
  using D = Dual<S>;
  Matrix<D> arg = embed<D>(x);
  for (std::size_t k = 0; k < x.size(); ++k) arg[k] = arg[k] + D(S(0), v[k]);
  return components<D>(f(arg))[1];
}

}  // namespace jordan
