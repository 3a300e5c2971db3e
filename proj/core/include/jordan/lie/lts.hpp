#pragma once

#include <string>
#include <utility>

#include "jordan/core/instances.hpp"
#include "jordan/core/triple_system.hpp"
#include "jordan/homotopy/structural.hpp"

namespace jordan {

/// Lie triple system: a module with a trilinear bracket [X,Y,Z].
template <class S>
struct LieTripleSystem {
  std::string name;
  Shape shape;
  Trilinear<S> bracket;
};

/// [X,Y,Z] = T(X,Y,Z) − T(Y,X,Z).
template <class S>
LieTripleSystem<S> jordan_lie(const JordanTripleSystem<S>& t) {
  const Trilinear<S> f = t.t;
  return {"lie(" + t.name + ")", t.shape,
          [f](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) { return f(x, y, z) - f(y, x, z); }};
}

/// [X,Y,Z]_α = T(X,αY,Z) − T(Y,αX,Z), the bracket of the deformed space.
template <class S>
LieTripleSystem<S> deformed_bracket(const JordanTripleSystem<S>& t, const StructuralTransformation<S>& s) {
  const StructuralTransformation<S> c = ensure_certified(t, s);
  const Trilinear<S> f = t.t;
  const LinearOperator<S> alpha = c.alpha;
  return {"lie_alpha(" + t.name + ")", t.shape,
          [f, alpha](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
            return f(x, alpha(y), z) - f(y, alpha(x), z);
          }};
}

/// The bracket negated.
template <class S>
LieTripleSystem<S> c_dual(const LieTripleSystem<S>& l) {
  const Trilinear<S> f = l.bracket;
  return {"c_dual(" + l.name + ")", l.shape,
          [f](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) { return -f(x, y, z); }};
}

template <class S>
StructureTensor<S> bracket_tensor(const LieTripleSystem<S>& l) {
  return structure_tensor(l.bracket, l.shape, l.shape);
}

template <class S>
StructureTensor<S> negated(StructureTensor<S> c) {
  for (auto& x : c.coefficients) x = -x;
  return c;
}

template <class S>
bool is_zero_tensor(const StructureTensor<S>& c) {
  for (const auto& x : c.coefficients)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace jordan
