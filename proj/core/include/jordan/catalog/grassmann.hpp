#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "jordan/core/instances.hpp"
#include "jordan/errors.hpp"
#include "jordan/homotopy/structural.hpp"
#include "jordan/linalg/elimination.hpp"

namespace jordan {

/// A subspace of K^{p+q}, stored as its reduced column echelon basis.
template <class S>
class GrassmannPoint {
 public:
  GrassmannPoint() = default;
  explicit GrassmannPoint(const Matrix<S>& spanning) : basis_(column_echelon(spanning)) {}

  [[nodiscard]] const Matrix<S>& basis() const { return basis_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.cols(); }
  [[nodiscard]] std::size_t ambient() const { return basis_.rows(); }

  friend bool operator==(const GrassmannPoint& a, const GrassmannPoint& b) = default;

 private:
  Matrix<S> basis_;
};

/// Γ_X = colspan [I_p; X] for X ∈ M(q,p).
template <class S>
GrassmannPoint<S> graph(const Matrix<S>& x) {
  const std::size_t q = x.rows();
  const std::size_t p = x.cols();
  Matrix<S> m(p + q, p);
  m.set_block(0, 0, Matrix<S>::identity(p));
  m.set_block(p, 0, x);
  return GrassmannPoint<S>(m);
}

/// Γ'_Y = colspan [Y; I_q] for Y ∈ M(p,q).
template <class S>
GrassmannPoint<S> cograph(const Matrix<S>& y) {
  const std::size_t p = y.rows();
  const std::size_t q = y.cols();
  Matrix<S> m(p + q, q);
  m.set_block(0, 0, y);
  m.set_block(p, 0, Matrix<S>::identity(q));
  return GrassmannPoint<S>(m);
}

/// X with E = Γ_X, when E is transversal to 0 ⊕ K^q.
template <class S>
std::optional<Matrix<S>> chart_coordinate(const GrassmannPoint<S>& e, std::size_t p) {
  const Matrix<S>& b = e.basis();
  if (e.dimension() != p) return std::nullopt;
  const Matrix<S> top = b.block(0, 0, p, p);
  if (!is_invertible(top)) return std::nullopt;
  return b.block(p, 0, b.rows() - p, p) * inverse(top);
}

/// β = diag(B₁, B₂) on K^p ⊕ K^q, both blocks symmetric or both skew.
template <class S>
struct SplitBilinearForm {
  Matrix<S> b1;
  Matrix<S> b2;
  bool skew = false;

  [[nodiscard]] std::size_t p() const { return b1.rows(); }
  [[nodiscard]] std::size_t q() const { return b2.rows(); }

  [[nodiscard]] Matrix<S> matrix() const {
    Matrix<S> m(p() + q(), p() + q());
    m.set_block(0, 0, b1);
    m.set_block(p(), p(), b2);
    return m;
  }
};

template <class S>
SplitBilinearForm<S> split_form(Matrix<S> b1, Matrix<S> b2, bool skew) {
  if (b1.rows() != b1.cols() || b2.rows() != b2.cols()) throw ShapeMismatch("form blocks must be square");
  if (!is_invertible(b1)) throw InvalidInput("B1 must be invertible");
  const S sign = skew ? S(-1) : S(1);
  if (b1.transpose() != sign * b1 || b2.transpose() != sign * b2) {
    throw InvalidInput(skew ? "form blocks must be skew" : "form blocks must be symmetric");
  }
  return {std::move(b1), std::move(b2), skew};
}

/// E^β = {w : β(E, w) = 0}.
template <class S>
GrassmannPoint<S> grassmann_complement(const SplitBilinearForm<S>& beta, const GrassmannPoint<S>& e) {
  if (e.ambient() != beta.p() + beta.q()) throw ShapeMismatch("subspace does not live in K^(p+q)");
  if (e.dimension() != beta.p()) throw ShapeMismatch("complement needs a p-dimensional subspace");
  const Matrix<S> k = kernel(e.basis().transpose() * beta.matrix());
  if (k.cols() != beta.q()) {
    throw DimensionDrop("complement has dimension " + std::to_string(k.cols()) + ", expected " +
                        std::to_string(beta.q()));
  }
  return GrassmannPoint<S>(k);
}

/// σ_E: +1 on E, −1 on E^β, applied to F.
template <class S>
GrassmannPoint<S> grassmann_sigma(const SplitBilinearForm<S>& beta, const GrassmannPoint<S>& e,
                                  const GrassmannPoint<S>& f) {
  GrassmannPoint<S> c;
  try {
    c = grassmann_complement(beta, e);
  } catch (const DimensionDrop&) {
    throw NotMember("E is degenerate for the form");
  }
  const std::size_t n = e.ambient();
  const std::size_t p = e.dimension();
  Matrix<S> frame(n, n);
  frame.set_block(0, 0, e.basis());
  frame.set_block(0, p, c.basis());
  if (!is_invertible(frame)) throw NotMember("E and its complement do not span");
  Matrix<S> signs = Matrix<S>::identity(n);
  for (std::size_t i = p; i < n; ++i) signs(i, i) = S(-1);
  return GrassmannPoint<S>(frame * signs * inverse(frame) * f.basis());
}

/// α(X) = B₂XB₁⁻¹ on M(q,p), structural for T(X,Y,Z) = XYᵗZ + ZYᵗX.
template <class S>
StructuralTransformation<S> grassmann_alpha(const SplitBilinearForm<S>& beta) {
  const JordanTripleSystem<S> t = rectangular_jts<S>(beta.q(), beta.p());
  const Matrix<S> b1i = inverse(beta.b1);
  const LinearOperator<S> a =
      operator_from<S>(t.shape, t.shape, [&](const Matrix<S>& x) { return beta.b2 * x * b1i; });
  return certify(t, a);
}

}  // namespace jordan
