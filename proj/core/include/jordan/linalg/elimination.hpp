#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jordan/errors.hpp"
#include "jordan/linalg/matrix.hpp"
#include "jordan/scalar/dual.hpp"
#include "jordan/scalar/float_scalar.hpp"
#include "jordan/scalar/second_dual.hpp"

namespace jordan {

inline double pivot_weight(FloatScalar x) { return magnitude(x); }
template <class S>
double pivot_weight(const Dual<S>& x) {
  return pivot_weight(x.value());
}
template <class S>
double pivot_weight(const SecondDual<S>& x) {
  return pivot_weight(x.value());
}

/// Relative pivot threshold for floating point elimination.
inline constexpr double kPivotRelativeTolerance = 1e-12;

namespace detail {

template <class S>
double scale_of(const Matrix<S>& a) {
  double s = 0.0;
  if constexpr (ScalarTraits<S>::is_approximate) {
    for (const auto& x : a.data()) s = std::max(s, pivot_weight(x));
  }
  return s;
}

/// Row index of an acceptable pivot in column `col` at or below `from`.
/// Exact rings take the first unit (this is correct for fields and for local
/// rings such as dual numbers); floats take the largest entry.
template <class S>
std::optional<std::size_t> find_pivot(const Matrix<S>& a, std::size_t col, std::size_t from, double scale) {
  if constexpr (ScalarTraits<S>::is_approximate) {
    std::optional<std::size_t> best;
    double best_w = 0.0;
    for (std::size_t r = from; r < a.rows(); ++r) {
      const double w = pivot_weight(a(r, col));
      if (w > best_w) {
        best_w = w;
        best = r;
      }
    }
    if (!best || best_w <= kPivotRelativeTolerance * std::max(scale, 1.0) || !is_unit(a(*best, col))) {
      return std::nullopt;
    }
    return best;
  } else {
    for (std::size_t r = from; r < a.rows(); ++r)
      if (is_unit(a(r, col))) return r;
    return std::nullopt;
  }
}

template <class S>
void swap_rows(Matrix<S>& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace detail

/// Reduced row echelon form together with the pivot columns.
template <class S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduction over a field (floats use partial pivoting).
template <class S>
RowEchelon<S> rref(Matrix<S> a) {
  const double scale = detail::scale_of(a);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    const auto p = detail::find_pivot(a, col, row, scale);
    if (!p) {
      if constexpr (ScalarTraits<S>::is_approximate) {
        for (std::size_t r = row; r < a.rows(); ++r) a(r, col) = S(0);
      }
      continue;
    }
    detail::swap_rows(a, row, *p);
    const S inv = invert(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = inv * a(row, c);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const S f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = a(r, c) - f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& a) {
  return rref(a).pivots.size();
}

/// Solves A X = B for square A. Throws NotInvertible when A is singular
/// (over dual numbers: when the reduction mod ε is singular).
template <class S>
Matrix<S> solve(Matrix<S> a, Matrix<S> b) {
  if (a.rows() != a.cols()) throw ShapeMismatch("solve needs a square matrix");
  if (b.rows() != a.rows()) throw ShapeMismatch("right-hand side has wrong row count");
  const std::size_t n = a.rows();
  const double scale = detail::scale_of(a);
  for (std::size_t col = 0; col < n; ++col) {
    const auto p = detail::find_pivot(a, col, col, scale);
    if (!p) throw NotInvertible("singular matrix (no pivot in column " + std::to_string(col) + ")");
    detail::swap_rows(a, col, *p);
    detail::swap_rows(b, col, *p);
    const S inv = invert(a(col, col));
    for (std::size_t c = 0; c < n; ++c) a(col, c) = inv * a(col, c);
    for (std::size_t c = 0; c < b.cols(); ++c) b(col, c) = inv * b(col, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const S f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) = a(r, c) - f * a(col, c);
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = b(r, c) - f * b(col, c);
    }
  }
  return b;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  return solve(a, Matrix<S>::identity(a.rows()));
}

template <class S>
bool is_invertible(const Matrix<S>& a) {
  if (a.rows() != a.cols()) return false;
  Matrix<S> m = a;
  const double scale = detail::scale_of(m);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    const auto p = detail::find_pivot(m, col, col, scale);
    if (!p) return false;
    detail::swap_rows(m, col, *p);
    const S inv = invert(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const S f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - f * m(col, c);
    }
  }
  return true;
}

/// Determinant by elimination. Over a field a column without a pivot means
/// det = 0; over other rings only unit-pivot matrices are supported.
template <class S>
S determinant(Matrix<S> a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  const double scale = detail::scale_of(a);
  S det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const auto p = detail::find_pivot(a, col, col, scale);
    if (!p) {
      if constexpr (ScalarTraits<S>::is_field) {
        return S(0);
      } else {
        throw InvalidInput("determinant over a non-field ring needs unit pivots");
      }
    }
    if (*p != col) {
      detail::swap_rows(a, col, *p);
      det = -det;
    }
    det = det * a(col, col);
    const S inv = invert(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const S f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) = a(r, c) - f * a(col, c);
    }
  }
  return det;
}

/// Basis of the null space {v : A v = 0} as the columns of the result.
template <class S>
Matrix<S> kernel(const Matrix<S>& a) {
  const auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<S> k(a.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = S(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = -r(i, free[j]);
  }
  return k;
}

/// Canonical basis of the column space: the transpose of the nonzero rows of
/// rref(Aᵗ), i.e. the reduced column echelon form.
template <class S>
Matrix<S> column_echelon(const Matrix<S>& a) {
  const auto [r, pivots] = rref(a.transpose());
  return r.block(0, 0, pivots.size(), r.cols()).transpose();
}

/// Linear map between two module shapes, stored as a matrix acting on
/// row-major coordinates.
template <class S>
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(Shape domain, Shape codomain, Matrix<S> m)
      : domain_(domain), codomain_(codomain), m_(std::move(m)) {
    if (m_.rows() != codomain_.size() || m_.cols() != domain_.size()) {
      throw ShapeMismatch("operator matrix does not match " + to_string(domain_) + " -> " + to_string(codomain_));
    }
  }

  static LinearOperator identity(Shape s) { return {s, s, Matrix<S>::identity(s.size())}; }
  static LinearOperator zero(Shape domain, Shape codomain) {
    return {domain, codomain, Matrix<S>(codomain.size(), domain.size())};
  }

  [[nodiscard]] const Shape& domain() const { return domain_; }
  [[nodiscard]] const Shape& codomain() const { return codomain_; }
  [[nodiscard]] const Matrix<S>& matrix() const { return m_; }

  [[nodiscard]] Matrix<S> operator()(const Matrix<S>& x) const {
    if (x.shape() != domain_) {
      throw ShapeMismatch("operator on " + to_string(domain_) + " applied to " + to_string(x.shape()));
    }
    return (m_ * x.as_column()).reshaped(codomain_);
  }

  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
    if (a.domain_ != b.codomain_) throw ShapeMismatch("operator composition shape mismatch");
    return {b.domain_, a.codomain_, a.m_ * b.m_};
  }
  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    a.require_same(b);
    return {a.domain_, a.codomain_, a.m_ + b.m_};
  }
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
    a.require_same(b);
    return {a.domain_, a.codomain_, a.m_ - b.m_};
  }
  friend LinearOperator operator*(const S& s, const LinearOperator& a) {
    return {a.domain_, a.codomain_, s * a.m_};
  }
  LinearOperator operator-() const { return {domain_, codomain_, -m_}; }

  friend bool operator==(const LinearOperator& a, const LinearOperator& b) = default;

 private:
  void require_same(const LinearOperator& b) const {
    if (domain_ != b.domain_ || codomain_ != b.codomain_) throw ShapeMismatch("operator sum shape mismatch");
  }

  Shape domain_{};
  Shape codomain_{};
  Matrix<S> m_;
};

/// Matrix of a linear map given by its action on basis elements.
template <class S, class F>
LinearOperator<S> operator_from(Shape domain, Shape codomain, F&& f) {
  Matrix<S> m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Matrix<S> image = f(Matrix<S>::unit(domain, j));
    if (image.shape() != codomain) throw ShapeMismatch("operator_from: image has wrong shape");
    for (std::size_t i = 0; i < codomain.size(); ++i) m(i, j) = image[i];
  }
  return {domain, codomain, std::move(m)};
}

template <class S>
bool is_invertible(const LinearOperator<S>& a) {
  return a.domain().size() == a.codomain().size() && is_invertible(a.matrix());
}

template <class S>
LinearOperator<S> inverse(const LinearOperator<S>& a) {
  if (a.domain().size() != a.codomain().size()) throw NotInvertible("non-square operator");
  return {a.codomain(), a.domain(), inverse(a.matrix())};
}

/// Solves a(v) = y for v.
template <class S>
Matrix<S> solve(const LinearOperator<S>& a, const Matrix<S>& y) {
  if (y.shape() != a.codomain()) throw ShapeMismatch("solve: right-hand side shape");
  if (a.domain().size() != a.codomain().size()) throw NotInvertible("non-square operator");
  return solve(a.matrix(), y.as_column()).reshaped(a.domain());
}

template <class S>
S determinant(const LinearOperator<S>& a) {
  return determinant(a.matrix());
}

template <class S>
S trace(const LinearOperator<S>& a) {
  return trace(a.matrix());
}

}  // namespace jordan
