#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jordan/core/jordan_algebra.hpp"
#include "jordan/core/jordan_pair.hpp"
#include "jordan/core/triple_system.hpp"

namespace jordan {

/// Rectangular matrices: V⁺ = M(p,q), V⁻ = M(q,p), T±(x,y,z) = xyz + zyx.
template <class S>
JordanPair<S> rectangular_pair(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw InvalidInput("rectangular pair needs positive dimensions");
  Trilinear<S> t = [](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) { return x * y * z + z * y * x; };
  return {"rectangular(" + std::to_string(p) + "," + std::to_string(q) + ")", {p, q}, {q, p}, t, t};
}

/// M(rows, cols) with T(X,Y,Z) = XYᵗZ + ZYᵗX.
template <class S>
JordanTripleSystem<S> rectangular_jts(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidInput("rectangular triple system needs positive dimensions");
  Trilinear<S> t = [](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
    const Matrix<S> yt = y.transpose();
    return x * yt * z + z * yt * x;
  };
  return make_jts<S>("rectangular_jts(" + std::to_string(rows) + "," + std::to_string(cols) + ")", {rows, cols}, t);
}

/// The line with T(x,y,z) = 2xyz.
template <class S>
JordanTripleSystem<S> scalar_jts() {
  Trilinear<S> t = [](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
    return Matrix<S>(1, 1, {S(2) * x[0] * y[0] * z[0]});
  };
  return make_jts<S>("scalar_jts", {1, 1}, t);
}

/// M(n,n) with x•y = ½(xy + yx).
template <class S>
JordanAlgebra<S> full_matrix_algebra(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix algebra needs n >= 1");
  Bilinear<S> prod = [](const Matrix<S>& x, const Matrix<S>& y) { return half<S>() * (x * y + y * x); };
  return {"full_matrix(" + std::to_string(n) + ")", {n, n}, prod, Matrix<S>::identity(n)};
}

/// Coordinates of a symmetric n×n matrix: the upper triangle, row by row.
template <class S>
Matrix<S> symmetric_coordinates(const Matrix<S>& m) {
  const std::size_t n = m.rows();
  std::vector<S> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back(m(i, j));
  return Matrix<S>::column(std::move(out));
}

template <class S>
Matrix<S> symmetric_from_coordinates(const Matrix<S>& v, std::size_t n) {
  if (v.size() != n * (n + 1) / 2) throw ShapeMismatch("wrong number of symmetric coordinates");
  Matrix<S> m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = v[k];
      m(j, i) = v[k];
      ++k;
    }
  return m;
}

/// Sym(n) with x•y = ½(xy + yx), elements in upper-triangle coordinates.
template <class S>
JordanAlgebra<S> symmetric_matrix_algebra(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix algebra needs n >= 1");
  Bilinear<S> prod = [n](const Matrix<S>& x, const Matrix<S>& y) {
    const Matrix<S> a = symmetric_from_coordinates(x, n);
    const Matrix<S> b = symmetric_from_coordinates(y, n);
    return symmetric_coordinates<S>(half<S>() * (a * b + b * a));
  };
  const std::size_t d = n * (n + 1) / 2;
  return {"symmetric_matrix(" + std::to_string(n) + ")", {d, 1}, prod,
          symmetric_coordinates<S>(Matrix<S>::identity(n))};
}

/// K itself with x•y = xy.
template <class S>
JordanAlgebra<S> scalar_algebra() {
  Bilinear<S> prod = [](const Matrix<S>& x, const Matrix<S>& y) { return Matrix<S>(1, 1, {x[0] * y[0]}); };
  return {"scalar_algebra", {1, 1}, prod, Matrix<S>(1, 1, {S(1)})};
}

/// Coefficients c with T(e_i, f_j, e_k) = Σ_l c[((i·m + j)·n + k)·n + l] e_l
/// for outer dimension n and middle dimension m.
template <class S>
struct StructureTensor {
  std::size_t outer = 0;
  std::size_t middle = 0;
  std::vector<S> coefficients;

  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * middle + j) * outer + k) * outer + l;
  }
  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;
};

template <class S>
StructureTensor<S> structure_tensor(const Trilinear<S>& t, Shape outer, Shape middle) {
  StructureTensor<S> c{outer.size(), middle.size(), {}};
  c.coefficients.assign(c.outer * c.middle * c.outer * c.outer, S(0));
  for (std::size_t i = 0; i < c.outer; ++i)
    for (std::size_t j = 0; j < c.middle; ++j)
      for (std::size_t k = 0; k < c.outer; ++k) {
        const Matrix<S> v = t(Matrix<S>::unit(outer, i), Matrix<S>::unit(middle, j), Matrix<S>::unit(outer, k));
        for (std::size_t l = 0; l < c.outer; ++l) c.coefficients[c.index(i, j, k, l)] = v[l];
      }
  return c;
}

template <class S>
StructureTensor<S> structure_tensor_plus(const JordanPair<S>& p) {
  return structure_tensor(p.t_plus, p.plus, p.minus);
}

template <class S>
StructureTensor<S> structure_tensor_minus(const JordanPair<S>& p) {
  return structure_tensor(p.t_minus, p.minus, p.plus);
}

template <class S>
StructureTensor<S> structure_tensor(const JordanTripleSystem<S>& t) {
  return structure_tensor(t.t, t.shape, t.shape);
}

/// Trilinear map evaluated from a structure tensor.
template <class S>
Trilinear<S> trilinear_from_tensor(StructureTensor<S> c, Shape outer) {
  return [c = std::move(c), outer](const Matrix<S>& x, const Matrix<S>& y, const Matrix<S>& z) {
    Matrix<S> out(outer);
    for (std::size_t i = 0; i < c.outer; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < c.middle; ++j) {
        if (is_zero(y[j])) continue;
        const S xy = x[i] * y[j];
        for (std::size_t k = 0; k < c.outer; ++k) {
          if (is_zero(z[k])) continue;
          const S f = xy * z[k];
          for (std::size_t l = 0; l < c.outer; ++l) {
            const S& coef = c.coefficients[c.index(i, j, k, l)];
            if (!is_zero(coef)) out[l] = out[l] + f * coef;
          }
        }
      }
    }
    return out;
  };
}

template <class S>
JordanPair<S> tensor_pair(std::string name, Shape plus, Shape minus, StructureTensor<S> tp, StructureTensor<S> tm) {
  if (tp.outer != plus.size() || tp.middle != minus.size() || tm.outer != minus.size() || tm.middle != plus.size() ||
      tp.coefficients.size() != tp.outer * tp.middle * tp.outer * tp.outer ||
      tm.coefficients.size() != tm.outer * tm.middle * tm.outer * tm.outer) {
    throw ShapeMismatch("structure tensor dimensions do not match the pair");
  }
  return {std::move(name), plus, minus, trilinear_from_tensor(std::move(tp), plus),
          trilinear_from_tensor(std::move(tm), minus)};
}

template <class S>
JordanTripleSystem<S> tensor_jts(std::string name, Shape shape, StructureTensor<S> t) {
  if (t.outer != shape.size() || t.middle != shape.size() || t.coefficients.size() != t.outer * t.outer * t.outer * t.outer) {
    throw ShapeMismatch("structure tensor dimensions do not match the triple system");
  }
  return make_jts<S>(std::move(name), shape, trilinear_from_tensor(std::move(t), shape));
}

}  // namespace jordan
