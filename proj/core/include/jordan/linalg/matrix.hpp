#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "jordan/errors.hpp"
#include "jordan/scalar/ring.hpp"

namespace jordan {

struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  [[nodiscard]] std::size_t size() const { return rows * cols; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

inline std::string to_string(const Shape& s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

/// Dense row-major matrix over a ring scalar. Module elements are matrices
/// too; their coordinates are the entries in row-major order.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : shape_{rows, cols}, data_(rows * cols, S(0)) {}
  explicit Matrix(Shape shape) : Matrix(shape.rows, shape.cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : shape_{rows, cols}, data_(std::move(data)) {
    if (data_.size() != rows * cols) throw ShapeMismatch("matrix data size does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    shape_.rows = rows.size();
    shape_.cols = rows.size() == 0 ? 0 : rows.begin()->size();
    data_.reserve(shape_.size());
    for (const auto& r : rows) {
      if (r.size() != shape_.cols) throw ShapeMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zero(Shape s) { return Matrix(s); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  /// The i-th standard basis element (row-major coordinate index).
  static Matrix unit(Shape s, std::size_t index) {
    Matrix m(s);
    m.data_.at(index) = S(1);
    return m;
  }
  static Matrix column(std::vector<S> v) {
    const std::size_t n = v.size();
    return Matrix(n, 1, std::move(v));
  }
  static Matrix diagonal(const std::vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] std::size_t rows() const { return shape_.rows; }
  [[nodiscard]] std::size_t cols() const { return shape_.cols; }
  [[nodiscard]] std::size_t size() const { return data_.size(); }
  [[nodiscard]] const std::vector<S>& data() const { return data_; }
  std::vector<S>& data() { return data_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * shape_.cols + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * shape_.cols + j]; }
  S& operator[](std::size_t k) { return data_[k]; }
  const S& operator[](std::size_t k) const { return data_[k]; }

  /// Same coordinates, new shape.
  [[nodiscard]] Matrix reshaped(Shape s) const {
    if (s.size() != size()) throw ShapeMismatch("cannot reshape " + to_string(shape_) + " to " + to_string(s));
    return Matrix(s.rows, s.cols, data_);
  }
  [[nodiscard]] Matrix as_column() const { return reshaped({size(), 1}); }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols(), rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows() || c0 + nc > cols()) throw ShapeMismatch("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows() || c0 + b.cols() > cols()) throw ShapeMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  [[nodiscard]] bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator*(const S& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
      throw ShapeMismatch("cannot multiply " + to_string(a.shape_) + " by " + to_string(b.shape_));
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik) && !ScalarTraits<S>::is_approximate) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (shape_ != o.shape_) {
      throw ShapeMismatch("shape " + to_string(shape_) + " vs " + to_string(o.shape_));
    }
  }

  Shape shape_{};
  std::vector<S> data_;
};

/// Entry-wise conversion to another scalar type.
template <class T, class S, class F>
Matrix<T> map_entries(const Matrix<S>& m, F&& f) {
  std::vector<T> d;
  d.reserve(m.size());
  for (const auto& x : m.data()) d.push_back(f(x));
  return Matrix<T>(m.rows(), m.cols(), std::move(d));
}

template <class S>
S trace(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("trace of non-square matrix");
  S t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// Approximate equality for float matrices; exact equality otherwise.
template <class S>
bool matrices_close(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.shape() != b.shape()) return false;
  if constexpr (ScalarTraits<S>::is_approximate) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!is_zero(a[k] - b[k])) return false;
    return true;
  } else {
    return a == b;
  }
}

template <class S>
std::string to_string(const Matrix<S>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += to_string(m(i, j));
    }
  }
  return out + "]";
}

/// Coordinates as strings in row-major order (for reports).
template <class S>
std::vector<std::string> coordinate_strings(const Matrix<S>& m) {
  std::vector<std::string> out;
  out.reserve(m.size());
  for (const auto& x : m.data()) out.push_back(to_string(x));
  return out;
}

}  // namespace jordan
