#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>

#include "jordan/scalar/ring.hpp"

namespace jordan {

/// 64-bit float used for the numeric geometry checks. Non-finite values are
/// rejected on construction.
class FloatScalar {
 public:
  FloatScalar() = default;
  template <std::integral I>
  FloatScalar(I n) : value_(static_cast<double>(n)) {}  // NOLINT(google-explicit-constructor)
  FloatScalar(double v);                                // NOLINT(google-explicit-constructor)

  [[nodiscard]] double value() const { return value_; }

  FloatScalar& operator+=(FloatScalar o) { return *this = FloatScalar(value_ + o.value_); }
  FloatScalar& operator-=(FloatScalar o) { return *this = FloatScalar(value_ - o.value_); }
  FloatScalar& operator*=(FloatScalar o) { return *this = FloatScalar(value_ * o.value_); }
  friend FloatScalar operator+(FloatScalar a, FloatScalar b) { return a += b; }
  friend FloatScalar operator-(FloatScalar a, FloatScalar b) { return a -= b; }
  friend FloatScalar operator*(FloatScalar a, FloatScalar b) { return a *= b; }
  friend FloatScalar operator/(FloatScalar a, FloatScalar b);
  FloatScalar operator-() const { return FloatScalar(-value_); }

  friend bool operator==(FloatScalar a, FloatScalar b) { return a.value_ == b.value_; }
  friend auto operator<=>(FloatScalar a, FloatScalar b) { return a.value_ <=> b.value_; }

 private:
  double value_ = 0.0;
};

/// Absolute tolerance used by `is_zero` on floats.
inline constexpr double kFloatZeroTolerance = 1e-9;

inline bool is_unit(FloatScalar x) { return x.value() != 0.0 && std::isfinite(1.0 / x.value()); }
FloatScalar invert(FloatScalar x);
inline bool is_zero(FloatScalar x) { return std::abs(x.value()) <= kFloatZeroTolerance; }
inline double magnitude(FloatScalar x) { return std::abs(x.value()); }
std::string to_string(FloatScalar x);
std::ostream& operator<<(std::ostream& os, FloatScalar x);

template <>
struct ScalarTraits<FloatScalar> {
  static constexpr bool is_approximate = true;
  static constexpr bool is_field = true;
};

}  // namespace jordan
