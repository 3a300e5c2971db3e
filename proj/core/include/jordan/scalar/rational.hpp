#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jordan/scalar/ring.hpp"

namespace jordan {

/// Exact rational number backed by GMP; always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p/q", "-p/q" or a plain integer; surrounding blanks are ignored.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

 private:
  mpq_class value_{0};
};

bool is_unit(const Rational& x);
Rational invert(const Rational& x);
inline bool is_zero(const Rational& x) { return sgn(x.value()) == 0; }
std::string to_string(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_approximate = false;
  static constexpr bool is_field = true;
};

}  // namespace jordan
