#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>

#include "jordan/scalar/ring.hpp"

namespace jordan {

/// Dual number a + b·ε over a base ring S, with ε² = 0.
///
/// Scalar extension by dual numbers is how the library takes algebraic
/// differentials: f(x + εv) = f(x) + ε·Df(x)v for any polynomial or rational
/// map built from ring operations and inverses of units.
template <class S>
class Dual {
 public:
  Dual() : value_(S(0)), eps_(S(0)) {}
  template <std::integral I>
  Dual(I n) : value_(S(n)), eps_(S(0)) {}  // NOLINT(google-explicit-constructor)
  Dual(const S& value) : value_(value), eps_(S(0)) {}  // NOLINT(google-explicit-constructor)
  Dual(const S& value, const S& eps) : value_(value), eps_(eps) {}

  [[nodiscard]] const S& value() const { return value_; }
  [[nodiscard]] const S& eps() const { return eps_; }

  Dual& operator+=(const Dual& o) {
    value_ = value_ + o.value_;
    eps_ = eps_ + o.eps_;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value_ = value_ - o.value_;
    eps_ = eps_ - o.eps_;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    // (a + εb)(a' + εb') = aa' + ε(ab' + ba')
    S eps = value_ * o.eps_ + eps_ * o.value_;
    value_ = value_ * o.value_;
    eps_ = std::move(eps);
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(const Dual& a, const Dual& b) { return a * invert(b); }
  Dual operator-() const { return Dual(-value_, -eps_); }

  friend bool operator==(const Dual& a, const Dual& b) = default;

 private:
  S value_;
  S eps_;
};

/// a + εb is a unit iff a is.
template <class S>
bool is_unit(const Dual<S>& x) {
  return is_unit(x.value());
}

template <class S>
Dual<S> invert(const Dual<S>& x) {
  const S inv = invert(x.value());  // throws NonUnit for nilpotent x
  return Dual<S>(inv, -(x.eps() * inv * inv));
}

template <class S>
bool is_zero(const Dual<S>& x) {
  return is_zero(x.value()) && is_zero(x.eps());
}

template <class S>
std::string to_string(const Dual<S>& x) {
  return "(" + to_string(x.value()) + " + " + to_string(x.eps()) + "e)";
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Dual<S>& x) {
  return os << to_string(x);
}

template <class S>
struct ScalarTraits<Dual<S>> {
  static constexpr bool is_approximate = ScalarTraits<S>::is_approximate;
  static constexpr bool is_field = false;
};

}  // namespace jordan
