#pragma once

#include <concepts>
#include <ostream>
#include <string>

#include "jordan/scalar/ring.hpp"

namespace jordan {

/// Element v + ε₁a + ε₂b + ε₁ε₂c of the second order tangent ring S[ε₁, ε₂]
/// with ε₁² = ε₂² = 0 (ε₁ε₂ itself is nonzero).
template <class S>
class SecondDual {
 public:
  SecondDual() : v_(S(0)), e1_(S(0)), e2_(S(0)), e12_(S(0)) {}
  template <std::integral I>
  SecondDual(I n) : v_(S(n)), e1_(S(0)), e2_(S(0)), e12_(S(0)) {}  // NOLINT
  SecondDual(const S& v) : v_(v), e1_(S(0)), e2_(S(0)), e12_(S(0)) {}  // NOLINT
  SecondDual(const S& v, const S& e1, const S& e2, const S& e12)
      : v_(v), e1_(e1), e2_(e2), e12_(e12) {}

  [[nodiscard]] const S& value() const { return v_; }
  [[nodiscard]] const S& eps1() const { return e1_; }
  [[nodiscard]] const S& eps2() const { return e2_; }
  [[nodiscard]] const S& eps12() const { return e12_; }

  SecondDual& operator+=(const SecondDual& o) {
    v_ = v_ + o.v_;
    e1_ = e1_ + o.e1_;
    e2_ = e2_ + o.e2_;
    e12_ = e12_ + o.e12_;
    return *this;
  }
  SecondDual& operator-=(const SecondDual& o) {
    v_ = v_ - o.v_;
    e1_ = e1_ - o.e1_;
    e2_ = e2_ - o.e2_;
    e12_ = e12_ - o.e12_;
    return *this;
  }
  SecondDual& operator*=(const SecondDual& o) {
    // Four-coefficient convolution; every term carrying ε₁² or ε₂² drops.
    S e12 = v_ * o.e12_ + e1_ * o.e2_ + e2_ * o.e1_ + e12_ * o.v_;
    S e1 = v_ * o.e1_ + e1_ * o.v_;
    S e2 = v_ * o.e2_ + e2_ * o.v_;
    v_ = v_ * o.v_;
    e1_ = std::move(e1);
    e2_ = std::move(e2);
    e12_ = std::move(e12);
    return *this;
  }
  friend SecondDual operator+(SecondDual a, const SecondDual& b) { return a += b; }
  friend SecondDual operator-(SecondDual a, const SecondDual& b) { return a -= b; }
  friend SecondDual operator*(SecondDual a, const SecondDual& b) { return a *= b; }
  friend SecondDual operator/(const SecondDual& a, const SecondDual& b) { return a * invert(b); }
  SecondDual operator-() const { return SecondDual(-v_, -e1_, -e2_, -e12_); }

  friend bool operator==(const SecondDual& a, const SecondDual& b) = default;

 private:
  S v_;
  S e1_;
  S e2_;
  S e12_;
};

template <class S>
bool is_unit(const SecondDual<S>& x) {
  return is_unit(x.value());
}

template <class S>
SecondDual<S> invert(const SecondDual<S>& x) {
  const S w = invert(x.value());
  const S w2 = w * w;
  return SecondDual<S>(w, -(x.eps1() * w2), -(x.eps2() * w2),
                       S(2) * x.eps1() * x.eps2() * w2 * w - x.eps12() * w2);
}

template <class S>
bool is_zero(const SecondDual<S>& x) {
  return is_zero(x.value()) && is_zero(x.eps1()) && is_zero(x.eps2()) && is_zero(x.eps12());
}

template <class S>
std::string to_string(const SecondDual<S>& x) {
  return "(" + to_string(x.value()) + " + " + to_string(x.eps1()) + "e1 + " + to_string(x.eps2()) +
         "e2 + " + to_string(x.eps12()) + "e1e2)";
}

template <class S>
std::ostream& operator<<(std::ostream& os, const SecondDual<S>& x) {
  return os << to_string(x);
}

template <class S>
struct ScalarTraits<SecondDual<S>> {
  static constexpr bool is_approximate = ScalarTraits<S>::is_approximate;
  static constexpr bool is_field = false;
};

}  // namespace jordan
