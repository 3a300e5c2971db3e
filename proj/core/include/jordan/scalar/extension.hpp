#pragma once

#include <array>
#include <cstddef>

#include "jordan/scalar/dual.hpp"
#include "jordan/scalar/second_dual.hpp"

namespace jordan {

/// Describes a ring extension A ⊃ S that is free of finite rank over S:
/// a fixed S-basis, coordinates in that basis, and the embedding S → A.
/// Scalar extension of multilinear structures is driven entirely by this.
template <class A>
struct ExtensionTraits;

template <class S>
struct ExtensionTraits<Dual<S>> {
  using base = S;
  static constexpr std::size_t rank = 2;

  static std::array<S, 2> components(const Dual<S>& x) { return {x.value(), x.eps()}; }
  static Dual<S> basis(std::size_t i) {
    return i == 0 ? Dual<S>(S(1), S(0)) : Dual<S>(S(0), S(1));
  }
  static Dual<S> embed(const S& s) { return Dual<S>(s); }
};

template <class S>
struct ExtensionTraits<SecondDual<S>> {
  using base = S;
  static constexpr std::size_t rank = 4;

  static std::array<S, 4> components(const SecondDual<S>& x) {
    return {x.value(), x.eps1(), x.eps2(), x.eps12()};
  }
  static SecondDual<S> basis(std::size_t i) {
    std::array<S, 4> c{S(0), S(0), S(0), S(0)};
    c[i] = S(1);
    return SecondDual<S>(c[0], c[1], c[2], c[3]);
  }
  static SecondDual<S> embed(const S& s) { return SecondDual<S>(s); }
};

/// ε·s in S[ε].
template <class S>
Dual<S> epsilon(const S& s) {
  return Dual<S>(S(0), s);
}

}  // namespace jordan
