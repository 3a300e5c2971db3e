#pragma once

#include <concepts>
#include <string>

namespace jordan {

/// Per-type facts the generic algorithms need beyond the arithmetic operators.
///
/// Every scalar type provides, through ADL, the free functions
/// `is_unit(x)`, `invert(x)`, `is_zero(x)` and `to_string(x)`.
template <class S>
struct ScalarTraits {
  /// Floating point: equality and singularity are decided up to tolerance.
  static constexpr bool is_approximate = false;
  /// Every nonzero element is a unit (rank and kernels are meaningful).
  static constexpr bool is_field = false;
};

template <class S>
concept RingScalar = std::regular<S> && requires(const S a, const S b) {
  { S(0) };
  { S(1) };
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_unit(a) } -> std::convertible_to<bool>;
  { invert(a) } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// 1/2 in the ring S. Throws NonUnit if 2 is not invertible.
template <class S>
S half() {
  return invert(S(2));
}

}  // namespace jordan
