#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "jordan/errors.hpp"
#include "jordan/scalar/float_scalar.hpp"
#include "jordan/scalar/prime_field.hpp"
#include "jordan/scalar/rational.hpp"

namespace jordan {

template <class S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return Rational::parse(text);
}

/// Reduced in the ambient field of the calling thread.
template <>
inline PrimeFieldElement parse_scalar<PrimeFieldElement>(std::string_view text) {
  return parse_prime_field(text);
}

/// Decimal literal, or an exact "p/q" converted to the nearest double.
template <>
inline FloatScalar parse_scalar<FloatScalar>(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return FloatScalar(Rational::parse(text).to_double());
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return FloatScalar(v);
}

}  // namespace jordan
