#include "jordan/scalar/float_scalar.hpp"

#include <cstdio>
#include <ostream>

#include "jordan/errors.hpp"

namespace jordan {

FloatScalar::FloatScalar(double v) : value_(v) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite float scalar");
}

FloatScalar operator/(FloatScalar a, FloatScalar b) { return a * invert(b); }

FloatScalar invert(FloatScalar x) {
  if (!is_unit(x)) throw NonUnit("0.0 has no inverse");
  return FloatScalar(1.0 / x.value());
}

std::string to_string(FloatScalar x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x.value());
  return buf;
}

std::ostream& operator<<(std::ostream& os, FloatScalar x) { return os << to_string(x); }

}  // namespace jordan
