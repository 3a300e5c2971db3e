#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jordan/linalg/matrix.hpp"
#include "jordan/scalar/float_scalar.hpp"
#include "jordan/scalar/prime_field.hpp"
#include "jordan/scalar/rational.hpp"

namespace jordan {

/// Seeded generator that can be split into independent child streams, so
/// every check draws from its own reproducible sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed), engine_(mix(seed)) {}

  /// Child generator for the named stream; does not disturb this one.
  [[nodiscard]] Rng split(std::uint64_t stream) const { return Rng(mix(state_ ^ mix(stream + 0x9e3779b97f4a7c15ULL))); }

  std::uint64_t next() { return engine_(); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  [[nodiscard]] std::uint64_t seed() const { return state_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::mt19937_64 engine_;
};

template <class S>
S random_scalar(Rng& rng);

/// Small-height rationals: numerator in [-6, 6], denominator in [1, 4].
template <>
inline Rational random_scalar<Rational>(Rng& rng) {
  const auto num = rng.uniform_int(-6, 6);
  const auto den = rng.uniform_int(1, 4);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

/// Uniform residue in the ambient field.
template <>
inline PrimeFieldElement random_scalar<PrimeFieldElement>(Rng& rng) {
  const auto p = PrimeFieldElement::ambient_modulus();
  return PrimeFieldElement(rng.uniform_int(0, static_cast<std::int64_t>(p) - 1), p);
}

/// Uniform in [-1, 1].
template <>
inline FloatScalar random_scalar<FloatScalar>(Rng& rng) {
  return FloatScalar(rng.uniform_real(-1.0, 1.0));
}

template <class S>
Matrix<S> random_matrix(Shape shape, Rng& rng) {
  Matrix<S> m(shape);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = random_scalar<S>(rng);
  return m;
}

/// Every element of GF(p)^shape for the ambient p, in lexicographic order.
inline std::vector<Matrix<PrimeFieldElement>> enumerate_elements(Shape shape) {
  const auto p = PrimeFieldElement::ambient_modulus();
  std::size_t total = 1;
  for (std::size_t k = 0; k < shape.size(); ++k) total *= p;
  std::vector<Matrix<PrimeFieldElement>> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Matrix<PrimeFieldElement> m(shape);
    std::size_t rest = idx;
    for (std::size_t k = shape.size(); k-- > 0;) {
      m[k] = PrimeFieldElement(static_cast<std::int64_t>(rest % p), p);
      rest /= p;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace jordan
