#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jordan/scalar/ring.hpp"

namespace jordan {

/// Element of GF(p) for a prime p >= 5.
///
/// The modulus travels with each element. Integer literals (the `S(0)`,
/// `S(2)` that generic code writes) are reduced modulo the *ambient* modulus
/// installed by a `PrimeFieldElement::ModulusScope` on the current thread.
/// Mixing elements of different moduli throws RingMismatch.
class PrimeFieldElement {
 public:
  /// RAII guard installing the ambient modulus for integer conversions on
  /// this thread. Scopes nest; the previous modulus is restored on exit.
  class ModulusScope {
   public:
    explicit ModulusScope(std::uint64_t modulus);
    ~ModulusScope();
    ModulusScope(const ModulusScope&) = delete;
    ModulusScope& operator=(const ModulusScope&) = delete;

   private:
    std::uint64_t previous_;
  };

  /// Zero of the ambient field.
  PrimeFieldElement();
  template <std::integral I>
  PrimeFieldElement(I n)  // NOLINT(google-explicit-constructor)
      : PrimeFieldElement(static_cast<std::int64_t>(n), ambient_modulus()) {}
  PrimeFieldElement(std::int64_t value, std::uint64_t modulus);

  /// Ambient modulus of this thread; throws InvalidInput if none is installed.
  static std::uint64_t ambient_modulus();
  static bool has_ambient_modulus();
  /// Throws InvalidInput unless p is a prime >= 5.
  static void check_modulus(std::uint64_t p);

  [[nodiscard]] std::uint64_t residue() const { return residue_; }
  [[nodiscard]] std::uint64_t modulus() const { return modulus_; }

  PrimeFieldElement& operator+=(const PrimeFieldElement& o);
  PrimeFieldElement& operator-=(const PrimeFieldElement& o);
  PrimeFieldElement& operator*=(const PrimeFieldElement& o);
  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b);
  PrimeFieldElement operator-() const;

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
  }

 private:
  void check_same_field(const PrimeFieldElement& o) const;

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

bool is_unit(const PrimeFieldElement& x);
PrimeFieldElement invert(const PrimeFieldElement& x);
inline bool is_zero(const PrimeFieldElement& x) { return x.residue() == 0; }
std::string to_string(const PrimeFieldElement& x);
std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x);
/// Parses an integer literal (or "p/q") and reduces it in the ambient field.
PrimeFieldElement parse_prime_field(std::string_view text);

template <>
struct ScalarTraits<PrimeFieldElement> {
  static constexpr bool is_approximate = false;
  static constexpr bool is_field = true;
};

}  // namespace jordan
