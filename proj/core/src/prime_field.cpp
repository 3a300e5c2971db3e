#include "jordan/scalar/prime_field.hpp"

#include <ostream>

#include "jordan/errors.hpp"
#include "jordan/scalar/rational.hpp"

namespace jordan {

namespace {

thread_local std::uint64_t g_ambient_modulus = 0;
thread_local std::uint64_t g_last_checked = 0;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(std::int64_t value, std::uint64_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

PrimeFieldElement::ModulusScope::ModulusScope(std::uint64_t modulus)
    : previous_(g_ambient_modulus) {
  check_modulus(modulus);
  g_ambient_modulus = modulus;
}

PrimeFieldElement::ModulusScope::~ModulusScope() { g_ambient_modulus = previous_; }

PrimeFieldElement::PrimeFieldElement() : modulus_(ambient_modulus()) {}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint64_t modulus)
    : residue_(0), modulus_(modulus) {
  if (modulus != g_ambient_modulus && modulus != g_last_checked) {
    check_modulus(modulus);
    g_last_checked = modulus;
  }
  residue_ = reduce(value, modulus);
}

std::uint64_t PrimeFieldElement::ambient_modulus() {
  if (g_ambient_modulus == 0) {
    throw InvalidInput("no ambient prime modulus installed (use PrimeFieldElement::ModulusScope)");
  }
  return g_ambient_modulus;
}

bool PrimeFieldElement::has_ambient_modulus() { return g_ambient_modulus != 0; }

void PrimeFieldElement::check_modulus(std::uint64_t p) {
  // Products of residues must fit in 64 bits.
  if (p < 5 || p >= (1ULL << 31) || !is_prime(p)) {
    throw InvalidInput("prime field modulus must be a prime in [5, 2^31), got " + std::to_string(p));
  }
}

void PrimeFieldElement::check_same_field(const PrimeFieldElement& o) const {
  if (modulus_ != o.modulus_) {
    throw RingMismatch("GF(" + std::to_string(modulus_) + ") mixed with GF(" +
                       std::to_string(o.modulus_) + ")");
  }
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
  check_same_field(o);
  residue_ += o.residue_;
  if (residue_ >= modulus_) residue_ -= modulus_;
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
  check_same_field(o);
  residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + modulus_ - o.residue_;
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
  check_same_field(o);
  residue_ = (residue_ * o.residue_) % modulus_;
  return *this;
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  PrimeFieldElement r = *this;
  r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  return r;
}

PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  return a * invert(b);
}

bool is_unit(const PrimeFieldElement& x) { return x.residue() != 0; }

PrimeFieldElement invert(const PrimeFieldElement& x) {
  if (x.residue() == 0) {
    throw NonUnit("0 has no inverse in GF(" + std::to_string(x.modulus()) + ")");
  }
  // Extended Euclid on (residue, p).
  std::int64_t r0 = static_cast<std::int64_t>(x.modulus());
  std::int64_t r1 = static_cast<std::int64_t>(x.residue());
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return PrimeFieldElement(t0, x.modulus());
}

std::string to_string(const PrimeFieldElement& x) { return std::to_string(x.residue()); }

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << to_string(x); }

PrimeFieldElement parse_prime_field(std::string_view text) {
  const Rational q = Rational::parse(text);
  const std::uint64_t p = PrimeFieldElement::ambient_modulus();
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = q.value().get_num() % pz;
  mpz_class den = q.value().get_den() % pz;
  const PrimeFieldElement n(num.get_si(), p);
  const PrimeFieldElement d(den.get_si(), p);
  if (is_zero(d)) throw ParseError("denominator vanishes mod " + std::to_string(p));
  return n / d;
}

}  // namespace jordan
