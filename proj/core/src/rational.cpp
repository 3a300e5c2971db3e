#include "jordan/scalar/rational.hpp"

#include <cctype>
#include <ostream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw NonUnit("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(trim(text.substr(0, slash)));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

Rational operator/(const Rational& a, const Rational& b) { return a * invert(b); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_unit(const Rational& x) { return !is_zero(x); }

Rational invert(const Rational& x) {
  if (is_zero(x)) throw NonUnit("0 has no inverse in Q");
  return Rational(mpq_class(1 / x.value()));
}

std::string to_string(const Rational& x) { return x.value().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_string(x); }

}  // namespace jordan
