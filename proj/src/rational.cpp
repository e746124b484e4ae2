#include "ssg/rational.hpp"


#include <boost/multiprecision/integer.hpp>

#include "ssg/errors.hpp"

namespace ssg {

Rational halve(const Rational& x) { return scale_down_pow2(x, 1); }

Rational scale_down_pow2(const Rational& x, std::size_t k) {
  Rational out;
  mpq_div_2exp(out.backend().data(), x.backend().data(), static_cast<mp_bitcnt_t>(k));
  return out;
}

Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }

Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

std::string to_string(const Rational& x) {
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  const Integer d = to_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(to_integer(num), d);
}

Integer pow_integer(unsigned base, std::size_t exponent) {
  Integer out = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1U) out *= b;
    b *= b;
    exponent >>= 1U;
  }
  return out;
}

Integer six_pow_half_ceil(std::size_t n_a) { return pow_integer(6, (n_a + 1) / 2); }

Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

std::size_t ceil_log2(const Integer& x) {
  if (x <= 1) return 0;
  const Integer y = x - 1;
  return static_cast<std::size_t>(boost::multiprecision::msb(y)) + 1;
}

}  // namespace ssg
