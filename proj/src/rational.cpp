#include "wallforge/rational.hpp"

#include <limits>

namespace wallforge {

Int parse_int(std::string_view text) {
  if (text.empty()) fail(Errc::parse_error, "empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) fail(Errc::parse_error, "sign without digits: '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      fail(Errc::parse_error,
           "invalid integer literal '" + std::string(text) + "' (decimals are not accepted)");
    value = value * 10 + (c - '0');
  }
  return neg ? Int(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '+' || den_text[0] == '-')
    fail(Errc::parse_error, "denominator must be an unsigned positive integer: '" + std::string(text) + "'");
  const Int num = parse_int(num_text);
  const Int den = parse_int(den_text);
  if (den == 0) fail(Errc::parse_error, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const Int& n) { return n.str(); }

int sgn(const Rational& r) { return (r > 0) - (r < 0); }
int sgn(const Int& n) { return (n > 0) - (n < 0); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool is_half_integer(const Rational& r) {
  const Int d = denominator(r);
  return d == 1 || d == 2;
}

Int floor_rat(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int isqrt(const Int& n) {
  if (n < 0) fail(Errc::invalid_argument, "isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

long long to_int64(const Int& n) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (n < lo || n > hi) fail(Errc::invalid_argument, "integer too large for interchange: " + n.str());
  return n.convert_to<long long>();
}

Int to_int_exact(const Rational& r) {
  if (!is_integer(r)) fail(Errc::non_integral, "expected an integer, got " + to_string(r));
  return numerator(r);
}

}  // namespace wallforge
