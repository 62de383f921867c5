#include "wallforge/chern.hpp"

#include <ostream>
#include <utility>

namespace wallforge {

ChernChar::ChernChar(Int rank, Int degree, Rational second)
    : ch0(std::move(rank)), ch1(std::move(degree)), ch2(std::move(second)) {
  if (!is_half_integer(ch2))
    fail(Errc::parse_error, "ch2 must lie in (1/2)Z, got " + wallforge::to_string(ch2));
}

ChernChar ChernChar::line_bundle(const Int& k) { return {1, k, Rational(k * k, 2)}; }

ChernChar ChernChar::ideal_sheaf(const Int& length) { return {1, 0, Rational(-length)}; }

ChernChar ChernChar::one_dimensional(const Int& c, const Rational& chi) {
  return {0, c, chi - Rational(3 * c, 2)};
}

ChernChar operator+(const ChernChar& a, const ChernChar& b) {
  return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
}

ChernChar operator-(const ChernChar& a, const ChernChar& b) {
  return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2};
}

ChernChar operator-(const ChernChar& a) { return {-a.ch0, -a.ch1, -a.ch2}; }

ChernChar operator*(const Int& n, const ChernChar& v) {
  return {n * v.ch0, n * v.ch1, Rational(n) * v.ch2};
}

Rational euler_characteristic(const ChernChar& v) {
  return Rational(v.ch0) + Rational(3 * v.ch1, 2) + v.ch2;
}

Rational euler_pairing(const ChernChar& a, const ChernChar& b) {
  return Rational(a.ch0 * b.ch0) + Rational(3 * (a.ch0 * b.ch1 - a.ch1 * b.ch0), 2) +
         a.ch0 * b.ch2 + b.ch0 * a.ch2 - Rational(a.ch1 * b.ch1);
}

ChernChar twist(const ChernChar& v, const Int& k) {
  return {v.ch0, v.ch1 + k * v.ch0, v.ch2 + k * v.ch1 + Rational(k * k * v.ch0, 2)};
}

ChernChar dualize(const ChernChar& v) {
  return {-v.ch0, v.ch1 + 3 * v.ch0, -v.ch2 - 3 * v.ch1 - Rational(9 * v.ch0, 2)};
}

bool bogomolov_holds(const ChernChar& v) {
  if (v.ch0 <= 0)
    fail(Errc::rank_not_positive,
         "Bogomolov inequality as stated applies to positive rank, got ch0 = " + v.ch0.str());
  return v.ch2 < Rational(v.ch1 * v.ch1, 2 * v.ch0);
}

bool sheaf_integral(const ChernChar& v) {
  return is_integer(v.ch2 - Rational(v.ch1 * v.ch1, 2));
}

namespace {

// ch2 literal must be `p` or `p/2` (a literal `/1` is tolerated); any other
// written denominator is rejected even if the value would reduce into the
// lattice.
Rational parse_ch2(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (den != "1" && den != "2")
      fail(Errc::parse_error, "ch2 must be written p or p/2, got '" + std::string(text) + "'");
  }
  return parse_rational(text);
}

}  // namespace

ChernChar parse_chern(std::string_view text) {
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
  if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos)
    fail(Errc::parse_error, "expected 'r,c1,ch2', got '" + std::string(text) + "'");
  return {parse_int(text.substr(0, c1)), parse_int(text.substr(c1 + 1, c2 - c1 - 1)),
          parse_ch2(text.substr(c2 + 1))};
}

std::string to_string(const ChernChar& v) {
  return v.ch0.str() + "," + v.ch1.str() + "," + to_string(v.ch2);
}

std::ostream& operator<<(std::ostream& os, const ChernChar& v) { return os << to_string(v); }

}  // namespace wallforge
