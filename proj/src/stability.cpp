#include "wallforge/stability.hpp"

#include <utility>

namespace wallforge {

StabPoint::StabPoint(Rational s_, Rational t_) : s(std::move(s_)), t(std::move(t_)) {
  if (t <= 0) fail(Errc::non_positive_t, "stability point needs t > 0, got t = " + to_string(t));
}

ChargeValue central_charge(const ChernChar& v, const StabPoint& p) {
  const Rational& s = p.s;
  const Rational& t = p.t;
  Rational re = -v.ch2 + v.ch1 * s - Rational(v.ch0, 2) * (s * s - t * t);
  Rational im = t * (v.ch1 - v.ch0 * s);
  return {std::move(re), std::move(im)};
}

namespace {

[[noreturn]] void fail_not_in_cone(const ChernChar& v) {
  fail(Errc::not_in_cone,
       "class " + to_string(v) + " has Im Z = 0, Re Z >= 0: not in the heart's image cone");
}

}  // namespace

Slope slope(const ChernChar& v, const StabPoint& p) {
  const ChargeValue z = central_charge(v, p);
  if (z.im == 0) {
    if (z.re < 0) return {true, 0};
    fail_not_in_cone(v);
  }
  return {false, -z.re / z.im};
}

std::strong_ordering compare_slopes(const ChernChar& a, const ChernChar& b, const StabPoint& p) {
  const ChargeValue za = central_charge(a, p);
  const ChargeValue zb = central_charge(b, p);
  if (za.im == 0 && za.re >= 0) fail_not_in_cone(a);
  if (zb.im == 0 && zb.re >= 0) fail_not_in_cone(b);
  const bool inf_a = za.im == 0;
  const bool inf_b = zb.im == 0;
  if (inf_a || inf_b) {
    if (inf_a && inf_b) return std::strong_ordering::equal;
    return inf_a ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // sign(mu_a - mu_b) = sign(re_b im_a - re_a im_b) * sign(im_a im_b)
  const int s = sgn(zb.re * za.im - za.re * zb.im) * sgn(za.im) * sgn(zb.im);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

HeartPosition heart_position(const ChernChar& v, const Rational& s) {
  if (v.ch0 == 0) {
    if (v.ch1 > 0) return HeartPosition::TorsionLike;
    if (v.ch1 < 0) return HeartPosition::Outside;
    return HeartPosition::Indeterminate;
  }
  // Mumford slope of the class (for ch0 < 0, of the unshifted class; the
  // sign cancellation makes it the same ratio).
  const Rational mu = Rational(v.ch1) / Rational(v.ch0);
  if (v.ch0 > 0) return mu > s ? HeartPosition::QPart : HeartPosition::Outside;
  return mu <= s ? HeartPosition::FShiftPart : HeartPosition::Outside;
}

StabPoint parse_stab_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    fail(Errc::parse_error, "expected 's,t', got '" + std::string(text) + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string to_string(const StabPoint& p) { return to_string(p.s) + "," + to_string(p.t); }

}  // namespace wallforge
