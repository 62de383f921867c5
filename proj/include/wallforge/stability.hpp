#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "wallforge/chern.hpp"

namespace wallforge {

/// Point (s, t) of the upper half-plane of stability parameters.
struct StabPoint {
  Rational s;
  Rational t;

  StabPoint(Rational s_, Rational t_);  // rejects t <= 0

  bool operator==(const StabPoint&) const = default;
};

/// Exact real and imaginary parts of the central charge.
struct ChargeValue {
  Rational re;
  Rational im;

  bool operator==(const ChargeValue&) const = default;
};

/// Z_{s,t}(v) = (-ch2 + ch1 s - (ch0/2)(s^2 - t^2)) + i t (ch1 - ch0 s).
ChargeValue central_charge(const ChernChar& v, const StabPoint& p);

/// Slope value mu = -Re(Z)/Im(Z), with the distinguished value +infinity for
/// phase-1 classes (Im Z = 0, Re Z < 0).
struct Slope {
  bool infinite = false;
  Rational value;  // meaningful only when !infinite

  bool operator==(const Slope&) const = default;
};

/// Throws not_in_cone when Im Z = 0 and Re Z >= 0 (class is outside the
/// image cone of the heart at p; the phase convention there is undefined).
Slope slope(const ChernChar& v, const StabPoint& p);

/// Ordering of mu(a) vs mu(b) at p by exact cross-multiplication; +infinity
/// compares greater than every finite slope and equal to itself.  Never
/// divides.  Errors as in slope().
std::strong_ordering compare_slopes(const ChernChar& a, const ChernChar& b, const StabPoint& p);

/// Necessary-conditions classification against the tilted heart at s.  True
/// membership depends on the Harder-Narasimhan factors of an actual sheaf,
/// which the invariants cannot see; this reports only what they determine.
enum class HeartPosition {
  TorsionLike,    // ch0 = 0, ch1 > 0
  QPart,          // ch0 > 0 and total slope > s
  FShiftPart,     // ch0 < 0 and unshifted total slope <= s
  Outside,        // necessary conditions fail
  Indeterminate,  // ch0 = ch1 = 0: zero-dimensional, zero, or neither
};

HeartPosition heart_position(const ChernChar& v, const Rational& s);

/// Text encoding `s,t` with exact rationals, e.g. `-3/2,1`.
StabPoint parse_stab_point(std::string_view text);
std::string to_string(const StabPoint& p);

}  // namespace wallforge
