#pragma once

#include <optional>
#include <random>
#include <utility>

#include "wallforge/stability.hpp"
#include "wallforge/walls.hpp"

namespace wftest {

using namespace wallforge;

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x77a11f04ull) {
  return std::mt19937_64(seed);
}

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return Int(dist(rng));
}

/// Random lattice class: integer ch0, ch1 and half-integer ch2.
inline ChernChar rand_class(std::mt19937_64& rng, long bound = 40) {
  return {rand_int(rng, -bound, bound), rand_int(rng, -bound, bound),
          Rational(rand_int(rng, -2 * bound, 2 * bound), 2)};
}

inline Rational rand_rational(std::mt19937_64& rng, long bound = 8, long max_den = 12) {
  return Rational(rand_int(rng, -bound * max_den, bound * max_den), rand_int(rng, 1, max_den));
}

inline StabPoint rand_point(std::mt19937_64& rng) {
  Rational t = rand_rational(rng, 4, 12);
  if (t <= 0) t = Rational(1, 3) - t;
  return {rand_rational(rng, 6, 12), t};
}

/// Rational bracket 0 < lo < sqrt(rho) < hi for rho > 1/2^30, strict on both
/// sides.
inline std::pair<Rational, Rational> sqrt_bracket(const Rational& rho) {
  const Int scale = Int(1) << 20;
  const Int n = floor_rat(rho * scale * scale);
  const Int r = isqrt(n);
  Rational lo(r, scale);
  if (lo * lo >= rho) lo = Rational(r - 1, scale);
  const Rational hi(r + 2, scale);
  return {lo, hi};
}

/// A lattice class e, not proportional to a, whose wall with a passes
/// exactly through p.  Solves the homogeneous linear slope-equality
/// condition over the (ch0, ch1, 2 ch2) lattice.  Requires Im Z_p(a) != 0.
inline std::optional<ChernChar> wall_mate(std::mt19937_64& rng, const ChernChar& a,
                                          const StabPoint& p) {
  const ChargeValue za = central_charge(a, p);
  if (za.im == 0) return std::nullopt;
  // re_e im_a - re_a im_e = P e0 + Q e1 + R e2 in the entries of e.
  const Rational P = za.re * p.t * p.s - za.im * (p.s * p.s - p.t * p.t) / 2;
  const Rational Q = za.im * p.s - za.re * p.t;
  const Rational R = -za.im;
  // In coordinates (e0, e1, h = 2 e2) the condition is A e0 + B e1 + C h = 0
  // after clearing denominators.
  using boost::multiprecision::lcm;
  const Int m = lcm(lcm(denominator(P), denominator(Q)), denominator(Rational(R / 2)));
  const Int A = to_int_exact(P * m);
  const Int B = to_int_exact(Q * m);
  const Int C = to_int_exact(R / 2 * m);  // nonzero since im != 0
  const Int ha = to_int_exact(2 * a.ch2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Int alpha = rand_int(rng, -3, 3);
    const Int beta = rand_int(rng, -3, 3);
    const Int gamma = rand_int(rng, -2, 2);
    // basis (C,0,-A), (0,C,-B) of wall mates plus the trivial solution a
    const Int e0 = alpha * C + gamma * a.ch0;
    const Int e1 = beta * C + gamma * a.ch1;
    const Int h = -alpha * A - beta * B + gamma * ha;
    const ChernChar e(e0, e1, Rational(h, 2));
    // reject proportional pairs and mates outside the cone at p
    const bool proportional = a.ch0 * e.ch1 == e.ch0 * a.ch1 &&
                              Rational(a.ch0) * e.ch2 == Rational(e.ch0) * a.ch2 &&
                              Rational(a.ch1) * e.ch2 == Rational(e.ch1) * a.ch2;
    if (proportional) continue;
    const ChargeValue ze = central_charge(e, p);
    if (ze.im == 0) continue;  // on-wall mate with zero charge or outside cone
    return e;
  }
  return std::nullopt;
}

/// Second rational point of the circle (s - c)^2 + t^2 = rho on the chord of
/// slope m through the known rational point p0; empty if it leaves the upper
/// half-plane or degenerates to p0.
inline std::optional<StabPoint> chord_point(const Rational& c, const Rational& rho,
                                            const StabPoint& p0, const Rational& m) {
  if ((p0.s - c) * (p0.s - c) + p0.t * p0.t != rho) return std::nullopt;  // p0 must be on it
  const Rational u = -2 * ((p0.s - c) + m * p0.t) / (1 + m * m);
  const Rational s2 = p0.s + u;
  const Rational t2 = p0.t + u * m;
  if (t2 <= 0) return std::nullopt;
  if (s2 == p0.s && t2 == p0.t) return std::nullopt;
  return StabPoint(s2, t2);
}

}  // namespace wftest
