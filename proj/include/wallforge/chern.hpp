#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wallforge/rational.hpp"

namespace wallforge {

/// Chern character (ch0, ch1, ch2) of an object of D^b(P^2): integer rank,
/// integer degree against the hyperplane class, ch2 in (1/2)Z.  Shifted and
/// negated classes are legal values, so no sheaf-level positivity is imposed;
/// the coherent-sheaf lattice condition is exposed separately as
/// sheaf_integral().
struct ChernChar {
  Int ch0;
  Int ch1;
  Rational ch2;

  ChernChar() : ch0(0), ch1(0), ch2(0) {}
  ChernChar(Int rank, Int degree, Rational second);  // rejects 2*ch2 not integral

  bool operator==(const ChernChar&) const = default;

  /// ch O(k) = (1, k, k^2/2).
  static ChernChar line_bundle(const Int& k);

  /// ch of the ideal sheaf of `length` points: (1, 0, -length).
  static ChernChar ideal_sheaf(const Int& length);

  /// Rank-0 class of support degree c and Euler characteristic chi:
  /// (0, c, chi - (3/2)c).
  static ChernChar one_dimensional(const Int& c, const Rational& chi);
};

ChernChar operator+(const ChernChar& a, const ChernChar& b);
ChernChar operator-(const ChernChar& a, const ChernChar& b);
ChernChar operator-(const ChernChar& a);
ChernChar operator*(const Int& n, const ChernChar& v);

/// chi(v) = ch0 + (3/2) ch1 + ch2  (Riemann-Roch on P^2, td = (1, 3/2, 1)).
Rational euler_characteristic(const ChernChar& v);

/// chi(a, b) = sum (-1)^i dim Ext^i(A, B) computed from invariants:
///   a0 b0 + (3/2)(a0 b1 - a1 b0) + a0 b2 + b0 a2 - a1 b1.
Rational euler_pairing(const ChernChar& a, const ChernChar& b);

/// Multiplication by e^{kH}: (ch0, ch1 + k ch0, ch2 + k ch1 + (k^2/2) ch0).
ChernChar twist(const ChernChar& v, const Int& k);

/// Action of RHom(-, O(-3))[1] on invariants:
///   v |-> (-ch0, ch1 + 3 ch0, -ch2 - 3 ch1 - (9/2) ch0).
/// An involution on the full lattice, defined for negative ranks as well.
ChernChar dualize(const ChernChar& v);

/// Strict Bogomolov inequality ch2 < ch1^2 / (2 ch0) for positive rank;
/// throws rank_not_positive for ch0 <= 0 (torsion case must be handled by
/// the caller under its own hypotheses).
bool bogomolov_holds(const ChernChar& v);

/// ch2 - ch1^2/2 integral: automatic for Chern characters of coherent
/// sheaves, not enforced on arbitrary classes.
bool sheaf_integral(const ChernChar& v);

/// Text encoding `r,c1,ch2` where ch2 is written `p` or `p/2`; no decimals,
/// no other denominators.
ChernChar parse_chern(std::string_view text);
std::string to_string(const ChernChar& v);
std::ostream& operator<<(std::ostream& os, const ChernChar& v);

}  // namespace wallforge
