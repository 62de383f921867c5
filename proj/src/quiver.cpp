#include "wallforge/quiver.hpp"

#include <utility>

namespace wallforge {

DimensionVector DimensionVector::checked(Int n0, Int n1, Int n2, Int k) {
  DimensionVector n{std::move(n0), std::move(n1), std::move(n2), std::move(k)};
  if (!n.nonnegative())
    fail(Errc::invalid_argument, "dimension vector entries must be nonnegative, got " + to_string(n));
  return n;
}

DimensionVector to_dimension_vector(const ChernChar& v, const Int& k) {
  const Rational r0(v.ch0);
  const Rational r1(v.ch1);
  const Rational& r2 = v.ch2;
  const Rational n0 = Rational(k * (k - 1), 2) * r0 - Rational(2 * k - 1, 2) * r1 + r2;
  const Rational n1 = Rational(k * (k - 2)) * r0 - Rational(2 * k - 2) * r1 + 2 * r2;
  const Rational n2 = Rational((k - 1) * (k - 2), 2) * r0 - Rational(2 * k - 3, 2) * r1 + r2;
  if (!is_integer(n0) || !is_integer(n1) || !is_integer(n2))
    fail(Errc::non_integral, "class " + to_string(v) + " has no integral dimension vector at k = " +
                                 k.str());
  return {numerator(n0), numerator(n1), numerator(n2), k};
}

ChernChar from_dimension_vector(const DimensionVector& n) {
  const ChernChar a = ChernChar::line_bundle(n.k - 2);
  const ChernChar b = ChernChar::line_bundle(n.k - 1);
  const ChernChar c = ChernChar::line_bundle(n.k);
  return n.n0 * a - n.n1 * b + n.n2 * c;
}

std::vector<Int> quiver_regions_containing(const StabPoint& p) {
  std::vector<Int> out;
  if (p.t >= 1) return out;
  const Rational t2 = p.t * p.t;
  // |s - m| < 1 restricts the disk center index m = k - 1 to floor(s) and
  // floor(s) + 1.
  const Int m0 = floor_rat(p.s);
  for (Int m = m0; m <= m0 + 1; ++m) {
    const Rational ds = p.s - Rational(m);
    if (ds * ds + t2 < 1) out.push_back(m + 1);
  }
  return out;
}

std::string to_string(const DimensionVector& n) {
  return n.n0.str() + "," + n.n1.str() + "," + n.n2.str();
}

}  // namespace wallforge
