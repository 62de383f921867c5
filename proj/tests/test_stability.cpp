#include <doctest.h>

#include "test_helpers.hpp"
#include "wallforge/stability.hpp"

using namespace wallforge;
using namespace wftest;

TEST_CASE("central charge examples") {
  for (long d : {3, 5, 7}) {
    for (long num = 1; num <= 4; ++num) {
      const StabPoint p(Rational(-3, 2), Rational(num, 3));
      const ChargeValue z = central_charge(ChernChar::one_dimensional(d, 0), p);
      CHECK(z.re == 0);
      CHECK(z.im == p.t * d);
    }
  }
  CHECK(central_charge(ChernChar(1, 0, 0), StabPoint(0, 1)) == ChargeValue{Rational(1, 2), 0});
  // O(-1) at the apex of the collapsing wall
  CHECK(central_charge(ChernChar(1, -1, Rational(1, 2)), StabPoint(Rational(-3, 2), Rational(1, 2))) ==
        ChargeValue{0, Rational(1, 4)});
}

TEST_CASE("t must be positive") {
  CHECK_THROWS_AS(StabPoint(0, 0), Error);
  CHECK_THROWS_AS(StabPoint(0, -1), Error);
  CHECK_THROWS_AS(parse_stab_point("0,0"), Error);
}

TEST_CASE("central charge is linear") {
  auto rng = make_rng(11);
  for (int n = 0; n < 400; ++n) {
    const ChernChar a = rand_class(rng);
    const ChernChar b = rand_class(rng);
    const StabPoint p = rand_point(rng);
    const ChargeValue za = central_charge(a, p);
    const ChargeValue zb = central_charge(b, p);
    const ChargeValue zs = central_charge(a + b, p);
    CHECK(zs.re == za.re + zb.re);
    CHECK(zs.im == za.im + zb.im);
  }
}

TEST_CASE("slope examples") {
  CHECK(slope(ChernChar::one_dimensional(5, 0), StabPoint(Rational(-3, 2), 1)) ==
        Slope{false, 0});
  CHECK(slope(ChernChar(1, 0, 0), StabPoint(Rational(-3, 2), 1)) == Slope{false, Rational(5, 12)});
  CHECK(slope(ChernChar(-1, 0, 0), StabPoint(0, 1)).infinite);
  CHECK_THROWS_AS((void)slope(ChernChar(1, 0, 0), StabPoint(0, 1)), Error);  // im 0, re 1/2
  CHECK_THROWS_AS((void)slope(ChernChar(0, 0, 0), StabPoint(0, 1)), Error);  // zero class
}

TEST_CASE("slope is invariant under positive scaling") {
  auto rng = make_rng(12);
  for (int n = 0; n < 300; ++n) {
    const ChernChar v = rand_class(rng);
    const StabPoint p = rand_point(rng);
    const Int lambda = rand_int(rng, 1, 9);
    try {
      const Slope s1 = slope(v, p);
      const Slope s2 = slope(lambda * v, p);
      CHECK(s1 == s2);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_in_cone);
    }
  }
}

TEST_CASE("compare_slopes on the collapsing wall") {
  const ChernChar a(1, -1, Rational(1, 2));
  const ChernChar b = ChernChar::one_dimensional(5, 0);
  CHECK(compare_slopes(a, b, StabPoint(Rational(-3, 2), Rational(1, 2))) ==
        std::strong_ordering::equal);
  CHECK(compare_slopes(a, b, StabPoint(Rational(-3, 2), 1)) == std::strong_ordering::less);
  auto rng = make_rng(13);
  for (int n = 0; n < 100; ++n) {
    const ChernChar v = rand_class(rng);
    const StabPoint p = rand_point(rng);
    try {
      CHECK(compare_slopes(v, v, p) == std::strong_ordering::equal);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_in_cone);
    }
  }
}

TEST_CASE("compare_slopes agrees with the slope oracle on finite slopes") {
  auto rng = make_rng(14);
  int used = 0;
  for (int n = 0; n < 2000 || used < 500; ++n) {
    const ChernChar a = rand_class(rng, 12);
    const ChernChar b = rand_class(rng, 12);
    const StabPoint p = rand_point(rng);
    Slope sa, sb;
    try {
      sa = slope(a, p);
      sb = slope(b, p);
    } catch (const Error&) {
      continue;
    }
    if (sa.infinite || sb.infinite) continue;
    ++used;
    const auto expect = sa.value < sb.value   ? std::strong_ordering::less
                        : sa.value > sb.value ? std::strong_ordering::greater
                                              : std::strong_ordering::equal;
    CHECK(compare_slopes(a, b, p) == expect);
    if (n > 20000) break;  // safety
  }
  CHECK(used >= 500);
}

TEST_CASE("infinite slopes compare greater than finite ones") {
  const StabPoint p(0, 1);
  const ChernChar shifted(-1, 0, 0);      // im 0, re -1/2
  const ChernChar torsion(0, 1, 0);       // im 1
  CHECK(compare_slopes(shifted, torsion, p) == std::strong_ordering::greater);
  CHECK(compare_slopes(torsion, shifted, p) == std::strong_ordering::less);
  CHECK(compare_slopes(shifted, shifted, p) == std::strong_ordering::equal);
}

TEST_CASE("heart position") {
  for (long d : {3, 5, 9}) {
    const ChernChar v = ChernChar::one_dimensional(d, 0);
    for (long s = -4; s <= 4; ++s)
      CHECK(heart_position(v, Rational(s)) == HeartPosition::TorsionLike);
  }
  CHECK(heart_position(ChernChar(1, 0, 0), Rational(-3, 2)) == HeartPosition::QPart);
  for (long d : {5, 7, 9}) {
    const ChernChar shifted(-1, (d + 3) / 2, Rational(-(d + 3) * (d + 3), 8));
    CHECK(heart_position(shifted, Rational(-3, 2)) == HeartPosition::FShiftPart);
  }
  CHECK(heart_position(ChernChar(1, -2, 0), Rational(-3, 2)) == HeartPosition::Outside);
  CHECK(heart_position(ChernChar(0, -1, 0), Rational(0)) == HeartPosition::Outside);
  CHECK(heart_position(ChernChar(-1, 0, 0), Rational(0)) == HeartPosition::FShiftPart);
  CHECK(heart_position(ChernChar(-1, -2, 0), Rational(-3, 2)) == HeartPosition::Outside);
  CHECK(heart_position(ChernChar(0, 0, Rational(3, 2)), Rational(0)) ==
        HeartPosition::Indeterminate);
}

TEST_CASE("numerically-in-heart classes have positive imaginary charge") {
  auto rng = make_rng(15);
  for (int n = 0; n < 1000; ++n) {
    const ChernChar v = rand_class(rng);
    const StabPoint p = rand_point(rng);
    const HeartPosition pos = heart_position(v, p.s);
    if (pos == HeartPosition::TorsionLike || pos == HeartPosition::QPart)
      CHECK(central_charge(v, p).im > 0);
    if (pos == HeartPosition::FShiftPart) CHECK(central_charge(v, p).im >= 0);
  }
}

TEST_CASE("stab point text encoding") {
  const StabPoint p = parse_stab_point("-3/2,1");
  CHECK(p.s == Rational(-3, 2));
  CHECK(p.t == 1);
  CHECK(to_string(p) == "-3/2,1");
  CHECK_THROWS_AS(parse_stab_point("0.5,1"), Error);
  CHECK_THROWS_AS(parse_stab_point("1"), Error);
}
