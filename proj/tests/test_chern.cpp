#include <doctest.h>

#include "test_helpers.hpp"
#include "wallforge/chern.hpp"

using namespace wallforge;
using namespace wftest;

TEST_CASE("euler characteristic closed forms") {
  CHECK(euler_characteristic(ChernChar(1, 0, 0)) == 1);
  for (long k = 0; k <= 6; ++k)
    CHECK(euler_characteristic(ChernChar::line_bundle(k)) == Rational((k + 1) * (k + 2), 2));
  for (long d : {3, 5, 7, 9})
    CHECK(euler_characteristic(ChernChar::one_dimensional(d, 0)) == 0);
}

TEST_CASE("euler pairing closed forms") {
  const ChernChar o(1, 0, 0);
  CHECK(euler_pairing(o, o) == 1);
  for (long k = 0; k <= 5; ++k)
    CHECK(euler_pairing(o, ChernChar::line_bundle(k)) == Rational((k + 1) * (k + 2), 2));
  for (long d : {3, 5, 7}) {
    const ChernChar v = ChernChar::one_dimensional(d, 0);
    CHECK(euler_pairing(v, v) == Rational(-d * d));
    CHECK(1 - euler_pairing(v, v) == Rational(d * d + 1));
  }
}

TEST_CASE("pairing against O reduces to the euler characteristic") {
  auto rng = make_rng();
  const ChernChar o(1, 0, 0);
  for (int n = 0; n < 500; ++n) {
    const ChernChar b = rand_class(rng);
    CHECK(euler_pairing(o, b) == euler_characteristic(b));
  }
}

TEST_CASE("twist") {
  for (long k = -4; k <= 4; ++k)
    CHECK(twist(ChernChar(1, 0, 0), k) == ChernChar::line_bundle(k));
  CHECK(twist(ChernChar(1, -1, Rational(1, 2)), 1) == ChernChar(1, 0, 0));
  for (long d : {3, 5, 7})
    CHECK(twist(ChernChar::one_dimensional(d, 0), 1) == ChernChar(0, d, Rational(-d, 2)));

  auto rng = make_rng(2);
  for (int n = 0; n < 500; ++n) {
    const ChernChar v = rand_class(rng);
    const Int a = rand_int(rng, -10, 10);
    const Int b = rand_int(rng, -10, 10);
    CHECK(twist(v, 0) == v);
    CHECK(twist(twist(v, a), b) == twist(v, a + b));
    CHECK(is_half_integer(twist(v, a).ch2));
  }
}

TEST_CASE("dualize") {
  for (long d : {3, 5, 7, 9, 11}) {
    const ChernChar v = ChernChar::one_dimensional(d, 0);
    CHECK(dualize(v) == v);
  }
  for (long d : {5, 7, 9}) {
    const Int c = (d - 3) / 2;
    const ChernChar a = ChernChar::line_bundle(c);
    const ChernChar expect(-1, (d + 3) / 2, Rational(-(d + 3) * (d + 3), 8));
    CHECK(dualize(a) == expect);
  }

  auto rng = make_rng(3);
  for (int n = 0; n < 2000; ++n) {
    const ChernChar v = rand_class(rng);
    CHECK(dualize(dualize(v)) == v);
    CHECK(is_half_integer(dualize(v).ch2));
  }
}

TEST_CASE("dualize negates chi on rank-0 classes") {
  auto rng = make_rng(4);
  for (int n = 0; n < 2000; ++n) {
    const ChernChar v(0, rand_int(rng, -60, 60), Rational(rand_int(rng, -120, 120), 2));
    CHECK(euler_characteristic(dualize(v)) == -euler_characteristic(v));
  }
  // and symbolically via the (c, chi) form
  for (long c = -6; c <= 6; ++c)
    for (long chi = -6; chi <= 6; ++chi) {
      const ChernChar v = ChernChar::one_dimensional(c, Rational(chi));
      CHECK(euler_characteristic(v) == chi);
      CHECK(euler_characteristic(dualize(v)) == -chi);
    }
}

TEST_CASE("bogomolov") {
  CHECK(!bogomolov_holds(ChernChar(1, 0, 0)));      // discriminant-zero boundary excluded
  CHECK(bogomolov_holds(ChernChar(1, 0, -1)));      // ideal sheaf of a point
  CHECK(!bogomolov_holds(ChernChar(2, 1, 1)));      // 1 < 1/4 fails
  CHECK_THROWS_AS((void)bogomolov_holds(ChernChar(0, 5, 0)), Error);
  CHECK_THROWS_AS((void)bogomolov_holds(ChernChar(-1, 0, 0)), Error);
}

TEST_CASE("sheaf integrality predicate") {
  CHECK(sheaf_integral(ChernChar(1, 0, 0)));
  for (long k = -3; k <= 3; ++k) CHECK(sheaf_integral(ChernChar::line_bundle(k)));
  for (long d : {3, 5, 7}) CHECK(sheaf_integral(ChernChar::one_dimensional(d, 0)));
  CHECK(!sheaf_integral(ChernChar(1, 1, 0)));
}

TEST_CASE("lattice condition is enforced at construction") {
  CHECK_THROWS_AS(ChernChar(1, 0, Rational(1, 3)), Error);
  CHECK_NOTHROW(ChernChar(1, 0, Rational(-7, 2)));
}

TEST_CASE("text encoding") {
  const ChernChar v = parse_chern("0,5,-15/2");
  CHECK(v == ChernChar::one_dimensional(5, 0));
  CHECK(to_string(v) == "0,5,-15/2");
  CHECK(parse_chern("1,0,0") == ChernChar(1, 0, 0));
  CHECK(to_string(parse_chern("1,-1,1/2")) == "1,-1,1/2");

  CHECK_THROWS_AS(parse_chern("1,0,0.5"), Error);   // decimals rejected
  CHECK_THROWS_AS(parse_chern("1,0,1/3"), Error);   // denominator must be 1 or 2
  CHECK_THROWS_AS(parse_chern("1,0,1/4"), Error);
  CHECK_THROWS_AS(parse_chern("1,0"), Error);
  CHECK_THROWS_AS(parse_chern("1,0,0,0"), Error);
  CHECK_THROWS_AS(parse_chern("1, 0, 0"), Error);   // no whitespace
}
