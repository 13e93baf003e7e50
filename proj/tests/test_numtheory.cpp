#include <doctest.h>

#include "oracles.hpp"
#include "shorlat/numtheory.hpp"

using namespace shorlat;

TEST_CASE("closest_integer rounds exact halves down") {
  CHECK(closest_integer(Rational(0)) == 0);
  CHECK(closest_integer(Rational(1, 2)) == 0);
  CHECK(closest_integer(Rational(7, 3)) == 2);
  CHECK(closest_integer(Rational(-1, 2)) == -1);
  CHECK(closest_integer(Rational(3, 2)) == 1);
  CHECK(closest_integer(Rational(-3, 2)) == -2);
  CHECK(closest_integer(Rational(-7, 3)) == -2);
}

TEST_CASE("closest_integer matches the interval definition exhaustively") {
  const Rational half(1, 2);
  for (int q = 1; q <= 200; ++q) {
    for (int p = -200; p <= 200; ++p) {
      const Rational f(p, q);
      const BigInt m = closest_integer(f);
      const Rational d = f - Rational(m);
      REQUIRE(d > -half);
      REQUIRE(d <= half);
      REQUIRE(m == testing::closest_integer_by_scan(f));
    }
  }
}

TEST_CASE("closest_integer commutes with integer shifts") {
  for (int q = 1; q <= 40; ++q)
    for (int p = -80; p <= 80; ++p)
      for (int c : {-1000, -7, -1, 1, 3, 999}) {
        const Rational f(p, q);
        REQUIRE(closest_integer(f + Rational(c)) == closest_integer(f) + c);
      }
}

TEST_CASE("sign treats zero as nonnegative") {
  CHECK(sign(Rational(0)) == 1);
  CHECK(sign(Rational(-3, 7)) == -1);
  CHECK(sign(Rational(5)) == 1);
}

TEST_CASE("Rational is canonical") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("-14/21") == Rational(-2, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
}

TEST_CASE("floor_div and ceil_div round toward the right infinity") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(floor_div(6, 3) == 2);
  CHECK(ceil_div(6, 3) == 2);
}

TEST_CASE("multiplicative_order by direct iteration") {
  CHECK(multiplicative_order(2, 15) == 4);
  CHECK(multiplicative_order(7, 15) == 4);
  CHECK(multiplicative_order(1, 15) == 1);
  CHECK(multiplicative_order(1, 2) == 1);
  CHECK(multiplicative_order(2, 21) == 6);

  try {
    multiplicative_order(3, 15);
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }
  try {
    multiplicative_order(2, 1'000'003, 10);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderOracleBudgetExceeded);
  }
}

TEST_CASE("multiplicative_order is minimal for every unit mod n <= 500") {
  for (int n = 2; n <= 500; ++n) {
    for (int a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      const BigInt r = multiplicative_order(a, n);
      REQUIRE(modpow(a, r, n) == 1);
      // powers below r, by repeated multiplication
      BigInt acc = 1;
      for (BigInt e = 1; e < r; ++e) {
        acc = acc * a % n;
        REQUIRE(acc != 1);
      }
    }
  }
}

TEST_CASE("modpow") {
  CHECK(modpow(2, 4, 15) == 1);
  CHECK(modpow(2, 0, 15) == 1);
  CHECK(modpow(5, 3, 1) == 0);
  CHECK(modpow(-1, 3, 7) == 6);
  CHECK_THROWS_AS(modpow(2, -1, 7), Error);
}

TEST_CASE("ceil_sqrt2_times and next_pow2") {
  CHECK(ceil_sqrt2_times(1024) == 1449);
  CHECK(ceil_sqrt2_times(4) == 6);
  CHECK(ceil_sqrt2_times(16) == 23);
  CHECK(ceil_sqrt2_times(0) == 0);
  CHECK(next_pow2(1449) == 2048);
  CHECK(next_pow2(1) == 1);
  CHECK(next_pow2(2048) == 2048);
  CHECK(next_pow2(2049) == 4096);
  CHECK_THROWS_AS(next_pow2(0), Error);

  for (int s = 1; s <= 10'000; ++s) {
    const BigInt c = ceil_sqrt2_times(s);
    const BigInt target = BigInt(2) * s * s;
    REQUIRE(c * c >= target);
    REQUIRE((c - 1) * (c - 1) < target);
  }
}

TEST_CASE("ceil_log uses exact powers") {
  CHECK(ceil_log(Rational(3), 1) == 0);
  CHECK(ceil_log(Rational(3), 9) == 2);
  CHECK(ceil_log(Rational(3), 10) == 3);
  CHECK(ceil_log(Rational(3, 2), 2) == 2);
  CHECK_THROWS_AS(ceil_log(Rational(1), 5), Error);
}

TEST_CASE("parse_bigint") {
  CHECK(parse_bigint("-123456789012345678901234567890") == BigInt("-123456789012345678901234567890"));
  CHECK(parse_bigint("+7") == 7);
  CHECK_THROWS_AS(parse_bigint(""), Error);
  CHECK_THROWS_AS(parse_bigint("12a"), Error);
  CHECK_THROWS_AS(parse_bigint("-"), Error);
}
