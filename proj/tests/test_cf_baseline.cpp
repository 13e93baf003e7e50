#include <doctest.h>

#include "shorlat/cf_baseline.hpp"

using namespace shorlat;

namespace {

std::vector<std::pair<BigInt, BigInt>> as_pairs(const std::vector<Convergent>& cs) {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& c : cs) out.emplace_back(c.p, c.q);
  return out;
}

using P = std::vector<std::pair<BigInt, BigInt>>;

}  // namespace

TEST_CASE("convergents examples") {
  CHECK(as_pairs(convergents(0, 2048)) == P{{0, 1}});
  CHECK(as_pairs(convergents(1, 2)) == P{{0, 1}, {1, 2}});
  // 307/1024 = [0; 3, 2, 1, 50, 2]
  CHECK(as_pairs(convergents(614, 2048)) == P{{0, 1}, {1, 3}, {2, 7}, {3, 10}, {152, 507}, {307, 1024}});
  // 819/2048 = [0; 2, 1, 1, 409]
  CHECK(as_pairs(convergents(819, 2048)) == P{{0, 1}, {1, 2}, {1, 3}, {2, 5}, {819, 2048}});
  CHECK_THROWS_AS(convergents(5, 5), Error);
  CHECK_THROWS_AS(convergents(0, 0), Error);
}

TEST_CASE("convergent invariants over every x/N with N = 512") {
  const BigInt N = 512;
  for (int xi = 0; xi < 512; ++xi) {
    const BigInt x = xi;
    const auto cs = convergents(x, N);
    REQUIRE(!cs.empty());
    const Rational target(x, N);
    REQUIRE(Rational(cs.back().p, cs.back().q) == target);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      REQUIRE(cs[i].index == i);
      REQUIRE(cs[i].q > 0);
      REQUIRE(gcd(cs[i].p, cs[i].q) == 1);
      if (i >= 2) REQUIRE(cs[i].q > cs[i - 1].q);
      if (i + 1 < cs.size()) {
        const Rational err = abs(target - Rational(cs[i].p, cs[i].q));
        REQUIRE(err <= Rational(1, cs[i].q * cs[i + 1].q));
      }
    }
  }
}

TEST_CASE("cf_recover") {
  const RecoveryParams p = make_params(16);
  SUBCASE("accepts 10 from 3/10") {
    const CfResult res = cf_recover(614, p, [](const BigInt& c) { return c == 10; });
    REQUIRE(res.r);
    CHECK(*res.r == 10);
    CHECK(res.candidates == std::vector<BigInt>{1, 3, 7, 10});
  }
  SUBCASE("gcd(k, r) > 1 hides r") {
    // r = 10, k = 4: x/N approximates 2/5
    const BigInt x = floor_div(p.N * 4, 10);
    CHECK(x == 819);
    const CfResult res = cf_recover(x, p, [](const BigInt& c) { return c == 10; });
    CHECK_FALSE(res.r);
    CHECK(std::find(res.candidates.begin(), res.candidates.end(), BigInt(5)) != res.candidates.end());
    CHECK(std::find(res.candidates.begin(), res.candidates.end(), BigInt(10)) == res.candidates.end());
  }
  SUBCASE("x = 0 is rejected") { CHECK_THROWS_AS(cf_recover(0, p, [](const BigInt&) { return true; }), Error); }
}

TEST_CASE("cf_sample_consistent picks the matching convergent") {
  const auto cs = convergents(614, 2048);
  CHECK(cf_sample_consistent(614, 2048, cs[3]));  // 3/10
  CHECK_FALSE(cf_sample_consistent(614, 2048, cs[1]));  // 1/3
}

TEST_CASE("continued fractions find r whenever gcd(k, r) = 1, r <= 64") {
  const RecoveryParams p = make_params(64);
  for (int r = 2; r <= 64; ++r) {
    const PeriodInstance inst(r, p.N);
    for (int k = 1; k < r; ++k) {
      if (gcd(k, r) != 1) continue;
      for (Rounding rd : {Rounding::Floor, Rounding::Ceil}) {
        const BigInt x = ideal_sample(inst, k, rd).x;
        const CfResult res = cf_recover(x, p, [r](const BigInt& c) { return c == r; });
        REQUIRE(std::find(res.candidates.begin(), res.candidates.end(), BigInt(r)) != res.candidates.end());
        REQUIRE(res.r);
      }
    }
  }
}
