#include <doctest.h>

#include <array>
#include <cmath>

#include "shorlat/sampler.hpp"

using namespace shorlat;

TEST_CASE("ideal_sample examples") {
  const PeriodInstance inst(10, 2048);
  const Sample s = ideal_sample(inst, 3, Rounding::Floor);
  CHECK(s.x == 614);
  REQUIRE(s.truth);
  CHECK(s.truth->k == 3);
  CHECK(s.truth->xi == Rational(614, 2048) - Rational(3, 10));
  CHECK(ideal_sample(inst, 3, Rounding::Ceil).x == 615);

  CHECK(ideal_sample(PeriodInstance(7, 64), 0, Rounding::Ceil).x == 0);
  CHECK(ideal_sample(PeriodInstance(2, 32), 1, Rounding::Floor).x == 16);
  CHECK(ideal_sample(PeriodInstance(2, 32), 1, Rounding::Ceil).x == 16);
}

TEST_CASE("ideal_sample range errors") {
  const PeriodInstance inst(10, 2048);
  for (const BigInt& k : {BigInt(-1), BigInt(10), BigInt(11)}) {
    try {
      ideal_sample(inst, k, Rounding::Floor);
      FAIL("expected OutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OutOfRange);
    }
  }
  CHECK_THROWS_AS(PeriodInstance(0, 16), Error);
  CHECK_THROWS_AS(PeriodInstance(3, 1), Error);
}

TEST_CASE("every ideal sample is within 1/N of k/r") {
  for (int r = 1; r <= 40; ++r) {
    const PeriodInstance inst(r, 1024);
    for (int k = 0; k < r; ++k)
      for (Rounding rd : {Rounding::Floor, Rounding::Ceil}) {
        const Sample s = ideal_sample(inst, k, rd);
        REQUIRE(abs(s.truth->xi) < Rational(1, 1024));
        REQUIRE(s.x >= 0);
        REQUIRE(s.x < 1024);
      }
  }
}

TEST_CASE("streams are reproducible and distinct") {
  SamplerConfig cfg;
  cfg.seed = 99;
  const PeriodInstance inst(97, 1 << 16);
  SampleStream a(inst, cfg, 3), b(inst, cfg, 3), c(inst, cfg, 4);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    const Sample sa = a.next(), sb = b.next(), sc = c.next();
    REQUIRE(sa.x == sb.x);
    REQUIRE(sa.truth->k == sb.truth->k);
    REQUIRE(sa.truth->rounding == sb.truth->rounding);
    differs = differs || sa.x != sc.x;
  }
  CHECK(differs);
  CHECK(a.draws() == 200);
}

TEST_CASE("r = 1 only ever yields x = 0") {
  SamplerConfig cfg;
  cfg.seed = 5;
  SampleStream s(PeriodInstance(1, 64), cfg);
  for (int i = 0; i < 100; ++i) {
    const Sample x = s.next();
    REQUIRE(x.x == 0);
    REQUIRE(x.truth->k == 0);
  }
}

TEST_CASE("fixed rounding modes are honoured") {
  for (RoundingMode mode : {RoundingMode::Floor, RoundingMode::Ceil}) {
    SamplerConfig cfg;
    cfg.rounding = mode;
    SampleStream s(PeriodInstance(7, 1000), cfg);
    for (int i = 0; i < 50; ++i)
      REQUIRE(s.next().truth->rounding == (mode == RoundingMode::Floor ? Rounding::Floor : Rounding::Ceil));
  }
}

TEST_CASE("k is uniform: chi-square over 10^5 draws") {
  SamplerConfig cfg;
  cfg.seed = 2026;
  Rng rng(cfg.seed);
  const PeriodInstance inst(10, 2048);
  std::array<std::uint64_t, 10> counts{};
  std::uint64_t floors = 0;
  constexpr int kDraws = 100'000;
  for (int i = 0; i < kDraws; ++i) {
    const Sample s = draw_sample(inst, cfg, rng);
    ++counts[s.truth->k.convert_to<std::size_t>()];
    if (s.truth->rounding == Rounding::Floor) ++floors;
  }
  double chi2 = 0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - kDraws / 10.0;
    chi2 += d * d / (kDraws / 10.0);
  }
  // 9 degrees of freedom, upper 0.001 critical value
  CHECK(chi2 < 27.877);
  // random-per-sample rounding is a fair coin (4.5 sigma band)
  CHECK(std::abs(static_cast<double>(floors) - kDraws / 2.0) < 4.5 * std::sqrt(kDraws / 4.0));
}

TEST_CASE("junk fraction follows q") {
  SamplerConfig cfg;
  cfg.seed = 17;
  cfg.success_probability_q = Rational(81, 100);
  Rng rng(cfg.seed);
  const PeriodInstance inst(100, 1 << 17);
  std::uint64_t ideal = 0;
  constexpr int kDraws = 100'000;
  for (int i = 0; i < kDraws; ++i) {
    const Sample s = draw_sample(inst, cfg, rng);
    if (s.truth) ++ideal;
    REQUIRE(s.x < inst.N);
  }
  CHECK(std::abs(static_cast<double>(ideal) / kDraws - 0.81) <= 0.01);
}

TEST_CASE("Rng draws") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(rng.uniform_below(std::uint64_t{7}) < 7);
    const BigInt big = rng.uniform_below(BigInt("340282366920938463463374607431768211457"));
    REQUIRE(big >= 0);
    REQUIRE(big < BigInt("340282366920938463463374607431768211457"));
    const BigInt v = rng.uniform_between(-3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
  }
  CHECK(rng.bernoulli(Rational(1)));
  CHECK_FALSE(rng.bernoulli(Rational(0)));
  CHECK_THROWS_AS(rng.bernoulli(Rational(3, 2)), Error);
  CHECK_THROWS_AS(rng.uniform_below(std::uint64_t{0}), Error);

  const Rng parent(42);
  Rng c1 = parent.split(1), c1b = parent.split(1), c2 = parent.split(2);
  CHECK(c1.next_u64() == c1b.next_u64());
  CHECK(c1.next_u64() != c2.next_u64());
}
