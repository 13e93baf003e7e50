#include "shorlat/sampler.hpp"

#include <string>

namespace shorlat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream))) {}

Rng Rng::split(std::uint64_t index) const {
  return Rng(seed_, splitmix64(stream_ * 0x100000001B3ull + index + 1));
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidParameter, "uniform_below needs bound >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

BigInt Rng::uniform_below(const BigInt& bound) {
  if (bound < 1) throw Error(Errc::InvalidParameter, "uniform_below needs bound >= 1");
  if (bound <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return BigInt(uniform_below(bound.convert_to<std::uint64_t>()));
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask = top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
  for (;;) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t word = engine_();
      if (w == 0) word &= top_mask;
      x = (x << 64) | word;
    }
    if (x < bound) return x;
  }
}

BigInt Rng::uniform_between(const BigInt& lo, const BigInt& hi) {
  if (hi < lo) throw Error(Errc::InvalidParameter, "uniform_between needs lo <= hi");
  return lo + uniform_below(BigInt(hi - lo + 1));
}

bool Rng::bernoulli(const Rational& p) {
  if (p < Rational(0) || p > Rational(1))
    throw Error(Errc::InvalidParameter, "probability outside [0, 1]: " + p.to_string());
  if (p == Rational(1)) return true;
  return uniform_below(p.den()) < p.num();
}

std::string_view to_string(Rounding r) noexcept { return r == Rounding::Floor ? "floor" : "ceil"; }

std::string_view to_string(RoundingMode r) noexcept {
  switch (r) {
    case RoundingMode::Floor: return "floor";
    case RoundingMode::Ceil: return "ceil";
    case RoundingMode::RandomPerSample: return "random";
  }
  return "random";
}

Rounding parse_rounding(std::string_view text) {
  if (text == "floor") return Rounding::Floor;
  if (text == "ceil") return Rounding::Ceil;
  throw Error(Errc::Parse, "unknown rounding '" + std::string(text) + "'");
}

RoundingMode parse_rounding_mode(std::string_view text) {
  if (text == "floor") return RoundingMode::Floor;
  if (text == "ceil") return RoundingMode::Ceil;
  if (text == "random" || text == "random_per_sample") return RoundingMode::RandomPerSample;
  throw Error(Errc::Parse, "unknown rounding mode '" + std::string(text) + "'");
}

PeriodInstance::PeriodInstance(BigInt r_, BigInt N_) : r(std::move(r_)), N(std::move(N_)) {
  if (r < 1) throw Error(Errc::InvalidParameter, "period r must be >= 1");
  if (N < 2) throw Error(Errc::InvalidParameter, "resolution N must be >= 2");
}

Sample ideal_sample(const PeriodInstance& inst, const BigInt& k, Rounding rounding) {
  if (k < 0 || k >= inst.r)
    throw Error(Errc::OutOfRange, "k = " + k.str() + " outside [0, " + inst.r.str() + ")");
  const BigInt Nk = inst.N * k;
  BigInt x = rounding == Rounding::Floor ? floor_div(Nk, inst.r) : ceil_div(Nk, inst.r);
  Rational xi = Rational(x, inst.N) - Rational(k, inst.r);
  return Sample{std::move(x), SampleTruth{k, rounding, std::move(xi)}};
}

Sample draw_sample(const PeriodInstance& inst, const SamplerConfig& config, Rng& rng) {
  if (!rng.bernoulli(config.success_probability_q)) return Sample{rng.uniform_below(inst.N), std::nullopt};
  const BigInt k = rng.uniform_below(inst.r);
  Rounding rounding = Rounding::Floor;
  switch (config.rounding) {
    case RoundingMode::Floor: rounding = Rounding::Floor; break;
    case RoundingMode::Ceil: rounding = Rounding::Ceil; break;
    case RoundingMode::RandomPerSample:
      rounding = rng.uniform_below(std::uint64_t{2}) == 0 ? Rounding::Floor : Rounding::Ceil;
      break;
  }
  return ideal_sample(inst, k, rounding);
}

SampleStream::SampleStream(PeriodInstance inst, SamplerConfig config, std::uint64_t trial_index)
    : inst_(std::move(inst)), config_(std::move(config)), rng_(Rng(config_.seed).split(trial_index)) {}

Sample SampleStream::next() {
  ++draws_;
  return draw_sample(inst_, config_, rng_);
}

}  // namespace shorlat
