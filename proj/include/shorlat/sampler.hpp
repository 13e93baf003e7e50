#pragma once

// Classical stand-in for phase-estimation measurement outcomes: ideal samples
// floor(Nk/r) or ceil(Nk/r) with k uniform in [0, r), optionally mixed with
// uniformly random junk outcomes.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "shorlat/numtheory.hpp"

namespace shorlat {

/// Seedable, splittable generator. A stream is identified by (seed, index);
/// split(i) derives an independent child stream without touching this one.
/// All draws go through integer rejection sampling so streams reproduce
/// bit-for-bit across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  Rng split(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);
  BigInt uniform_below(const BigInt& bound);
  /// Uniform in [lo, hi].
  BigInt uniform_between(const BigInt& lo, const BigInt& hi);
  /// True with probability p, p in [0, 1].
  bool bernoulli(const Rational& p);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

enum class Rounding { Floor, Ceil };
enum class RoundingMode { Floor, Ceil, RandomPerSample };

std::string_view to_string(Rounding r) noexcept;
std::string_view to_string(RoundingMode r) noexcept;
Rounding parse_rounding(std::string_view text);
RoundingMode parse_rounding_mode(std::string_view text);

struct PeriodInstance {
  BigInt r;  ///< hidden period, r >= 1
  BigInt N;  ///< estimation resolution, N >= 2

  PeriodInstance(BigInt r_, BigInt N_);
};

struct SampleTruth {
  BigInt k;
  Rounding rounding;
  Rational xi;  ///< x/N - k/r
};

struct Sample {
  BigInt x;
  std::optional<SampleTruth> truth;  ///< absent for junk outcomes
};

struct SamplerConfig {
  RoundingMode rounding = RoundingMode::RandomPerSample;
  Rational success_probability_q = 1;
  std::uint64_t seed = 0;
};

/// floor(Nk/r) or ceil(Nk/r), exactly. Throws OutOfRange unless 0 <= k < r.
Sample ideal_sample(const PeriodInstance& inst, const BigInt& k, Rounding rounding);

/// One measurement: with probability q an ideal sample for a uniform k,
/// otherwise a uniform x in [0, N) without truth.
Sample draw_sample(const PeriodInstance& inst, const SamplerConfig& config, Rng& rng);

/// Deterministic stream of draws for one trial; the generator is derived from
/// (config.seed, trial index).
class SampleStream {
 public:
  SampleStream(PeriodInstance inst, SamplerConfig config, std::uint64_t trial_index = 0);

  Sample next();
  std::uint64_t draws() const noexcept { return draws_; }
  const PeriodInstance& instance() const noexcept { return inst_; }

 private:
  PeriodInstance inst_;
  SamplerConfig config_;
  Rng rng_;
  std::uint64_t draws_ = 0;
};

}  // namespace shorlat
