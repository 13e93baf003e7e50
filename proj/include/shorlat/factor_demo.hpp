#pragma once

// Classical end-to-end run of Shor's reduction: pick a random a, find its order
// by brute force, simulate phase-estimation samples for that order, recover it
// with the lattice method and turn an even order into a factor of n. Also the
// Monte Carlo experiments behind the CLI's simulate/bench/factor commands.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "shorlat/recovery.hpp"

namespace shorlat {

enum class BoundPolicy { ExactOrder, SqrtN, N };
std::string_view to_string(BoundPolicy p) noexcept;
BoundPolicy parse_bound_policy(std::string_view text);

struct ShorConfig {
  SamplerConfig sampler;
  BoundPolicy policy = BoundPolicy::N;
  std::uint64_t max_rounds = 20;
  std::uint64_t order_budget = kDefaultOrderBudget;
  /// n must stay below this; the order oracle is linear in r.
  BigInt max_n = 1'000'000;
};

enum class TrialOutcome {
  LuckyGcd,           ///< gcd(a, n) > 1 already splits n
  Factored,           ///< gcd(a^{r/2} - 1, n) is a proper factor
  OddOrder,           ///< recovered r is odd
  TrivialSquareRoot,  ///< a^{r/2} = -1 (mod n), or the gcd came out trivial
  RecoveryFailed,     ///< retries exhausted
};
std::string_view to_string(TrialOutcome o) noexcept;

struct FactorTrial {
  BigInt n;
  BigInt a;
  std::optional<BigInt> r_true;
  std::optional<BigInt> r_hat;
  std::optional<BigInt> factor;
  std::optional<BigInt> B;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  TrialOutcome outcome = TrialOutcome::RecoveryFailed;
  std::vector<RetryRound> round_log;
};

/// One trial, fully determined by (n, config.sampler.seed, trial_index).
/// Requires n >= 4. Throws OrderOracleBudgetExceeded when n >= config.max_n.
FactorTrial shor_classical(const BigInt& n, const ShorConfig& config, std::uint64_t trial_index = 0);

/// Same trial with the base a fixed instead of drawn; 2 <= a < n.
FactorTrial shor_classical_with_base(const BigInt& n, const BigInt& a, const ShorConfig& config,
                                     std::uint64_t trial_index = 0);

// --- experiments -------------------------------------------------------------

struct SimulateConfig {
  BigInt r = 101;
  std::optional<BigInt> bound;  ///< defaults to r
  std::uint64_t trials = 100'000;
  SamplerConfig sampler;
  bool recover = true;  ///< also run lattice and CF recovery on each pair
  bool records = false;
};

struct BenchConfig {
  BigInt max_M = 1'000'000;
  std::uint64_t trials = 1000;
  std::uint64_t dim = 2;
  std::uint64_t seed = 0;
  bool records = false;
};

struct FactorExperimentConfig {
  BigInt n = 15;
  std::uint64_t trials = 100;
  ShorConfig shor;
  bool records = true;
};

/// Each returns a JSON document with "aggregates" and, when requested,
/// per-trial "records" ordered by trial index.
nlohmann::json run_simulate(const SimulateConfig& cfg);
nlohmann::json run_bench(const BenchConfig& cfg);
nlohmann::json run_factor(const FactorExperimentConfig& cfg);

}  // namespace shorlat
