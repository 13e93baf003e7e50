#pragma once

// Period recovery from two phase-estimation samples. With B an upper bound on
// r, s = 4B^2 and N >= sqrt(2) s, the lattice spanned by
//   (N, 0, s x)  and  (0, N, s y)
// has N (-l, k, s(-l x + k y)/N) as its unique shortest vector (up to sign)
// whenever x, y are floor/ceil samples of Nk/r, Nl/r with gcd(k, l) = 1.
// closest_integer(N k / x) then equals r.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "shorlat/lattice.hpp"
#include "shorlat/sampler.hpp"

namespace shorlat {

struct RecoveryParams {
  BigInt B;  ///< upper bound on the unknown period
  BigInt s;  ///< 4 B^2
  BigInt N;  ///< resolution, N >= ceil(sqrt(2) s)
};

/// s = 4B^2; N is the override when given (must satisfy the sqrt(2) s bound,
/// else InvalidN), otherwise the smallest power of two >= sqrt(2) s.
RecoveryParams make_params(const BigInt& B, const std::optional<BigInt>& N_override = std::nullopt);

/// The integer basis (N, 0, s x), (0, N, s y). OutOfRange unless 0 <= x, y < N.
Basis build_lattice(const BigInt& x, const BigInt& y, const RecoveryParams& p);

struct KLPair {
  BigInt k;
  BigInt l;
  IntVector shortest_vector;
  std::uint64_t iterations = 0;
};

/// Reduces build_lattice(x, y, p) and reads (k, l) off the shortest vector
/// N (-l, k, .), normalised so that k >= 0 and, when k = 0, l >= 0.
/// Throws NotNMultiple if the first two coordinates are not multiples of N.
KLPair recover_k_l(const BigInt& x, const BigInt& y, const RecoveryParams& p);

/// closest_integer(N k / x). Throws DivisionByZero when x = 0.
BigInt estimate_r(const BigInt& x, const BigInt& k, const RecoveryParams& p);

enum class RecoveryStatus { Recovered, NeedsRetry, DegenerateZeroSamples };
std::string_view to_string(RecoveryStatus s) noexcept;

struct RecoveryOutcome {
  BigInt k = 0;
  BigInt l = 0;
  std::optional<BigInt> r_hat;
  RecoveryStatus status = RecoveryStatus::NeedsRetry;
  IntVector shortest_vector;
  std::uint64_t iterations = 0;
  std::optional<Errc> failure;  ///< why NeedsRetry was reported, when an error caused it
};

/// Full two-sample pipeline. Never throws for in-range inputs; anything that
/// does not look like a pair of ideal samples comes back as NeedsRetry.
RecoveryOutcome recover_period(const BigInt& x, const BigInt& y, const RecoveryParams& p);

using SampleSource = std::function<Sample()>;
using PeriodVerifier = std::function<bool(const BigInt&)>;

struct RetryRound {
  BigInt x, y;
  std::optional<SampleTruth> truth_x, truth_y;
  RecoveryOutcome outcome;
  bool verified = false;
};

struct RetryResult {
  std::optional<BigInt> r;  ///< accepted period, absent on failure
  std::uint64_t rounds_used = 0;
  BigInt lcm_candidate = 1;
  std::vector<RetryRound> rounds;
  std::optional<Errc> failure;  ///< Exhausted when no round verified

  bool succeeded() const noexcept { return r.has_value(); }
};

/// Draws sample pairs until verify accepts a candidate. Each round also folds
/// its candidate into a running lcm (kept only while it stays <= B) and tries
/// that, so divisor candidates from non-coprime pairs still add up to r.
RetryResult recover_with_retries(const SampleSource& stream, const RecoveryParams& p,
                                 const PeriodVerifier& verify, std::uint64_t max_rounds);

}  // namespace shorlat
