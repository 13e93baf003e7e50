#pragma once

// Continued-fraction post-processing: when N >= 2 r^2 and gcd(k, r) = 1, k/r
// shows up among the convergents of x/N. Used as a baseline and as an
// independent cross-check of the lattice route.

#include <cstdint>
#include <optional>
#include <vector>

#include "shorlat/recovery.hpp"

namespace shorlat {

struct Convergent {
  BigInt p;
  BigInt q;
  std::uint64_t index = 0;
};

/// All convergents p_i/q_i of x/N; the last one is x/N in lowest terms.
/// Requires N >= 1 and 0 <= x < N.
std::vector<Convergent> convergents(const BigInt& x, const BigInt& N);

struct CfResult {
  std::optional<BigInt> r;
  std::vector<BigInt> candidates;  ///< distinct denominators <= B, increasing
};

/// Tries every convergent denominator q <= B in increasing order and returns
/// the first one accepted by verify. Requires x >= 1.
CfResult cf_recover(const BigInt& x, const RecoveryParams& p, const PeriodVerifier& verify);

/// Accepts q when x is itself a floor/ceil sample of N p/q for the convergent
/// p/q. Useful when no group is at hand to verify against.
bool cf_sample_consistent(const BigInt& x, const BigInt& N, const Convergent& c);

}  // namespace shorlat
