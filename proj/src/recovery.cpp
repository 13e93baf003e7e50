#include "shorlat/recovery.hpp"

namespace shorlat {

RecoveryParams make_params(const BigInt& B, const std::optional<BigInt>& N_override) {
  if (B < 1) throw Error(Errc::InvalidParameter, "bound B must be >= 1");
  RecoveryParams p;
  p.B = B;
  p.s = 4 * B * B;
  const BigInt N_min = ceil_sqrt2_times(p.s);
  if (N_override) {
    if (*N_override < N_min)
      throw Error(Errc::InvalidN, "N = " + N_override->str() + " is below ceil(sqrt(2) * " + p.s.str() +
                                      ") = " + N_min.str());
    p.N = *N_override;
  } else {
    p.N = next_pow2(N_min);
  }
  return p;
}

Basis build_lattice(const BigInt& x, const BigInt& y, const RecoveryParams& p) {
  if (x < 0 || x >= p.N || y < 0 || y >= p.N)
    throw Error(Errc::OutOfRange, "samples must lie in [0, " + p.N.str() + ")");
  return Basis(IntVector{p.N, BigInt(0), p.s * x}, IntVector{BigInt(0), p.N, p.s * y});
}

KLPair recover_k_l(const BigInt& x, const BigInt& y, const RecoveryParams& p) {
  Reduction red = gauss_reduce(build_lattice(x, y, p));
  IntVector& w = red.basis.u;
  if (w[0] % p.N != 0 || w[1] % p.N != 0)
    throw Error(Errc::NotNMultiple, "shortest vector " + w.to_string() + " is not of the form N(-l, k, .)");
  BigInt l = -w[0] / p.N;
  BigInt k = w[1] / p.N;
  if (k < 0 || (k == 0 && l < 0)) {
    k = -k;
    l = -l;
    w = -w;
  }
  return KLPair{std::move(k), std::move(l), std::move(w), red.trace.iterations};
}

BigInt estimate_r(const BigInt& x, const BigInt& k, const RecoveryParams& p) {
  if (x == 0) throw Error(Errc::DivisionByZero, "cannot estimate r from the sample x = 0");
  return closest_integer(Rational(p.N * k, x));
}

std::string_view to_string(RecoveryStatus s) noexcept {
  switch (s) {
    case RecoveryStatus::Recovered: return "Recovered";
    case RecoveryStatus::NeedsRetry: return "NeedsRetry";
    case RecoveryStatus::DegenerateZeroSamples: return "DegenerateZeroSamples";
  }
  return "NeedsRetry";
}

namespace {

// x is a floor or ceiling sample of N k / r.
bool is_sample_of(const BigInt& x, const BigInt& k, const BigInt& r, const BigInt& N) {
  const BigInt Nk = N * k;
  return x == floor_div(Nk, r) || x == ceil_div(Nk, r);
}

}  // namespace

RecoveryOutcome recover_period(const BigInt& x, const BigInt& y, const RecoveryParams& p) {
  RecoveryOutcome out;
  if (x == 0 && y == 0) {
    // Range-check anyway so out-of-range input is never reported as degenerate.
    build_lattice(x, y, p);
    out.status = RecoveryStatus::DegenerateZeroSamples;
    out.r_hat = BigInt(1);
    return out;
  }

  BigInt r_hat;
  try {
    KLPair kl = recover_k_l(x, y, p);
    out.k = std::move(kl.k);
    out.l = std::move(kl.l);
    out.shortest_vector = std::move(kl.shortest_vector);
    out.iterations = kl.iterations;
    if (out.l < 0) return out;
    r_hat = out.k >= 1 ? estimate_r(x, out.k, p) : estimate_r(y, out.l, p);
  } catch (const Error& e) {
    if (e.code() == Errc::OutOfRange) throw;
    out.failure = e.code();
    return out;
  }

  if (r_hat < 1 || r_hat > p.B) return out;
  if (out.k >= r_hat || out.l >= r_hat) return out;
  if (gcd(out.k, out.l) != 1) return out;
  if (!is_sample_of(x, out.k, r_hat, p.N) || !is_sample_of(y, out.l, r_hat, p.N)) return out;

  out.r_hat = std::move(r_hat);
  out.status = RecoveryStatus::Recovered;
  return out;
}

RetryResult recover_with_retries(const SampleSource& stream, const RecoveryParams& p,
                                 const PeriodVerifier& verify, std::uint64_t max_rounds) {
  if (max_rounds < 1) throw Error(Errc::InvalidParameter, "max_rounds must be >= 1");
  RetryResult result;
  for (std::uint64_t round = 1; round <= max_rounds; ++round) {
    result.rounds_used = round;
    Sample sx = stream();
    Sample sy = stream();
    RetryRound rec{sx.x, sy.x, std::move(sx.truth), std::move(sy.truth), recover_period(sx.x, sy.x, p), false};

    if (rec.outcome.r_hat) {
      const BigInt& candidate = *rec.outcome.r_hat;
      if (verify(candidate)) {
        rec.verified = true;
        result.r = candidate;
      } else {
        BigInt folded = lcm(result.lcm_candidate, candidate);
        if (folded <= p.B) {
          result.lcm_candidate = folded;
          if (folded != candidate && verify(folded)) {
            rec.verified = true;
            result.r = std::move(folded);
          }
        } else {
          // an earlier candidate was junk; start over from this one
          result.lcm_candidate = candidate;
        }
      }
    }
    result.rounds.push_back(std::move(rec));
    if (result.r) return result;
  }
  result.failure = Errc::Exhausted;
  return result;
}

}  // namespace shorlat
