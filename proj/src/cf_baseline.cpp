#include "shorlat/cf_baseline.hpp"

namespace shorlat {

std::vector<Convergent> convergents(const BigInt& x, const BigInt& N) {
  if (N < 1) throw Error(Errc::InvalidParameter, "convergents need N >= 1");
  if (x < 0 || x >= N) throw Error(Errc::OutOfRange, "convergents need 0 <= x < N");

  std::vector<Convergent> out;
  BigInt num = x, den = N;
  BigInt p_prev = 1, p_prev2 = 0;
  BigInt q_prev = 0, q_prev2 = 1;
  for (std::uint64_t i = 0; den != 0; ++i) {
    const BigInt a = num / den;
    BigInt rem = num % den;
    num = std::move(den);
    den = std::move(rem);

    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);
    out.push_back(Convergent{std::move(p), std::move(q), i});
  }
  return out;
}

CfResult cf_recover(const BigInt& x, const RecoveryParams& p, const PeriodVerifier& verify) {
  if (x < 1) throw Error(Errc::InvalidParameter, "continued fractions need a sample x >= 1");
  CfResult result;
  for (const Convergent& c : convergents(x, p.N)) {
    if (c.q > p.B) break;
    if (!result.candidates.empty() && result.candidates.back() == c.q) continue;
    result.candidates.push_back(c.q);
  }
  for (const BigInt& q : result.candidates) {
    if (verify(q)) {
      result.r = q;
      break;
    }
  }
  return result;
}

bool cf_sample_consistent(const BigInt& x, const BigInt& N, const Convergent& c) {
  const BigInt Np = N * c.p;
  return x == floor_div(Np, c.q) || x == ceil_div(Np, c.q);
}

}  // namespace shorlat
