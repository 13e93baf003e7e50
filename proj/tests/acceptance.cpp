// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shorlat/cf_baseline.hpp"
#include "shorlat/factor_demo.hpp"
#include "shorlat/lattice.hpp"
#include "shorlat/recovery.hpp"
#include "shorlat/sampler.hpp"

using namespace shorlat;

namespace {

struct Tally {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what = {}) {
    ++total;
    if (ok)
      ++hits;
    else if (first_failure.empty())
      first_failure = what;
  }
  bool all() const { return total > 0 && hits == total; }
};

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string counts(const Tally& t) {
  std::string s = std::to_string(t.hits) + "/" + std::to_string(t.total);
  if (!t.first_failure.empty()) s += " first failure: " + t.first_failure;
  return s;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criteria 1, 3 (exhaustive part), 5 and 7 share the exhaustive instance set.
struct ExhaustiveResults {
  Tally lattice, bound, rounding, agreement;
};

ExhaustiveResults run_exhaustive() {
  ExhaustiveResults out;
  const RecoveryParams p = make_params(64);
  const std::vector<std::pair<Rounding, Rounding>> roundings{{Rounding::Floor, Rounding::Floor},
                                                             {Rounding::Floor, Rounding::Ceil},
                                                             {Rounding::Ceil, Rounding::Floor},
                                                             {Rounding::Ceil, Rounding::Ceil}};
  for (int r = 1; r <= 64; ++r) {
    const PeriodInstance inst(r, p.N);
    const BigInt R = r;
    const PeriodVerifier order_check = [R](const BigInt& c) { return c % R == 0; };
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        if ((k == 0 && l == 0) || std::gcd(k, l) != 1) continue;
        for (const auto& [rx, ry] : roundings) {
          const Sample sx = ideal_sample(inst, k, rx), sy = ideal_sample(inst, l, ry);
          const std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                  " " + std::string(to_string(rx)) + "/" + std::string(to_string(ry));

          const RecoveryOutcome o = recover_period(sx.x, sy.x, p);
          const IntVector& v = o.shortest_vector;
          const bool plus = v[0] == -p.N * l && v[1] == p.N * k;
          const bool minus = v[0] == p.N * l && v[1] == -p.N * k;
          const Basis lattice = build_lattice(sx.x, sy.x, p);
          const ShortestVector sv = shortest_vector_oracle(lattice);
          const bool ok = (plus || minus) && sv.norm2 == v.norm2() && sv.minimal_classes == 1 &&
                          o.status == RecoveryStatus::Recovered && o.r_hat && *o.r_hat == R;
          out.lattice.add(ok, tag);

          out.bound.add(o.iterations <= iteration_bound(lattice.length_squared()), tag);

          for (const auto& [kk, x] : {std::pair<int, BigInt>{k, sx.x}, {l, sy.x}}) {
            if (kk == 0) continue;
            const Rational diff = Rational(p.N * kk, x) - Rational(R);
            out.rounding.add(abs(diff) < Rational(1), tag);
          }

          if (k >= 1 && std::gcd(k, r) == 1) {
            const CfResult cf = cf_recover(sx.x, p, order_check);
            out.agreement.add(cf.r && o.r_hat && *cf.r == *o.r_hat, tag);
          }
        }
      }
    }
  }
  return out;
}

// Criteria 2, 3 (random part) and 4.
struct RandomResults {
  Tally oracle, bound, sandwich;
};

RandomResults run_random_bases() {
  RandomResults out;
  std::mt19937_64 gen(20240601);
  const std::vector<Rational> taus{Rational(3, 2), Rational(2), Rational(3)};
  for (std::size_t dim : {2u, 3u}) {
    for (int i = 0; i < 1000; ++i) {
      const Basis b = testing::random_independent_basis(gen, dim, 1000);
      const std::string tag = "dim=" + std::to_string(dim) + " #" + std::to_string(i);
      const Reduction red = gauss_reduce(b);
      out.oracle.add(red.basis.u.norm2() == shortest_vector_oracle(b).norm2, tag);
      out.bound.add(red.trace.iterations <= iteration_bound(b.length_squared()), tag);
      for (const Rational& tau : taus) {
        const auto kt = gauss_reduce_t(b, tau).trace.iterations;
        const auto k = red.trace.iterations;
        out.sandwich.add(kt <= k && k <= kt + 1, tag + " t^2=" + tau.to_string());
      }
    }
  }
  return out;
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  Rng rng(606);
  for (const std::uint64_t r : {101u, 1000u, 9973u}) {
    constexpr int kPairs = 100'000;
    int coprime = 0;
    for (int i = 0; i < kPairs; ++i) {
      const std::uint64_t k = rng.uniform_below(r), l = rng.uniform_below(r);
      if (std::gcd(k, l) == 1) ++coprime;
    }
    const double f = static_cast<double>(coprime) / kPairs;
    const double sigma = std::sqrt(f * (1 - f) / kPairs);
    const bool pass = f - 3 * sigma > 0.5;
    ok = ok && pass;
    detail += "r=" + std::to_string(r) + " fraction=" + fmt(f) + " lower3s=" + fmt(f - 3 * sigma) + "; ";
  }
  report(6, "coprimality rate", ok, detail);
}

void criterion_8() {
  const RecoveryParams p = make_params(128);
  SamplerConfig cfg;
  cfg.seed = 8008;
  cfg.success_probability_q = Rational(81, 100);
  const PeriodInstance inst(100, p.N);
  const PeriodVerifier order_check = [](const BigInt& c) { return c % 100 == 0; };
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    SampleStream stream(inst, cfg, trial);
    const RetryResult res = recover_with_retries([&stream] { return stream.next(); }, p, order_check, 20);
    t.add(res.succeeded() && *res.r == 100, "trial " + std::to_string(trial));
  }
  report(8, "retry loop under noise", t.hits * 100 >= t.total * 99,
         std::to_string(t.hits) + "/" + std::to_string(t.total) + " succeeded in " + fmt(seconds_since(t0)) + "s");
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  ShorConfig cfg;
  cfg.sampler.seed = 9009;
  cfg.policy = BoundPolicy::N;
  std::uint64_t bad_factors = 0;
  for (const int n : {15, 21, 35, 91, 8051}) {
    int found = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const FactorTrial t = shor_classical(n, cfg, trial);
      if (!t.factor) continue;
      ++found;
      if (*t.factor <= 1 || *t.factor >= n || n % *t.factor != 0) ++bad_factors;
    }
    ok = ok && found >= 40;
    detail += "n=" + std::to_string(n) + " " + std::to_string(found) + "/100; ";
  }
  ok = ok && bad_factors == 0;
  detail += "non-dividing factors=" + std::to_string(bad_factors);
  report(9, "end-to-end factoring", ok, detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExhaustiveResults ex = run_exhaustive();
  const double ex_time = seconds_since(t0);
  const RandomResults rnd = run_random_bases();

  report(1, "exhaustive lattice recovery, B=64", ex.lattice.all(),
         counts(ex.lattice) + " in " + fmt(ex_time) + "s");
  report(2, "reduction matches exhaustive oracle", rnd.oracle.all(), counts(rnd.oracle));
  Tally bound = ex.bound;
  bound.hits += rnd.bound.hits;
  bound.total += rnd.bound.total;
  if (bound.first_failure.empty()) bound.first_failure = rnd.bound.first_failure;
  report(3, "iteration bound", bound.all(), counts(bound));
  report(4, "relaxed reduction sandwich", rnd.sandwich.all(), counts(rnd.sandwich));
  report(5, "rounded sample estimate", ex.rounding.all(), counts(ex.rounding));
  criterion_6();
  report(7, "continued fractions agree with lattice", ex.agreement.all(), counts(ex.agreement));
  criterion_8();
  criterion_9();

  std::printf("%d of 9 criteria failed, %.1fs total\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
