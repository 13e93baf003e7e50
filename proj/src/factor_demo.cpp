#include "shorlat/factor_demo.hpp"

#include <cmath>
#include <stdexcept>

#include "shorlat/cf_baseline.hpp"
#include "shorlat/io.hpp"

namespace shorlat {

using nlohmann::json;

std::string_view to_string(BoundPolicy p) noexcept {
  switch (p) {
    case BoundPolicy::ExactOrder: return "exact_order";
    case BoundPolicy::SqrtN: return "sqrt_n";
    case BoundPolicy::N: return "n";
  }
  return "n";
}

BoundPolicy parse_bound_policy(std::string_view text) {
  if (text == "exact_order") return BoundPolicy::ExactOrder;
  if (text == "sqrt_n") return BoundPolicy::SqrtN;
  if (text == "n") return BoundPolicy::N;
  throw Error(Errc::Parse, "unknown bound policy '" + std::string(text) + "'");
}

std::string_view to_string(TrialOutcome o) noexcept {
  switch (o) {
    case TrialOutcome::LuckyGcd: return "lucky_gcd";
    case TrialOutcome::Factored: return "factored";
    case TrialOutcome::OddOrder: return "odd_order";
    case TrialOutcome::TrivialSquareRoot: return "trivial_square_root";
    case TrialOutcome::RecoveryFailed: return "recovery_failed";
  }
  return "recovery_failed";
}

namespace {

void check_desk_scale(const BigInt& n, const ShorConfig& config) {
  if (n < 4) throw Error(Errc::InvalidParameter, "n must be >= 4");
  if (n >= config.max_n)
    throw Error(Errc::OrderOracleBudgetExceeded,
                "n = " + n.str() + " is beyond desk scale (limit " + config.max_n.str() + ")");
}

}  // namespace

FactorTrial shor_classical(const BigInt& n, const ShorConfig& config, std::uint64_t trial_index) {
  check_desk_scale(n, config);
  Rng pick = Rng(config.sampler.seed).split(trial_index).split(0);
  return shor_classical_with_base(n, pick.uniform_between(2, n - 1), config, trial_index);
}

FactorTrial shor_classical_with_base(const BigInt& n, const BigInt& a_base, const ShorConfig& config,
                                     std::uint64_t trial_index) {
  check_desk_scale(n, config);
  if (a_base < 2 || a_base >= n) throw Error(Errc::OutOfRange, "base a must lie in [2, n)");

  FactorTrial trial;
  trial.n = n;
  trial.a = a_base;
  trial.seed = config.sampler.seed;
  trial.trial_index = trial_index;

  const BigInt g = gcd(trial.a, n);
  if (g > 1) {
    trial.factor = g;
    trial.outcome = TrialOutcome::LuckyGcd;
    return trial;
  }

  const BigInt r_true = multiplicative_order(trial.a, n, config.order_budget);
  trial.r_true = r_true;
  switch (config.policy) {
    case BoundPolicy::ExactOrder: trial.B = r_true; break;
    case BoundPolicy::SqrtN: {
      BigInt root = isqrt(n);
      if (root * root < n) ++root;
      trial.B = root;
      break;
    }
    case BoundPolicy::N: trial.B = n; break;
  }

  const RecoveryParams params = make_params(*trial.B);
  SampleStream stream(PeriodInstance(r_true, params.N), config.sampler, trial_index);
  const BigInt& a = trial.a;
  RetryResult res = recover_with_retries(
      [&stream] { return stream.next(); }, params,
      [&a, &n](const BigInt& c) { return c >= 1 && modpow(a, c, n) == 1; }, config.max_rounds);
  trial.rounds = res.rounds_used;
  trial.round_log = std::move(res.rounds);
  if (!res.r) {
    trial.outcome = TrialOutcome::RecoveryFailed;
    return trial;
  }

  const BigInt r_hat = *res.r;
  trial.r_hat = r_hat;
  if (r_hat % 2 != 0) {
    trial.outcome = TrialOutcome::OddOrder;
    return trial;
  }
  const BigInt half = modpow(a, r_hat / 2, n);
  if (half == n - 1) {
    trial.outcome = TrialOutcome::TrivialSquareRoot;
    return trial;
  }
  BigInt f = gcd(half - 1 + n, n);
  if (f <= 1 || f >= n) {
    trial.outcome = TrialOutcome::TrivialSquareRoot;
    return trial;
  }
  if (n % f != 0) throw std::logic_error("gcd produced a non-divisor of n");
  trial.factor = std::move(f);
  trial.outcome = TrialOutcome::Factored;
  return trial;
}

namespace {

json rate(std::uint64_t hits, std::uint64_t total) {
  if (total == 0) return json{{"hits", hits}, {"total", total}, {"fraction", nullptr}};
  const double p = static_cast<double>(hits) / static_cast<double>(total);
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(total));
  return json{{"hits", hits},
              {"total", total},
              {"fraction", p},
              {"sigma", sigma},
              {"ci3_low", p - 3 * sigma},
              {"ci3_high", p + 3 * sigma}};
}

json histogram(const std::map<std::uint64_t, std::uint64_t>& h) {
  json out = json::object();
  for (const auto& [k, count] : h) out[std::to_string(k)] = count;
  return out;
}

}  // namespace

json run_simulate(const SimulateConfig& cfg) {
  if (cfg.trials == 0) throw Error(Errc::InvalidParameter, "trials must be >= 1");
  const BigInt B = cfg.bound.value_or(cfg.r);
  if (B < cfg.r) throw Error(Errc::InvalidParameter, "bound must be >= r");
  const RecoveryParams params = make_params(B);
  const PeriodInstance inst(cfg.r, params.N);
  const BigInt& r = cfg.r;
  auto verify = [&r](const BigInt& c) { return c == r; };

  std::uint64_t ideal_pairs = 0, coprime = 0;
  std::uint64_t lattice_hits = 0, cf_hits = 0, cf_samples = 0, within_bound = 0;
  std::map<std::uint64_t, std::uint64_t> iter_hist;
  json records = json::array();

  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    SampleStream stream(inst, cfg.sampler, i);
    const Sample sx = stream.next();
    const Sample sy = stream.next();
    const bool ideal = sx.truth && sy.truth;
    bool is_coprime = false;
    if (ideal) {
      ++ideal_pairs;
      is_coprime = gcd(sx.truth->k, sy.truth->k) == 1;
      if (is_coprime) ++coprime;
    }

    json rec;
    if (cfg.records) {
      rec = json{{"trial", i}, {"x", io::to_json(sx.x)}, {"y", io::to_json(sy.x)}, {"ideal", ideal}};
      if (ideal) {
        rec["k"] = io::to_json(sx.truth->k);
        rec["l"] = io::to_json(sy.truth->k);
        rec["coprime"] = is_coprime;
      }
    }

    if (cfg.recover) {
      const RecoveryOutcome out = recover_period(sx.x, sy.x, params);
      const bool ok = out.status == RecoveryStatus::Recovered && out.r_hat && *out.r_hat == r;
      if (ok) ++lattice_hits;
      if (out.iterations > 0) {
        ++iter_hist[out.iterations];
        if (out.iterations <= iteration_bound(build_lattice(sx.x, sy.x, params).length_squared()))
          ++within_bound;
      }

      std::optional<BigInt> cf_r;
      for (const Sample* s : {&sx, &sy}) {
        ++cf_samples;
        if (s->x == 0) continue;
        cf_r = cf_recover(s->x, params, verify).r;
        if (cf_r) break;
      }
      if (cf_r) ++cf_hits;

      if (cfg.records) {
        rec["lattice_status"] = std::string(to_string(out.status));
        rec["lattice_r_hat"] = out.r_hat ? io::to_json(*out.r_hat) : json(nullptr);
        rec["iterations"] = out.iterations;
        rec["cf_r"] = cf_r ? io::to_json(*cf_r) : json(nullptr);
      }
    }
    if (cfg.records) records.push_back(std::move(rec));
  }

  json doc = io::document("simulate");
  doc["params"] = json{{"r", io::to_json(cfg.r)},
                       {"B", io::to_json(B)},
                       {"s", io::to_json(params.s)},
                       {"N", io::to_json(params.N)},
                       {"trials", cfg.trials},
                       {"seed", cfg.sampler.seed},
                       {"q", io::to_json(cfg.sampler.success_probability_q)},
                       {"rounding", std::string(to_string(cfg.sampler.rounding))}};
  json agg{{"ideal_pairs", ideal_pairs}, {"coprime", rate(coprime, ideal_pairs)}};
  if (cfg.recover) {
    agg["lattice"] = rate(lattice_hits, cfg.trials);
    agg["lattice_samples_per_success"] =
        lattice_hits ? json(2.0 * static_cast<double>(cfg.trials) / static_cast<double>(lattice_hits)) : json(nullptr);
    agg["cf"] = rate(cf_hits, cfg.trials);
    agg["cf_samples_per_success"] =
        cf_hits ? json(static_cast<double>(cf_samples) / static_cast<double>(cf_hits)) : json(nullptr);
    agg["iterations_histogram"] = histogram(iter_hist);
    std::uint64_t runs = 0;
    for (const auto& [k, c] : iter_hist) runs += c;
    agg["iterations_within_bound"] = rate(within_bound, runs);
  }
  doc["aggregates"] = std::move(agg);
  if (cfg.records) doc["records"] = std::move(records);
  return doc;
}

json run_bench(const BenchConfig& cfg) {
  if (cfg.trials == 0) throw Error(Errc::InvalidParameter, "trials must be >= 1");
  if (cfg.dim < 2) throw Error(Errc::InvalidParameter, "dim must be >= 2");
  if (cfg.max_M < 1) throw Error(Errc::InvalidParameter, "max-M must be >= 1");
  const BigInt E = isqrt(cfg.max_M * cfg.max_M / cfg.dim);
  if (E < 1) throw Error(Errc::InvalidParameter, "max-M too small for the requested dimension");

  const std::vector<Rational> taus{Rational(3, 2), Rational(2), Rational(3)};
  std::uint64_t within_bound = 0, redraws = 0, output_ok = 0;
  std::vector<std::uint64_t> sandwich(taus.size(), 0), kt_within(taus.size(), 0);
  std::map<std::uint64_t, std::uint64_t> hist;
  std::uint64_t max_iterations = 0;
  json records = json::array();

  const Rng master(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    Rng rng = master.split(i);
    Basis b;
    for (;;) {
      std::vector<BigInt> u(cfg.dim), v(cfg.dim);
      for (auto& e : u) e = rng.uniform_between(-E, E);
      for (auto& e : v) e = rng.uniform_between(-E, E);
      b = Basis(IntVector(std::move(u)), IntVector(std::move(v)));
      if (b.gram_determinant() != 0) break;
      ++redraws;
    }
    const BigInt M2 = b.length_squared();
    const Reduction red = gauss_reduce(b);
    const std::uint64_t k = red.trace.iterations;
    const std::uint64_t bound = iteration_bound(M2);
    ++hist[k];
    max_iterations = std::max(max_iterations, k);
    if (k <= bound) ++within_bound;

    const BigInt uu = red.basis.u.norm2(), vv = red.basis.v.norm2(), uv = red.basis.u.dot(red.basis.v);
    if (vv >= uu && uv >= 0 && 2 * uv <= uu) ++output_ok;

    json kts = json::array();
    for (std::size_t t = 0; t < taus.size(); ++t) {
      const std::uint64_t kt = gauss_reduce_t(b, taus[t]).trace.iterations;
      if (kt <= k && k <= kt + 1) ++sandwich[t];
      if (kt <= iteration_bound_t(M2, taus[t])) ++kt_within[t];
      kts.push_back(kt);
    }
    if (cfg.records)
      records.push_back(json{{"trial", i},
                             {"basis", io::to_json(b)},
                             {"M2", io::to_json(M2)},
                             {"iterations", k},
                             {"bound", bound},
                             {"k_t", std::move(kts)}});
  }

  json doc = io::document("bench");
  doc["params"] = json{{"max_M", io::to_json(cfg.max_M)},
                       {"entry_bound", io::to_json(E)},
                       {"dim", cfg.dim},
                       {"trials", cfg.trials},
                       {"seed", cfg.seed}};
  json per_tau = json::array();
  for (std::size_t t = 0; t < taus.size(); ++t)
    per_tau.push_back(json{{"t_squared", io::to_json(taus[t])},
                           {"sandwich", rate(sandwich[t], cfg.trials)},
                           {"k_t_within_bound", rate(kt_within[t], cfg.trials)}});
  doc["aggregates"] = json{{"within_bound", rate(within_bound, cfg.trials)},
                           {"output_conditions", rate(output_ok, cfg.trials)},
                           {"iterations_histogram", histogram(hist)},
                           {"max_iterations", max_iterations},
                           {"max_bound", iteration_bound(cfg.max_M * cfg.max_M)},
                           {"dependent_redraws", redraws},
                           {"gauss_t", std::move(per_tau)}};
  if (cfg.records) doc["records"] = std::move(records);
  return doc;
}

json run_factor(const FactorExperimentConfig& cfg) {
  if (cfg.trials == 0) throw Error(Errc::InvalidParameter, "trials must be >= 1");
  std::uint64_t found = 0;
  bool all_divide = true;
  std::map<std::string, std::uint64_t> outcomes;
  std::map<BigInt, std::uint64_t> factors;
  json records = json::array();

  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const FactorTrial t = shor_classical(cfg.n, cfg.shor, i);
    ++outcomes[std::string(to_string(t.outcome))];
    if (t.factor) {
      ++found;
      ++factors[*t.factor];
      if (!(*t.factor > 1 && *t.factor < cfg.n && cfg.n % *t.factor == 0)) all_divide = false;
    }
    if (cfg.records) records.push_back(io::to_json(t));
  }

  json doc = io::document("factor");
  doc["params"] = json{{"n", io::to_json(cfg.n)},
                       {"trials", cfg.trials},
                       {"seed", cfg.shor.sampler.seed},
                       {"policy", std::string(to_string(cfg.shor.policy))},
                       {"q", io::to_json(cfg.shor.sampler.success_probability_q)},
                       {"max_rounds", cfg.shor.max_rounds}};
  json outcome_counts = json::object();
  for (const auto& [name, c] : outcomes) outcome_counts[name] = c;
  json factor_counts = json::object();
  for (const auto& [f, c] : factors) factor_counts[f.str()] = c;
  doc["aggregates"] = json{{"factor_found", rate(found, cfg.trials)},
                           {"all_factors_divide_n", all_divide},
                           {"outcomes", std::move(outcome_counts)},
                           {"factors", std::move(factor_counts)}};
  if (cfg.records) doc["records"] = std::move(records);
  return doc;
}

}  // namespace shorlat
