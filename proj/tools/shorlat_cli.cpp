// shorlat: command-line front end for lattice-based period recovery.
//
// Exit codes: 0 success, 1 recovery failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shorlat/cf_baseline.hpp"
#include "shorlat/factor_demo.hpp"
#include "shorlat/io.hpp"

namespace {

using namespace shorlat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRecoveryFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  bool quiet = false;
};

// Accepts plain decimals and powers written as "10^6".
BigInt parse_int_expr(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) return parse_bigint(text);
  const BigInt base = parse_bigint(text.substr(0, caret));
  const BigInt exp = parse_bigint(text.substr(caret + 1));
  if (exp < 0 || exp > 4096) throw Error(Errc::Parse, "exponent out of range in '" + text + "'");
  return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

IntVector parse_vector_arg(const std::string& text) {
  std::vector<BigInt> entries;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto a = tok.find_first_not_of(' ');
    const auto b = tok.find_last_not_of(' ');
    if (a == std::string::npos) throw Error(Errc::Parse, "empty entry in vector '" + text + "'");
    entries.push_back(parse_bigint(tok.substr(a, b - a + 1)));
  }
  return IntVector(std::move(entries));
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_null()) return "";
  else s = v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

// Rows share the keys of the first row; nested values are embedded as JSON.
void write_csv(std::ostream& os, const json& rows) {
  if (!rows.is_array() || rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, _] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i)
      os << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row.at(keys[i])) : "");
    os << '\n';
  }
}

void emit(const Globals& g, const json& doc, const json& csv_rows) {
  if (g.format == "csv") write_csv(std::cout, csv_rows);
  else std::cout << doc.dump(2) << '\n';
}

void note(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << '\n';
}

PeriodVerifier order_verifier(const std::optional<std::string>& a_text, const std::optional<std::string>& n_text) {
  if (!a_text || !n_text) return {};
  const BigInt a = parse_bigint(*a_text), n = parse_bigint(*n_text);
  if (n < 2) throw Error(Errc::InvalidParameter, "--n must be >= 2");
  return [a, n](const BigInt& c) { return c >= 1 && modpow(a, c, n) == 1; };
}

// --- subcommands ---------------------------------------------------------------

struct ReduceArgs {
  std::optional<std::string> u, v, input, t_squared;
  bool oracle = false;
};

int cmd_reduce(const Globals& g, const ReduceArgs& args) {
  Basis basis;
  if (args.input) {
    basis = io::parse_basis(read_input(*args.input));
  } else if (args.u && args.v) {
    basis = Basis(parse_vector_arg(*args.u), parse_vector_arg(*args.v));
  } else {
    throw Error(Errc::InvalidParameter, "reduce needs --u and --v, or --input");
  }

  const Reduction red = args.t_squared ? gauss_reduce_t(basis, Rational::parse(*args.t_squared)) : gauss_reduce(basis);
  json doc = io::document("reduce");
  doc["input"] = io::to_json(basis);
  doc["output"] = io::to_json(red.basis);
  doc["shortest_vector"] = io::to_json(red.basis.u);
  doc["shortest_norm2"] = io::to_json(red.basis.u.norm2());
  doc["trace"] = io::to_json(red.trace);
  doc["iteration_bound"] = iteration_bound(red.trace.initial_length_M2);
  if (args.oracle) doc["oracle"] = io::to_json(shortest_vector_oracle(basis));

  json rows = json::array();
  for (std::size_t i = 0; i < red.trace.per_iteration_norms.size(); ++i) {
    const auto& [uu, vv] = red.trace.per_iteration_norms[i];
    rows.push_back(json{{"iteration", i + 1}, {"u_norm2", io::to_json(uu)}, {"v_norm2", io::to_json(vv)}});
  }
  emit(g, doc, rows);
  note(g, "reduced in " + std::to_string(red.trace.iterations) + " iterations; shortest |u|^2 = " +
              red.basis.u.norm2().str());
  return kExitOk;
}

struct RecoverArgs {
  std::string x, y, bound;
  std::optional<std::string> N, a, n;
};

int cmd_recover(const Globals& g, const RecoverArgs& args) {
  const RecoveryParams p = make_params(parse_int_expr(args.bound),
                                       args.N ? std::optional<BigInt>(parse_int_expr(*args.N)) : std::nullopt);
  const RecoveryOutcome out = recover_period(parse_bigint(args.x), parse_bigint(args.y), p);
  json doc = io::document("recover");
  doc["params"] = json{{"B", io::to_json(p.B)}, {"s", io::to_json(p.s)}, {"N", io::to_json(p.N)}};
  doc.update(io::to_json(out));

  bool ok = out.status == RecoveryStatus::Recovered;
  if (const PeriodVerifier verify = order_verifier(args.a, args.n)) {
    const bool verified = out.r_hat && verify(*out.r_hat);
    doc["verified"] = verified;
    ok = ok && verified;
  }
  json row = json{{"k", doc["k"]}, {"l", doc["l"]}, {"r_hat", doc["r_hat"]}, {"status", doc["status"]},
                  {"iterations", doc["iterations"]}};
  emit(g, doc, json::array({row}));
  note(g, std::string("status: ") + std::string(to_string(out.status)));
  return ok ? kExitOk : kExitRecoveryFailure;
}

struct CfArgs {
  std::string x, bound;
  std::optional<std::string> N, a, n;
};

int cmd_cf_recover(const Globals& g, const CfArgs& args) {
  const RecoveryParams p = make_params(parse_int_expr(args.bound),
                                       args.N ? std::optional<BigInt>(parse_int_expr(*args.N)) : std::nullopt);
  const BigInt x = parse_bigint(args.x);
  const auto convs = convergents(x, p.N);

  PeriodVerifier verify = order_verifier(args.a, args.n);
  std::string verifier_name = "order";
  if (!verify) {
    verifier_name = "sample_consistency";
    verify = [&convs, &x, &p](const BigInt& q) {
      for (const Convergent& c : convs)
        if (c.q == q && cf_sample_consistent(x, p.N, c)) return true;
      return false;
    };
  }
  const CfResult res = cf_recover(x, p, verify);

  json doc = io::document("cf-recover");
  doc["params"] = json{{"B", io::to_json(p.B)}, {"N", io::to_json(p.N)}, {"x", io::to_json(x)}};
  doc["verifier"] = verifier_name;
  json cj = json::array();
  json rows = json::array();
  for (const Convergent& c : convs) {
    cj.push_back(json{{"index", c.index}, {"p", io::to_json(c.p)}, {"q", io::to_json(c.q)}});
    const bool is_candidate = std::find(res.candidates.begin(), res.candidates.end(), c.q) != res.candidates.end();
    rows.push_back(json{{"index", c.index},
                        {"p", io::to_json(c.p)},
                        {"q", io::to_json(c.q)},
                        {"candidate", is_candidate},
                        {"accepted", res.r && *res.r == c.q}});
  }
  doc["convergents"] = std::move(cj);
  json cand = json::array();
  for (const BigInt& q : res.candidates) cand.push_back(io::to_json(q));
  doc["candidates"] = std::move(cand);
  doc["accepted"] = res.r ? io::to_json(*res.r) : json(nullptr);
  emit(g, doc, rows);
  note(g, res.r ? "accepted r = " + res.r->str() : std::string("no candidate accepted"));
  return res.r ? kExitOk : kExitRecoveryFailure;
}

struct SimulateArgs {
  std::string r = "101";
  std::optional<std::string> bound;
  std::uint64_t trials = 100000;
  std::string q = "1";
  std::string rounding = "random";
  bool no_recover = false;
  bool records = false;
};

int cmd_simulate(const Globals& g, const SimulateArgs& args) {
  SimulateConfig cfg;
  cfg.r = parse_int_expr(args.r);
  if (args.bound) cfg.bound = parse_int_expr(*args.bound);
  cfg.trials = args.trials;
  cfg.sampler.seed = g.seed;
  cfg.sampler.success_probability_q = Rational::parse(args.q);
  cfg.sampler.rounding = parse_rounding_mode(args.rounding);
  cfg.recover = !args.no_recover;
  cfg.records = args.records || g.format == "csv";
  const json doc = run_simulate(cfg);
  emit(g, doc, doc.value("records", json::array()));
  const json& cop = doc["aggregates"]["coprime"];
  if (!cop["fraction"].is_null())
    note(g, "coprime fraction " + std::to_string(cop["fraction"].get<double>()) + " (3-sigma [" +
                std::to_string(cop["ci3_low"].get<double>()) + ", " + std::to_string(cop["ci3_high"].get<double>()) +
                "])");
  return kExitOk;
}

struct BenchArgs {
  std::string max_M = "10^6";
  std::uint64_t trials = 1000;
  std::uint64_t dim = 2;
  bool records = false;
};

int cmd_bench(const Globals& g, const BenchArgs& args) {
  BenchConfig cfg;
  cfg.max_M = parse_int_expr(args.max_M);
  cfg.trials = args.trials;
  cfg.dim = args.dim;
  cfg.seed = g.seed;
  cfg.records = args.records || g.format == "csv";
  const json doc = run_bench(cfg);
  emit(g, doc, doc.value("records", json::array()));
  const json& wb = doc["aggregates"]["within_bound"];
  note(g, std::to_string(wb["hits"].get<std::uint64_t>()) + "/" + std::to_string(wb["total"].get<std::uint64_t>()) +
              " runs within the iteration bound");
  return kExitOk;
}

struct FactorArgs {
  std::string n;
  std::uint64_t trials = 100;
  std::string policy = "n";
  std::string q = "1";
  std::string rounding = "random";
  std::uint64_t max_rounds = 20;
  bool no_records = false;
};

int cmd_factor(const Globals& g, const FactorArgs& args) {
  FactorExperimentConfig cfg;
  cfg.n = parse_int_expr(args.n);
  cfg.trials = args.trials;
  cfg.shor.policy = parse_bound_policy(args.policy);
  cfg.shor.max_rounds = args.max_rounds;
  cfg.shor.sampler.seed = g.seed;
  cfg.shor.sampler.success_probability_q = Rational::parse(args.q);
  cfg.shor.sampler.rounding = parse_rounding_mode(args.rounding);
  cfg.records = !args.no_records || g.format == "csv";
  json doc = run_factor(cfg);

  json rows = json::array();
  for (const auto& rec : doc.value("records", json::array())) {
    json row = rec;
    row.erase("round_log");
    rows.push_back(std::move(row));
  }
  emit(g, doc, rows);
  const json& found = doc["aggregates"]["factor_found"];
  note(g, "factor found in " + std::to_string(found["hits"].get<std::uint64_t>()) + "/" +
              std::to_string(found["total"].get<std::uint64_t>()) + " trials");
  return found["hits"].get<std::uint64_t>() > 0 ? kExitOk : kExitRecoveryFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period recovery with Gauss lattice reduction"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Master seed for every random draw");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--quiet", g.quiet, "Suppress the summary line on stderr");

  ReduceArgs reduce;
  auto* sub_reduce = app.add_subcommand("reduce", "Gauss-reduce a rank-2 basis");
  sub_reduce->add_option("--u", reduce.u, "First vector, comma separated");
  sub_reduce->add_option("--v", reduce.v, "Second vector, comma separated");
  sub_reduce->add_option("--input", reduce.input, "Basis file (text or JSON), '-' for stdin");
  sub_reduce->add_option("--t-squared", reduce.t_squared, "Run Gauss(t) with this t^2 > 1 (e.g. 3/2)");
  sub_reduce->add_flag("--oracle", reduce.oracle, "Also run the brute-force shortest-vector oracle");

  RecoverArgs recover;
  auto* sub_recover = app.add_subcommand("recover", "Recover the period from two samples");
  sub_recover->add_option("--x", recover.x, "First sample")->required();
  sub_recover->add_option("--y", recover.y, "Second sample")->required();
  sub_recover->add_option("--bound,-B", recover.bound, "Upper bound B on the period")->required();
  sub_recover->add_option("--N", recover.N, "Resolution (default: power of two >= sqrt(2)*4B^2)");
  sub_recover->add_option("--a", recover.a, "Base for order verification");
  sub_recover->add_option("--n", recover.n, "Modulus for order verification");

  CfArgs cf;
  auto* sub_cf = app.add_subcommand("cf-recover", "Continued-fraction recovery from one sample");
  sub_cf->add_option("--x", cf.x, "Sample")->required();
  sub_cf->add_option("--bound,-B", cf.bound, "Upper bound B on the period")->required();
  sub_cf->add_option("--N", cf.N, "Resolution (default as for recover)");
  sub_cf->add_option("--a", cf.a, "Base for order verification");
  sub_cf->add_option("--n", cf.n, "Modulus for order verification");

  SimulateArgs sim;
  auto* sub_sim = app.add_subcommand("simulate", "Monte Carlo over sampled pairs for one period");
  sub_sim->add_option("--r", sim.r, "Hidden period");
  sub_sim->add_option("--bound,-B", sim.bound, "Bound B (default r)");
  sub_sim->add_option("--trials", sim.trials, "Number of sample pairs");
  sub_sim->add_option("--q", sim.q, "Probability of an ideal sample, as p/q");
  sub_sim->add_option("--rounding", sim.rounding, "floor | ceil | random");
  sub_sim->add_flag("--no-recover", sim.no_recover, "Only measure coprimality");
  sub_sim->add_flag("--records", sim.records, "Include per-trial records");

  BenchArgs bench;
  auto* sub_bench = app.add_subcommand("bench", "Iteration counts of Gauss and Gauss(t) on random bases");
  sub_bench->add_option("--max-M", bench.max_M, "Largest basis length M (accepts 10^6)");
  sub_bench->add_option("--trials", bench.trials, "Number of bases");
  sub_bench->add_option("--dim", bench.dim, "Ambient dimension d >= 2");
  sub_bench->add_flag("--records", bench.records, "Include per-trial records");

  FactorArgs fac;
  auto* sub_factor = app.add_subcommand("factor", "Classical end-to-end factoring trials");
  sub_factor->add_option("n", fac.n, "Number to factor")->required();
  sub_factor->add_option("--trials", fac.trials, "Number of trials");
  sub_factor->add_option("--policy", fac.policy, "Bound policy: n | sqrt_n | exact_order");
  sub_factor->add_option("--q", fac.q, "Probability of an ideal sample, as p/q");
  sub_factor->add_option("--rounding", fac.rounding, "floor | ceil | random");
  sub_factor->add_option("--max-rounds", fac.max_rounds, "Sample pairs per trial before giving up");
  sub_factor->add_flag("--no-records", fac.no_records, "Aggregates only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sub_reduce) return cmd_reduce(g, reduce);
    if (*sub_recover) return cmd_recover(g, recover);
    if (*sub_cf) return cmd_cf_recover(g, cf);
    if (*sub_sim) return cmd_simulate(g, sim);
    if (*sub_bench) return cmd_bench(g, bench);
    if (*sub_factor) return cmd_factor(g, fac);
  } catch (const shorlat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
