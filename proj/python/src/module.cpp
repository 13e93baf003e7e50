#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shorlat/cf_baseline.hpp"
#include "shorlat/factor_demo.hpp"
#include "shorlat/lattice.hpp"
#include "shorlat/numtheory.hpp"
#include "shorlat/recovery.hpp"
#include "shorlat/sampler.hpp"

namespace py = pybind11;
using namespace shorlat;

// Python int <-> BigInt through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = parse_bigint(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

// fractions.Fraction (or int) <-> Rational.
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = Rational(src.cast<BigInt>());
      return true;
    }
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (!py::isinstance(src, fraction)) return false;
    value = Rational(src.attr("numerator").cast<BigInt>(), src.attr("denominator").cast<BigInt>());
    return true;
  }
  static handle cast(const Rational& q, return_value_policy, handle) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::cast(q.num()), py::cast(q.den())).release();
  }
};
}  // namespace pybind11::detail

namespace {

using Vec = std::vector<BigInt>;

IntVector to_vector(const Vec& v) { return IntVector(v); }
Vec from_vector(const IntVector& v) { return Vec(v.entries().begin(), v.entries().end()); }

py::dict reduction_dict(const Reduction& red) {
  py::dict d;
  d["u"] = from_vector(red.basis.u);
  d["v"] = from_vector(red.basis.v);
  d["iterations"] = red.trace.iterations;
  d["swaps"] = red.trace.swaps;
  d["initial_length_M2"] = red.trace.initial_length_M2;
  d["t_squared"] = red.trace.t_squared;
  d["per_iteration_norms"] = red.trace.per_iteration_norms;
  const Unimodular& T = red.trace.transform;
  d["transform"] = std::vector<Vec>{{T.a, T.b}, {T.c, T.d}};
  return d;
}

py::dict outcome_dict(const RecoveryOutcome& o) {
  py::dict d;
  d["k"] = o.k;
  d["l"] = o.l;
  d["r_hat"] = o.r_hat;
  d["status"] = std::string(to_string(o.status));
  d["shortest_vector"] = from_vector(o.shortest_vector);
  d["iterations"] = o.iterations;
  d["failure"] = o.failure ? py::object(py::str(std::string(to_string(*o.failure)))) : py::none();
  return d;
}

RecoveryParams params(const BigInt& B, const std::optional<BigInt>& N) { return make_params(B, N); }

}  // namespace

PYBIND11_MODULE(_shorlat, m) {
  m.doc() = "Lattice-based period recovery from two phase-estimation samples";

  static py::exception<Error> error(m, "ShorlatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("closest_integer", &closest_integer, py::arg("f"));
  m.def("modpow", &modpow, py::arg("a"), py::arg("e"), py::arg("n"));
  m.def("multiplicative_order", &multiplicative_order, py::arg("a"), py::arg("n"),
        py::arg("budget") = kDefaultOrderBudget);

  m.def(
      "gauss_reduce",
      [](const Vec& u, const Vec& v, std::optional<Rational> t_squared) {
        const Basis b(to_vector(u), to_vector(v));
        return reduction_dict(t_squared ? gauss_reduce_t(b, *t_squared) : gauss_reduce(b));
      },
      py::arg("u"), py::arg("v"), py::arg("t_squared") = py::none());
  m.def(
      "shortest_vector",
      [](const Vec& u, const Vec& v, std::uint64_t budget) {
        const ShortestVector sv = shortest_vector_oracle(Basis(to_vector(u), to_vector(v)), budget);
        py::dict d;
        d["vector"] = from_vector(sv.vector);
        d["norm2"] = sv.norm2;
        d["m"] = sv.m;
        d["n"] = sv.n;
        d["minimal_classes"] = sv.minimal_classes;
        d["cells_visited"] = sv.cells_visited;
        return d;
      },
      py::arg("u"), py::arg("v"), py::arg("budget") = kDefaultOracleBudget);
  m.def("iteration_bound", &iteration_bound, py::arg("M_squared"));
  m.def("iteration_bound_t", &iteration_bound_t, py::arg("M_squared"), py::arg("t_squared"));

  m.def(
      "make_params",
      [](const BigInt& B, std::optional<BigInt> N) {
        const RecoveryParams p = params(B, N);
        py::dict d;
        d["B"] = p.B;
        d["s"] = p.s;
        d["N"] = p.N;
        return d;
      },
      py::arg("B"), py::arg("N") = py::none());
  m.def(
      "build_lattice",
      [](const BigInt& x, const BigInt& y, const BigInt& B, std::optional<BigInt> N) {
        const Basis b = build_lattice(x, y, params(B, N));
        return std::make_pair(from_vector(b.u), from_vector(b.v));
      },
      py::arg("x"), py::arg("y"), py::arg("B"), py::arg("N") = py::none());
  m.def(
      "recover_k_l",
      [](const BigInt& x, const BigInt& y, const BigInt& B, std::optional<BigInt> N) {
        const KLPair kl = recover_k_l(x, y, params(B, N));
        py::dict d;
        d["k"] = kl.k;
        d["l"] = kl.l;
        d["shortest_vector"] = from_vector(kl.shortest_vector);
        d["iterations"] = kl.iterations;
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("B"), py::arg("N") = py::none());
  m.def(
      "estimate_r",
      [](const BigInt& x, const BigInt& k, const BigInt& B, std::optional<BigInt> N) {
        return estimate_r(x, k, params(B, N));
      },
      py::arg("x"), py::arg("k"), py::arg("B"), py::arg("N") = py::none());
  m.def(
      "recover_period",
      [](const BigInt& x, const BigInt& y, const BigInt& B, std::optional<BigInt> N) {
        return outcome_dict(recover_period(x, y, params(B, N)));
      },
      py::arg("x"), py::arg("y"), py::arg("B"), py::arg("N") = py::none());

  m.def(
      "convergents",
      [](const BigInt& x, const BigInt& N) {
        std::vector<std::pair<BigInt, BigInt>> out;
        for (const Convergent& c : convergents(x, N)) out.emplace_back(c.p, c.q);
        return out;
      },
      py::arg("x"), py::arg("N"));
  m.def(
      "cf_recover",
      [](const BigInt& x, const BigInt& B, const std::function<bool(const BigInt&)>& verify,
         std::optional<BigInt> N) {
        const CfResult res = cf_recover(x, params(B, N), verify);
        py::dict d;
        d["r"] = res.r;
        d["candidates"] = res.candidates;
        return d;
      },
      py::arg("x"), py::arg("B"), py::arg("verify"), py::arg("N") = py::none());

  m.def(
      "ideal_sample",
      [](const BigInt& r, const BigInt& N, const BigInt& k, const std::string& rounding) {
        return ideal_sample(PeriodInstance(r, N), k, parse_rounding(rounding)).x;
      },
      py::arg("r"), py::arg("N"), py::arg("k"), py::arg("rounding") = "floor");

  m.def(
      "shor_classical",
      [](const BigInt& n, std::uint64_t seed, std::uint64_t trial_index, const std::string& policy,
         std::uint64_t max_rounds, std::optional<BigInt> a) {
        ShorConfig cfg;
        cfg.sampler.seed = seed;
        cfg.policy = parse_bound_policy(policy);
        cfg.max_rounds = max_rounds;
        const FactorTrial t =
            a ? shor_classical_with_base(n, *a, cfg, trial_index) : shor_classical(n, cfg, trial_index);
        py::dict d;
        d["n"] = t.n;
        d["a"] = t.a;
        d["r_true"] = t.r_true;
        d["r_hat"] = t.r_hat;
        d["factor"] = t.factor;
        d["B"] = t.B;
        d["rounds"] = t.rounds;
        d["outcome"] = std::string(to_string(t.outcome));
        return d;
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("trial_index") = 0, py::arg("policy") = "n",
      py::arg("max_rounds") = 20, py::arg("a") = py::none());
}
