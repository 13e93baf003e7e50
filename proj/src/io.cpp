#include "shorlat/io.hpp"

#include <limits>
#include <sstream>

namespace shorlat::io {

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw Error(Errc::Parse, "expected an integer, got " + j.dump());
}

json to_json(const Rational& q) {
  if (q.is_integer()) return to_json(q.num());
  return json(q.to_string());
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return Rational(bigint_from_json(j));
}

json to_json(const IntVector& v) {
  json arr = json::array();
  for (const auto& e : v.entries()) arr.push_back(to_json(e));
  return arr;
}

IntVector intvector_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "expected an integer array, got " + j.dump());
  std::vector<BigInt> entries;
  for (const auto& e : j) entries.push_back(bigint_from_json(e));
  return IntVector(std::move(entries));
}

json to_json(const Basis& b) { return json{{"u", to_json(b.u)}, {"v", to_json(b.v)}}; }

Basis basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v"))
    throw Error(Errc::Parse, "basis document needs \"u\" and \"v\"");
  return Basis(intvector_from_json(j.at("u")), intvector_from_json(j.at("v")));
}

Basis parse_basis_text(std::string_view text) {
  std::vector<IntVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string body = line.substr(start);
    if (body.size() >= 2 && (body[0] == 'u' || body[0] == 'v') && body[1] == ':') body = body.substr(2);
    std::istringstream tokens(body);
    std::vector<BigInt> entries;
    std::string tok;
    while (tokens >> tok) entries.push_back(parse_bigint(tok));
    rows.emplace_back(std::move(entries));
  }
  if (rows.size() != 2)
    throw Error(Errc::Parse, "basis text needs exactly two vectors, found " + std::to_string(rows.size()));
  return Basis(std::move(rows[0]), std::move(rows[1]));
}

std::string format_basis_text(const Basis& b) {
  std::ostringstream os;
  for (const IntVector* vec : {&b.u, &b.v}) {
    for (std::size_t i = 0; i < vec->dim(); ++i) os << (i ? " " : "") << (*vec)[i];
    os << '\n';
  }
  return os.str();
}

Basis parse_basis(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') {
    try {
      return basis_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Error(Errc::Parse, e.what());
    }
  }
  return parse_basis_text(text);
}

json to_json(const ReductionTrace& t) {
  json norms = json::array();
  for (const auto& [uu, vv] : t.per_iteration_norms) norms.push_back(json::array({to_json(uu), to_json(vv)}));
  return json{
      {"iterations", t.iterations},
      {"swaps", t.swaps},
      {"initial_length_M2", to_json(t.initial_length_M2)},
      {"t_squared", to_json(t.t_squared)},
      {"per_iteration_norms", std::move(norms)},
      {"transform", json::array({json::array({to_json(t.transform.a), to_json(t.transform.b)}),
                                 json::array({to_json(t.transform.c), to_json(t.transform.d)})})},
  };
}

json to_json(const ShortestVector& sv) {
  return json{
      {"vector", to_json(sv.vector)},
      {"norm2", to_json(sv.norm2)},
      {"coefficients", json::array({to_json(sv.m), to_json(sv.n)})},
      {"minimal_classes", sv.minimal_classes},
      {"cells_visited", sv.cells_visited},
  };
}

json to_json(const SampleTruth& t) {
  return json{{"k", to_json(t.k)}, {"rounding", std::string(to_string(t.rounding))}, {"xi", to_json(t.xi)}};
}

json samples_to_json(const BigInt& N, const std::vector<Sample>& samples) {
  json doc = document("samples");
  doc["N"] = to_json(N);
  json xs = json::array();
  json truth = json::array();
  bool any_truth = false;
  for (const Sample& s : samples) {
    xs.push_back(to_json(s.x));
    if (s.truth) {
      truth.push_back(to_json(*s.truth));
      any_truth = true;
    } else {
      truth.push_back(nullptr);
    }
  }
  doc["samples"] = std::move(xs);
  if (any_truth) doc["truth"] = std::move(truth);
  return doc;
}

std::pair<BigInt, std::vector<Sample>> samples_from_json(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("samples"))
    throw Error(Errc::Parse, "sample batch needs \"N\" and \"samples\"");
  BigInt N = bigint_from_json(j.at("N"));
  std::vector<Sample> out;
  for (const auto& x : j.at("samples")) out.push_back(Sample{bigint_from_json(x), std::nullopt});
  if (j.contains("truth")) {
    const json& truth = j.at("truth");
    if (!truth.is_array() || truth.size() != out.size())
      throw Error(Errc::Parse, "\"truth\" must be an array parallel to \"samples\"");
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (truth[i].is_null()) continue;
      out[i].truth = SampleTruth{bigint_from_json(truth[i].at("k")),
                                 parse_rounding(truth[i].at("rounding").get<std::string>()),
                                 rational_from_json(truth[i].at("xi"))};
    }
  }
  return {std::move(N), std::move(out)};
}

json to_json(const RecoveryOutcome& o) {
  json j{
      {"k", to_json(o.k)},
      {"l", to_json(o.l)},
      {"r_hat", o.r_hat ? to_json(*o.r_hat) : json(nullptr)},
      {"status", std::string(to_string(o.status))},
      {"shortest_vector", to_json(o.shortest_vector)},
      {"iterations", o.iterations},
  };
  if (o.failure) j["failure"] = std::string(to_string(*o.failure));
  return j;
}

json to_json(const RetryRound& r) {
  json j{{"x", to_json(r.x)}, {"y", to_json(r.y)}, {"outcome", to_json(r.outcome)}, {"verified", r.verified}};
  if (r.truth_x) j["truth_x"] = to_json(*r.truth_x);
  if (r.truth_y) j["truth_y"] = to_json(*r.truth_y);
  return j;
}

json to_json(const FactorTrial& t) {
  auto opt = [](const std::optional<BigInt>& v) { return v ? to_json(*v) : json(nullptr); };
  json rounds = json::array();
  for (const RetryRound& r : t.round_log) rounds.push_back(to_json(r));
  return json{
      {"trial", t.trial_index},
      {"seed", t.seed},
      {"n", to_json(t.n)},
      {"a", to_json(t.a)},
      {"r_true", opt(t.r_true)},
      {"B", opt(t.B)},
      {"r_hat", opt(t.r_hat)},
      {"factor", opt(t.factor)},
      {"rounds", t.rounds},
      {"outcome", std::string(to_string(t.outcome))},
      {"round_log", std::move(rounds)},
  };
}

json document(std::string_view command) {
  return json{{"schema_version", kSchemaVersion}, {"command", std::string(command)}};
}

}  // namespace shorlat::io
