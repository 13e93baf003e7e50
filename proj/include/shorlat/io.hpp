#pragma once

// Document formats shared by the CLI and the Python module.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept either form.
//
// Basis text format: two non-empty lines of whitespace-separated integers
// (u, then v). Lines starting with '#' are ignored, and an optional "u:" /
// "v:" prefix is allowed.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "shorlat/factor_demo.hpp"
#include "shorlat/lattice.hpp"
#include "shorlat/recovery.hpp"
#include "shorlat/sampler.hpp"

namespace shorlat::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);
json to_json(const Rational& q);  ///< "p/q" string, or an integer when q is integral
Rational rational_from_json(const json& j);
json to_json(const IntVector& v);
IntVector intvector_from_json(const json& j);

json to_json(const Basis& b);  ///< {"u": [...], "v": [...]}
Basis basis_from_json(const json& j);
Basis parse_basis_text(std::string_view text);
std::string format_basis_text(const Basis& b);
/// Dispatches on the first non-blank character: '{' means JSON.
Basis parse_basis(std::string_view text);

json to_json(const ReductionTrace& t);
json to_json(const ShortestVector& sv);

json to_json(const SampleTruth& t);
/// {"N": int, "samples": [ints], "truth": [ {k, rounding, xi} | null ... ] }
/// "truth" is omitted when no sample carries it.
json samples_to_json(const BigInt& N, const std::vector<Sample>& samples);
std::pair<BigInt, std::vector<Sample>> samples_from_json(const json& j);

json to_json(const RecoveryOutcome& o);
json to_json(const RetryRound& r);
json to_json(const FactorTrial& t);

/// Adds "schema_version" and "command" to a top-level document.
json document(std::string_view command);

}  // namespace shorlat::io
