#pragma once

// JSON serialization for CLI output plus a small schema checker used by
// the end-to-end tests. Field names are snake_case; presentations are
// serialized as {"m","n","r","s"} and direct products as {"product":[l,r]}.

#include <string>

#include "json.hpp"

#include "bicyclic/analysis.hpp"
#include "bicyclic/classifier.hpp"
#include "bicyclic/oracle.hpp"

namespace bicyclic::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

json to_json(const grp::GroupElement& e);
json to_json(const ana::BicyclicWitness& w);
json to_json(const cls::PairClassification& c);
json to_json(const cls::CommutatorCertificate& cert);
json to_json(const orc::VerificationReport& r);
json to_json(const orc::PairCounts& c);
json to_json(const orc::LemmaSweepResult& r);
json to_json(const orc::TheoremSweepReport& r);
json to_json(const orc::CorollarySweepReport& r);

// status: "ok", "counterexample" or "error".
json make_envelope(const std::string& command, json parameters, json result,
                   const std::string& status);

// Validates a value against the subset of JSON Schema used by
// docs/schema.json (type, required, properties, items, enum). On failure
// returns a human-readable reason, empty string on success.
std::string validate_against_schema(const json& value, const json& schema);

}  // namespace bicyclic::io
