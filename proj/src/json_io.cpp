#include "bicyclic/json_io.hpp"

namespace bicyclic::io {

json to_json(const grp::GroupElement& e) { return json(e.coords); }

json to_json(const ana::BicyclicWitness& w) {
  return {{"group", w.group->describe()},
          {"order", w.group->order()},
          {"gen_a", to_json(w.gen_a)},
          {"gen_b", to_json(w.gen_b)},
          {"m", w.m},
          {"n", w.n},
          {"intersection_size", w.intersection_size}};
}

json to_json(const cls::PairClassification& c) {
  json out = {{"m", c.m},
              {"n", c.n},
              {"satisfies_condition", c.satisfies_condition}};
  if (c.success) {
    out["case"] = cls::to_string(*c.success);
    if (c.shared_prime != 0) out["shared_prime"] = c.shared_prime;
  } else {
    out["case"] = cls::to_string(*c.failure);
    if (c.failure == cls::FailureCase::OddCross) {
      out["p"] = c.p;
      out["q"] = c.q;
      out["direction"] = c.direction == cls::CrossDirection::PDividesQMinus1
                             ? "p_divides_q_minus_1"
                             : "q_divides_p_minus_1";
    }
    if (c.orientation)
      out["orientation"] = c.orientation == cls::ParityOrientation::MEvenNOdd
                               ? "m_even_n_odd"
                               : "n_even_m_odd";
  }
  return out;
}

json to_json(const cls::CommutatorCertificate& cert) {
  return {{"a1", to_json(cert.a1)},
          {"b1", to_json(cert.b1)},
          {"order_a1", cert.order_a1},
          {"order_b1", cert.order_b1},
          {"commutator", to_json(cert.commutator)}};
}

json to_json(const orc::VerificationReport& r) {
  json counterexamples = json::array();
  for (const auto& ce : r.counterexamples) {
    counterexamples.push_back({{"presentation",
                                {{"m", ce.presentation.m},
                                 {"n", ce.presentation.n},
                                 {"r", ce.presentation.r},
                                 {"s", ce.presentation.s}}},
                               {"witness", to_json(ce.witness)}});
  }
  return {{"m", r.m},
          {"n", r.n},
          {"predicate", r.predicate},
          {"orders_scanned", r.orders_scanned},
          {"presentations_scanned", r.presentations_scanned},
          {"realizations_found", r.realizations_found},
          {"groups_realized", r.groups_realized},
          {"all_nilpotent", r.all_nilpotent},
          {"all_abelian", r.all_abelian},
          {"all_cyclic", r.all_cyclic},
          {"algorithms_agree", r.algorithms_agree},
          {"counterexamples", counterexamples},
          {"universe", r.universe}};
}

json to_json(const orc::PairCounts& c) {
  return {{"x", c.x},
          {"nilpotent_pairs", c.nilpotent_pairs},
          {"singular_pairs", c.singular_pairs},
          {"cyclic_pairs", c.cyclic_pairs},
          {"cyclic_numbers", c.cyclic_numbers}};
}

namespace {
json discrepancies_to_json(const std::vector<orc::Discrepancy>& ds) {
  json out = json::array();
  for (const auto& d : ds)
    out.push_back({{"m", d.m}, {"n", d.n}, {"detail", d.detail}});
  return out;
}
}  // namespace

json to_json(const orc::LemmaSweepResult& r) {
  json out = {{"ok", r.ok},
              {"pairs_checked", r.pairs_checked},
              {"pairs_satisfying", r.pairs_satisfying}};
  if (r.first_discrepancy)
    out["first_discrepancy"] = {{"m", r.first_discrepancy->m},
                                {"n", r.first_discrepancy->n},
                                {"detail", r.first_discrepancy->detail}};
  return out;
}

json to_json(const orc::TheoremSweepReport& r) {
  return {{"ok", r.ok},
          {"pairs_total", r.pairs_total},
          {"pairs_satisfying", r.pairs_satisfying},
          {"pairs_failing", r.pairs_failing},
          {"presentations_scanned", r.presentations_scanned},
          {"realizations_found", r.realizations_found},
          {"witnesses_verified", r.witnesses_verified},
          {"discrepancies", discrepancies_to_json(r.discrepancies)}};
}

json to_json(const orc::CorollarySweepReport& r) {
  return {{"ok", r.ok},
          {"singular_pairs_checked", r.singular_pairs_checked},
          {"cyclic_pairs_checked", r.cyclic_pairs_checked},
          {"nonabelian_witnesses", r.nonabelian_witnesses},
          {"noncyclic_checks", r.noncyclic_checks},
          {"discrepancies", discrepancies_to_json(r.discrepancies)}};
}

json make_envelope(const std::string& command, json parameters, json result,
                   const std::string& status) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"status", status}};
}

namespace {

bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

std::string validate_at(const json& value, const json& schema,
                        const std::string& path) {
  if (schema.contains("type") &&
      !type_matches(value, schema["type"].get<std::string>()))
    return path + ": expected type " + schema["type"].get<std::string>();
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) found = true;
    if (!found) return path + ": value not in enum";
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>()))
        return path + ": missing required key " + key.get<std::string>();
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (!value.contains(key)) continue;
      if (auto err = validate_at(value[key], sub, path + "/" + key);
          !err.empty())
        return err;
    }
  }
  if (schema.contains("items") && value.is_array()) {
    std::size_t i = 0;
    for (const auto& item : value) {
      if (auto err = validate_at(item, schema["items"],
                                 path + "/" + std::to_string(i));
          !err.empty())
        return err;
      ++i;
    }
  }
  return "";
}

}  // namespace

std::string validate_against_schema(const json& value, const json& schema) {
  return validate_at(value, schema, "#");
}

}  // namespace bicyclic::io
