// Command-line frontend: pair classification, witness construction,
// exhaustive verification, sweeps and counting with machine-readable
// output. Exit codes: 0 ok, 1 discrepancy/counterexample, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicyclic/analysis.hpp"
#include "bicyclic/classifier.hpp"
#include "bicyclic/json_io.hpp"
#include "bicyclic/numtheory.hpp"
#include "bicyclic/oracle.hpp"

namespace {

using bicyclic::io::json;
using bicyclic::io::make_envelope;
using u64 = std::uint64_t;

namespace ana = bicyclic::ana;
namespace cls = bicyclic::cls;
namespace grp = bicyclic::grp;
namespace orc = bicyclic::orc;

void emit(const json& envelope) { std::cout << envelope.dump(2) << "\n"; }

int run_classify(u64 m, u64 n, bool tsv) {
  const auto c = cls::classify_pair(m, n);
  const bool nilpotent = cls::is_nilpotent_pair(m, n);
  const bool singular = cls::is_singular_pair(m, n);
  const bool cyclic = cls::is_cyclic_pair(m, n);
  if (tsv) {
    std::cout << "m\tn\tnilpotent_pair\tsingular_pair\tcyclic_pair\tcase\n"
              << m << "\t" << n << "\t" << nilpotent << "\t" << singular
              << "\t" << cyclic << "\t"
              << (c.success ? cls::to_string(*c.success)
                            : cls::to_string(*c.failure))
              << "\n";
    return 0;
  }
  json result = {{"nilpotent_pair", nilpotent},
                 {"singular_pair", singular},
                 {"cyclic_pair", cyclic},
                 {"classification", bicyclic::io::to_json(c)}};
  emit(make_envelope("classify", {{"m", m}, {"n", n}}, result, "ok"));
  return 0;
}

int run_witness(u64 m, u64 n, bool abelian_failure) {
  ana::BicyclicWitness w;
  cls::CommutatorCertificate cert;
  if (abelian_failure) {
    w = cls::build_nonabelian_witness(m, n);
    cert = cls::noncommuting_pair(w);
  } else {
    w = cls::build_nonnilpotent_witness(m, n);
    cert = cls::noncommuting_coprime_pair(w);
  }
  json result = {{"witness", bicyclic::io::to_json(w)},
                 {"gen_a_order", w.group->element_order(w.gen_a)},
                 {"gen_b_order", w.group->element_order(w.gen_b)},
                 {"certificate", bicyclic::io::to_json(cert)}};
  emit(make_envelope("witness",
                     {{"m", m}, {"n", n}, {"abelian_failure", abelian_failure}},
                     result, "ok"));
  return 0;
}

int run_verify(u64 m, u64 n, u64 order_cap) {
  const auto report = orc::verify_pair_exhaustive(m, n, order_cap);
  const bool discrepancy = !report.consistent() || !report.algorithms_agree;
  emit(make_envelope("verify", {{"m", m}, {"n", n}, {"order_cap", order_cap}},
                     bicyclic::io::to_json(report),
                     discrepancy ? "counterexample" : "ok"));
  return discrepancy ? 1 : 0;
}

int run_sweep(u64 max, u64 order_cap, unsigned workers,
              const std::string& mode) {
  json params = {
      {"max", max}, {"order_cap", order_cap}, {"workers", workers},
      {"mode", mode}};
  bool ok = true;
  json result;
  if (mode == "lemma") {
    const auto res = orc::sweep_lemma_equivalence(max, workers);
    ok = res.ok;
    result = bicyclic::io::to_json(res);
  } else if (mode == "corollaries") {
    const auto res = orc::sweep_corollaries(max, order_cap, workers);
    ok = res.ok;
    result = bicyclic::io::to_json(res);
  } else if (mode == "theorem") {
    const auto res = orc::sweep_theorem(max, order_cap, workers);
    ok = res.ok;
    result = bicyclic::io::to_json(res);
  } else {
    throw CLI::ValidationError("sweep", "unknown mode: " + mode);
  }
  emit(make_envelope("sweep", params, result, ok ? "ok" : "counterexample"));
  return ok ? 0 : 1;
}

int run_count(u64 max, u64 step, bool tsv) {
  if (max == 0 || step == 0)
    throw std::invalid_argument("count: max and table-step must be positive");
  std::vector<orc::PairCounts> rows;
  for (u64 x = step; x <= max; x += step) rows.push_back(orc::count_pairs(x));
  if (rows.empty() || rows.back().x != max)
    rows.push_back(orc::count_pairs(max));

  if (tsv) {
    std::cout << "x\tnilpotent_pairs\tsingular_pairs\tcyclic_pairs\t"
                 "cyclic_numbers\terdos_estimate\n";
    for (const auto& row : rows) {
      std::cout << row.x << "\t" << row.nilpotent_pairs << "\t"
                << row.singular_pairs << "\t" << row.cyclic_pairs << "\t"
                << row.cyclic_numbers << "\t";
      if (row.x >= 16)
        std::cout << orc::erdos_estimate(row.x);
      std::cout << "\n";
    }
    return 0;
  }
  json table = json::array();
  for (const auto& row : rows) {
    json entry = bicyclic::io::to_json(row);
    // Asymptotic companion column, only meaningful from x = 16 on.
    if (row.x >= 16)
      entry["erdos_estimate"] = orc::erdos_estimate(row.x);
    else
      entry["erdos_estimate"] = nullptr;
    table.push_back(std::move(entry));
  }
  emit(make_envelope("count", {{"max", max}, {"table_step", step}},
                     {{"rows", table}}, "ok"));
  return 0;
}

int run_group(u64 m, u64 n, u64 r, u64 s) {
  auto g = grp::make_holder_group(m, n, r, s);
  ana::GroupScan scan(g);
  json histogram = json::object();
  for (const auto& [order, count] : scan.histogram())
    histogram[std::to_string(order)] = count;
  const bool nil_coprime = scan.nilpotent_coprime();
  const bool nil_sylow = scan.nilpotent_sylow();
  json result = {{"presentation", g->describe()},
                 {"order", g->order()},
                 {"abelian", scan.abelian()},
                 {"nilpotent", nil_coprime},
                 {"nilpotent_sylow", nil_sylow},
                 {"cyclic", scan.cyclic()},
                 {"order_histogram", histogram}};
  const bool agree = nil_coprime == nil_sylow;
  emit(make_envelope("group", {{"m", m}, {"n", n}, {"r", r}, {"s", s}},
                     result, agree ? "ok" : "counterexample"));
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicyclic pair classification, witnesses and verification"};
  app.require_subcommand(1);

  u64 m = 1, n = 1, r = 1, s = 0;
  u64 order_cap = orc::kDefaultExhaustiveCap;
  u64 max = 24, step = 1;
  unsigned workers = 0;
  bool tsv = false, json_flag = false, abelian_failure = false;
  std::string mode = "theorem";

  auto* classify = app.add_subcommand("classify", "pair predicate verdicts");
  classify->add_option("m", m, "first order")->required();
  classify->add_option("n", n, "second order")->required();
  classify->add_flag("--json", json_flag, "JSON output (default)");
  classify->add_flag("--tsv", tsv, "TSV output");

  auto* witness = app.add_subcommand("witness", "constructive witness group");
  witness->add_option("m", m, "first order")->required();
  witness->add_option("n", n, "second order")->required();
  witness->add_flag("--abelian-failure", abelian_failure,
                    "non-abelian nilpotent witness instead of non-nilpotent");

  auto* verify = app.add_subcommand("verify", "exhaustive pair verification");
  verify->add_option("m", m, "first order")->required();
  verify->add_option("n", n, "second order")->required();
  verify->add_option("--order-cap", order_cap, "max group order scanned");

  auto* sweep = app.add_subcommand("sweep", "grid sweep");
  sweep->add_option("--max", max, "grid bound");
  sweep->add_option("--order-cap", order_cap, "max group order scanned");
  sweep->add_option("--workers", workers, "worker threads (0 = hardware)");
  sweep->add_option("--mode", mode, "theorem | lemma | corollaries");

  auto* count = app.add_subcommand("count", "pair counting tables");
  count->add_option("--max", max, "largest x");
  count->add_option("--table-step", step, "row step");
  count->add_flag("--tsv", tsv, "TSV output");

  auto* group = app.add_subcommand("group", "inspect one presentation");
  group->add_option("m", m, "normal generator order")->required();
  group->add_option("n", n, "quotient order")->required();
  group->add_option("r", r, "conjugation multiplier")->required();
  group->add_option("s", s, "extension offset")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return run_classify(m, n, tsv);
    if (witness->parsed()) return run_witness(m, n, abelian_failure);
    if (verify->parsed()) return run_verify(m, n, order_cap);
    if (sweep->parsed()) return run_sweep(max, order_cap, workers, mode);
    if (count->parsed()) return run_count(max, step, tsv);
    if (group->parsed()) return run_group(m, n, r, s);
  } catch (const std::exception& e) {
    emit(make_envelope(app.get_subcommands().front()->get_name(), json::object(),
                       {{"message", e.what()}}, "error"));
    return 2;
  }
  return 2;
}
