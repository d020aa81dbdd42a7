// Command-line front end: reads poset/path/element JSON, dispatches to the
// library, and emits one deterministic JSON document per invocation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lspath/acceptance.hpp"
#include "lspath/discrete_algebra.hpp"
#include "lspath/grassmannian.hpp"
#include "lspath/json_io.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/order_complex.hpp"
#include "lspath/orders.hpp"
#include "lspath/valuation.hpp"
#include "lspath/weyl.hpp"

namespace {

using lsp::Json;

lsp::EnumLimits limits_from_env() {
  lsp::EnumLimits limits;
  if (const char* raw = std::getenv("LSPATH_MAX_CHAINS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) {
      limits.max_chains = v;
      limits.max_interval_chains = v;
      limits.max_paths = v;
    }
  }
  return limits;
}

lsp::Chain parse_chain(const lsp::BondedPoset& poset, const std::string& csv) {
  lsp::Chain chain;
  std::istringstream is(csv);
  std::string label;
  while (std::getline(is, label, ',')) chain.push_back(poset.index_of(label));
  if (!poset.is_chain(chain)) lsp::fail(lsp::errkind::not_a_chain, "'" + csv + "' is not a chain");
  return chain;
}

std::vector<long> parse_weight(const std::string& csv) {
  std::vector<long> weight;
  std::istringstream is(csv);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      weight.push_back(std::stol(part));
    } catch (const std::exception&) {
      lsp::fail(lsp::errkind::parse_error, "bad weight '" + csv + "'");
    }
  }
  return weight;
}

void emit(const Json& body) {
  Json doc = body;
  doc["schema_version"] = 1;
  std::cout << doc.dump(2) << "\n";
}

std::string cmp_name(lsp::Cmp c) {
  switch (c) {
    case lsp::Cmp::LT: return "LT";
    case lsp::Cmp::EQ: return "EQ";
    default: return "GT";
  }
}

std::string tricmp_name(lsp::TriCmp c) {
  switch (c) {
    case lsp::TriCmp::LT: return "LT";
    case lsp::TriCmp::EQ: return "EQ";
    case lsp::TriCmp::GT: return "GT";
    default: return "INCOMPARABLE";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact LS-path combinatorics over posets with bonds"};
  app.require_subcommand(1);
  auto limits = limits_from_env();

  std::string poset_file, lhs_file, rhs_file, chain_csv, type_rank, weight_csv, tau_label;
  std::string emit_file, monomial_csv, element_file, values_file, table_file;
  long degree = 1;
  int gd = 2, gn = 4;
  long max_degree = 2;
  bool quick = false;
  int only = 0;

  auto* poset_check = app.add_subcommand("poset-check", "validate a poset and its bond gcds");
  poset_check->add_option("--poset", poset_file, "poset JSON file")->required();

  auto* paths_enum = app.add_subcommand("paths-enum", "enumerate LS paths of a degree");
  paths_enum->add_option("--poset", poset_file)->required();
  paths_enum->add_option("--degree", degree)->required();
  paths_enum->add_option("--chain", chain_csv, "restrict to a chain (comma-separated labels)");

  auto* order_compare = app.add_subcommand("order-compare", "compare two rational vectors");
  order_compare->add_option("--poset", poset_file)->required();
  order_compare->add_option("--lhs", lhs_file, "path-vector JSON file")->required();
  order_compare->add_option("--rhs", rhs_file, "path-vector JSON file")->required();

  auto* complex_levels = app.add_subcommand("complex-levels", "level points of the order complex");
  complex_levels->add_option("--poset", poset_file)->required();
  complex_levels->add_option("--degree", degree)->required();

  auto* complex_embed = app.add_subcommand("complex-embed", "vertex matrix of a chain simplex");
  complex_embed->add_option("--poset", poset_file)->required();
  complex_embed->add_option("--chain", chain_csv)->required();

  auto* discrete_multiply = app.add_subcommand("discrete-multiply",
                                               "product in the discrete algebra");
  discrete_multiply->add_option("--poset", poset_file)->required();
  discrete_multiply->add_option("--lhs", lhs_file, "element JSON file")->required();
  discrete_multiply->add_option("--rhs", rhs_file, "element JSON file")->required();

  auto* valuation_check = app.add_subcommand("valuation-check",
                                             "check declared chain values against the estimate");
  valuation_check->add_option("--poset", poset_file)->required();
  valuation_check->add_option("--chain", chain_csv)->required();
  valuation_check->add_option("--values", values_file,
                              "JSON: {\"values\": [{\"path\":..., \"value\":...}]}")
      ->required();

  auto* schubert = app.add_subcommand("schubert", "Bruhat interval with bonds from a root system");
  schubert->add_option("--type", type_rank, "e.g. B2, A3")->required();
  schubert->add_option("--weight", weight_csv, "dominant weight, e.g. 1,0")->required();
  schubert->add_option("--tau", tau_label, "orbit point label bounding the interval");
  schubert->add_option("--emit", emit_file, "also write the poset JSON to this file");

  auto* gr_straighten = app.add_subcommand("grassmann-straighten",
                                           "standard expansion of a product of minors");
  gr_straighten->add_option("--d", gd)->required();
  gr_straighten->add_option("--n", gn)->required();
  gr_straighten->add_option("--monomial", monomial_csv, "e.g. 14,23")->required();

  auto* gr_valuation = app.add_subcommand("grassmann-valuation",
                                          "chain valuation (or the min over all chains)");
  gr_valuation->add_option("--d", gd)->required();
  gr_valuation->add_option("--n", gn)->required();
  gr_valuation->add_option("--element", element_file, "element JSON file");
  gr_valuation->add_option("--monomial", monomial_csv, "product of coordinates, e.g. 14,23");
  gr_valuation->add_option("--chain", chain_csv, "maximal chain; omit to take the minimum");

  auto* gr_verify = app.add_subcommand("grassmann-verify", "verify the LS structure");
  gr_verify->add_option("--d", gd)->required();
  gr_verify->add_option("--n", gn)->required();
  gr_verify->add_option("--max-degree", max_degree);

  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");
  acceptance->add_flag("--quick", quick, "restrict degree sweeps to r <= 2");
  acceptance->add_option("--table-override", table_file, "straightening table JSON for criterion 3");
  acceptance->add_option("--only", only, "run a single criterion (1-10)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*poset_check) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      auto report = poset.verify_gcd_condition(limits);
      if (!report.ok) {
        const auto& v = report.violations.front();
        lsp::fail(lsp::errkind::gcd_condition,
                  "interval [" + poset.label(v.lower) + ", " + poset.label(v.upper) +
                      "] has chain gcds " + std::to_string(v.gcd1) + " and " +
                      std::to_string(v.gcd2));
      }
      Json body;
      body["ok"] = true;
      body["elements"] = poset.size();
      body["length"] = poset.top_length();
      body["maximal_chains"] = poset.maximal_chains(limits).size();
      emit(body);
    } else if (*paths_enum) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      std::vector<lsp::LSPath> paths;
      if (chain_csv.empty()) {
        paths = lsp::enumerate(poset, degree, limits);
      } else {
        paths = lsp::enumerate_on_chain(poset, parse_chain(poset, chain_csv), degree, limits);
      }
      Json arr = Json::array();
      for (const auto& p : paths) arr.push_back(lsp::path_to_json(poset, p));
      Json body;
      body["count"] = paths.size();
      body["paths"] = arr;
      emit(body);
    } else if (*order_compare) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      auto lhs = lsp::path_vector_from_json(poset, lsp::load_json_file(lhs_file));
      auto rhs = lsp::path_vector_from_json(poset, lsp::load_json_file(rhs_file));
      Json body;
      body["rlex"] = cmp_name(lsp::rlex_compare(lhs, rhs, lsp::default_extension(poset)));
      body["triangle"] = tricmp_name(lsp::triangle_compare(poset, lhs, rhs));
      emit(body);
    } else if (*complex_levels) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      Json arr = Json::array();
      for (const auto& v : lsp::level_points(poset, degree, limits))
        arr.push_back(lsp::path_vector_to_json(poset, v));
      Json body;
      body["degree"] = degree;
      body["points"] = arr;
      emit(body);
    } else if (*complex_embed) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      auto chain = parse_chain(poset, chain_csv);
      auto emb = lsp::simplex_embedding(poset, chain);
      Json rows = Json::array();
      for (const auto& v : emb.vertex_images) rows.push_back(v);
      Json body;
      body["chain"] = chain_csv;
      body["vertex_images"] = rows;
      emit(body);
    } else if (*discrete_multiply) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      auto lhs = lsp::element_from_json(poset, lsp::load_json_file(lhs_file));
      auto rhs = lsp::element_from_json(poset, lsp::load_json_file(rhs_file));
      Json body;
      body["product"] = lsp::element_to_json(poset, lsp::multiply_discrete(poset, lhs, rhs));
      emit(body);
    } else if (*valuation_check) {
      auto poset = lsp::poset_from_json(lsp::load_json_file(poset_file));
      auto chain = parse_chain(poset, chain_csv);
      auto doc = lsp::load_json_file(values_file);
      lsp::ChainValuationData data;
      data.chain = chain;
      std::vector<lsp::LSPath> paths;
      if (!doc.contains("values") || !doc.at("values").is_array())
        lsp::fail(lsp::errkind::parse_error, "values file needs a \"values\" array");
      for (const auto& item : doc.at("values")) {
        auto path = lsp::path_from_json(poset, item.at("path"));
        data.values[path] = lsp::path_vector_from_json(poset, item.at("value"));
        paths.push_back(path);
      }
      auto report = lsp::check_estimate(poset, chain, data, paths);
      Json failures = Json::array();
      for (const auto& f : report.failures)
        failures.push_back({{"path", lsp::path_to_json(poset, f.path)}, {"reason", f.reason}});
      Json body;
      body["ok"] = report.ok;
      body["failures"] = failures;
      emit(body);
    } else if (*schubert) {
      if (type_rank.size() < 2) lsp::fail(lsp::errkind::unsupported_type, "use e.g. --type B2");
      char type = type_rank[0];
      int rank = std::stoi(type_rank.substr(1));
      auto rs = lsp::RootSystem::build(type, rank);
      lsp::Weight lambda = parse_weight(weight_csv);
      std::optional<lsp::Weight> tau;
      if (!tau_label.empty()) tau = lsp::weight_from_label(tau_label, rank);
      auto poset = lsp::bruhat_poset(rs, lambda, tau ? &*tau : nullptr);
      Json body;
      body["poset"] = lsp::poset_to_json(poset);
      body["elements"] = poset.size();
      body["length"] = poset.top_length();
      if (!emit_file.empty()) {
        std::ofstream out(emit_file);
        out << body["poset"].dump(2) << "\n";
      }
      emit(body);
    } else if (*gr_straighten) {
      lsp::Grassmannian g(gd, gn);
      std::vector<lsp::Elem> monomial;
      {
        std::istringstream is(monomial_csv);
        std::string label;
        while (std::getline(is, label, ',')) monomial.push_back(g.poset().index_of(label));
      }
      auto expansion = g.straighten(monomial, std::max<long>(3, max_degree));
      Json terms = Json::array();
      for (const auto& [path, coeff] : expansion.terms()) {
        Json monomials = Json::array();
        for (const auto& f : lsp::decompose_degree_one(g.poset(), path))
          monomials.push_back(lsp::path_to_json(g.poset(), f));
        terms.push_back({{"coeff", lsp::rat_to_string(coeff)}, {"monomial", monomials}});
      }
      Json body;
      body["terms"] = terms;
      emit(body);
    } else if (*gr_valuation) {
      lsp::Grassmannian g(gd, gn);
      lsp::AlgebraElement x;
      if (!element_file.empty()) {
        x = lsp::element_from_json(g.poset(), lsp::load_json_file(element_file));
      } else if (!monomial_csv.empty()) {
        std::istringstream is(monomial_csv);
        std::string label;
        std::vector<lsp::Elem> monomial;
        while (std::getline(is, label, ',')) monomial.push_back(g.poset().index_of(label));
        x = g.straighten(monomial, std::max<long>(3, static_cast<long>(monomial.size())));
      } else {
        lsp::fail(lsp::errkind::parse_error, "provide --element or --monomial");
      }
      Json body;
      if (!chain_csv.empty()) {
        auto value = g.chain_valuation(x, parse_chain(g.poset(), chain_csv));
        body["chain"] = chain_csv;
        body["value"] = lsp::path_vector_to_json(g.poset(), value);
      } else {
        body["value"] = lsp::path_vector_to_json(g.poset(), g.quasi_valuation(x));
      }
      emit(body);
    } else if (*gr_verify) {
      lsp::Grassmannian g(gd, gn);
      auto report = g.verify_ls(max_degree);
      Json degrees = Json::array();
      for (const auto& d : report.degrees)
        degrees.push_back(
            {{"degree", d.degree}, {"standard_count", d.standard_count}, {"rank", d.rank}});
      Json body;
      body["ok"] = report.ok;
      body["degrees"] = degrees;
      body["nonstandard_pairs"] = report.nonstandard_pairs;
      body["axioms_ok"] = report.axioms.ok;
      body["effective"] = report.effectivity.effective;
      body["ls3_instances"] = report.ls3_instances;
      emit(body);
    } else if (*acceptance) {
      lsp::AcceptanceConfig config;
      config.quick = quick;
      config.only = only;
      if (!table_file.empty()) config.straightening_table_file = table_file;
      int failures = lsp::run_acceptance_suite(config, std::cout);
      return failures == 0 ? 0 : 1;
    }
  } catch (const lsp::Error& e) {
    Json body;
    body["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    body["schema_version"] = 1;
    std::cout << body.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json body;
    body["error"] = {{"kind", "internal"}, {"message", e.what()}};
    body["schema_version"] = 1;
    std::cout << body.dump(2) << "\n";
    return 1;
  }
  return 0;
}
