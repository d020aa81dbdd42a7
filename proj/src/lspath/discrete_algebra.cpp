#include "lspath/discrete_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "lspath/json_io.hpp"

namespace lsp {

void AlgebraElement::add_term(const LSPath& path, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(path, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, q] : terms_) q *= c;
  return *this;
}

AlgebraElement multiply_discrete(const BondedPoset& poset, const AlgebraElement& x,
                                 const AlgebraElement& y) {
  poset.ensure_gcd_condition();
  AlgebraElement out;
  for (const auto& [p, cp] : x.terms()) {
    for (const auto& [q, cq] : y.terms()) {
      PathVector sum = p.values + q.values;
      if (!poset.is_chain(sum.support())) continue;  // non-comparable supports: product is 0
      out.add_term(LSPath{sum, p.degree + q.degree}, cp * cq);
    }
  }
  return out;
}

WeightSystem WeightSystem::from_labels(
    const BondedPoset& poset, const std::map<std::string, std::vector<long>>& values) {
  WeightSystem ws;
  ws.assignment.resize(poset.size());
  ws.rank = values.empty() ? 0 : static_cast<int>(values.begin()->second.size());
  for (Elem e = 0; e < poset.size(); ++e) {
    auto it = values.find(poset.label(e));
    if (it == values.end())
      fail(errkind::missing_value, "no weight for element '" + poset.label(e) + "'");
    if (static_cast<int>(it->second.size()) != ws.rank)
      fail(errkind::parse_error, "weight vectors have mixed ranks");
    ws.assignment[e] = it->second;
  }
  return ws;
}

WeightValue weight_of(const WeightSystem& ws, const LSPath& path) {
  WeightValue out;
  out.weight.assign(ws.rank, Rational(0));
  for (const auto& [e, q] : path.values.entries())
    for (int i = 0; i < ws.rank; ++i) out.weight[i] += q * Rational(ws.assignment[e][i]);
  for (const auto& c : out.weight)
    if (!is_integer(c)) out.integral = false;
  return out;
}

EffectivityReport check_effective(const BondedPoset& poset, const WeightSystem& ws, long r_max,
                                  const EnumLimits& limits) {
  EffectivityReport report;
  for (long r = 1; r <= r_max; ++r) {
    auto paths = enumerate(poset, r, limits);
    for (Elem e = 0; e < poset.size(); ++e) {
      std::vector<Rational> target(ws.rank, Rational(0));
      for (int i = 0; i < ws.rank; ++i) target[i] = Rational(r) * Rational(ws.assignment[e][i]);
      LSPath extremal = extremal_path(e, r);
      for (const auto& p : paths) {
        if (p == extremal) continue;
        if (weight_of(ws, p).weight == target) {
          report.effective = false;
          report.collisions.push_back({e, r, p});
        }
      }
    }
  }
  return report;
}

std::vector<LSPath> ideal_basis_below(const BondedPoset& poset, Elem tau, long r,
                                      const EnumLimits& limits) {
  if (tau < 0 || tau >= poset.size()) fail(errkind::unknown_element, "index out of range");
  std::vector<LSPath> out;
  for (const auto& p : enumerate(poset, r, limits)) {
    if (p.is_zero()) continue;
    Elem top = p.values.entries().back().first;
    if (!poset.leq(top, tau)) out.push_back(p);
  }
  return out;
}

namespace {

bool same_unordered(const LSPath& a1, const LSPath& a2, const LSPath& b1, const LSPath& b2) {
  return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

}  // namespace

const TableEntry* StraighteningTable::find(const BondedPoset&, const LSPath& a,
                                           const LSPath& b) const {
  for (const auto& entry : entries)
    if (same_unordered(entry.lhs1, entry.lhs2, a, b)) return &entry;
  return nullptr;
}

StraighteningTable discrete_table(const BondedPoset& poset, const std::vector<LSPath>& generators) {
  StraighteningTable table;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i; j < generators.size(); ++j) {
      const LSPath& a = generators[i];
      const LSPath& b = generators[j];
      if (is_standard(poset, PathMonomial{{a, b}}) || is_standard(poset, PathMonomial{{b, a}}))
        continue;
      TableEntry entry{a, b, {}};
      PathVector sum = a.values + b.values;
      if (poset.is_chain(sum.support())) {
        auto factors = decompose_degree_one(poset, make_ls_path(poset, sum));
        entry.rhs.push_back({Rational(1), TableMonomial{factors[0], factors[1]}});
      }
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

AxiomReport verify_ls_axioms(const BondedPoset& poset, const StraighteningTable& table,
                             const std::vector<LSPath>& generators, const WeightSystem* ws,
                             const AxiomCheckOptions& opts) {
  AxiomReport report;
  auto flag = [&](const std::string& axiom, std::size_t entry, const std::string& detail) {
    report.ok = false;
    report.violations.push_back({axiom, entry, detail});
  };

  // Coverage: every nonstandard degree-2 monomial over the generators.
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i; j < generators.size(); ++j) {
      const LSPath& a = generators[i];
      const LSPath& b = generators[j];
      if (a.degree != 1 || b.degree != 1) fail(errkind::missing_entry, "generators must have degree 1");
      if (is_standard(poset, PathMonomial{{a, b}}) || is_standard(poset, PathMonomial{{b, a}}))
        continue;
      if (table.find(poset, a, b) == nullptr)
        fail(errkind::missing_entry,
             "no straightening entry for " + path_to_json(poset, a).dump() + " * " +
                 path_to_json(poset, b).dump());
    }
  }

  for (std::size_t idx = 0; idx < table.entries.size(); ++idx) {
    const auto& entry = table.entries[idx];
    PathVector lhs_sum = entry.lhs1.values + entry.lhs2.values;
    bool comparable = poset.is_chain(lhs_sum.support());

    for (const auto& [coeff, mon] : entry.rhs) {
      if (coeff == 0) continue;
      // (i) targets are standard monomials
      if (!is_standard(poset, PathMonomial{{mon.first, mon.second}})) {
        fail(errkind::non_standard_target, "entry " + std::to_string(idx));
      }
      PathVector rhs_sum = mon.first.values + mon.second.values;
      // (ii) LS2: lhs sum is triangle-below-or-equal every target sum
      TriCmp c = triangle_compare(poset, lhs_sum, rhs_sum);
      if (c != TriCmp::LT && c != TriCmp::EQ)
        flag("ls2", idx, "target sum not above the product sum");
      // (v) strict factor inequalities
      for (const LSPath* f : {&entry.lhs1, &entry.lhs2}) {
        if (triangle_compare(poset, f->values, mon.second.values) != TriCmp::LT)
          flag("factor-inequality", idx, "factor not strictly below the top target factor");
      }
      // (iv) weight homogeneity
      if (ws != nullptr) {
        auto wl = weight_of(*ws, LSPath{lhs_sum, 2});
        auto wr = weight_of(*ws, LSPath{rhs_sum, 2});
        if (wl.weight != wr.weight) flag("weights", idx, "relation is not weight-homogeneous");
      }
    }

    // (iii) LS3: for comparable supports the canonical form appears, with
    // coefficient 1 under the strict option.
    if (comparable) {
      ++report.ls3_instances;
      auto factors = decompose_degree_one(poset, make_ls_path(poset, lhs_sum));
      bool found = false;
      for (const auto& [coeff, mon] : entry.rhs) {
        if (mon.first == factors[0] && mon.second == factors[1]) {
          found = true;
          std::ostringstream label;
          label << path_to_json(poset, LSPath{lhs_sum, 2}).dump();
          report.canonical_coefficients.emplace_back(label.str(), rat_to_string(coeff));
          if (coeff == 0 || (opts.strict_canonical_coefficient && coeff != 1))
            flag("ls3", idx, "canonical form has coefficient " + rat_to_string(coeff));
        }
      }
      if (!found) flag("ls3", idx, "canonical form missing from the relation");
    }
  }
  return report;
}

}  // namespace lsp
