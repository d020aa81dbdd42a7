#include "lspath/valuation.hpp"

#include <algorithm>
#include <set>

namespace lsp {

namespace {

void require_maximal_chain(const BondedPoset& poset, const Chain& chain) {
  if (chain.empty() || !poset.is_chain(chain) || chain.front() != poset.min_element() ||
      chain.back() != poset.max_element() ||
      static_cast<int>(chain.size()) != poset.top_length() + 1)
    fail(errkind::not_a_chain, "a maximal chain is required");
}

}  // namespace

PathVector nu_zero(const BondedPoset& poset, const Chain& chain, const PathVector& v) {
  require_maximal_chain(poset, chain);
  PathVector out;
  for (const auto& [e, q] : v.entries()) {
    Elem target = chain[static_cast<std::size_t>(poset.length(e))];
    out.set(target, out.at(target) + q);
  }
  return out;
}

int h_index(const BondedPoset& poset, const Chain& chain, const LSPath& path) {
  require_maximal_chain(poset, chain);
  Elem off_max = -1;
  for (const auto& [e, q] : path.values.entries()) {
    (void)q;
    if (std::find(chain.begin(), chain.end(), e) == chain.end()) off_max = e;
  }
  if (off_max == -1) return -1;
  for (std::size_t h = 0; h < chain.size(); ++h)
    if (poset.lt(off_max, chain[h])) return static_cast<int>(h);
  fail(errkind::no_such_element, "no chain element above the off-chain maximum");
}

Cmp chain_rlex_compare(const Chain& chain, const PathVector& v, const PathVector& w) {
  for (std::size_t i = chain.size(); i-- > 0;) {
    Rational a = v.at(chain[i]);
    Rational b = w.at(chain[i]);
    if (a != b) return a < b ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

LSPath quasi_valuation_discrete(const BondedPoset& poset, const AlgebraElement& x,
                                const LinearExtension& ext) {
  if (x.is_zero()) fail(errkind::zero_element, "the quasi-valuation of zero is undefined");
  const LSPath* best = nullptr;
  for (const auto& [p, c] : x.terms()) {
    (void)c;
    if (best == nullptr || rlex_compare(p.values, best->values, ext) == Cmp::LT) best = &p;
  }
  (void)poset;
  return *best;
}

EstimateReport check_estimate(const BondedPoset& poset, const Chain& chain,
                              const ChainValuationData& data, const std::vector<LSPath>& paths) {
  require_maximal_chain(poset, chain);
  EstimateReport report;
  for (const auto& p : paths) {
    auto it = data.values.find(p);
    if (it == data.values.end())
      fail(errkind::missing_value, "no declared valuation value for a path");
    const PathVector& value = it->second;
    int h = h_index(poset, chain, p);
    if (h == -1) {
      if (value != p.values) {
        report.ok = false;
        report.failures.push_back({p, "on-chain path whose value differs from the path"});
      }
      continue;
    }
    // residual = value - nu_zero(p) - chain[h] / M_{chain[h]}; the part of the
    // residual on coordinates h..N must be rlex-nonnegative.
    PathVector residual = value - nu_zero(poset, chain, p.values);
    Elem sigma_h = chain[static_cast<std::size_t>(h)];
    residual.set(sigma_h, residual.at(sigma_h) - Rational(1, poset.lcm_bonds(sigma_h)));
    bool bad = false;
    for (std::size_t i = chain.size(); i-- > static_cast<std::size_t>(h);) {
      Rational c = residual.at(chain[i]);
      if (c > 0) break;
      if (c < 0) {
        bad = true;
        break;
      }
    }
    // Any residual coordinate off the chain disqualifies the value outright.
    for (const auto& [e, q] : residual.entries()) {
      if (q == 0) continue;
      if (std::find(chain.begin(), chain.end(), e) == chain.end()) bad = true;
    }
    if (bad) {
      report.ok = false;
      report.failures.push_back({p, "off-chain path whose value misses the required excess"});
    }
  }
  return report;
}

PathVector min_over_chains(const BondedPoset& poset,
                           const std::map<Chain, PathVector>& per_chain_values,
                           const LinearExtension& ext, const EnumLimits& limits) {
  auto chains = poset.maximal_chains(limits);
  const PathVector* best = nullptr;
  for (const auto& chain : chains) {
    auto it = per_chain_values.find(chain);
    if (it == per_chain_values.end())
      fail(errkind::missing_chain, "a maximal chain has no declared value");
    if (best == nullptr || rlex_compare(it->second, *best, ext) == Cmp::LT) best = &it->second;
  }
  if (best == nullptr) fail(errkind::missing_chain, "poset has no maximal chains");
  return *best;
}

std::map<long, std::vector<PathVector>> newton_okounkov_levels(
    const std::map<long, std::vector<PathVector>>& value_sets) {
  std::map<long, std::vector<PathVector>> out;
  for (const auto& [r, values] : value_sets) {
    if (r < 1) fail(errkind::not_an_ls_path, "levels are indexed by positive degrees");
    std::set<PathVector> scaled;
    for (const auto& v : values) {
      PathVector s = v;
      s *= Rational(1, r);
      scaled.insert(std::move(s));
    }
    out[r] = {scaled.begin(), scaled.end()};
  }
  return out;
}

}  // namespace lsp
