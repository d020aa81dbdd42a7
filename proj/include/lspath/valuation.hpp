#ifndef LSPATH_VALUATION_HPP
#define LSPATH_VALUATION_HPP

#include <map>
#include <string>
#include <vector>

#include "lspath/discrete_algebra.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/orders.hpp"
#include "lspath/path_vector.hpp"
#include "lspath/poset.hpp"

namespace lsp {

// Projection of a vector onto a maximal chain by length: every coordinate
// moves to the chain element of the same length. Additive; fixes vectors
// supported on the chain.
PathVector nu_zero(const BondedPoset& poset, const Chain& chain, const PathVector& v);

// -1 when supp(path) lies inside the chain, else the least h with
// chain[h] > max(supp \ chain).
int h_index(const BondedPoset& poset, const Chain& chain, const LSPath& path);

// Reverse-lex comparison of two vectors supported on one maximal chain, in
// chain coordinates (top coordinate decides).
Cmp chain_rlex_compare(const Chain& chain, const PathVector& v, const PathVector& w);

// The minimum-path quasi-valuation of the discrete algebra: the rlex-minimal
// basis path with nonzero coefficient.
LSPath quasi_valuation_discrete(const BondedPoset& poset, const AlgebraElement& x,
                                const LinearExtension& ext);

// Declared valuation values of degree-1 paths along one maximal chain.
struct ChainValuationData {
  Chain chain;
  std::map<LSPath, PathVector, PathLess> values;
};

struct EstimateFailure {
  LSPath path;
  std::string reason;
};

struct EstimateReport {
  bool ok = true;
  std::vector<EstimateFailure> failures;
};

// Checks the two-case estimate for the declared values: on-chain paths must
// have value equal to themselves; off-chain paths must dominate
// nu_zero(path) + chain[h]/M_{chain[h]} modulo contributions below h.
EstimateReport check_estimate(const BondedPoset& poset, const Chain& chain,
                              const ChainValuationData& data, const std::vector<LSPath>& paths);

// Pointwise rlex minimum over all maximal chains; every maximal chain of the
// poset must be present as a key.
PathVector min_over_chains(const BondedPoset& poset,
                           const std::map<Chain, PathVector>& per_chain_values,
                           const LinearExtension& ext, const EnumLimits& limits = {});

// Level r of the Newton-Okounkov body: the degree-r values divided by r.
std::map<long, std::vector<PathVector>> newton_okounkov_levels(
    const std::map<long, std::vector<PathVector>>& value_sets);

}  // namespace lsp

#endif
