#ifndef LSPATH_ORACLES_HPP
#define LSPATH_ORACLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lspath/ls_path.hpp"
#include "lspath/orders.hpp"
#include "lspath/path_vector.hpp"
#include "lspath/poset.hpp"

namespace lsp::oracle {

// Brute-force reference implementations used only to check the library; all
// of them work from raw cover lists or exhaustive search, never through the
// code paths they certify.

// Reachability closure from the raw cover list.
std::vector<std::vector<bool>> closure_from_covers(std::size_t n,
                                                   const std::vector<std::pair<int, int>>& covers);

// Every maximal source-to-sink chain has the same length per endpoint.
bool graded_by_exhaustion(std::size_t n, const std::vector<std::pair<int, int>>& covers);

// All maximal chains by raw DFS over the cover list, as label sequences.
std::vector<std::vector<std::string>> maximal_chains_by_dfs(const BondedPoset& poset);

// All standard degree-one decompositions found by exhaustive search.
std::vector<std::vector<LSPath>> all_standard_decompositions(const BondedPoset& poset,
                                                             const LSPath& path);

// Triangle order decided by quantifying over every linear extension, with a
// self-contained topological-sort enumerator.
TriCmp triangle_by_extensions(const BondedPoset& poset, const PathVector& v, const PathVector& w);

// Bond- and cover-preserving isomorphism search.
bool posets_isomorphic(const BondedPoset& a, const BondedPoset& b);

}  // namespace lsp::oracle

#endif
