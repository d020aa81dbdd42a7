#ifndef LSPATH_ORDERS_HPP
#define LSPATH_ORDERS_HPP

#include <vector>

#include "lspath/path_vector.hpp"
#include "lspath/poset.hpp"

namespace lsp {

enum class Cmp { LT, EQ, GT };
enum class TriCmp { LT, EQ, GT, INCOMPARABLE };

// Total order on the elements refining the poset order. pos[e] is the rank of
// element e inside order.
struct LinearExtension {
  std::vector<Elem> order;
  std::vector<int> pos;
};

LinearExtension make_extension(const BondedPoset& poset, const std::vector<Elem>& order);

// Sort by (length, label); the identity on element indices.
LinearExtension default_extension(const BondedPoset& poset);

// Reverse lexicographic comparison of v and w: decide at the extension-
// maximal coordinate where they differ.
Cmp rlex_compare(const PathVector& v, const PathVector& w, const LinearExtension& ext);

// The order that holds for every refinement: compare at all poset-maximal
// differing coordinates; mixed signs there mean INCOMPARABLE.
TriCmp triangle_compare(const BondedPoset& poset, const PathVector& v, const PathVector& w);

// All linear extensions (topological sorts), lexicographic by label sequence.
std::vector<LinearExtension> linear_extensions(const BondedPoset& poset,
                                               const EnumLimits& limits = {});

}  // namespace lsp

#endif
