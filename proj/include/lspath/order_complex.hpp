#ifndef LSPATH_ORDER_COMPLEX_HPP
#define LSPATH_ORDER_COMPLEX_HPP

#include <vector>

#include "lspath/ls_path.hpp"
#include "lspath/path_vector.hpp"
#include "lspath/poset.hpp"

namespace lsp {

// Affine embedding of the simplex of a chain c0 < ... < ck: vertex i maps to
// sum_{j<=i} b(c_{j-1}, c_j) e_j, so the bond data sits in the edge lengths.
struct SimplexEmbedding {
  Chain chain;
  std::vector<std::vector<Bond>> vertex_images;  // (k+1) vectors in Z^k

  // Image of a rational point of the simplex given by barycentric weights on
  // the chain (an element of Q^C with coordinate sum 1, or any scaling).
  std::vector<Rational> embed(const PathVector& point) const;
};

// All nonempty chains, in lexicographic order of their label sequences.
std::vector<Chain> faces(const BondedPoset& poset, const EnumLimits& limits = {});

SimplexEmbedding simplex_embedding(const BondedPoset& poset, const Chain& chain);

// The r-th level of the order complex: { pi/r : pi in LS_r }.
std::vector<PathVector> level_points(const BondedPoset& poset, long r,
                                     const EnumLimits& limits = {});

// Checks that i_K is a bijection between {pi/r : pi in LS_r(C)} and the
// (1/r)-lattice points of the embedded simplex, the lattice side enumerated
// from the simplex inequalities alone.
bool verify_integral_structure(const BondedPoset& poset, const Chain& chain, long r,
                               const EnumLimits& limits = {});

}  // namespace lsp

#endif
