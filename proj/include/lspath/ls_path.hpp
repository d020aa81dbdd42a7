#ifndef LSPATH_LS_PATH_HPP
#define LSPATH_LS_PATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "lspath/path_vector.hpp"
#include "lspath/poset.hpp"
#include "lspath/rational.hpp"

namespace lsp {

// Nonnegative rational function on the poset with totally ordered support
// whose bond-weighted partial sums are integers; degree = total mass.
struct LSPath {
  PathVector values;
  long degree = 0;

  bool is_zero() const { return values.is_zero(); }
  bool operator==(const LSPath& o) const { return degree == o.degree && values == o.values; }
  bool operator!=(const LSPath& o) const { return !(*this == o); }
};

// Canonical order: (degree, support index sequence, value sequence). Index
// order refines (length, label), so a support chain is listed bottom-up.
bool path_less(const LSPath& a, const LSPath& b);

struct PathLess {
  bool operator()(const LSPath& a, const LSPath& b) const { return path_less(a, b); }
};

// Formal product of degree-1 paths; standard when consecutive supports meet
// the max <= min condition.
struct PathMonomial {
  std::vector<LSPath> factors;
};

bool is_standard(const BondedPoset& poset, const PathMonomial& m);

// The three defining conditions, with bonds between consecutive support
// elements taken as extended bonds.
bool is_ls_path(const BondedPoset& poset, const PathVector& values, long degree);

// Validating constructor; throws errkind::not_an_ls_path.
LSPath make_ls_path(const BondedPoset& poset, const PathVector& values);

LSPath extremal_path(Elem e, long degree);

long width(const BondedPoset& poset, const LSPath& path);  // errkind::zero_path

// All LS paths of degree r with support inside the chain, in canonical order.
std::vector<LSPath> enumerate_on_chain(const BondedPoset& poset, const Chain& chain, long r,
                                       const EnumLimits& limits = {});

// All LS paths of degree r, in canonical order.
std::vector<LSPath> enumerate(const BondedPoset& poset, long r, const EnumLimits& limits = {});

// Unique standard factorization into degree-1 paths (greedy mass peeling,
// each factor re-validated; falls back to exhaustive search).
std::vector<LSPath> decompose_degree_one(const BondedPoset& poset, const LSPath& path);

// Standard monomial with the same sum as the given factors; requires all
// supports inside one chain (errkind::non_comparable_supports).
PathMonomial canonical_form(const BondedPoset& poset, const PathMonomial& monomial);

// For degree-1 paths of width >= 2: pi' = (1-a1)s1 + a1 s2 and
// pi'' = (a1+a2)s2 + rest; both are LS paths and s1 * pi'' is the canonical
// form of pi' * pi.
std::pair<LSPath, LSPath> split_head(const BondedPoset& poset, const LSPath& path);

// Z-basis of the lattice generated by LS(C) inside Q^C, with membership
// queries. Basis rows are kept in Hermite-reduced form.
class ChainLattice {
 public:
  ChainLattice(const BondedPoset& poset, const Chain& chain);

  const std::vector<PathVector>& basis() const { return basis_; }
  bool contains(const PathVector& v) const;

 private:
  Chain chain_;
  std::vector<PathVector> basis_;
  std::vector<std::vector<Integer>> hnf_;  // rows over chain coordinates, scaled by denom_
  Integer denom_ = 1;
};

}  // namespace lsp

#endif
