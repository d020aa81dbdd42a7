#ifndef LSPATH_GRASSMANNIAN_HPP
#define LSPATH_GRASSMANNIAN_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lspath/discrete_algebra.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/orders.hpp"
#include "lspath/path_vector.hpp"
#include "lspath/polynomial.hpp"
#include "lspath/poset.hpp"

namespace lsp {

// Strictly increasing d-subset of {1..n}, the label alphabet of I(d,n).
using PlueckerIndex = std::vector<int>;

// Zero pattern of the generic matrix realizing the coordinate ring of a
// Schubert cone: row j may use columns 1..row_limit[j].
struct SchubertPattern {
  std::vector<int> row_limit;
};

// Coordinate ring of the Pluecker cone over G(d,n) realized inside the
// polynomial ring on d*n generic entries; straightening relations and chain
// valuations are computed by exact polynomial arithmetic and linear algebra.
class Grassmannian {
 public:
  Grassmannian(int d, int n, std::size_t max_elements = 1000);

  int d() const { return d_; }
  int n() const { return n_; }
  const BondedPoset& poset() const { return poset_; }

  const PlueckerIndex& subset_of(Elem e) const { return subsets_[e]; }
  Elem elem_of(const PlueckerIndex& idx) const;

  SchubertPattern full_pattern() const;
  SchubertPattern pattern_of(Elem tau) const;

  // Maximal minor on the columns of tau under the pattern; the zero
  // polynomial exactly when tau is incompatible with the pattern.
  Polynomial minor(Elem tau, const SchubertPattern& pattern) const;

  // Multichains of length r inside S_{<= top}: the degree-r standard
  // monomial basis of the quotient below top.
  std::vector<std::vector<Elem>> multichains(Elem top, long r) const;

  // Polynomial realization of a basis path (product of the minors of its
  // canonical factors) under the pattern of `top`.
  Polynomial expand_path(const LSPath& path, Elem top) const;
  Polynomial expand_element(const AlgebraElement& x, Elem top) const;

  // Product of the named minors written in the standard monomial basis, by
  // an exact linear solve; errkind::solve_failed if the system degenerates.
  AlgebraElement straighten(const std::vector<Elem>& monomial, long max_degree = 3) const;

  // The epsilon weight system: tau is weighted by the indicator vector of
  // its column set in Z^n.
  WeightSystem epsilon_weights() const;

  struct VerifyDegree {
    long degree = 0;
    std::size_t standard_count = 0;
    std::size_t rank = 0;
  };
  struct VerifyReport {
    bool ok = true;
    std::vector<VerifyDegree> degrees;      // LS1: rank equals count
    std::size_t nonstandard_pairs = 0;      // straightened at degree 2
    AxiomReport axioms;                     // LS2 and factor inequalities
    EffectivityReport effectivity;          // epsilon weights are effective
    std::size_t ls3_instances = 0;          // none arise when all bonds are 1
  };
  VerifyReport verify_ls(long r_max) const;

  StraighteningTable straightening_table() const;  // all nonstandard degree-2 pairs

  // Valuation along a maximal chain via the divide-and-localize recursion;
  // the value of the minor of tau is tau itself for every tau on the chain.
  PathVector chain_valuation(const AlgebraElement& x, const Chain& chain) const;
  PathVector chain_valuation_poly(Polynomial x, long degree, const Chain& chain) const;

  // Minimum of the chain valuations under reverse-lex for the extension.
  PathVector quasi_valuation(const AlgebraElement& x) const;
  PathVector quasi_valuation(const AlgebraElement& x, const LinearExtension& ext) const;

 private:
  struct SpanBasis {
    std::vector<std::vector<Elem>> chains;
    std::vector<Polynomial> expansions;
  };
  const SpanBasis& span_basis(Elem top, long degree) const;
  bool in_span(const Polynomial& f, Elem top, long degree) const;

  int var_of(int row, int col) const { return row * n_ + col; }

  int d_ = 0, n_ = 0;
  BondedPoset poset_;
  std::vector<PlueckerIndex> subsets_;
  mutable std::map<std::pair<Elem, long>, SpanBasis> span_cache_;
};

}  // namespace lsp

#endif
