#ifndef LSPATH_DISCRETE_ALGEBRA_HPP
#define LSPATH_DISCRETE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lspath/ls_path.hpp"
#include "lspath/orders.hpp"
#include "lspath/poset.hpp"
#include "lspath/rational.hpp"

namespace lsp {

// Finite rational combination of LS paths (the standard monomial basis).
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement basis(const LSPath& path) {
    AlgebraElement x;
    x.add_term(path, Rational(1));
    return x;
  }

  void add_term(const LSPath& path, const Rational& coeff);
  const std::map<LSPath, Rational, PathLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<LSPath, Rational, PathLess> terms_;
};

// Product in the discrete LS algebra: basis paths multiply to the path sum
// when their supports are comparable and to zero otherwise.
AlgebraElement multiply_discrete(const BondedPoset& poset, const AlgebraElement& x,
                                 const AlgebraElement& y);

// Grading by a free abelian group Z^m via values on the extremal paths.
struct WeightSystem {
  int rank = 0;
  std::vector<std::vector<long>> assignment;  // per element index

  static WeightSystem from_labels(const BondedPoset& poset,
                                  const std::map<std::string, std::vector<long>>& values);
};

struct WeightValue {
  std::vector<Rational> weight;
  bool integral = true;
};

WeightValue weight_of(const WeightSystem& ws, const LSPath& path);

struct EffectivityCollision {
  Elem element;
  long degree;
  LSPath other;  // distinct path sharing the weight r * lambda(element)
};

struct EffectivityReport {
  bool effective = true;
  std::vector<EffectivityCollision> collisions;
};

EffectivityReport check_effective(const BondedPoset& poset, const WeightSystem& ws, long r_max,
                                  const EnumLimits& limits = {});

// Degree-r basis paths spanning I_tau in degree r: those whose maximal
// support element is not below tau.
std::vector<LSPath> ideal_basis_below(const BondedPoset& poset, Elem tau, long r,
                                      const EnumLimits& limits = {});

// Straightening data for degree-2 relations: each nonstandard product of two
// declared degree-1 generators expands into standard degree-2 monomials.
struct TableMonomial {
  LSPath first, second;  // standard order: max supp first <= min supp second
};

struct TableEntry {
  LSPath lhs1, lhs2;
  std::vector<std::pair<Rational, TableMonomial>> rhs;
};

struct StraighteningTable {
  std::vector<TableEntry> entries;

  const TableEntry* find(const BondedPoset& poset, const LSPath& a, const LSPath& b) const;
};

// The table of the discrete algebra itself: canonical form or zero.
StraighteningTable discrete_table(const BondedPoset& poset, const std::vector<LSPath>& generators);

struct AxiomViolation {
  std::string axiom;  // "standard-target", "ls2", "ls3", "weights", "factor-inequality"
  std::size_t entry;
  std::string detail;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
  // Canonical-form coefficients observed in LS3 instances (path, coefficient
  // as string); informative when the lenient flag accepts values != 1.
  std::vector<std::pair<std::string, std::string>> canonical_coefficients;
  std::size_t ls3_instances = 0;
};

struct AxiomCheckOptions {
  bool strict_canonical_coefficient = true;  // LS3 demands coefficient 1
};

// Checks LS2/LS3, weight homogeneity, and the strict factor inequalities on
// a table covering all nonstandard degree-2 monomials over the generators.
AxiomReport verify_ls_axioms(const BondedPoset& poset, const StraighteningTable& table,
                             const std::vector<LSPath>& generators,
                             const WeightSystem* ws = nullptr, const AxiomCheckOptions& opts = {});

}  // namespace lsp

#endif
