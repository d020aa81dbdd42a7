#ifndef LSPATH_WEYL_HPP
#define LSPATH_WEYL_HPP

#include <string>
#include <vector>

#include "lspath/ls_path.hpp"
#include "lspath/poset.hpp"
#include "lspath/rational.hpp"

namespace lsp {

// Weights live in fundamental-weight coordinates (pairings with the simple
// coroots), roots in simple-root coordinates; both integral.
using Weight = std::vector<long>;
using RootCoords = std::vector<long>;

// Finite root system from its Cartan matrix; the symmetrization is
// normalized so that long roots in each simple component have squared
// length 2.
class RootSystem {
 public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  // cartan[i][j] = pairing of alpha_j against the coroot of alpha_i.
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  const Rational& half_square_length(int i) const { return d_[i]; }  // (a_i, a_i)/2

  Rational inner(const Weight& mu, const RootCoords& beta) const;
  Rational square_length(const RootCoords& beta) const;
  // Integer pairing <mu, beta_vee>; throws if it is not integral.
  long pairing(const Weight& mu, const RootCoords& beta) const;

  Weight simple_reflect(const Weight& mu, int i) const;
  Weight reflect(const Weight& mu, const RootCoords& beta) const;

  bool is_dominant(const Weight& mu) const;

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<Rational> d_;
  std::vector<RootCoords> positive_;
};

struct OrbitElement {
  Weight weight;      // sigma(lambda)
  int length = 0;     // length of the minimal coset representative
  std::vector<int> reduced_word;  // simple reflections from lambda, last applied first
};

// The weight orbit with coset-representative lengths, sorted by
// (length, weight).
std::vector<OrbitElement> weight_orbit(const RootSystem& rs, const Weight& lambda,
                                       std::size_t max_size = 100000);

std::string weight_label(const Weight& mu);
Weight weight_from_label(const std::string& label, int rank);

// The Bruhat interval below tau (the full quotient when tau is absent) as a
// bonded poset: covers are the reflection edges raising length by one, the
// bond on a cover being the pairing of the lower weight against the
// reflecting coroot.
BondedPoset bruhat_poset(const RootSystem& rs, const Weight& lambda,
                         const Weight* tau = nullptr, std::size_t max_orbit = 100000);

// Pair presentation of a degree-1 path: strictly decreasing elements with
// strictly increasing rational break points 0 = a_0 < ... < a_r = 1.
struct LittelmannPair {
  std::vector<Elem> elements_desc;
  std::vector<Rational> breaks;
};

LSPath littelmann_to_function(const BondedPoset& poset, const LittelmannPair& pair);
LittelmannPair littelmann_from_function(const BondedPoset& poset, const LSPath& path);

Integer weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace lsp

#endif
