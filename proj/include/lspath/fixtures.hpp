#ifndef LSPATH_FIXTURES_HPP
#define LSPATH_FIXTURES_HPP

#include <string>
#include <vector>

#include "lspath/poset.hpp"

namespace lsp::fixtures {

// Small posets shared by the unit tests and the acceptance suite.

BondedPoset one_element();

// e < s with bond 3 (the degree-3 line).
BondedPoset a1_bond3();

// e < x < y < z with bonds (1, 2, 1).
BondedPoset chain4_121();

// Two middles between the extrema, bonds (2,3) and (3,2): gcds agree.
BondedPoset diamond_ok();

// Two middles with bonds (2,2) and (3,3): the gcd condition fails.
BondedPoset diamond_bad();

// Three incomparable middles between the extrema, all bonds 1.
BondedPoset antichain3();

// The poset of 2-subsets of {1..4} with componentwise order, all bonds 1.
BondedPoset i24();

// Hexagonal interval with bond-2 edges crossing in the middle.
BondedPoset hexagon();

struct NamedPoset {
  std::string name;
  BondedPoset poset;
};

// Everything above except the gcd-violating diamond.
std::vector<NamedPoset> all_valid();

}  // namespace lsp::fixtures

#endif
