#include <doctest.h>

#include <numeric>
#include <set>

#include "lspath/fixtures.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/oracles.hpp"

using namespace lsp;

namespace {

PathVector vec(const BondedPoset& p,
               std::initializer_list<std::pair<const char*, Rational>> entries) {
  PathVector v;
  for (const auto& [label, value] : entries) v.set(p.index_of(label), value);
  return v;
}

Chain full_chain(const BondedPoset& p) { return p.maximal_chains().at(0); }

// e < x < y with bonds (1, 2), used by the decomposition examples.
BondedPoset chain3_12() {
  return BondedPoset::build({"e", "x", "y"}, {{"e", "x", 1}, {"x", "y", 2}});
}

}  // namespace

TEST_CASE("defining conditions") {
  auto p = fixtures::chain4_121();
  CHECK(is_ls_path(p, vec(p, {{"x", {1, 2}}, {"y", {1, 2}}}), 1));
  CHECK(!is_ls_path(p, vec(p, {{"e", {1, 2}}, {"x", {1, 2}}}), 1));  // bond 1 partial sum 1/2
  CHECK(!is_ls_path(p, vec(p, {{"x", {1, 2}}, {"y", {1, 2}}}), 2));  // wrong degree
  CHECK(!is_ls_path(p, vec(p, {{"x", Rational(-1)}, {"y", Rational(2)}}), 1));

  auto i24 = fixtures::i24();
  CHECK(!is_ls_path(i24, vec(i24, {{"14", {1, 2}}, {"23", {1, 2}}}), 1));  // support not a chain
  CHECK(is_ls_path(i24, vec(i24, {{"14", Rational(1)}}), 1));
  CHECK(is_ls_path(i24, PathVector{}, 0));
}

TEST_CASE("enumeration on a chain matches the spec counts") {
  auto a1 = fixtures::a1_bond3();
  auto paths = enumerate_on_chain(a1, full_chain(a1), 1);
  REQUIRE(paths.size() == 4);
  std::set<PathVector> got;
  for (const auto& q : paths) got.insert(q.values);
  std::set<PathVector> want{vec(a1, {{"e", Rational(1)}}),
                            vec(a1, {{"e", {2, 3}}, {"s", {1, 3}}}),
                            vec(a1, {{"e", {1, 3}}, {"s", {2, 3}}}),
                            vec(a1, {{"s", Rational(1)}})};
  CHECK(got == want);

  auto c = fixtures::chain4_121();
  auto paths2 = enumerate_on_chain(c, full_chain(c), 1);
  REQUIRE(paths2.size() == 5);  // matches the dimension of the so5 vector representation
  std::set<PathVector> got2;
  for (const auto& q : paths2) got2.insert(q.values);
  CHECK(got2.count(vec(c, {{"x", {1, 2}}, {"y", {1, 2}}})) == 1);
  CHECK(got2.count(vec(c, {{"e", Rational(1)}})) == 1);

  auto zero = enumerate_on_chain(c, full_chain(c), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_zero());
  CHECK(zero[0].degree == 0);
}

TEST_CASE("global enumeration") {
  auto i24 = fixtures::i24();
  CHECK(enumerate(i24, 1).size() == 6);
  CHECK(enumerate(i24, 2).size() == 20);

  auto pt = fixtures::one_element();
  for (long r = 0; r <= 3; ++r) {
    auto paths = enumerate(pt, r);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].values == (r ? vec(pt, {{"pt", Rational(r)}}) : PathVector{}));
  }

  // every enumerated path passes the validator
  for (const auto& [name, p] : fixtures::all_valid()) {
    INFO(name);
    for (long r = 0; r <= 3; ++r)
      for (const auto& q : enumerate(p, r)) CHECK(is_ls_path(p, q.values, r));
  }
}

TEST_CASE("degree-one decomposition examples") {
  auto c = chain3_12();
  auto pi = make_ls_path(c, vec(c, {{"e", Rational(1)}, {"x", {1, 2}}, {"y", {1, 2}}}));
  auto parts = decompose_degree_one(c, pi);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].values == vec(c, {{"e", Rational(1)}}));
  CHECK(parts[1].values == vec(c, {{"x", {1, 2}}, {"y", {1, 2}}}));

  auto xy = make_ls_path(c, vec(c, {{"x", Rational(1)}, {"y", Rational(1)}}));
  auto parts2 = decompose_degree_one(c, xy);
  REQUIRE(parts2.size() == 2);
  CHECK(parts2[0].values == vec(c, {{"x", Rational(1)}}));
  CHECK(parts2[1].values == vec(c, {{"y", Rational(1)}}));

  auto parts3 = decompose_degree_one(c, extremal_path(c.index_of("x"), 3));
  REQUIRE(parts3.size() == 3);
  for (const auto& f : parts3) CHECK(f.values == vec(c, {{"x", Rational(1)}}));
}

TEST_CASE("decomposition agrees with the exhaustive oracle") {
  for (const auto& [name, p] : fixtures::all_valid()) {
    INFO(name);
    if (p.size() > 6) continue;
    for (long r = 1; r <= 3; ++r) {
      for (const auto& pi : enumerate(p, r)) {
        auto parts = decompose_degree_one(p, pi);
        CHECK(parts.size() == static_cast<std::size_t>(r));
        PathVector sum;
        for (const auto& f : parts) {
          CHECK(is_ls_path(p, f.values, 1));
          sum += f.values;
        }
        CHECK(sum == pi.values);
        CHECK(is_standard(p, PathMonomial{parts}));
        auto all = oracle::all_standard_decompositions(p, pi);
        REQUIRE(all.size() == 1);  // the canonical form is unique
        CHECK(all[0] == parts);
      }
    }
  }
}

TEST_CASE("canonical form") {
  auto c = chain3_12();
  LSPath half = make_ls_path(c, vec(c, {{"x", {1, 2}}, {"y", {1, 2}}}));
  auto cf = canonical_form(c, PathMonomial{{half, half}});
  REQUIRE(cf.factors.size() == 2);
  CHECK(cf.factors[0].values == vec(c, {{"x", Rational(1)}}));
  CHECK(cf.factors[1].values == vec(c, {{"y", Rational(1)}}));

  // idempotent on standard monomials
  auto again = canonical_form(c, cf);
  CHECK(again.factors == cf.factors);

  LSPath sigma = extremal_path(c.index_of("x"), 1);
  auto square = canonical_form(c, PathMonomial{{sigma, sigma}});
  REQUIRE(square.factors.size() == 2);
  CHECK(square.factors[0] == sigma);
  CHECK(square.factors[1] == sigma);

  auto i24 = fixtures::i24();
  LSPath p14 = extremal_path(i24.index_of("14"), 1);
  LSPath p23 = extremal_path(i24.index_of("23"), 1);
  CHECK_THROWS_WITH_AS(canonical_form(i24, PathMonomial{{p14, p23}}),
                       doctest::Contains("non-comparable-supports"), Error);
}

TEST_CASE("splitting a path at its lowest support element") {
  auto c = fixtures::chain4_121();
  LSPath pi = make_ls_path(c, vec(c, {{"x", {1, 2}}, {"y", {1, 2}}}));
  auto [first, second] = split_head(c, pi);
  CHECK(first.values == vec(c, {{"x", {1, 2}}, {"y", {1, 2}}}));
  CHECK(second.values == vec(c, {{"y", Rational(1)}}));

  auto a1 = fixtures::a1_bond3();
  LSPath pa = make_ls_path(a1, vec(a1, {{"e", {2, 3}}, {"s", {1, 3}}}));
  auto [pa1, pa2] = split_head(a1, pa);
  CHECK(pa1.values == vec(a1, {{"e", {1, 3}}, {"s", {2, 3}}}));
  CHECK(pa2.values == vec(a1, {{"s", Rational(1)}}));

  CHECK_THROWS_WITH_AS(split_head(a1, extremal_path(0, 1)), doctest::Contains("width-one"), Error);

  // the companion factorization lemma, on every enumerated degree-1 path of
  // width >= 2
  for (const auto& [name, p] : fixtures::all_valid()) {
    INFO(name);
    for (const auto& q : enumerate(p, 1)) {
      if (q.values.entries().size() < 2) continue;
      auto [qa, qb] = split_head(p, q);
      CHECK(is_ls_path(p, qa.values, 1));
      CHECK(is_ls_path(p, qb.values, 1));
      auto cf = canonical_form(p, PathMonomial{{qa, q}});
      REQUIRE(cf.factors.size() == 2);
      CHECK(cf.factors[0] == extremal_path(q.values.entries()[0].first, 1));
      CHECK(cf.factors[1] == qb);
    }
  }
}

TEST_CASE("width-two paths swap and stretch") {
  for (const auto& [name, p] : fixtures::all_valid()) {
    INFO(name);
    for (const auto& q : enumerate(p, 1)) {
      const auto& entries = q.values.entries();
      if (entries.size() != 2) continue;
      Elem s = entries[0].first, t = entries[1].first;
      Rational a = entries[0].second, b = entries[1].second;
      PathVector swapped;
      swapped.set(s, b);
      swapped.set(t, a);
      CHECK(is_ls_path(p, swapped, 1));
      if (a >= Rational(1, 2)) {
        PathVector stretched;
        stretched.set(s, 2 * a - 1);
        stretched.set(t, 2 * b);
        CHECK(is_ls_path(p, stretched, 1));
      }
    }
  }
}

TEST_CASE("width") {
  auto c = fixtures::chain4_121();
  CHECK(width(c, extremal_path(c.index_of("x"), 1)) == 1);
  CHECK(width(c, make_ls_path(c, vec(c, {{"x", {1, 2}}, {"y", {1, 2}}}))) == 2);
  CHECK(width(c, make_ls_path(c, vec(c, {{"e", Rational(1)}, {"z", Rational(1)}}))) == 4);
  CHECK_THROWS_WITH_AS(width(c, LSPath{}), doctest::Contains("zero-path"), Error);
}

TEST_CASE("chain lattice membership") {
  auto a1 = fixtures::a1_bond3();
  Chain ca = full_chain(a1);
  ChainLattice la(a1, ca);
  CHECK(la.contains(vec(a1, {{"e", Rational(1)}})));
  CHECK(la.contains(vec(a1, {{"e", {1, 3}}, {"s", {2, 3}}})));
  CHECK(la.contains(vec(a1, {{"e", {1, 3}}, {"s", {-1, 3}}})));  // difference of generators
  CHECK(!la.contains(vec(a1, {{"e", {1, 3}}})));                 // non-integral total mass
  CHECK(!la.contains(vec(a1, {{"e", {1, 2}}, {"s", {1, 2}}})));

  auto i24 = fixtures::i24();
  Chain ci = full_chain(i24);
  ChainLattice li(i24, ci);
  REQUIRE(li.basis().size() == ci.size());  // bonds all 1: the standard lattice
  for (const auto& b : li.basis()) {
    CHECK(b.entries().size() == 1);
    CHECK(b.entries()[0].second == 1);
  }
}

TEST_CASE("paths on a chain are the nonnegative lattice points") {
  for (const auto& [name, p] : fixtures::all_valid()) {
    INFO(name);
    for (const auto& chain : p.maximal_chains()) {
      ChainLattice lattice(p, chain);
      long M = 1;
      for (Elem e : chain) M = std::lcm(M, p.lcm_bonds(e));
      for (long r = 1; r <= 3; ++r) {
        std::set<PathVector> paths;
        for (const auto& q : enumerate_on_chain(p, chain, r)) {
          CHECK(lattice.contains(q.values));
          paths.insert(q.values);
        }
        // all nonnegative vectors with entries in (1/M)Z and total mass r
        std::vector<PathVector> grid{PathVector{}};
        for (Elem e : chain) {
          std::vector<PathVector> next;
          for (const auto& base : grid) {
            Rational used = base.sum();
            for (long k = 0; frac(k, M) + used <= r; ++k) {
              PathVector v = base;
              if (k) v.set(e, frac(k, M));
              next.push_back(std::move(v));
            }
          }
          grid = std::move(next);
        }
        for (const auto& v : grid) {
          if (v.sum() != r) continue;
          CHECK(lattice.contains(v) == (paths.count(v) > 0));
        }
      }
    }
  }
}

TEST_CASE("splitting a width-three path") {
  // bonds (2, 4) admit the degree-1 path (1/2)e + (1/4)x + (1/4)y
  auto p = BondedPoset::build({"e", "x", "y"}, {{"e", "x", 2}, {"x", "y", 4}});
  PathVector v;
  v.set(p.index_of("e"), frac(1, 2));
  v.set(p.index_of("x"), frac(1, 4));
  v.set(p.index_of("y"), frac(1, 4));
  LSPath pi = make_ls_path(p, v);
  auto [first, second] = split_head(p, pi);
  PathVector w1;
  w1.set(p.index_of("e"), frac(1, 2));
  w1.set(p.index_of("x"), frac(1, 2));
  CHECK(first.values == w1);
  PathVector w2;
  w2.set(p.index_of("x"), frac(3, 4));
  w2.set(p.index_of("y"), frac(1, 4));
  CHECK(second.values == w2);
  auto cf = canonical_form(p, PathMonomial{{first, pi}});
  REQUIRE(cf.factors.size() == 2);
  CHECK(cf.factors[0] == extremal_path(p.index_of("e"), 1));
  CHECK(cf.factors[1] == second);
}
