#include <doctest.h>

#include <set>

#include "lspath/fixtures.hpp"
#include "lspath/grassmannian.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/oracles.hpp"
#include "lspath/valuation.hpp"

using namespace lsp;

namespace {

PathVector vec(const BondedPoset& p,
               std::initializer_list<std::pair<const char*, Rational>> entries) {
  PathVector v;
  for (const auto& [label, value] : entries) v.set(p.index_of(label), value);
  return v;
}

AlgebraElement coordinate(const Grassmannian& g, const char* label) {
  return AlgebraElement::basis(extremal_path(g.poset().index_of(label), 1));
}

}  // namespace

TEST_CASE("component-wise posets") {
  Grassmannian g24(2, 4);
  CHECK(g24.poset().size() == 6);
  CHECK(g24.poset().top_length() == 4);
  CHECK(oracle::posets_isomorphic(g24.poset(), fixtures::i24()));

  Grassmannian g14(1, 4);
  CHECK(g14.poset().size() == 4);
  CHECK(g14.poset().top_length() == 3);

  Grassmannian g25(2, 5);
  CHECK(g25.poset().size() == 10);
  CHECK(g25.poset().top_length() == 6);
}

TEST_CASE("minors and the vanishing pattern") {
  Grassmannian g(2, 4);
  auto p12 = g.minor(g.poset().index_of("12"), g.full_pattern());
  CHECK(p12.term_count() == 2);
  // x11*x22 - x12*x21
  Polynomial expect(8);
  {
    Monomial m(8, 0);
    m[0] = 1;  // x11
    m[5] = 1;  // x22
    expect.add_term(m, Rational(1));
    Monomial m2(8, 0);
    m2[1] = 1;  // x12
    m2[4] = 1;  // x21
    expect.add_term(m2, Rational(-1));
  }
  CHECK(p12 == expect);

  // vanishing: the patterned minor is zero exactly off the lower interval
  for (Elem tau = 0; tau < g.poset().size(); ++tau) {
    auto pattern = g.pattern_of(tau);
    for (Elem sigma = 0; sigma < g.poset().size(); ++sigma) {
      bool vanishes = g.minor(sigma, pattern).is_zero();
      CHECK(vanishes == !g.poset().leq(sigma, tau));
    }
  }
}

TEST_CASE("three-term straightening relation of G(2,4)") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  auto rel = g.straighten({p.index_of("14"), p.index_of("23")});
  REQUIRE(rel.terms().size() == 2);
  AlgebraElement expect;
  expect.add_term(LSPath{vec(p, {{"13", Rational(1)}, {"24", Rational(1)}}), 2}, Rational(1));
  expect.add_term(LSPath{vec(p, {{"12", Rational(1)}, {"34", Rational(1)}}), 2}, Rational(-1));
  CHECK(rel == expect);

  // standard monomials straighten to themselves
  auto std_in = g.straighten({p.index_of("12"), p.index_of("34")});
  REQUIRE(std_in.terms().size() == 1);
  CHECK(std_in.terms().begin()->second == 1);
  CHECK(std_in.terms().begin()->first.values == vec(p, {{"12", Rational(1)}, {"34", Rational(1)}}));
}

TEST_CASE("the same relation sits inside G(2,5)") {
  Grassmannian g(2, 5);
  const auto& p = g.poset();
  auto rel = g.straighten({p.index_of("14"), p.index_of("23")});
  REQUIRE(rel.terms().size() == 2);
  AlgebraElement expect;
  expect.add_term(LSPath{vec(p, {{"13", Rational(1)}, {"24", Rational(1)}}), 2}, Rational(1));
  expect.add_term(LSPath{vec(p, {{"12", Rational(1)}, {"34", Rational(1)}}), 2}, Rational(-1));
  CHECK(rel == expect);
}

TEST_CASE("full verification of the LS structure of G(2,4)") {
  Grassmannian g(2, 4);
  auto report = g.verify_ls(2);
  CHECK(report.ok);
  REQUIRE(report.degrees.size() == 2);
  CHECK(report.degrees[0].standard_count == 6);
  CHECK(report.degrees[0].rank == 6);
  CHECK(report.degrees[1].standard_count == 20);
  CHECK(report.degrees[1].rank == 20);
  CHECK(report.nonstandard_pairs == 1);
  CHECK(report.axioms.ok);
  CHECK(report.effectivity.effective);
  CHECK(report.ls3_instances == 0);  // bonds 1: no comparable nonstandard pairs
}

TEST_CASE("strict factor inequalities hold in every computed relation") {
  for (auto [d, n] : {std::pair<int, int>{2, 4}, {2, 5}}) {
    Grassmannian g(d, n);
    const auto& p = g.poset();
    auto table = g.straightening_table();
    for (const auto& entry : table.entries) {
      for (const auto& [coeff, mon] : entry.rhs) {
        (void)coeff;
        CHECK(triangle_compare(p, entry.lhs1.values, mon.second.values) == TriCmp::LT);
        CHECK(triangle_compare(p, entry.lhs2.values, mon.second.values) == TriCmp::LT);
        // LS2 as well
        auto c = triangle_compare(p, entry.lhs1.values + entry.lhs2.values,
                                  mon.first.values + mon.second.values);
        CHECK((c == TriCmp::LT || c == TriCmp::EQ));
      }
    }
  }
}

TEST_CASE("chain valuations fix the chain coordinates") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  for (const auto& chain : p.maximal_chains()) {
    for (Elem tau : chain) {
      auto value = g.chain_valuation(AlgebraElement::basis(extremal_path(tau, 1)), chain);
      CHECK(value == PathVector::unit(tau));
    }
  }
}

TEST_CASE("chain valuation of a standard on-chain monomial is additive") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  Chain chain = p.maximal_chains()[0];  // 12 13 14 24 34
  auto prod = g.straighten({p.index_of("12"), p.index_of("34")});
  auto value = g.chain_valuation(prod, chain);
  CHECK(value == vec(p, {{"12", Rational(1)}, {"34", Rational(1)}}));
}

TEST_CASE("off-chain coordinate value and the estimate") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  Chain chain = p.maximal_chains()[0];  // 12 13 14 24 34
  LSPath p23 = extremal_path(p.index_of("23"), 1);
  auto value = g.chain_valuation(AlgebraElement::basis(p23), chain);

  // golden value: 13 - 14 + 24
  CHECK(value == vec(p, {{"13", Rational(1)}, {"14", Rational(-1)}, {"24", Rational(1)}}));

  // dominates the bare projection nu_zero(23) = 14
  CHECK(chain_rlex_compare(chain, value, nu_zero(p, chain, p23.values)) == Cmp::GT);
  CHECK(h_index(p, chain, p23) == 3);

  ChainValuationData data;
  data.chain = chain;
  data.values[p23] = value;
  for (Elem tau : chain) data.values[extremal_path(tau, 1)] = PathVector::unit(tau);
  std::vector<LSPath> paths{p23};
  for (Elem tau : chain) paths.push_back(extremal_path(tau, 1));
  CHECK(check_estimate(p, chain, data, paths).ok);
}

TEST_CASE("estimate holds for every coordinate along every chain") {
  for (auto [d, n] : {std::pair<int, int>{2, 4}, {2, 5}}) {
    Grassmannian g(d, n);
    const auto& p = g.poset();
    for (const auto& chain : p.maximal_chains()) {
      ChainValuationData data;
      data.chain = chain;
      std::vector<LSPath> paths;
      for (Elem e = 0; e < p.size(); ++e) {
        LSPath path = extremal_path(e, 1);
        data.values[path] = g.chain_valuation(AlgebraElement::basis(path), chain);
        paths.push_back(path);
      }
      auto report = check_estimate(p, chain, data, paths);
      INFO(d, "x", n);
      CHECK(report.ok);
    }
  }
}

TEST_CASE("valuation axioms: additivity, positivity, minimum rule") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  auto chains = p.maximal_chains();
  auto paths1 = enumerate(p, 1);

  for (const auto& chain : chains) {
    // positivity on degree <= 2 basis elements
    for (long r = 1; r <= 2; ++r) {
      for (const auto& q : enumerate(p, r)) {
        auto v = g.chain_valuation(AlgebraElement::basis(q), chain);
        CHECK(chain_rlex_compare(chain, v, PathVector{}) == Cmp::GT);
      }
    }
    // additivity on products of degree-1 coordinates
    for (const auto& a : paths1) {
      for (const auto& b : paths1) {
        Elem ea = a.values.entries()[0].first;
        Elem eb = b.values.entries()[0].first;
        auto va = g.chain_valuation(AlgebraElement::basis(a), chain);
        auto vb = g.chain_valuation(AlgebraElement::basis(b), chain);
        auto vab = g.chain_valuation_poly(
            g.minor(ea, g.full_pattern()) * g.minor(eb, g.full_pattern()), 2, chain);
        CHECK(vab == va + vb);
      }
    }
  }

  // minimum rule on a sum with distinct values
  Chain chain = chains[0];
  auto f = g.minor(p.index_of("23"), g.full_pattern()) + g.minor(p.index_of("14"), g.full_pattern());
  auto vf = g.chain_valuation_poly(f, 1, chain);
  auto v23 = g.chain_valuation(coordinate(g, "23"), chain);
  auto v14 = g.chain_valuation(coordinate(g, "14"), chain);
  REQUIRE(v23 != v14);
  auto lesser = chain_rlex_compare(chain, v23, v14) == Cmp::LT ? v23 : v14;
  CHECK(vf == lesser);
}

TEST_CASE("quasi-valuation reproduces paths and dominates nonstandard products") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();

  for (Elem e = 0; e < p.size(); ++e)
    CHECK(g.quasi_valuation(AlgebraElement::basis(extremal_path(e, 1))) == PathVector::unit(e));

  auto nonstd = g.straighten({p.index_of("14"), p.index_of("23")});
  auto value = g.quasi_valuation(nonstd);
  CHECK(value == vec(p, {{"13", Rational(1)}, {"24", Rational(1)}}));
  auto naive = vec(p, {{"14", Rational(1)}, {"23", Rational(1)}});
  CHECK(rlex_compare(value, naive, default_extension(p)) == Cmp::GT);

  auto std_prod = g.straighten({p.index_of("12"), p.index_of("24")});
  CHECK(g.quasi_valuation(std_prod) == vec(p, {{"12", Rational(1)}, {"24", Rational(1)}}));
}

TEST_CASE("leading terms of straightenings degenerate to the discrete product") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  auto ext = default_extension(p);
  auto paths1 = enumerate(p, 1);
  for (const auto& a : paths1) {
    for (const auto& b : paths1) {
      Elem ea = a.values.entries()[0].first;
      Elem eb = b.values.entries()[0].first;
      auto expansion = g.straighten({ea, eb});
      auto discrete = multiply_discrete(p, AlgebraElement::basis(a), AlgebraElement::basis(b));
      if (!discrete.is_zero()) {
        // comparable supports: the discrete product is the leading term with
        // coefficient one
        auto lead = quasi_valuation_discrete(p, expansion, ext);
        CHECK(AlgebraElement::basis(lead) == discrete);
        CHECK(expansion.terms().at(lead) == 1);
      } else {
        // non-comparable: every term sits strictly above the naive sum
        for (const auto& [term, coeff] : expansion.terms()) {
          (void)coeff;
          CHECK(triangle_compare(p, a.values + b.values, term.values) == TriCmp::LT);
        }
      }
    }
  }
}

TEST_CASE("scalar invariance and ring membership errors") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  Chain chain = p.maximal_chains()[0];
  auto pat = g.pattern_of(p.max_element());
  auto f = g.minor(p.index_of("23"), pat);
  auto scaled = Rational(7) * f;
  CHECK(g.chain_valuation_poly(f, 1, chain) == g.chain_valuation_poly(scaled, 1, chain));

  // a raw matrix entry is not a combination of minors
  Polynomial stray = Polynomial::variable(8, 0);
  CHECK_THROWS_WITH_AS(g.chain_valuation_poly(stray, 1, chain), doctest::Contains("not-in-ring"),
                       Error);

  CHECK_THROWS_WITH_AS(Grassmannian(3, 3), doctest::Contains("too-large"), Error);
  CHECK_THROWS_WITH_AS(Grassmannian(2, 12), doctest::Contains("too-large"), Error);
}

TEST_CASE("values along foreign chains dominate the path") {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  auto chains = p.maximal_chains();
  for (const auto& q : enumerate(p, 1)) {
    for (const auto& chain : chains) {
      auto value = g.chain_valuation(AlgebraElement::basis(q), chain);
      bool on_chain = true;
      for (const auto& [e, coeff] : q.values.entries()) {
        (void)coeff;
        if (std::find(chain.begin(), chain.end(), e) == chain.end()) on_chain = false;
      }
      if (on_chain) {
        CHECK(value == q.values);
      } else {
        CHECK(rlex_compare(value, q.values, default_extension(p)) == Cmp::GT);
      }
    }
  }
}
