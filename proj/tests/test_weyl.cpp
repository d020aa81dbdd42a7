#include <doctest.h>

#include <set>

#include "lspath/fixtures.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/oracles.hpp"
#include "lspath/weyl.hpp"

using namespace lsp;

TEST_CASE("root systems have the classical positive root counts") {
  CHECK(RootSystem::build('A', 1).positive_roots().size() == 1);
  CHECK(RootSystem::build('A', 3).positive_roots().size() == 6);
  CHECK(RootSystem::build('B', 2).positive_roots().size() == 4);
  CHECK(RootSystem::build('C', 3).positive_roots().size() == 9);
  CHECK(RootSystem::build('D', 4).positive_roots().size() == 12);
  CHECK(RootSystem::build('G', 2).positive_roots().size() == 6);
  CHECK(RootSystem::build('F', 4).positive_roots().size() == 24);
  CHECK(RootSystem::build('E', 6).positive_roots().size() == 36);
  CHECK_THROWS_WITH_AS(RootSystem::build('H', 3), doctest::Contains("unsupported-type"), Error);
}

TEST_CASE("normalization puts long roots at squared length two") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(a1.square_length({1}) == 2);
  CHECK(a1.pairing({1}, {1}) == 1);  // <omega, alpha_vee>

  auto b2 = RootSystem::build('B', 2);
  std::set<Rational> lengths;
  for (const auto& beta : b2.positive_roots()) lengths.insert(b2.square_length(beta));
  CHECK(lengths == std::set<Rational>{Rational(1), Rational(2)});

  auto g2 = RootSystem::build('G', 2);
  std::set<Rational> g_lengths;
  for (const auto& beta : g2.positive_roots()) g_lengths.insert(g2.square_length(beta));
  CHECK(g_lengths == std::set<Rational>{frac(2, 3), Rational(2)});
}

TEST_CASE("orbit of a fundamental weight with coset lengths") {
  auto a3 = RootSystem::build('A', 3);
  auto orbit = weight_orbit(a3, {0, 1, 0});
  CHECK(orbit.size() == 6);
  CHECK(orbit.front().length == 0);
  CHECK(orbit.back().length == 4);

  auto b2 = RootSystem::build('B', 2);
  auto chain = weight_orbit(b2, {1, 0});
  REQUIRE(chain.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(chain[i].length == static_cast<int>(i));

  CHECK_THROWS_WITH_AS(weight_orbit(b2, {-1, 0}), doctest::Contains("not-dominant"), Error);
}

TEST_CASE("bruhat poset of B2 vector weight is the bonded 4-chain") {
  auto b2 = RootSystem::build('B', 2);
  auto poset = bruhat_poset(b2, {1, 0});
  REQUIRE(poset.size() == 4);
  CHECK(poset.top_length() == 3);
  CHECK(oracle::posets_isomorphic(poset, fixtures::chain4_121()));
}

TEST_CASE("bruhat poset of A3 omega2 is I(2,4)") {
  auto a3 = RootSystem::build('A', 3);
  auto poset = bruhat_poset(a3, {0, 1, 0});
  REQUIRE(poset.size() == 6);
  CHECK(poset.top_length() == 4);
  for (const auto& c : poset.cover_specs()) CHECK(c.bond == 1);
  CHECK(oracle::posets_isomorphic(poset, fixtures::i24()));
}

TEST_CASE("bruhat poset of A1 with triple weight") {
  auto a1 = RootSystem::build('A', 1);
  auto poset = bruhat_poset(a1, {3});
  REQUIRE(poset.size() == 2);
  auto covers = poset.cover_specs();
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].bond == 3);
  CHECK(oracle::posets_isomorphic(poset, fixtures::a1_bond3()));
}

TEST_CASE("hexagon fixture matches the A2 adjoint interval") {
  auto a2 = RootSystem::build('A', 2);
  auto poset = bruhat_poset(a2, {1, 1});
  CHECK(poset.size() == 6);
  CHECK(oracle::posets_isomorphic(poset, fixtures::hexagon()));
}

TEST_CASE("generated posets pass validation wholesale") {
  auto a2 = RootSystem::build('A', 2);
  auto b2 = RootSystem::build('B', 2);
  auto a3 = RootSystem::build('A', 3);
  std::vector<BondedPoset> posets{bruhat_poset(a2, {1, 1}), bruhat_poset(b2, {1, 0}),
                                  bruhat_poset(b2, {0, 1}), bruhat_poset(a3, {0, 1, 0}),
                                  bruhat_poset(a3, {1, 0, 1})};
  for (const auto& p : posets) {
    CHECK(p.verify_gcd_condition().ok);
    // covers connect by one length step and come from a reflection: checked
    // structurally by the builder; spot-check grading here
    for (const auto& c : p.cover_specs())
      CHECK(p.length(p.index_of(c.upper)) == p.length(p.index_of(c.lower)) + 1);
  }
}

TEST_CASE("interval below tau") {
  auto a3 = RootSystem::build('A', 3);
  auto full = bruhat_poset(a3, {0, 1, 0});
  // pick a length-3 orbit point as tau
  Weight tau;
  for (const auto& e : weight_orbit(a3, {0, 1, 0}))
    if (e.length == 3) tau = e.weight;
  auto below = bruhat_poset(a3, {0, 1, 0}, &tau);
  CHECK(below.size() == 5);  // I(2,4) below a coatom
  CHECK(below.top_length() == 3);
  CHECK(below.label(below.max_element()) == weight_label(tau));
  CHECK(oracle::posets_isomorphic(below, fixtures::i24().subposet_below(
                                             fixtures::i24().index_of("24"))));
}

TEST_CASE("bruhat order cross-checked against the subword criterion") {
  // Full-group Bruhat order via reduced subwords, projected to the quotient.
  struct WordOracle {
    const RootSystem& rs;
    Weight rho;
    std::vector<OrbitElement> elements;  // orbit of rho = the full group

    explicit WordOracle(const RootSystem& r) : rs(r), rho(r.rank(), 1) {
      elements = weight_orbit(rs, rho);
    }
    bool subword_leq(const std::vector<int>& needle, const std::vector<int>& hay) const {
      std::size_t i = 0;
      for (int s : hay) {
        if (i < needle.size() && needle[i] == s) ++i;
      }
      return i == needle.size();
    }
    // sigma <= tau iff some subword of some reduced word of tau is a reduced
    // word of sigma; for the orbit BFS words it is enough to scan all
    // subwords of tau's word and compare endpoints.
    bool leq(const OrbitElement& a, const OrbitElement& b) const {
      if (a.length > b.length) return false;
      const auto& word = b.reduced_word;
      for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
        if (__builtin_popcount(mask) != static_cast<int>(a.length)) continue;
        Weight mu = rho;
        // apply the selected reflections right-to-left
        std::vector<int> sub;
        for (std::size_t i = 0; i < word.size(); ++i)
          if (mask & (1u << i)) sub.push_back(word[i]);
        for (std::size_t i = sub.size(); i-- > 0;) mu = rs.simple_reflect(mu, sub[i]);
        if (mu == a.weight) return true;
      }
      return false;
    }
  };

  for (auto [type, rank, lw] : {std::tuple<char, int, Weight>{'A', 2, {1, 1}},
                                {'B', 2, {1, 0}},
                                {'A', 3, {0, 1, 0}}}) {
    auto rs = RootSystem::build(type, rank);
    WordOracle oracle_w(rs);
    auto lambda_orbit = weight_orbit(rs, lw);
    auto poset = bruhat_poset(rs, lw);

    // minimal coset representative of mu: the shortest full-group element w
    // with w(lambda) = mu
    auto rep = [&](const Weight& mu) -> const OrbitElement& {
      const OrbitElement* best = nullptr;
      for (const auto& e : oracle_w.elements) {
        Weight im = lw;
        const auto& word = e.reduced_word;
        for (std::size_t i = word.size(); i-- > 0;) im = rs.simple_reflect(im, word[i]);
        if (im == mu && (best == nullptr || e.length < best->length)) best = &e;
      }
      REQUIRE(best != nullptr);
      return *best;
    };

    for (const auto& x : lambda_orbit) {
      for (const auto& y : lambda_orbit) {
        bool lib = poset.leq(poset.index_of(weight_label(x.weight)),
                             poset.index_of(weight_label(y.weight)));
        bool ora = oracle_w.leq(rep(x.weight), rep(y.weight));
        CHECK(lib == ora);
      }
    }
  }
}

TEST_CASE("littelmann pairs convert both ways") {
  auto b2 = RootSystem::build('B', 2);
  auto poset = bruhat_poset(b2, {1, 0});
  Chain chain = poset.maximal_chains()[0];

  // extremal path
  LittelmannPair single{{chain[2]}, {Rational(0), Rational(1)}};
  CHECK(littelmann_to_function(poset, single) == extremal_path(chain[2], 1));

  // the half-half path through the bond-2 edge
  LittelmannPair halves{{chain[2], chain[1]}, {Rational(0), frac(1, 2), Rational(1)}};
  LSPath path = littelmann_to_function(poset, halves);
  CHECK(is_ls_path(poset, path.values, 1));
  CHECK(path.values.at(chain[1]) == frac(1, 2));
  CHECK(path.values.at(chain[2]) == frac(1, 2));

  // inverse on A1 with bond 3
  auto a1 = fixtures::a1_bond3();
  PathVector v;
  v.set(a1.index_of("e"), frac(1, 3));
  v.set(a1.index_of("s"), frac(2, 3));
  auto pair = littelmann_from_function(a1, make_ls_path(a1, v));
  REQUIRE(pair.elements_desc.size() == 2);
  CHECK(a1.label(pair.elements_desc[0]) == "s");
  CHECK(a1.label(pair.elements_desc[1]) == "e");
  CHECK(pair.breaks == std::vector<Rational>{Rational(0), frac(2, 3), Rational(1)});

  // round trip over every enumerated degree-1 path
  for (const auto& [name, p] : fixtures::all_valid()) {
    INFO(name);
    for (const auto& q : enumerate(p, 1)) {
      auto pr = littelmann_from_function(p, q);
      CHECK(littelmann_to_function(p, pr) == q);
    }
  }

  // malformed pairs
  CHECK_THROWS_WITH_AS(
      littelmann_to_function(poset, LittelmannPair{{chain[1], chain[2]}, {0, frac(1, 2), 1}}),
      doctest::Contains("malformed-pair"), Error);
  CHECK_THROWS_WITH_AS(
      littelmann_to_function(poset, LittelmannPair{{chain[1]}, {Rational(0), frac(1, 2)}}),
      doctest::Contains("malformed-pair"), Error);
}

TEST_CASE("weyl dimension oracle") {
  CHECK(weyl_dimension(RootSystem::build('A', 1), {3}) == 4);
  CHECK(weyl_dimension(RootSystem::build('A', 3), {0, 2, 0}) == 20);
  CHECK(weyl_dimension(RootSystem::build('B', 2), {1, 0}) == 5);
  CHECK(weyl_dimension(RootSystem::build('A', 2), {1, 1}) == 8);
  CHECK(weyl_dimension(RootSystem::build('G', 2), {1, 0}) == 7);
  CHECK(weyl_dimension(RootSystem::build('B', 3), {0, 0, 1}) == 8);  // spin representation
  CHECK_THROWS_WITH_AS(weyl_dimension(RootSystem::build('A', 2), {-1, 0}),
                       doctest::Contains("not-dominant"), Error);
}

TEST_CASE("path model counts match weyl dimensions") {
  struct Case {
    char type;
    int rank;
    Weight lambda;
    long r_max;
  };
  for (const auto& c : {Case{'A', 1, {3}, 2}, Case{'B', 2, {1, 0}, 2}, Case{'A', 2, {1, 1}, 2},
                        Case{'A', 3, {0, 1, 0}, 2}}) {
    auto rs = RootSystem::build(c.type, c.rank);
    auto poset = bruhat_poset(rs, c.lambda);
    for (long r = 1; r <= c.r_max; ++r) {
      Weight scaled = c.lambda;
      for (auto& m : scaled) m *= r;
      CHECK(Integer(enumerate(poset, r).size()) == weyl_dimension(rs, scaled));
    }
  }
}

TEST_CASE("every generated cover is a positive-root reflection") {
  for (auto [type, rank, lw] : {std::tuple<char, int, Weight>{'A', 2, {1, 1}},
                                {'B', 2, {1, 0}},
                                {'B', 2, {0, 1}},
                                {'A', 3, {0, 1, 0}},
                                {'G', 2, {1, 0}}}) {
    auto rs = RootSystem::build(type, rank);
    auto poset = bruhat_poset(rs, lw);
    for (const auto& c : poset.cover_specs()) {
      Weight lo = weight_from_label(c.lower, rank);
      Weight hi = weight_from_label(c.upper, rank);
      bool found = false;
      for (const auto& beta : rs.positive_roots()) {
        if (rs.reflect(lo, beta) == hi) {
          CHECK(rs.pairing(lo, beta) == c.bond);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}
