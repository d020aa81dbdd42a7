#include "lspath/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lspath/discrete_algebra.hpp"
#include "lspath/fixtures.hpp"
#include "lspath/grassmannian.hpp"
#include "lspath/json_io.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/oracles.hpp"
#include "lspath/order_complex.hpp"
#include "lspath/orders.hpp"
#include "lspath/valuation.hpp"
#include "lspath/weyl.hpp"

namespace lsp {

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void(std::ostream&)> body;  // throws or streams a failure reason
};

class Failure : public std::runtime_error {
 public:
  explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool condition, const std::string& reason) {
  if (!condition) throw Failure(reason);
}

// ---- criterion 1: path-model counts --------------------------------------

void counts_criterion(bool quick) {
  struct Case {
    char type;
    int rank;
    Weight lambda;
    long r;
    long expected;
  };
  std::vector<Case> cases{{'A', 1, {3}, 1, 4},        {'B', 2, {1, 0}, 1, 5},
                          {'A', 2, {1, 1}, 1, 8},     {'A', 3, {0, 1, 0}, 1, 6},
                          {'A', 2, {1, 1}, 2, 27},    {'A', 3, {0, 1, 0}, 2, 20}};
  if (!quick) cases.push_back({'A', 3, {0, 1, 0}, 3, 50});
  for (const auto& c : cases) {
    auto rs = RootSystem::build(c.type, c.rank);
    auto poset = bruhat_poset(rs, c.lambda);
    long count = static_cast<long>(enumerate(poset, c.r).size());
    Weight scaled = c.lambda;
    for (auto& m : scaled) m *= c.r;
    Integer dim = weyl_dimension(rs, scaled);
    std::ostringstream what;
    what << c.type << c.rank << " degree " << c.r << ": |LS_r| = " << count << ", expected "
         << c.expected << ", Weyl dimension " << dim.get_str();
    require(count == c.expected && dim == c.expected, what.str());
  }
}

// ---- criterion 2: bond generation -----------------------------------------

void bonds_criterion() {
  auto b2 = RootSystem::build('B', 2);
  auto chain_poset = bruhat_poset(b2, {1, 0});
  require(chain_poset.size() == 4 && chain_poset.maximal_chains().size() == 1,
          "B2 vector poset is not a 4-chain");
  Chain chain = chain_poset.maximal_chains()[0];
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    bonds.push_back(chain_poset.extended_bond(chain[i], chain[i + 1]));
  require(bonds == std::vector<Bond>{1, 2, 1}, "B2 bonds are not (1,2,1)");

  auto a3 = RootSystem::build('A', 3);
  auto grassmann_like = bruhat_poset(a3, {0, 1, 0});
  require(oracle::posets_isomorphic(grassmann_like, fixtures::i24()),
          "A3 omega2 poset is not the 2-subset poset of {1..4}");
  for (const auto& c : grassmann_like.cover_specs())
    require(c.bond == 1, "A3 omega2 bond is not 1");

  auto a2 = RootSystem::build('A', 2);
  for (const auto* poset : {&chain_poset, &grassmann_like}) {
    require(poset->verify_gcd_condition().ok, "generated poset fails the gcd condition");
  }
  auto hex = bruhat_poset(a2, {1, 1});
  require(hex.verify_gcd_condition().ok, "A2 adjoint poset fails the gcd condition");
  auto spin = bruhat_poset(b2, {0, 1});
  require(spin.verify_gcd_condition().ok, "B2 spin poset fails the gcd condition");
}

// ---- criterion 3: straightening + LS2 --------------------------------------

void straightening_criterion(const AcceptanceConfig& config) {
  Grassmannian g24(2, 4);
  const auto& p = g24.poset();

  StraighteningTable table;
  if (config.straightening_table_file) {
    table = table_from_json(p, load_json_file(*config.straightening_table_file));
  } else {
    table = g24.straightening_table();
  }

  // every loaded entry must reproduce the exact linear-solve expansion
  for (const auto& entry : table.entries) {
    std::vector<Elem> monomial;
    for (const LSPath* f : {&entry.lhs1, &entry.lhs2}) {
      require(f->degree == 1 && f->values.entries().size() == 1,
              "table lhs is not a coordinate");
      monomial.push_back(f->values.entries()[0].first);
    }
    AlgebraElement expected = g24.straighten(monomial);
    AlgebraElement actual;
    for (const auto& [coeff, mon] : entry.rhs)
      actual.add_term(LSPath{mon.first.values + mon.second.values, 2}, coeff);
    require(actual == expected, "table entry disagrees with the computed straightening");
  }

  require(table.entries.size() == 1, "G(2,4) has exactly one nonstandard pair");
  const auto& rel = table.entries.front();
  require(rel.rhs.size() == 2, "the three-term relation must have two standard terms");
  PathVector naive = rel.lhs1.values + rel.lhs2.values;
  for (const auto& [coeff, mon] : rel.rhs) {
    (void)coeff;
    auto cmp = triangle_compare(p, naive, mon.first.values + mon.second.values);
    require(cmp == TriCmp::LT || cmp == TriCmp::EQ, "LS2 fails for the G(2,4) relation");
    require(triangle_compare(p, rel.lhs1.values, mon.second.values) == TriCmp::LT &&
                triangle_compare(p, rel.lhs2.values, mon.second.values) == TriCmp::LT,
            "strict factor inequalities fail for the G(2,4) relation");
  }

  // all nonstandard degree-2 monomials of G(2,5)
  Grassmannian g25(2, 5);
  auto table25 = g25.straightening_table();
  std::size_t incomparable = 0;
  for (Elem a = 0; a < g25.poset().size(); ++a)
    for (Elem b = a + 1; b < g25.poset().size(); ++b)
      if (!g25.poset().comparable(a, b)) ++incomparable;
  require(table25.entries.size() == incomparable,
          "computed table does not cover every incomparable pair of G(2,5)");
  std::vector<LSPath> gens;
  for (Elem e = 0; e < g25.poset().size(); ++e) gens.push_back(extremal_path(e, 1));
  auto ws = g25.epsilon_weights();
  auto axioms = verify_ls_axioms(g25.poset(), table25, gens, &ws);
  require(axioms.ok, "G(2,5) straightening table violates the axioms");
}

// ---- criterion 4: standard monomial basis ----------------------------------

void basis_criterion() {
  Grassmannian g24(2, 4);
  auto report24 = g24.verify_ls(2);
  require(report24.degrees.size() == 2, "missing degree reports for G(2,4)");
  require(report24.degrees[1].standard_count == 20 && report24.degrees[1].rank == 20,
          "G(2,4) degree-2 standard monomials are not a 20-dimensional basis");
  require(report24.ok, "G(2,4) verification failed");

  Grassmannian g25(2, 5);
  auto report25 = g25.verify_ls(2);
  require(report25.ok, "G(2,5) verification failed");
  for (const auto& d : report25.degrees)
    require(d.rank == d.standard_count, "G(2,5) standard monomials are dependent");
}

// ---- criterion 5: chain valuations -----------------------------------------

void chain_valuation_criterion(bool quick) {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  auto chains = p.maximal_chains();
  require(chains.size() == 2, "G(2,4) must have two maximal chains");

  for (const auto& chain : chains) {
    for (Elem tau : chain) {
      auto v = g.chain_valuation(AlgebraElement::basis(extremal_path(tau, 1)), chain);
      require(v == PathVector::unit(tau), "chain valuation does not fix " + p.label(tau));
    }
    long rmax = quick ? 1 : 2;
    for (long r = 1; r <= rmax; ++r)
      for (const auto& q : enumerate(p, r)) {
        auto v = g.chain_valuation(AlgebraElement::basis(q), chain);
        require(chain_rlex_compare(chain, v, PathVector{}) == Cmp::GT,
                "chain valuation is not positive on a basis element");
      }
  }

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto paths1 = enumerate(p, 1);
  SchubertPattern pat = g.pattern_of(p.max_element());
  auto random_element = [&](Polynomial& poly) {
    poly = Polynomial(8);
    while (poly.is_zero()) {
      for (const auto& q : paths1) {
        int c = coeff(rng);
        if (c == 0) continue;
        poly += Rational(c) * g.minor(q.values.entries()[0].first, pat);
      }
    }
  };
  int pairs = 50;
  for (int i = 0; i < pairs; ++i) {
    Polynomial x, y;
    random_element(x);
    random_element(y);
    const Chain& chain = chains[i % 2];
    auto vx = g.chain_valuation_poly(x, 1, chain);
    auto vy = g.chain_valuation_poly(y, 1, chain);
    auto vxy = g.chain_valuation_poly(x * y, 2, chain);
    require(vxy == vx + vy, "valuation additivity fails on a random pair");
  }
}

// ---- criterion 6: the two-case estimate ------------------------------------

void estimate_criterion() {
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
      std::ostringstream what;
      what << "estimate fails on G(" << d << "," << n << ")";
      require(report.ok, what.str());
    }
  }
}

// ---- criterion 7: quasi-valuation ------------------------------------------

void quasi_valuation_criterion() {
  Grassmannian g(2, 4);
  const auto& p = g.poset();
  auto ext = default_extension(p);

  for (Elem e = 0; e < p.size(); ++e) {
    auto v = g.quasi_valuation(AlgebraElement::basis(extremal_path(e, 1)));
    require(v == PathVector::unit(e), "quasi-valuation does not fix " + p.label(e));
  }

  auto nonstd = g.straighten({p.index_of("14"), p.index_of("23")});
  auto value = g.quasi_valuation(nonstd);
  PathVector expected;
  expected.set(p.index_of("13"), 1);
  expected.set(p.index_of("24"), 1);
  require(value == expected, "quasi-valuation of the nonstandard product is not 13+24");
  PathVector naive;
  naive.set(p.index_of("14"), 1);
  naive.set(p.index_of("23"), 1);
  require(rlex_compare(value, naive, ext) == Cmp::GT,
          "quasi-valuation does not dominate the nonstandard sum");

  // the associated graded multiplication is the discrete one
  auto paths1 = enumerate(p, 1);
  for (const auto& a : paths1) {
    for (const auto& b : paths1) {
      Elem ea = a.values.entries()[0].first;
      Elem eb = b.values.entries()[0].first;
      auto expansion = g.straighten({ea, eb});
      auto discrete = multiply_discrete(p, AlgebraElement::basis(a), AlgebraElement::basis(b));
      if (!discrete.is_zero()) {
        auto lead = quasi_valuation_discrete(p, expansion, ext);
        require(AlgebraElement::basis(lead) == discrete && expansion.terms().at(lead) == 1,
                "leading term disagrees with the discrete product");
      } else {
        for (const auto& [term, c] : expansion.terms()) {
          (void)c;
          require(triangle_compare(p, a.values + b.values, term.values) == TriCmp::LT,
                  "a nonstandard product fails to degenerate to zero");
        }
      }
    }
  }
}

// ---- criterion 8: levels are the order complex ------------------------------

void levels_criterion(bool quick) {
  long rmax = quick ? 2 : 4;
  for (const BondedPoset& p : {fixtures::i24(), fixtures::chain4_121()}) {
    auto ext = default_extension(p);
    std::map<long, std::vector<PathVector>> images;
    for (long r = 1; r <= rmax; ++r) {
      for (const auto& q : enumerate(p, r)) {
        // image of the quasi-valuation on the basis element
        images[r].push_back(quasi_valuation_discrete(p, AlgebraElement::basis(q), ext).values);
      }
    }
    auto levels = newton_okounkov_levels(images);
    for (long r = 1; r <= rmax; ++r) {
      auto expected = level_points(p, r);
      std::set<PathVector> want(expected.begin(), expected.end());
      std::set<PathVector> got(levels[r].begin(), levels[r].end());
      require(want == got, "level " + std::to_string(r) + " differs from the order complex level");
    }
    for (const auto& chain : p.maximal_chains())
      for (long r = 1; r <= rmax; ++r)
        require(verify_integral_structure(p, chain, r),
                "integral structure fails at degree " + std::to_string(r));
  }
}

// ---- criterion 9: order oracle ----------------------------------------------

void order_oracle_criterion() {
  for (const auto& [name, p] : fixtures::all_valid()) {
    if (p.size() > 7) continue;
    std::vector<PathVector> vectors;
    for (long r = 1; r <= 2; ++r)
      for (const auto& q : enumerate(p, r)) vectors.push_back(q.values);
    for (const auto& v : vectors)
      for (const auto& w : vectors)
        require(triangle_compare(p, v, w) == oracle::triangle_by_extensions(p, v, w),
                "triangle order disagrees with the extension oracle on " + name);
  }
}

// ---- criterion 10: decomposition soundness ----------------------------------

void decomposition_criterion(bool quick) {
  long rmax = quick ? 2 : 4;
  for (const auto& [name, p] : fixtures::all_valid()) {
    for (long r = 1; r <= rmax; ++r) {
      for (const auto& pi : enumerate(p, r)) {
        auto parts = decompose_degree_one(p, pi);
        require(parts.size() == static_cast<std::size_t>(r),
                "wrong factor count on " + name);
        PathVector sum;
        for (const auto& f : parts) {
          require(is_ls_path(p, f.values, 1), "invalid factor on " + name);
          sum += f.values;
        }
        require(sum == pi.values, "factors do not sum to the path on " + name);
        require(is_standard(p, PathMonomial{parts}), "factors not in standard position on " + name);
        auto all = oracle::all_standard_decompositions(p, pi);
        require(all.size() == 1 && all[0] == parts,
                "decomposition disagrees with the exhaustive oracle on " + name);
      }
    }
  }
}

}  // namespace

int run_acceptance_suite(const AcceptanceConfig& config, std::ostream& out) {
  std::vector<Criterion> criteria{
      {1, "path-model counts match the Weyl dimension oracle",
       [&](std::ostream&) { counts_criterion(config.quick); }},
      {2, "generated Bruhat posets carry the expected bonds",
       [&](std::ostream&) { bonds_criterion(); }},
      {3, "straightening relations satisfy the order axiom",
       [&](std::ostream&) { straightening_criterion(config); }},
      {4, "standard monomials are linearly independent",
       [&](std::ostream&) { basis_criterion(); }},
      {5, "chain valuations fix the chain and are additive",
       [&](std::ostream&) { chain_valuation_criterion(config.quick); }},
      {6, "declared chain values satisfy the two-case estimate",
       [&](std::ostream&) { estimate_criterion(); }},
      {7, "the quasi-valuation reproduces paths and degenerates the products",
       [&](std::ostream&) { quasi_valuation_criterion(); }},
      {8, "quasi-valuation levels equal the order complex levels",
       [&](std::ostream&) { levels_criterion(config.quick); }},
      {9, "the triangle order matches the all-extensions definition",
       [&](std::ostream&) { order_oracle_criterion(); }},
      {10, "degree-one decompositions match the exhaustive oracle",
       [&](std::ostream&) { decomposition_criterion(config.quick); }},
  };

  int failures = 0;
  int ran = 0;
  for (const auto& criterion : criteria) {
    if (config.only != 0 && criterion.number != config.only) continue;
    ++ran;
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body(out);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (failure.empty()) {
      out << "PASS criterion-" << criterion.number << ": " << criterion.title << " (" << ms
          << " ms)\n";
    } else {
      ++failures;
      out << "FAIL criterion-" << criterion.number << ": " << criterion.title << " (" << ms
          << " ms)\n       " << failure << "\n";
    }
  }
  out << "acceptance: " << (ran - failures) << "/" << ran << " criteria passed\n";
  return failures;
}

}  // namespace lsp
