#include "lspath/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lsp {

namespace {

std::string subset_label(const PlueckerIndex& idx) {
  std::ostringstream os;
  for (int i : idx) os << i;
  return os.str();
}

std::vector<PlueckerIndex> all_subsets(int d, int n, std::size_t max_elements) {
  if (d < 1 || d >= n) fail(errkind::too_large, "need 1 <= d < n");
  if (n > 9) fail(errkind::too_large, "column labels support n <= 9");
  std::vector<PlueckerIndex> subsets;
  PlueckerIndex cur;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(cur.size()) == d) {
      subsets.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      gen(v + 1);
      cur.pop_back();
    }
  };
  gen(1);
  if (subsets.size() > max_elements) fail(errkind::too_large, "too many Pluecker indices");
  return subsets;
}

BondedPoset componentwise_poset(const std::vector<PlueckerIndex>& subsets, int d, int n) {
  std::vector<std::string> labels;
  for (const auto& s : subsets) labels.push_back(subset_label(s));
  std::vector<CoverSpec> covers;
  for (const auto& a : subsets) {
    // covers raise exactly one entry by 1
    for (int j = 0; j < d; ++j) {
      PlueckerIndex b = a;
      b[j] += 1;
      if (b[j] > n) continue;
      if (j + 1 < d && b[j] >= b[j + 1]) continue;
      covers.push_back({subset_label(a), subset_label(b), 1});
    }
  }
  return BondedPoset::build(labels, covers);
}

}  // namespace

Grassmannian::Grassmannian(int d, int n, std::size_t max_elements)
    : d_(d), n_(n), poset_(componentwise_poset(all_subsets(d, n, max_elements), d, n)) {
  subsets_.resize(static_cast<std::size_t>(poset_.size()));
  for (const auto& s : all_subsets(d, n, max_elements))
    subsets_[poset_.index_of(subset_label(s))] = s;
}

Elem Grassmannian::elem_of(const PlueckerIndex& idx) const {
  return poset_.index_of(subset_label(idx));
}

SchubertPattern Grassmannian::full_pattern() const {
  return SchubertPattern{std::vector<int>(d_, n_)};
}

SchubertPattern Grassmannian::pattern_of(Elem tau) const {
  SchubertPattern p;
  p.row_limit = subsets_[tau];
  return p;
}

Polynomial Grassmannian::minor(Elem tau, const SchubertPattern& pattern) const {
  const PlueckerIndex& cols = subsets_[tau];
  Polynomial out(d_ * n_);
  std::vector<int> perm(d_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (int i = 0; i < d_; ++i)
      for (int j = i + 1; j < d_; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Monomial m(static_cast<std::size_t>(d_ * n_), 0);
    bool zero = false;
    for (int row = 0; row < d_; ++row) {
      int col = cols[perm[row]];  // 1-based column index
      if (col > pattern.row_limit[row]) {
        zero = true;
        break;
      }
      m[var_of(row, col - 1)] += 1;
    }
    if (!zero) out.add_term(m, Rational(sign));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<Elem>> Grassmannian::multichains(Elem top, long r) const {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  std::function<void(Elem)> rec = [&](Elem from) {
    if (static_cast<long>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (Elem e = from; e < poset_.size(); ++e) {
      if (!poset_.leq(e, top)) continue;
      if (!cur.empty() && !poset_.leq(cur.back(), e)) continue;
      cur.push_back(e);
      rec(e);
      cur.pop_back();
    }
  };
  if (r == 0) {
    out.push_back({});
    return out;
  }
  rec(0);
  return out;
}

Polynomial Grassmannian::expand_path(const LSPath& path, Elem top) const {
  SchubertPattern pat = pattern_of(top);
  Polynomial out(d_ * n_, Rational(1));
  if (path.degree == 0) return out;
  for (const auto& factor : decompose_degree_one(poset_, path)) {
    // With all bonds 1 every degree-1 path is extremal.
    const auto& entries = factor.values.entries();
    if (entries.size() != 1 || entries[0].second != 1)
      fail(errkind::not_an_ls_path, "degree-1 paths of I(d,n) must be extremal");
    out = out * minor(entries[0].first, pat);
  }
  return out;
}

Polynomial Grassmannian::expand_element(const AlgebraElement& x, Elem top) const {
  Polynomial out(d_ * n_);
  for (const auto& [p, c] : x.terms()) out += c * expand_path(p, top);
  return out;
}

const Grassmannian::SpanBasis& Grassmannian::span_basis(Elem top, long degree) const {
  auto key = std::make_pair(top, degree);
  auto it = span_cache_.find(key);
  if (it != span_cache_.end()) return it->second;
  SpanBasis basis;
  basis.chains = multichains(top, degree);
  SchubertPattern pat = pattern_of(top);
  for (const auto& chain : basis.chains) {
    Polynomial prod(d_ * n_, Rational(1));
    for (Elem e : chain) prod = prod * minor(e, pat);
    basis.expansions.push_back(std::move(prod));
  }
  return span_cache_.emplace(key, std::move(basis)).first->second;
}

bool Grassmannian::in_span(const Polynomial& f, Elem top, long degree) const {
  if (degree < 0) return false;
  if (f.is_zero()) return true;
  const SpanBasis& basis = span_basis(top, degree);
  std::map<Monomial, std::size_t> row_of;
  auto note = [&](const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      (void)c;
      row_of.emplace(m, row_of.size());
    }
  };
  for (const auto& e : basis.expansions) note(e);
  note(f);
  std::vector<std::vector<Rational>> columns(basis.expansions.size(),
                                             std::vector<Rational>(row_of.size(), Rational(0)));
  for (std::size_t j = 0; j < basis.expansions.size(); ++j)
    for (const auto& [m, c] : basis.expansions[j].terms()) columns[j][row_of.at(m)] = c;
  std::vector<Rational> rhs(row_of.size(), Rational(0));
  for (const auto& [m, c] : f.terms()) rhs[row_of.at(m)] = c;
  return solve_linear(columns, rhs).consistent;
}

AlgebraElement Grassmannian::straighten(const std::vector<Elem>& monomial, long max_degree) const {
  const long r = static_cast<long>(monomial.size());
  if (r > max_degree) fail(errkind::too_large, "degree exceeds the straightening bound");
  Polynomial prod(d_ * n_, Rational(1));
  SchubertPattern pat = pattern_of(poset_.max_element());
  for (Elem e : monomial) prod = prod * minor(e, pat);

  const SpanBasis& basis = span_basis(poset_.max_element(), r);
  std::map<Monomial, std::size_t> row_of;
  for (const auto& e : basis.expansions)
    for (const auto& [m, c] : e.terms()) {
      (void)c;
      row_of.emplace(m, row_of.size());
    }
  for (const auto& [m, c] : prod.terms()) {
    (void)c;
    row_of.emplace(m, row_of.size());
  }
  std::vector<std::vector<Rational>> columns(basis.expansions.size(),
                                             std::vector<Rational>(row_of.size(), Rational(0)));
  for (std::size_t j = 0; j < basis.expansions.size(); ++j)
    for (const auto& [m, c] : basis.expansions[j].terms()) columns[j][row_of.at(m)] = c;
  std::vector<Rational> rhs(row_of.size(), Rational(0));
  for (const auto& [m, c] : prod.terms()) rhs[row_of.at(m)] = c;

  auto sol = solve_linear(columns, rhs);
  if (!sol.consistent)
    fail(errkind::solve_failed, "product of minors is outside the standard monomial span");
  AlgebraElement out;
  Polynomial check(d_ * n_);
  for (std::size_t j = 0; j < basis.chains.size(); ++j) {
    if (sol.solution[j] == 0) continue;
    PathVector v;
    for (Elem e : basis.chains[j]) v.set(e, v.at(e) + 1);
    out.add_term(LSPath{v, r}, sol.solution[j]);
    check += sol.solution[j] * basis.expansions[j];
  }
  if (!(check == prod)) fail(errkind::solve_failed, "straightening verification failed");
  return out;
}

WeightSystem Grassmannian::epsilon_weights() const {
  WeightSystem ws;
  ws.rank = n_;
  ws.assignment.resize(poset_.size());
  for (Elem e = 0; e < poset_.size(); ++e) {
    std::vector<long> w(n_, 0);
    for (int col : subsets_[e]) w[col - 1] = 1;
    ws.assignment[e] = w;
  }
  return ws;
}

StraighteningTable Grassmannian::straightening_table() const {
  StraighteningTable table;
  for (Elem a = 0; a < poset_.size(); ++a) {
    for (Elem b = a; b < poset_.size(); ++b) {
      if (poset_.comparable(a, b)) continue;
      TableEntry entry{extremal_path(a, 1), extremal_path(b, 1), {}};
      AlgebraElement rhs = straighten({a, b}, 2);
      for (const auto& [p, c] : rhs.terms()) {
        auto factors = decompose_degree_one(poset_, p);
        entry.rhs.push_back({c, TableMonomial{factors[0], factors[1]}});
      }
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

Grassmannian::VerifyReport Grassmannian::verify_ls(long r_max) const {
  VerifyReport report;
  for (long r = 1; r <= r_max; ++r) {
    const SpanBasis& basis = span_basis(poset_.max_element(), r);
    std::map<Monomial, std::size_t> row_of;
    for (const auto& e : basis.expansions)
      for (const auto& [m, c] : e.terms()) {
        (void)c;
        row_of.emplace(m, row_of.size());
      }
    std::vector<std::vector<Rational>> rows(basis.expansions.size(),
                                            std::vector<Rational>(row_of.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.expansions.size(); ++j)
      for (const auto& [m, c] : basis.expansions[j].terms()) rows[j][row_of.at(m)] = c;
    std::size_t rank = matrix_rank(std::move(rows));
    report.degrees.push_back({r, basis.chains.size(), rank});
    if (rank != basis.chains.size()) report.ok = false;
  }

  StraighteningTable table = straightening_table();
  report.nonstandard_pairs = table.entries.size();
  std::vector<LSPath> generators;
  for (Elem e = 0; e < poset_.size(); ++e) generators.push_back(extremal_path(e, 1));
  WeightSystem ws = epsilon_weights();
  report.axioms = verify_ls_axioms(poset_, table, generators, &ws);
  report.ls3_instances = report.axioms.ls3_instances;
  if (!report.axioms.ok) report.ok = false;
  report.effectivity = check_effective(poset_, ws, std::max(r_max, 1L));
  if (!report.effectivity.effective) report.ok = false;
  return report;
}

PathVector Grassmannian::chain_valuation(const AlgebraElement& x, const Chain& chain) const {
  if (x.is_zero()) fail(errkind::zero_element, "valuation of zero");
  long degree = x.terms().begin()->first.degree;
  for (const auto& [p, c] : x.terms()) {
    (void)c;
    if (p.degree != degree) fail(errkind::not_in_ring, "valuation input must be homogeneous");
  }
  return chain_valuation_poly(expand_element(x, poset_.max_element()), degree, chain);
}

PathVector Grassmannian::chain_valuation_poly(Polynomial x, long degree, const Chain& chain) const {
  if (chain.empty() || !poset_.is_chain(chain) || chain.front() != poset_.min_element() ||
      chain.back() != poset_.max_element() ||
      static_cast<int>(chain.size()) != poset_.top_length() + 1)
    fail(errkind::not_a_chain, "a maximal chain is required");
  if (x.is_zero()) fail(errkind::zero_element, "valuation of zero");

  const long K = std::max<long>(1, degree) * poset_.top_length();
  PathVector result;
  // Work with the representative inside the pattern of the chain top; inputs
  // written over the unrestricted matrix project onto it.
  SchubertPattern top_pat = pattern_of(chain.back());
  std::vector<bool> top_kill(static_cast<std::size_t>(d_ * n_), false);
  for (int row = 0; row < d_; ++row)
    for (int col = top_pat.row_limit[row]; col < n_; ++col) top_kill[var_of(row, col)] = true;
  Polynomial cur = x.substitute_zero(top_kill);
  if (cur.is_zero()) fail(errkind::not_in_ring, "input vanishes under the top pattern");
  long adeg = degree;

  for (std::size_t h = chain.size(); h-- > 1;) {
    Elem top = chain[h];
    Elem below = chain[h - 1];
    SchubertPattern pat = pattern_of(top);
    Polynomial p_top = minor(top, pat);
    Polynomial p_below = minor(below, pat);

    long best_r = -1, best_k = 0;
    Polynomial best_quotient;
    for (long r = 0;; ++r) {
      if (r > K) fail(errkind::bound_exceeded, "divisibility exponent exceeded the safety bound");
      bool found = false;
      Polynomial numerator = cur;  // p_below^k * cur, built incrementally
      for (long k = 0; k <= K; ++k) {
        if (k > 0) numerator = numerator * p_below;
        if (adeg + k - r < 0) continue;
        std::optional<Polynomial> q = numerator;
        for (long t = 0; t < r && q; ++t) q = q->divide_exact(p_top);
        if (q && in_span(*q, top, adeg + k - r)) {
          best_r = r;
          best_k = k;
          best_quotient = std::move(*q);
          found = true;
          break;
        }
      }
      if (!found) break;
    }
    if (best_r < 0) fail(errkind::not_in_ring, "input is not in the coordinate ring");

    result.set(top, result.at(top) + Rational(best_r));
    result.set(below, result.at(below) - Rational(best_k));
    adeg += best_k - best_r;
    SchubertPattern next_pat = pattern_of(below);
    std::vector<bool> kill(static_cast<std::size_t>(d_ * n_), false);
    for (int row = 0; row < d_; ++row)
      for (int col = next_pat.row_limit[row]; col < n_; ++col) kill[var_of(row, col)] = true;
    cur = best_quotient.substitute_zero(kill);
    if (cur.is_zero())
      fail(errkind::solve_failed, "projection vanished although the exponent was maximal");
  }

  // Base of the recursion: the ring of the bottom point is K[p_bottom].
  Elem bottom = chain.front();
  Polynomial p0 = minor(bottom, pattern_of(bottom));
  std::optional<Polynomial> q = cur;
  for (long t = 0; t < adeg && q; ++t) q = q->divide_exact(p0);
  if (!q || !q->is_constant() || q->is_zero())
    fail(errkind::not_in_ring, "residue at the bottom point is not a monomial in p_bottom");
  result.set(bottom, result.at(bottom) + Rational(adeg));
  return result;
}

PathVector Grassmannian::quasi_valuation(const AlgebraElement& x) const {
  return quasi_valuation(x, default_extension(poset_));
}

PathVector Grassmannian::quasi_valuation(const AlgebraElement& x,
                                         const LinearExtension& ext) const {
  const PathVector* best = nullptr;
  std::vector<PathVector> values;
  for (const auto& chain : poset_.maximal_chains()) values.push_back(chain_valuation(x, chain));
  for (const auto& v : values)
    if (best == nullptr || rlex_compare(v, *best, ext) == Cmp::LT) best = &v;
  return *best;
}

}  // namespace lsp
