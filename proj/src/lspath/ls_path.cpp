#include "lspath/ls_path.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lsp {

// ---- PathVector ------------------------------------------------------------

PathVector::PathVector(std::initializer_list<std::pair<Elem, Rational>> entries) {
  for (const auto& [e, q] : entries) set(e, at(e) + q);
}

Rational PathVector::at(Elem e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const auto& p, Elem x) { return p.first < x; });
  if (it != entries_.end() && it->first == e) return it->second;
  return Rational(0);
}

void PathVector::set(Elem e, const Rational& value) {
  Rational v = value;
  v.canonicalize();  // guards against unreduced two-argument constructions
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const auto& p, Elem x) { return p.first < x; });
  if (it != entries_.end() && it->first == e) {
    if (v == 0)
      entries_.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    entries_.insert(it, {e, v});
  }
}

std::vector<Elem> PathVector::support() const {
  std::vector<Elem> out;
  out.reserve(entries_.size());
  for (const auto& [e, q] : entries_) {
    (void)q;
    out.push_back(e);
  }
  return out;
}

Rational PathVector::sum() const {
  Rational s(0);
  for (const auto& [e, q] : entries_) {
    (void)e;
    s += q;
  }
  return s;
}

PathVector& PathVector::operator+=(const PathVector& o) {
  std::vector<std::pair<Elem, Rational>> merged;
  merged.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      merged.push_back(entries_[i++]);
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      merged.push_back(o.entries_[j++]);
    } else {
      Rational s = entries_[i].second + o.entries_[j].second;
      if (s != 0) merged.emplace_back(entries_[i].first, s);
      ++i;
      ++j;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  PathVector neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

PathVector& PathVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [e, q] : entries_) {
    (void)e;
    q *= c;
  }
  return *this;
}

bool PathVector::operator<(const PathVector& o) const {
  return std::lexicographical_compare(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

// ---- LSPath basics ---------------------------------------------------------

bool path_less(const LSPath& a, const LSPath& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  const auto& ea = a.values.entries();
  const auto& eb = b.values.entries();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
  }
  if (ea.size() != eb.size()) return ea.size() < eb.size();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].second != eb[i].second) return ea[i].second < eb[i].second;
  }
  return false;
}

bool is_standard(const BondedPoset& poset, const PathMonomial& m) {
  for (const auto& f : m.factors)
    if (f.degree != 1) return false;
  for (std::size_t h = 0; h + 1 < m.factors.size(); ++h) {
    const auto& cur = m.factors[h].values.entries();
    const auto& nxt = m.factors[h + 1].values.entries();
    if (cur.empty() || nxt.empty()) return false;
    if (!poset.leq(cur.back().first, nxt.front().first)) return false;
  }
  return true;
}

bool is_ls_path(const BondedPoset& poset, const PathVector& values, long degree) {
  if (degree < 0) return false;
  const auto& entries = values.entries();
  for (const auto& [e, q] : entries) {
    if (e < 0 || e >= poset.size()) fail(errkind::unknown_element, "index out of range");
    if (q < 0) return false;
  }
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (!poset.lt(entries[i].first, entries[i + 1].first)) return false;
  }
  if (values.sum() != degree) return false;
  Rational partial(0);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    partial += entries[i].second;
    Bond b = poset.extended_bond(entries[i].first, entries[i + 1].first);
    if (!is_integer(partial * Rational(b))) return false;
  }
  return true;
}

LSPath make_ls_path(const BondedPoset& poset, const PathVector& values) {
  Rational s = values.sum();
  if (!is_integer(s) || !is_ls_path(poset, values, s.get_num().get_si()))
    fail(errkind::not_an_ls_path, "the defining conditions fail");
  return LSPath{values, static_cast<long>(s.get_num().get_si())};
}

LSPath extremal_path(Elem e, long degree) {
  PathVector v;
  if (degree != 0) v.set(e, Rational(degree));
  return LSPath{v, degree};
}

long width(const BondedPoset& poset, const LSPath& path) {
  if (path.is_zero()) fail(errkind::zero_path, "width of the zero path");
  const auto& entries = path.values.entries();
  return poset.length(entries.back().first) - poset.length(entries.front().first) + 1;
}

// ---- Enumeration -----------------------------------------------------------

// Paths on a chain c0 < ... < ck of degree r correspond to partial-sum
// sequences 0 <= s_1 <= ... <= s_k <= r with s_j a multiple of 1/b_j, where
// b_j is the extended bond between c_{j-1} and c_j; the values are the
// successive differences.
std::vector<LSPath> enumerate_on_chain(const BondedPoset& poset, const Chain& chain, long r,
                                       const EnumLimits& limits) {
  if (!poset.is_chain(chain)) fail(errkind::not_a_chain, "support set is not a chain");
  if (r < 0) fail(errkind::not_an_ls_path, "negative degree");
  poset.ensure_gcd_condition();
  const std::size_t k = chain.empty() ? 0 : chain.size() - 1;
  std::vector<Bond> bond(k);
  for (std::size_t j = 0; j < k; ++j) bond[j] = poset.extended_bond(chain[j], chain[j + 1]);

  std::vector<LSPath> out;
  if (chain.empty()) {
    if (r == 0) out.push_back(LSPath{});
    return out;
  }
  std::vector<Rational> s(k + 2);
  s[0] = 0;  // s[j] = mass strictly below chain[j]
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k + 1) {
      PathVector v;
      Rational total(r);
      for (std::size_t i = 0; i <= k; ++i) {
        Rational upper = (i == k) ? total : s[i + 1];
        Rational val = upper - s[i];
        if (val != 0) v.set(chain[i], val);
      }
      if (out.size() >= limits.max_paths)
        fail(errkind::too_large, "more than " + std::to_string(limits.max_paths) + " paths");
      out.push_back(LSPath{v, r});
      return;
    }
    // choose s[j] in [s[j-1], r], a multiple of 1/bond[j-1]
    Bond b = bond[j - 1];
    Rational lo = s[j - 1] * Rational(b);
    Integer start = lo.get_num();  // ceil(lo) with lo rational
    if (lo.get_den() != 1) {
      start = floor_div(lo.get_num(), lo.get_den()) + 1;
    }
    for (Integer t = start; t <= Integer(r) * b; ++t) {
      s[j] = Rational(t) / b;
      rec(j + 1);
    }
  };
  if (k == 0) {
    PathVector v;
    if (r != 0) v.set(chain[0], Rational(r));
    out.push_back(LSPath{v, r});
  } else {
    rec(1);
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

std::vector<LSPath> enumerate(const BondedPoset& poset, long r, const EnumLimits& limits) {
  std::set<LSPath, PathLess> seen;
  for (const auto& chain : poset.maximal_chains(limits)) {
    for (auto& p : enumerate_on_chain(poset, chain, r, limits)) {
      seen.insert(std::move(p));
      if (seen.size() > limits.max_paths)
        fail(errkind::too_large, "more than " + std::to_string(limits.max_paths) + " paths");
    }
  }
  return {seen.begin(), seen.end()};
}

// ---- Decomposition ---------------------------------------------------------

namespace {

// Mass-interval slices: factor h is the part of the path between cumulative
// mass h-1 and h.
std::vector<LSPath> greedy_decomposition(const LSPath& path) {
  std::vector<LSPath> factors;
  const auto& entries = path.values.entries();
  std::vector<Rational> prefix(entries.size() + 1, Rational(0));
  for (std::size_t i = 0; i < entries.size(); ++i) prefix[i + 1] = prefix[i] + entries[i].second;
  for (long h = 1; h <= path.degree; ++h) {
    Rational lo(h - 1), hi(h);
    PathVector v;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      Rational a = std::max(prefix[i], lo);
      Rational b = std::min(prefix[i + 1], hi);
      if (b > a) v.set(entries[i].first, b - a);
    }
    factors.push_back(LSPath{v, 1});
  }
  return factors;
}

bool exhaustive_decomposition(const BondedPoset& poset, const LSPath& path,
                              const std::vector<LSPath>& degree_one, std::size_t index,
                              PathVector remaining, std::vector<LSPath>& acc,
                              std::vector<LSPath>& result) {
  long left = path.degree - static_cast<long>(acc.size());
  if (left == 0) {
    if (remaining.is_zero()) {
      result = acc;
      return true;
    }
    return false;
  }
  for (std::size_t i = index; i < degree_one.size(); ++i) {
    const auto& f = degree_one[i];
    if (!acc.empty()) {
      const auto& prev = acc.back().values.entries();
      const auto& cur = f.values.entries();
      if (!poset.leq(prev.back().first, cur.front().first)) continue;
    }
    bool fits = true;
    for (const auto& [e, q] : f.values.entries())
      if (remaining.at(e) < q) {
        fits = false;
        break;
      }
    if (!fits) continue;
    acc.push_back(f);
    if (exhaustive_decomposition(poset, path, degree_one, i, remaining - f.values, acc, result))
      return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::vector<LSPath> decompose_degree_one(const BondedPoset& poset, const LSPath& path) {
  if (!is_ls_path(poset, path.values, path.degree) || path.degree < 1)
    fail(errkind::not_an_ls_path, "decomposition input");
  auto factors = greedy_decomposition(path);
  bool ok = true;
  PathVector sum;
  for (const auto& f : factors) {
    if (!is_ls_path(poset, f.values, 1)) ok = false;
    sum += f.values;
  }
  if (ok && sum == path.values && is_standard(poset, PathMonomial{factors})) return factors;

  // The greedy peeling is expected to succeed; search keeps the result
  // independent of that expectation.
  Chain support = path.values.support();
  auto degree_one = enumerate_on_chain(poset, support, 1);
  std::vector<LSPath> acc, result;
  if (!exhaustive_decomposition(poset, path, degree_one, 0, path.values, acc, result))
    fail(errkind::not_an_ls_path, "no standard degree-one decomposition exists");
  return result;
}

PathMonomial canonical_form(const BondedPoset& poset, const PathMonomial& monomial) {
  PathVector sum;
  for (const auto& f : monomial.factors) sum += f.values;
  Chain support = sum.support();
  if (!poset.is_chain(support))
    fail(errkind::non_comparable_supports, "factor supports lie on no common chain");
  Rational deg = sum.sum();
  if (deg == 0) return PathMonomial{};
  LSPath total = make_ls_path(poset, sum);
  return PathMonomial{decompose_degree_one(poset, total)};
}

std::pair<LSPath, LSPath> split_head(const BondedPoset& poset, const LSPath& path) {
  if (path.degree != 1 || !is_ls_path(poset, path.values, 1))
    fail(errkind::not_an_ls_path, "split requires a degree-1 LS path");
  const auto& entries = path.values.entries();
  if (entries.size() < 2) fail(errkind::width_one, "support has a single element");
  Elem s1 = entries[0].first, s2 = entries[1].first;
  Rational a1 = entries[0].second, a2 = entries[1].second;
  PathVector first;
  first.set(s1, Rational(1) - a1);
  first.set(s2, a1);
  PathVector second;
  second.set(s2, a1 + a2);
  for (std::size_t i = 2; i < entries.size(); ++i) second.set(entries[i].first, entries[i].second);
  return {make_ls_path(poset, first), make_ls_path(poset, second)};
}

// ---- Chain lattice ---------------------------------------------------------

namespace {

// In-place row Hermite reduction of an integer matrix; returns the nonzero
// rows in echelon form.
std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    // Euclid on the column entries below the current rank.
    while (true) {
      std::size_t piv = rank;
      bool found = false;
      for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (!found || abs(rows[i][c]) < abs(rows[piv][c]))) {
          piv = i;
          found = true;
        }
      }
      if (!found) break;
      std::swap(rows[rank], rows[piv]);
      bool done = true;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = floor_div(rows[i][c], rows[rank][c]);
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[rank][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[rank][c] != 0) {
      if (rows[rank][c] < 0)
        for (auto& x : rows[rank]) x = -x;
      // reduce entries above the pivot
      for (std::size_t i = 0; i < rank; ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = floor_div(rows[i][c], rows[rank][c]);
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[rank][j];
      }
      ++rank;
    }
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

ChainLattice::ChainLattice(const BondedPoset& poset, const Chain& chain) : chain_(chain) {
  if (!poset.is_chain(chain)) fail(errkind::not_a_chain, "lattice requires a chain");
  auto gens = enumerate_on_chain(poset, chain, 1);
  // Common denominator over all generators.
  for (const auto& g : gens)
    for (const auto& [e, q] : g.values.entries()) {
      (void)e;
      Integer d = q.get_den();
      denom_ = denom_ / gcd(denom_, d) * d;
    }
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : gens) {
    std::vector<Integer> row(chain.size(), Integer(0));
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Rational scaled = g.values.at(chain[i]) * Rational(denom_);
      row[i] = scaled.get_num();
    }
    rows.push_back(std::move(row));
  }
  hnf_ = hermite_rows(std::move(rows));
  for (const auto& row : hnf_) {
    PathVector v;
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (row[i] != 0) v.set(chain_[i], Rational(row[i]) / Rational(denom_));
    basis_.push_back(std::move(v));
  }
}

bool ChainLattice::contains(const PathVector& v) const {
  for (const auto& [e, q] : v.entries()) {
    (void)q;
    if (std::find(chain_.begin(), chain_.end(), e) == chain_.end()) return false;
  }
  std::vector<Integer> target(chain_.size(), Integer(0));
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    Rational scaled = v.at(chain_[i]) * Rational(denom_);
    if (!is_integer(scaled)) return false;
    target[i] = scaled.get_num();
  }
  // Back-substitution against the echelon rows.
  std::size_t row = 0;
  for (std::size_t c = 0; c < chain_.size(); ++c) {
    Integer pivot = (row < hnf_.size()) ? hnf_[row][c] : Integer(0);
    if (pivot == 0) {
      if (target[c] != 0) return false;
      continue;
    }
    if (target[c] % pivot != 0) return false;
    Integer q = target[c] / pivot;
    for (std::size_t j = 0; j < chain_.size(); ++j) target[j] -= q * hnf_[row][j];
    ++row;
  }
  for (const auto& x : target)
    if (x != 0) return false;
  return true;
}

}  // namespace lsp
