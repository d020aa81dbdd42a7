#include "lspath/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lsp {

namespace {

Bond gcd_bond(Bond a, Bond b) { return std::gcd(a, b); }

Bond lcm_bond(Bond a, Bond b) { return std::lcm(a, b); }

}  // namespace

BondedPoset BondedPoset::build(const std::vector<std::string>& elements,
                               const std::vector<CoverSpec>& covers) {
  if (elements.empty()) fail(errkind::no_unique_extremum, "empty element set");
  std::map<std::string, int> tmp_index;
  for (const auto& lab : elements) {
    if (!tmp_index.emplace(lab, static_cast<int>(tmp_index.size())).second)
      fail(errkind::unknown_element, "duplicate label '" + lab + "'");
  }
  const int n = static_cast<int>(elements.size());

  std::vector<std::set<int>> up(n), down(n);
  std::vector<std::map<int, Bond>> bond(n);
  for (const auto& c : covers) {
    auto lo = tmp_index.find(c.lower);
    auto hi = tmp_index.find(c.upper);
    if (lo == tmp_index.end() || hi == tmp_index.end())
      fail(errkind::unknown_element,
           "cover references unknown label '" + (lo == tmp_index.end() ? c.lower : c.upper) + "'");
    if (c.bond < 1) fail(errkind::non_positive_bond, "bond on " + c.lower + "<" + c.upper);
    if (lo->second == hi->second)
      fail(errkind::not_graded, "cover from '" + c.lower + "' to itself");
    if (!up[lo->second].insert(hi->second).second)
      fail(errkind::redundant_cover, "duplicate cover " + c.lower + "<" + c.upper);
    down[hi->second].insert(lo->second);
    bond[lo->second][hi->second] = c.bond;
  }

  // Topological order; a cycle makes grading impossible.
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(down[v].size());
  std::vector<int> topo;
  topo.reserve(n);
  {
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      topo.push_back(v);
      for (int w : up[v])
        if (--indeg[w] == 0) stack.push_back(w);
    }
    if (static_cast<int>(topo.size()) != n)
      fail(errkind::not_graded, "cover relation has a cycle");
  }

  // Unique extrema under the transitive closure = unique source and sink of
  // the cover DAG (for a connected diagram; disconnected pieces create extra
  // sources or sinks as well, except a spurious isolated vertex with n > 1,
  // which also shows up as an extra source).
  {
    int sources = 0, sinks = 0;
    for (int v = 0; v < n; ++v) {
      if (down[v].empty()) ++sources;
      if (up[v].empty()) ++sinks;
    }
    if (sources != 1 || sinks != 1)
      fail(errkind::no_unique_extremum,
           "expected one minimal and one maximal element, found " + std::to_string(sources) +
               " minimal / " + std::to_string(sinks) + " maximal");
  }

  // Grading: the length of the unique source is 0 and every cover raises the
  // length by exactly 1. When this fails, distinguish a transitively
  // redundant cover from genuine ungradedness for the error report.
  std::vector<int> length(n, -1);
  for (int v : topo) {
    if (down[v].empty()) {
      length[v] = 0;
      continue;
    }
    for (int w : down[v]) {
      if (length[v] == -1)
        length[v] = length[w] + 1;
      else if (length[v] != length[w] + 1) {
        // Redundant iff some cover (a, b) admits a longer path from a to b:
        // a reaches an intermediate predecessor of b.
        auto reaches = [&](int from, int to) {
          std::vector<int> st{from};
          std::set<int> seen;
          while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            if (x == to) return true;
            if (!seen.insert(x).second) continue;
            for (int y : up[x]) st.push_back(y);
          }
          return false;
        };
        for (int a = 0; a < n; ++a)
          for (int b : up[a])
            for (int mid : down[b])
              if (mid != a && reaches(a, mid))
                fail(errkind::redundant_cover, "cover " + elements[a] + "<" + elements[b] +
                                                   " is implied by a longer chain");
        fail(errkind::not_graded, "maximal chains to '" + elements[v] + "' have different lengths");
      }
    }
  }

  // Reindex sorted by (length, label); index order is then a linear
  // extension refining the poset order.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (length[a] != length[b]) return length[a] < length[b];
    return elements[a] < elements[b];
  });
  std::vector<int> to_new(n);
  for (int i = 0; i < n; ++i) to_new[perm[i]] = i;

  BondedPoset p;
  p.labels_.resize(n);
  p.length_.resize(n);
  p.up_.resize(n);
  p.down_.resize(n);
  for (int i = 0; i < n; ++i) {
    p.labels_[i] = elements[perm[i]];
    p.length_[i] = length[perm[i]];
    p.index_[p.labels_[i]] = i;
  }
  for (int v = 0; v < n; ++v) {
    for (int w : up[v]) {
      p.up_[to_new[v]].emplace_back(to_new[w], bond[v].at(w));
      p.down_[to_new[w]].emplace_back(to_new[v], bond[v].at(w));
    }
  }
  for (int v = 0; v < n; ++v) {
    std::sort(p.up_[v].begin(), p.up_[v].end());
    std::sort(p.down_[v].begin(), p.down_[v].end());
  }

  // Transitive closure; with the sorted indexing, covers only go upward.
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (int v = n - 1; v >= 0; --v) {
    p.leq_[v][static_cast<std::size_t>(v)] = true;
    for (const auto& [w, b] : p.up_[v]) {
      (void)b;
      for (int t = 0; t < n; ++t)
        if (p.leq_[w][static_cast<std::size_t>(t)]) p.leq_[v][static_cast<std::size_t>(t)] = true;
    }
  }

  p.min_ = 0;
  p.max_ = n - 1;
  p.N_ = p.length_[p.max_];
  // The sort puts the unique source first and the unique sink last.
  if (!p.down_[p.min_].empty() || !p.up_[p.max_].empty())
    fail(errkind::no_unique_extremum, "extrema not unique after grading");
  return p;
}

Elem BondedPoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(errkind::unknown_element, "no element '" + label + "'");
  return it->second;
}

std::vector<CoverSpec> BondedPoset::cover_specs() const {
  std::vector<CoverSpec> out;
  for (int v = 0; v < size(); ++v)
    for (const auto& [w, b] : up_[v]) out.push_back({labels_[v], labels_[w], b});
  return out;
}

Bond BondedPoset::extended_bond(Elem a, Elem b) const {
  if (!lt(a, b)) fail(errkind::not_comparable, label(a) + " is not strictly below " + label(b));
  ensure_gcd_condition();
  Bond g = 0;
  Elem cur = a;
  while (cur != b) {
    for (const auto& [w, bd] : up_[cur]) {
      if (leq(w, b)) {
        g = g == 0 ? bd : gcd_bond(g, bd);
        cur = w;
        break;
      }
    }
  }
  return g;
}

Bond BondedPoset::lcm_bonds(Elem e) const {
  if (e < 0 || e >= size()) fail(errkind::unknown_element, "index out of range");
  Bond m = 1;
  for (const auto& [w, b] : up_[e]) {
    (void)w;
    m = lcm_bond(m, b);
  }
  for (const auto& [w, b] : down_[e]) {
    (void)w;
    m = lcm_bond(m, b);
  }
  return m;
}

std::vector<Chain> BondedPoset::interval_chains(Elem a, Elem b, std::size_t bound) const {
  if (!leq(a, b)) fail(errkind::not_comparable, label(a) + " not below " + label(b));
  std::vector<Chain> out;
  Chain cur{a};
  // Covers are index-sorted, and index order refines (length, label), so DFS
  // emits chains in lexicographic label-sequence order.
  auto dfs = [&](auto&& self, Elem v) -> void {
    if (v == b) {
      if (out.size() >= bound)
        fail(errkind::interval_too_large, "more than " + std::to_string(bound) +
                                              " maximal chains in [" + label(a) + ", " + label(b) + "]");
      out.push_back(cur);
      return;
    }
    for (const auto& [w, bd] : up_[v]) {
      (void)bd;
      if (!leq(w, b)) continue;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
    }
  };
  dfs(dfs, a);
  return out;
}

GcdReport BondedPoset::verify_gcd_condition(const EnumLimits& limits) const {
  GcdReport report;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = a + 1; b < size(); ++b) {
      if (!lt(a, b)) continue;
      auto chains = interval_chains(a, b, limits.max_interval_chains);
      Bond first_gcd = 0;
      const Chain* first_chain = nullptr;
      for (const auto& c : chains) {
        Bond g = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
          Bond bd = 0;
          for (const auto& [w, x] : up_[c[i]])
            if (w == c[i + 1]) bd = x;
          g = g == 0 ? bd : gcd_bond(g, bd);
        }
        if (first_chain == nullptr) {
          first_gcd = g;
          first_chain = &c;
        } else if (g != first_gcd) {
          report.ok = false;
          report.violations.push_back({a, b, *first_chain, c, first_gcd, g});
          break;
        }
      }
    }
  }
  return report;
}

void BondedPoset::ensure_gcd_condition() const {
  auto cache = gcd_cache_;
  std::call_once(cache->flag, [&] { cache->ok = verify_gcd_condition().ok; });
  if (!cache->ok)
    fail(errkind::gcd_condition, "bond gcds differ between maximal chains of some interval");
}

std::vector<Chain> BondedPoset::maximal_chains(const EnumLimits& limits) const {
  std::vector<Chain> out;
  Chain cur{min_};
  auto dfs = [&](auto&& self, Elem v) -> void {
    if (v == max_) {
      if (out.size() >= limits.max_chains)
        fail(errkind::too_many_chains,
             "more than " + std::to_string(limits.max_chains) + " maximal chains");
      out.push_back(cur);
      return;
    }
    for (const auto& [w, bd] : up_[v]) {
      (void)bd;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
    }
  };
  dfs(dfs, min_);
  return out;
}

BondedPoset BondedPoset::subposet_below(Elem top) const {
  if (top < 0 || top >= size()) fail(errkind::unknown_element, "index out of range");
  std::vector<std::string> elems;
  for (Elem v = 0; v < size(); ++v)
    if (leq(v, top)) elems.push_back(labels_[v]);
  std::vector<CoverSpec> covers;
  for (Elem v = 0; v < size(); ++v) {
    if (!leq(v, top)) continue;
    for (const auto& [w, b] : up_[v])
      if (leq(w, top)) covers.push_back({labels_[v], labels_[w], b});
  }
  return build(elems, covers);
}

bool BondedPoset::is_chain(const Chain& c) const {
  for (const auto e : c)
    if (e < 0 || e >= size()) fail(errkind::unknown_element, "index out of range");
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!lt(c[i], c[i + 1])) return false;
  return true;
}

}  // namespace lsp
