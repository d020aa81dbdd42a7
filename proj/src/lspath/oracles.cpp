#include "lspath/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lsp::oracle {

std::vector<std::vector<bool>> closure_from_covers(std::size_t n,
                                                   const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : covers) leq[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

bool graded_by_exhaustion(std::size_t n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [a, b] : covers) {
    up[a].push_back(b);
    ++indeg[b];
  }
  int source = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) {
      if (source != -1) return false;
      source = static_cast<int>(v);
    }
  if (source == -1) return false;
  // Collect the length of every source-to-v path; gradedness means one value.
  std::vector<std::set<int>> depths(n);
  std::function<void(int, int)> dfs = [&](int v, int depth) {
    depths[v].insert(depth);
    if (depths[v].size() > 1) return;
    for (int w : up[v]) dfs(w, depth + 1);
  };
  dfs(source, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (depths[v].size() > 1) return false;
  return true;
}

std::vector<std::vector<std::string>> maximal_chains_by_dfs(const BondedPoset& poset) {
  auto covers = poset.cover_specs();
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  std::set<std::string> with_upper, with_lower;
  for (const auto& c : covers) {
    with_upper.insert(c.lower);
    with_lower.insert(c.upper);
  }
  std::string bottom, top;
  for (const auto& lab : poset.labels()) {
    if (!with_lower.count(lab)) bottom = lab;
    if (!with_upper.count(lab)) top = lab;
  }
  std::function<void(const std::string&)> dfs = [&](const std::string& v) {
    cur.push_back(v);
    if (v == top) out.push_back(cur);
    for (const auto& c : covers)
      if (c.lower == v) dfs(c.upper);
    cur.pop_back();
  };
  if (poset.size() == 1) return {{poset.labels()[0]}};
  dfs(bottom);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<LSPath>> all_standard_decompositions(const BondedPoset& poset,
                                                             const LSPath& path) {
  std::vector<std::vector<LSPath>> results;
  auto degree_one = enumerate_on_chain(poset, path.values.support(), 1);
  std::vector<LSPath> acc;
  std::function<void(PathVector)> rec = [&](PathVector remaining) {
    if (static_cast<long>(acc.size()) == path.degree) {
      if (remaining.is_zero()) results.push_back(acc);
      return;
    }
    for (const auto& f : degree_one) {
      if (!acc.empty()) {
        Elem prev_top = acc.back().values.entries().back().first;
        Elem cur_bot = f.values.entries().front().first;
        if (!poset.leq(prev_top, cur_bot)) continue;
      }
      bool fits = true;
      for (const auto& [e, q] : f.values.entries())
        if (remaining.at(e) < q) {
          fits = false;
          break;
        }
      if (!fits) continue;
      acc.push_back(f);
      rec(remaining - f.values);
      acc.pop_back();
    }
  };
  rec(path.values);
  return results;
}

namespace {

void topo_sorts(const BondedPoset& poset, std::vector<Elem>& cur, std::vector<bool>& used,
                const std::function<void(const std::vector<Elem>&)>& emit) {
  if (static_cast<int>(cur.size()) == poset.size()) {
    emit(cur);
    return;
  }
  for (Elem e = 0; e < poset.size(); ++e) {
    if (used[e]) continue;
    bool ready = true;
    for (Elem f = 0; f < poset.size(); ++f)
      if (!used[f] && poset.lt(f, e)) {
        ready = false;
        break;
      }
    if (!ready) continue;
    used[e] = true;
    cur.push_back(e);
    topo_sorts(poset, cur, used, emit);
    cur.pop_back();
    used[e] = false;
  }
}

}  // namespace

TriCmp triangle_by_extensions(const BondedPoset& poset, const PathVector& v, const PathVector& w) {
  if (v == w) return TriCmp::EQ;
  bool all_le = true, all_ge = true;
  std::vector<Elem> cur;
  std::vector<bool> used(poset.size(), false);
  topo_sorts(poset, cur, used, [&](const std::vector<Elem>& order) {
    // reverse-lex decision for this extension
    for (std::size_t i = order.size(); i-- > 0;) {
      Rational a = v.at(order[i]);
      Rational b = w.at(order[i]);
      if (a == b) continue;
      if (a < b)
        all_ge = false;
      else
        all_le = false;
      return;
    }
  });
  if (all_le && !all_ge) return TriCmp::LT;
  if (all_ge && !all_le) return TriCmp::GT;
  return TriCmp::INCOMPARABLE;
}

namespace {

bool try_map(const BondedPoset& a, const BondedPoset& b, std::vector<int>& image, Elem next) {
  if (next == a.size()) return true;
  for (Elem cand = 0; cand < b.size(); ++cand) {
    if (std::find(image.begin(), image.end(), cand) != image.end()) continue;
    if (a.length(next) != b.length(cand)) continue;
    bool ok = true;
    for (Elem prev = 0; prev < next && ok; ++prev) {
      // covers with bonds must match in both directions
      Bond ab = 0, ba = 0, ib = 0, bi = 0;
      for (const auto& [w, bd] : a.up_covers(prev))
        if (w == next) ab = bd;
      for (const auto& [w, bd] : a.up_covers(next))
        if (w == prev) ba = bd;
      for (const auto& [w, bd] : b.up_covers(image[prev]))
        if (w == cand) ib = bd;
      for (const auto& [w, bd] : b.up_covers(cand))
        if (w == image[prev]) bi = bd;
      ok = (ab == ib && ba == bi);
    }
    if (!ok) continue;
    image.push_back(cand);
    if (try_map(a, b, image, next + 1)) return true;
    image.pop_back();
  }
  return false;
}

}  // namespace

bool posets_isomorphic(const BondedPoset& a, const BondedPoset& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> image;
  return try_map(a, b, image, 0);
}

}  // namespace lsp::oracle
