#include "lspath/orders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lsp {

LinearExtension make_extension(const BondedPoset& poset, const std::vector<Elem>& order) {
  if (static_cast<int>(order.size()) != poset.size())
    fail(errkind::unknown_element, "extension must list every element exactly once");
  LinearExtension ext;
  ext.order = order;
  ext.pos.assign(poset.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    Elem e = order[i];
    if (e < 0 || e >= poset.size() || ext.pos[e] != -1)
      fail(errkind::unknown_element, "extension must list every element exactly once");
    ext.pos[e] = i;
  }
  for (Elem a = 0; a < poset.size(); ++a)
    for (Elem b = 0; b < poset.size(); ++b)
      if (poset.lt(a, b) && ext.pos[a] > ext.pos[b])
        fail(errkind::not_comparable, "sequence does not refine the poset order");
  return ext;
}

LinearExtension default_extension(const BondedPoset& poset) {
  // Element indices are already sorted by (length, label).
  LinearExtension ext;
  ext.order.resize(poset.size());
  ext.pos.resize(poset.size());
  std::iota(ext.order.begin(), ext.order.end(), 0);
  std::iota(ext.pos.begin(), ext.pos.end(), 0);
  return ext;
}

Cmp rlex_compare(const PathVector& v, const PathVector& w, const LinearExtension& ext) {
  int best = -1;
  int sign = 0;
  for (const auto& [e, q] : v.entries()) {
    Rational d = q - w.at(e);
    if (d != 0 && ext.pos[e] > best) {
      best = ext.pos[e];
      sign = d < 0 ? -1 : 1;
    }
  }
  for (const auto& [e, q] : w.entries()) {
    if (v.at(e) != 0) continue;  // handled above
    if (q != 0 && ext.pos[e] > best) {
      best = ext.pos[e];
      sign = q > 0 ? -1 : 1;
    }
  }
  if (best == -1) return Cmp::EQ;
  return sign < 0 ? Cmp::LT : Cmp::GT;
}

TriCmp triangle_compare(const BondedPoset& poset, const PathVector& v, const PathVector& w) {
  std::vector<Elem> diff;
  for (const auto& [e, q] : v.entries())
    if (q != w.at(e)) diff.push_back(e);
  for (const auto& [e, q] : w.entries())
    if (q != 0 && v.at(e) == 0) diff.push_back(e);
  if (diff.empty()) return TriCmp::EQ;
  bool any_lt = false, any_gt = false;
  for (Elem e : diff) {
    bool maximal = true;
    for (Elem f : diff)
      if (f != e && poset.lt(e, f)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (v.at(e) < w.at(e))
      any_lt = true;
    else
      any_gt = true;
  }
  if (any_lt && any_gt) return TriCmp::INCOMPARABLE;
  return any_lt ? TriCmp::LT : TriCmp::GT;
}

std::vector<LinearExtension> linear_extensions(const BondedPoset& poset, const EnumLimits& limits) {
  if (static_cast<std::size_t>(poset.size()) > limits.max_extensions_elems)
    fail(errkind::too_large, "poset exceeds the extension-enumeration bound");
  const int n = poset.size();
  std::vector<int> remaining_preds(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (poset.lt(b, a)) ++remaining_preds[a];

  std::vector<LinearExtension> out;
  std::vector<Elem> cur;
  std::vector<bool> used(n, false);
  // Candidates tried in label order so the output is lexicographic by label
  // sequence.
  std::vector<Elem> by_label(n);
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(),
            [&](Elem a, Elem b) { return poset.label(a) < poset.label(b); });

  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(make_extension(poset, cur));
      return;
    }
    for (Elem e : by_label) {
      if (used[e] || remaining_preds[e] != 0) continue;
      used[e] = true;
      cur.push_back(e);
      for (Elem b = 0; b < n; ++b)
        if (poset.lt(e, b)) --remaining_preds[b];
      rec();
      for (Elem b = 0; b < n; ++b)
        if (poset.lt(e, b)) ++remaining_preds[b];
      cur.pop_back();
      used[e] = false;
    }
  };
  rec();
  return out;
}

}  // namespace lsp
