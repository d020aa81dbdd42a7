#include "lspath/order_complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lsp {

std::vector<Rational> SimplexEmbedding::embed(const PathVector& point) const {
  const std::size_t k = chain.size() - 1;
  std::vector<Rational> out(k, Rational(0));
  for (const auto& [e, q] : point.entries()) {
    auto it = std::find(chain.begin(), chain.end(), e);
    if (it == chain.end()) fail(errkind::not_a_chain, "point not supported on the chain");
    std::size_t i = static_cast<std::size_t>(it - chain.begin());
    for (std::size_t j = 0; j < k; ++j) out[j] += q * Rational(vertex_images[i][j]);
  }
  return out;
}

std::vector<Chain> faces(const BondedPoset& poset, const EnumLimits& limits) {
  std::vector<Chain> out;
  Chain cur;
  std::function<void(Elem)> rec = [&](Elem from) {
    for (Elem e = from; e < poset.size(); ++e) {
      if (!cur.empty() && !poset.lt(cur.back(), e)) continue;
      cur.push_back(e);
      if (out.size() >= limits.max_chains)
        fail(errkind::too_many_chains, "face enumeration exceeded the bound");
      out.push_back(cur);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  // Index order refines (length, label); re-sort by label sequence.
  std::sort(out.begin(), out.end(), [&](const Chain& a, const Chain& b) {
    std::vector<std::string> la, lb;
    for (Elem e : a) la.push_back(poset.label(e));
    for (Elem e : b) lb.push_back(poset.label(e));
    return la < lb;
  });
  return out;
}

SimplexEmbedding simplex_embedding(const BondedPoset& poset, const Chain& chain) {
  if (chain.empty() || !poset.is_chain(chain)) fail(errkind::not_a_chain, "embedding needs a chain");
  poset.ensure_gcd_condition();
  const std::size_t k = chain.size() - 1;
  SimplexEmbedding emb;
  emb.chain = chain;
  emb.vertex_images.assign(k + 1, std::vector<Bond>(k, 0));
  for (std::size_t i = 1; i <= k; ++i) {
    emb.vertex_images[i] = emb.vertex_images[i - 1];
    emb.vertex_images[i][i - 1] += poset.extended_bond(chain[i - 1], chain[i]);
  }
  return emb;
}

std::vector<PathVector> level_points(const BondedPoset& poset, long r, const EnumLimits& limits) {
  if (r < 1) fail(errkind::not_an_ls_path, "level index must be positive");
  std::vector<PathVector> out;
  for (const auto& p : enumerate(poset, r, limits)) {
    PathVector v = p.values;
    v *= Rational(1, r);
    out.push_back(std::move(v));
  }
  return out;
}

bool verify_integral_structure(const BondedPoset& poset, const Chain& chain, long r,
                               const EnumLimits& limits) {
  if (chain.empty() || !poset.is_chain(chain)) fail(errkind::not_a_chain, "chain required");
  if (r < 1) fail(errkind::not_an_ls_path, "degree must be positive");
  auto emb = simplex_embedding(poset, chain);
  const std::size_t k = chain.size() - 1;

  // Left side: embedded scaled paths, as exact coordinate vectors.
  std::set<std::vector<Rational>> path_images;
  for (const auto& p : enumerate_on_chain(poset, chain, r, limits)) {
    PathVector scaled = p.values;
    scaled *= Rational(1, r);
    auto img = emb.embed(scaled);
    for (const auto& c : img)
      if (!is_integer(c * Rational(r))) return false;  // not a (1/r)-lattice point
    if (!path_images.insert(img).second) return false;  // i_K not injective on paths
  }

  // Right side: (1/r) Z^k intersected with the embedded simplex
  //   { x : r >= x_1/n_1 >= ... >= x_k/n_k >= 0 }  (after scaling by r),
  // enumerated from these inequalities alone.
  std::vector<Bond> n(k);
  for (std::size_t j = 0; j < k; ++j) n[j] = poset.extended_bond(chain[j], chain[j + 1]);
  std::size_t count = 0;
  std::vector<Integer> y(k);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == k) {
      ++count;
      std::vector<Rational> img(k);
      for (std::size_t t = 0; t < k; ++t) img[t] = Rational(y[t]) / Rational(r);
      return path_images.count(img) > 0;
    }
    // y_j / n_j <= y_{j-1} / n_{j-1} (or <= r for j = 0), y_j >= 0
    Integer hi = (j == 0) ? Integer(r) * n[0] : floor_div(y[j - 1] * n[j], Integer(n[j - 1]));
    for (Integer t = 0; t <= hi; ++t) {
      y[j] = t;
      if (!rec(j + 1)) return false;
    }
    return true;
  };
  if (k == 0) return path_images.size() == 1;
  if (!rec(0)) return false;
  return count == path_images.size();
}

}  // namespace lsp
