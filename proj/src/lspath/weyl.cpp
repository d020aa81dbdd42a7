#include "lspath/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace lsp {

namespace {

std::vector<std::vector<long>> cartan_matrix(char type, int rank) {
  auto chain = [&](int n) {
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };
  switch (type) {
    case 'A': {
      if (rank < 1) fail(errkind::unsupported_type, "rank of A must be >= 1");
      return chain(rank);
    }
    case 'B': {
      // alpha_rank short: its row carries the -2.
      if (rank < 2) fail(errkind::unsupported_type, "rank of B must be >= 2");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;
      return a;
    }
    case 'C': {
      if (rank < 2) fail(errkind::unsupported_type, "rank of C must be >= 2");
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;
      return a;
    }
    case 'D': {
      if (rank < 3) fail(errkind::unsupported_type, "rank of D must be >= 3");
      auto a = chain(rank - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(std::vector<long>(rank, 0));
      a[rank - 1][rank - 1] = 2;
      a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1;
      return a;
    }
    case 'E': {
      if (rank < 6 || rank > 8) fail(errkind::unsupported_type, "rank of E must be 6, 7 or 8");
      // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...-rank.
      std::vector<std::vector<long>> a(rank, std::vector<long>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (rank != 4) fail(errkind::unsupported_type, "F has rank 4");
      auto a = chain(4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      a[1][2] = -1;
      return a;
    }
    case 'G': {
      if (rank != 2) fail(errkind::unsupported_type, "G has rank 2");
      // alpha_1 short, alpha_2 long.
      return {{2, -3}, {-1, 2}};
    }
    default:
      fail(errkind::unsupported_type, std::string("unknown type '") + type + "'");
  }
}

std::size_t classical_positive_root_count(char type, int rank) {
  switch (type) {
    case 'A':
      return static_cast<std::size_t>(rank) * (rank + 1) / 2;
    case 'B':
    case 'C':
      return static_cast<std::size_t>(rank) * rank;
    case 'D':
      return static_cast<std::size_t>(rank) * (rank - 1);
    case 'E':
      return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F':
      return 24;
    case 'G':
      return 6;
    default:
      return 0;
  }
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type, rank);

  // Symmetrization: d_i * cartan[i][j] = d_j * cartan[j][i]; normalize each
  // component so its largest d is 1 (long roots have squared length 2).
  rs.d_.assign(rank, Rational(0));
  std::vector<int> component(rank, -1);
  for (int start = 0; start < rank; ++start) {
    if (component[start] != -1) continue;
    std::vector<int> comp{start};
    component[start] = start;
    rs.d_[start] = 1;
    for (std::size_t q = 0; q < comp.size(); ++q) {
      int i = comp[q];
      for (int j = 0; j < rank; ++j) {
        if (rs.cartan_[i][j] == 0 || component[j] != -1) continue;
        component[j] = start;
        // d_j * cartan[j][i] = (alpha_j, alpha_i) = d_i * cartan[i][j]
        rs.d_[j] = rs.d_[i] * Rational(rs.cartan_[i][j]) / Rational(rs.cartan_[j][i]);
        comp.push_back(j);
      }
    }
    Rational mx(0);
    for (int i : comp) mx = std::max(mx, rs.d_[i]);
    for (int i : comp) rs.d_[i] /= mx;
  }

  // Positive roots: close the simple roots under simple reflections.
  std::set<RootCoords> all;
  std::vector<RootCoords> queue;
  for (int i = 0; i < rank; ++i) {
    RootCoords alpha(rank, 0);
    alpha[i] = 1;
    all.insert(alpha);
    queue.push_back(alpha);
  }
  while (!queue.empty()) {
    RootCoords beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      long pair = 0;  // <beta, alpha_i_vee> = sum_j beta_j cartan[i][j]
      for (int j = 0; j < rank; ++j) pair += rs.cartan_[i][j] * beta[j];
      RootCoords refl = beta;
      refl[i] -= pair;
      if (all.insert(refl).second) queue.push_back(refl);
    }
  }
  for (const auto& beta : all) {
    bool nonneg = true;
    for (long c : beta) nonneg = nonneg && c >= 0;
    if (nonneg) rs.positive_.push_back(beta);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end());
  if (rs.positive_.size() != classical_positive_root_count(type, rank))
    fail(errkind::unsupported_type, "positive root generation disagrees with the classical count");
  return rs;
}

Rational RootSystem::inner(const Weight& mu, const RootCoords& beta) const {
  // (mu, beta) = sum_j beta_j d_j <mu, alpha_j_vee>
  Rational out(0);
  for (int j = 0; j < rank_; ++j) out += Rational(beta[j]) * d_[j] * Rational(mu[j]);
  return out;
}

Rational RootSystem::square_length(const RootCoords& beta) const {
  // (beta, beta) = sum_{ij} beta_i beta_j d_i cartan[i][j]
  Rational out(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      out += Rational(beta[i]) * Rational(beta[j]) * d_[i] * Rational(cartan_[i][j]);
  return out;
}

long RootSystem::pairing(const Weight& mu, const RootCoords& beta) const {
  Rational p = Rational(2) * inner(mu, beta) / square_length(beta);
  if (!is_integer(p)) fail(errkind::unsupported_type, "non-integral coroot pairing");
  return p.get_num().get_si();
}

Weight RootSystem::simple_reflect(const Weight& mu, int i) const {
  Weight out = mu;
  for (int j = 0; j < rank_; ++j) out[j] -= mu[i] * cartan_[j][i];
  return out;
}

Weight RootSystem::reflect(const Weight& mu, const RootCoords& beta) const {
  long p = pairing(mu, beta);
  Weight out = mu;
  // alpha_i in fundamental coordinates: coordinate j is cartan[j][i].
  for (int j = 0; j < rank_; ++j) {
    long bj = 0;
    for (int i = 0; i < rank_; ++i) bj += beta[i] * cartan_[j][i];
    out[j] -= p * bj;
  }
  return out;
}

bool RootSystem::is_dominant(const Weight& mu) const {
  for (long m : mu)
    if (m < 0) return false;
  return true;
}

std::vector<OrbitElement> weight_orbit(const RootSystem& rs, const Weight& lambda,
                                       std::size_t max_size) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    fail(errkind::not_dominant, "weight has the wrong rank");
  if (!rs.is_dominant(lambda)) fail(errkind::not_dominant, "orbit must start at a dominant weight");
  std::map<Weight, OrbitElement> seen;
  seen.emplace(lambda, OrbitElement{lambda, 0, {}});
  std::queue<Weight> frontier;
  frontier.push(lambda);
  while (!frontier.empty()) {
    Weight mu = frontier.front();
    frontier.pop();
    const OrbitElement cur = seen.at(mu);
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu[i] <= 0) continue;  // length increases only across positive pairing
      Weight next = rs.simple_reflect(mu, i);
      if (seen.count(next)) continue;
      OrbitElement elem{next, cur.length + 1, cur.reduced_word};
      elem.reduced_word.insert(elem.reduced_word.begin(), i);
      seen.emplace(next, std::move(elem));
      if (seen.size() > max_size) fail(errkind::orbit_too_large, "weight orbit exceeds the bound");
      frontier.push(next);
    }
  }
  std::vector<OrbitElement> out;
  for (auto& [w, e] : seen) {
    (void)w;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const OrbitElement& a, const OrbitElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.weight < b.weight;
  });
  return out;
}

std::string weight_label(const Weight& mu) {
  std::ostringstream os;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  return os.str();
}

Weight weight_from_label(const std::string& label, int rank) {
  Weight out;
  std::istringstream is(label);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      out.push_back(std::stoll(part));
    } catch (const std::exception&) {
      fail(errkind::parse_error, "bad weight label '" + label + "'");
    }
  }
  if (static_cast<int>(out.size()) != rank)
    fail(errkind::parse_error, "weight label '" + label + "' has the wrong rank");
  return out;
}

BondedPoset bruhat_poset(const RootSystem& rs, const Weight& lambda, const Weight* tau,
                         std::size_t max_orbit) {
  auto orbit = weight_orbit(rs, lambda, max_orbit);
  std::map<Weight, int> position;
  std::map<Weight, int> length;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    position[orbit[i].weight] = static_cast<int>(i);
    length[orbit[i].weight] = orbit[i].length;
  }

  // Reflection edges raising length by exactly one are the Bruhat covers of
  // the quotient.
  struct Edge {
    int from, to;
    Bond bond;
  };
  std::vector<Edge> edges;
  for (const auto& elem : orbit) {
    for (const auto& beta : rs.positive_roots()) {
      long p = rs.pairing(elem.weight, beta);
      if (p <= 0) continue;
      Weight next = rs.reflect(elem.weight, beta);
      auto it = length.find(next);
      if (it == length.end()) fail(errkind::orbit_too_large, "reflection left the orbit");
      if (it->second != elem.length + 1) continue;
      edges.push_back({position.at(elem.weight), position.at(next), p});
    }
  }

  // Restrict to the interval below tau via upward reachability from tau's
  // complement: keep the elements from which tau is reachable... i.e. the
  // downward closure of tau under the cover edges.
  std::vector<bool> keep(orbit.size(), true);
  if (tau != nullptr) {
    auto it = position.find(*tau);
    if (it == position.end()) fail(errkind::unknown_element, "tau is not in the orbit");
    keep.assign(orbit.size(), false);
    std::vector<int> stack{it->second};
    keep[it->second] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : edges)
        if (e.to == v && !keep[e.from]) {
          keep[e.from] = true;
          stack.push_back(e.from);
        }
    }
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    if (keep[i]) labels.push_back(weight_label(orbit[i].weight));
  std::vector<CoverSpec> covers;
  for (const auto& e : edges)
    if (keep[e.from] && keep[e.to])
      covers.push_back({weight_label(orbit[e.from].weight), weight_label(orbit[e.to].weight), e.bond});
  BondedPoset poset = BondedPoset::build(labels, covers);
  poset.ensure_gcd_condition();
  return poset;
}

LSPath littelmann_to_function(const BondedPoset& poset, const LittelmannPair& pair) {
  const auto& sigma = pair.elements_desc;
  const auto& a = pair.breaks;
  if (sigma.empty() || a.size() != sigma.size() + 1)
    fail(errkind::malformed_pair, "need r elements and r+1 break points");
  if (a.front() != 0 || a.back() != 1)
    fail(errkind::malformed_pair, "break points must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (!(a[i] < a[i + 1])) fail(errkind::malformed_pair, "break points must strictly increase");
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (!poset.lt(sigma[i + 1], sigma[i]))
      fail(errkind::malformed_pair, "elements must strictly decrease");
  PathVector v;
  for (std::size_t j = 0; j < sigma.size(); ++j) v.set(sigma[j], a[j + 1] - a[j]);
  return LSPath{v, 1};
}

LittelmannPair littelmann_from_function(const BondedPoset& poset, const LSPath& path) {
  if (path.degree != 1 || path.is_zero()) fail(errkind::malformed_pair, "degree-1 path required");
  (void)poset;
  LittelmannPair pair;
  const auto& entries = path.values.entries();
  pair.breaks.push_back(Rational(0));
  for (std::size_t i = entries.size(); i-- > 0;) {
    pair.elements_desc.push_back(entries[i].first);
    pair.breaks.push_back(pair.breaks.back() + entries[i].second);
  }
  return pair;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank() || !rs.is_dominant(lambda))
    fail(errkind::not_dominant, "Weyl dimension needs a dominant weight");
  Weight rho(rs.rank(), 1);
  Weight shifted = lambda;
  for (int i = 0; i < rs.rank(); ++i) shifted[i] += 1;
  Rational dim(1);
  for (const auto& beta : rs.positive_roots()) {
    dim *= Rational(rs.pairing(shifted, beta)) / Rational(rs.pairing(rho, beta));
  }
  if (!is_integer(dim)) fail(errkind::unsupported_type, "Weyl dimension is not integral");
  return dim.get_num();
}

}  // namespace lsp
