#ifndef LSPATH_POSET_HPP
#define LSPATH_POSET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lspath/error.hpp"

namespace lsp {

// Element index local to one poset. Indices are assigned sorted by
// (length, label), so index order is itself a linear extension of the poset.
using Elem = int;
using Chain = std::vector<Elem>;
using Bond = long;

struct CoverSpec {
  std::string lower;
  std::string upper;
  Bond bond = 1;
};

struct GcdViolation {
  Elem lower = -1;
  Elem upper = -1;
  Chain chain1;  // maximal chains of the interval [lower, upper]
  Chain chain2;
  Bond gcd1 = 0;
  Bond gcd2 = 0;
};

struct GcdReport {
  bool ok = true;
  std::vector<GcdViolation> violations;
};

struct EnumLimits {
  std::size_t max_chains = 1000000;          // maximal-chain enumeration
  std::size_t max_interval_chains = 1000000; // per-interval bound of the gcd check
  std::size_t max_paths = 1000000;           // LS path enumeration
  std::size_t max_extensions_elems = 8;      // linear-extension enumeration
};

// Finite graded poset with a unique minimum and maximum and a positive
// integer bond on every cover. Immutable after construction; all queries are
// const and safe to share across threads.
class BondedPoset {
 public:
  static BondedPoset build(const std::vector<std::string>& elements,
                           const std::vector<CoverSpec>& covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Elem index_of(const std::string& label) const;  // errkind::unknown_element

  int length(Elem e) const { return length_[e]; }
  Elem min_element() const { return min_; }
  Elem max_element() const { return max_; }
  int top_length() const { return N_; }  // N = length of the maximal element

  bool leq(Elem a, Elem b) const { return leq_[a][static_cast<std::size_t>(b)]; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  // Upper respectively lower covers of e, as (other endpoint, bond) sorted by index.
  const std::vector<std::pair<Elem, Bond>>& up_covers(Elem e) const { return up_[e]; }
  const std::vector<std::pair<Elem, Bond>>& down_covers(Elem e) const { return down_[e]; }
  std::vector<CoverSpec> cover_specs() const;

  // gcd of the bonds along one (hence, under the gcd condition, any) maximal
  // chain from a to b; requires a < b.
  Bond extended_bond(Elem a, Elem b) const;

  // lcm of the bonds of all covers incident to e; 1 when there are none.
  Bond lcm_bonds(Elem e) const;

  GcdReport verify_gcd_condition(const EnumLimits& limits = {}) const;

  // Throws errkind::gcd_condition if the bond gcd consistency fails. Cached:
  // the check runs once per poset.
  void ensure_gcd_condition() const;

  // All maximal chains from the minimum to the maximum, in lexicographic
  // order of their label sequences.
  std::vector<Chain> maximal_chains(const EnumLimits& limits = {}) const;

  // Every maximal chain of the interval [a, b] (inclusive), lexicographic.
  std::vector<Chain> interval_chains(Elem a, Elem b, std::size_t bound) const;

  BondedPoset subposet_below(Elem top) const;

  // True if the given index sequence is strictly increasing in the order.
  bool is_chain(const Chain& c) const;

 private:
  BondedPoset() = default;

  std::vector<std::string> labels_;
  std::map<std::string, Elem> index_;
  std::vector<int> length_;
  std::vector<std::vector<std::pair<Elem, Bond>>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  Elem min_ = -1, max_ = -1;
  int N_ = 0;

  // Shared by copies; the underlying poset data never changes, so the cached
  // verdict stays valid.
  struct GcdCache {
    std::once_flag flag;
    bool ok = false;
  };
  std::shared_ptr<GcdCache> gcd_cache_ = std::make_shared<GcdCache>();
};

}  // namespace lsp

#endif
