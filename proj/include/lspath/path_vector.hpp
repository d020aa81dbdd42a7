#ifndef LSPATH_PATH_VECTOR_HPP
#define LSPATH_PATH_VECTOR_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "lspath/poset.hpp"
#include "lspath/rational.hpp"

namespace lsp {

// Element of Q^S for a fixed poset: sparse, entries sorted by element index,
// zeros never stored. Also used for Q^C vectors (support inside a chain).
class PathVector {
 public:
  PathVector() = default;
  PathVector(std::initializer_list<std::pair<Elem, Rational>> entries);

  static PathVector unit(Elem e) { return PathVector({{e, Rational(1)}}); }

  const std::vector<std::pair<Elem, Rational>>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Rational at(Elem e) const;
  void set(Elem e, const Rational& value);

  std::vector<Elem> support() const;
  Rational sum() const;

  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);
  PathVector& operator*=(const Rational& c);
  friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
  friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
  friend PathVector operator*(const Rational& c, PathVector v) { return v *= c; }

  bool operator==(const PathVector& o) const { return entries_ == o.entries_; }
  bool operator!=(const PathVector& o) const { return !(*this == o); }
  // Arbitrary but deterministic total order, for use as a map key.
  bool operator<(const PathVector& o) const;

  // Restriction to entries whose element satisfies the predicate.
  template <class Pred>
  PathVector filtered(Pred keep) const {
    PathVector out;
    for (const auto& [e, q] : entries_)
      if (keep(e)) out.entries_.emplace_back(e, q);
    return out;
  }

 private:
  std::vector<std::pair<Elem, Rational>> entries_;
};

}  // namespace lsp

#endif
