#ifndef LSPATH_RATIONAL_HPP
#define LSPATH_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace lsp {

// All path, valuation and polynomial arithmetic is exact.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// The two-argument mpq_class constructor stores the fraction unreduced;
// every ratio of variables must go through here.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Canonical string form: "p" for integers, "p/q" otherwise, always reduced.
std::string rat_to_string(const Rational& q);

// Accepts "p" and "p/q"; throws Error(kind "parse-error") on malformed input.
Rational rat_from_string(const std::string& s);

}  // namespace lsp

#endif
