#ifndef LSPATH_POLYNOMIAL_HPP
#define LSPATH_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lspath/rational.hpp"

namespace lsp {

// Exponent vector over a fixed variable count; compared lexicographically.
using Monomial = std::vector<unsigned char>;

// Sparse multivariate polynomial over Q. The variable count is implicit in
// the monomial length; all monomials of one polynomial agree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars, const Rational& constant = Rational(0));

  static Polynomial variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  long total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial pow(long e) const;

  // Exact division: the quotient when the divisor divides this polynomial,
  // nothing otherwise. Works in any monomial order; lex is used.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  // Substitute zero for the flagged variables (drop every monomial that
  // uses one of them).
  Polynomial substitute_zero(const std::vector<bool>& kill) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Exact dense linear algebra over Q, enough for rank and consistent solves.
struct LinearSolveResult {
  bool consistent = false;
  std::vector<Rational> solution;  // one solution when consistent
};

// Rank of the matrix (rows of equal width).
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

// Solve A x = b for the column-major matrix given by columns; returns a
// solution iff b lies in the column span. The solution is unique whenever
// the columns are independent.
LinearSolveResult solve_linear(const std::vector<std::vector<Rational>>& columns,
                               const std::vector<Rational>& rhs);

}  // namespace lsp

#endif
