#include "lspath/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lspath/error.hpp"

namespace lsp {

Polynomial::Polynomial(int nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Monomial(nvars, 0), constant);
}

Polynomial Polynomial::variable(int nvars, int var) {
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[var] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned char e) { return e == 0; });
}

long Polynomial::total_degree() const {
  long deg = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    long d = 0;
    for (unsigned char e : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (nvars_ == 0 && !m.empty()) nvars_ = static_cast<int>(m.size());
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, q] : terms_) q *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(out.nvars_, 0);
      for (int i = 0; i < out.nvars_; ++i) {
        unsigned int e = (i < static_cast<int>(ma.size()) ? ma[i] : 0u) +
                         (i < static_cast<int>(mb.size()) ? mb[i] : 0u);
        if (e > 250) fail(errkind::bound_exceeded, "monomial exponent overflow");
        m[i] = static_cast<unsigned char>(e);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(long e) const {
  Polynomial out(nvars_, Rational(1));
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) fail(errkind::solve_failed, "division by the zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(std::max(nvars_, divisor.nvars_));
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    Monomial q(quot.nvars(), 0);
    bool divides = true;
    for (int i = 0; i < quot.nvars(); ++i) {
      unsigned char re = i < static_cast<int>(rm.size()) ? rm[i] : 0;
      unsigned char de = i < static_cast<int>(lead_m.size()) ? lead_m[i] : 0;
      if (re < de) {
        divides = false;
        break;
      }
      q[i] = static_cast<unsigned char>(re - de);
    }
    if (!divides) return std::nullopt;
    Polynomial t(quot.nvars());
    t.add_term(q, rc / lead_c);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Polynomial Polynomial::substitute_zero(const std::vector<bool>& kill) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    bool drop = false;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0 && i < kill.size() && kill[i]) {
        drop = true;
        break;
      }
    if (!drop) out.add_term(m, c);
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << rat_to_string(a);
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << var_names[i];
      if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = Rational(1) / rows[rank][c];
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

LinearSolveResult solve_linear(const std::vector<std::vector<Rational>>& columns,
                               const std::vector<Rational>& rhs) {
  LinearSolveResult result;
  const std::size_t ncols = columns.size();
  const std::size_t nrows = rhs.size();
  for (const auto& col : columns)
    if (col.size() != nrows) fail(errkind::solve_failed, "ragged matrix");

  // Augmented row-major elimination.
  std::vector<std::vector<Rational>> aug(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < nrows; ++i) aug[i][j] = columns[j][i];
  for (std::size_t i = 0; i < nrows; ++i) aug[i][ncols] = rhs[i];

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t piv = rank;
    while (piv < nrows && aug[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(aug[rank], aug[piv]);
    Rational inv = Rational(1) / aug[rank][c];
    for (std::size_t j = c; j <= ncols; ++j) aug[rank][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= ncols; ++j) aug[i][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < nrows; ++i)
    if (aug[i][ncols] != 0) return result;  // inconsistent

  result.consistent = true;
  result.solution.assign(ncols, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) result.solution[pivot_col[i]] = aug[i][ncols];
  return result;
}

}  // namespace lsp
