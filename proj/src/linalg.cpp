// Exact linear algebra over Q(t_i).
//
// Both determinant and inverse first scale each row by the lcm of its
// denominators so elimination runs over Laurent polynomials, where Bareiss
// divisions are exact and no gcd is needed until the very end.
#include "gcalc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gcalc {

RfMatrix RfMatrix::identity(size_t n) {
  RfMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = RationalFn(1);
  return m;
}

RfMatrix RfMatrix::operator+(const RfMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RfMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

RfMatrix RfMatrix::operator-(const RfMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RfMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

RfMatrix RfMatrix::operator-() const {
  return map([](const RationalFn& f) { return -f; });
}

RfMatrix RfMatrix::operator*(const RfMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RfMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < o.cols_; ++j) {
      RationalFn s;
      for (size_t k = 0; k < cols_; ++k) {
        const RationalFn& x = (*this)(i, k);
        const RationalFn& y = o(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      r(i, j) = s;
    }
  return r;
}

RfMatrix RfMatrix::scaled(const RationalFn& c) const {
  return map([&](const RationalFn& f) { return f * c; });
}

RfMatrix RfMatrix::transpose() const {
  RfMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RfMatrix RfMatrix::select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
  RfMatrix r(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
  return r;
}

RfMatrix substitute(const RfMatrix& m, const Substitution& sub) {
  return m.map([&](const RationalFn& f) { return substitute(f, sub); });
}

RfMatrix conjugate(const RfMatrix& m) {
  return m.map([](const RationalFn& f) { return conjugate(f); });
}

namespace {

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  LaurentPoly q;
  if (try_divide(a, b, q)) return a;
  if (try_divide(b, a, q)) return b;
  return divide_exact(a * b, poly_gcd(a, b));
}

// Rows scaled to polynomial entries: m(i, j) = p[i][j] / scale[i].
struct Cleared {
  std::vector<std::vector<LaurentPoly>> p;
  std::vector<LaurentPoly> scale;
};

Cleared clear_rows(const RfMatrix& m) {
  Cleared c;
  c.p.resize(m.rows());
  c.scale.resize(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    LaurentPoly l(1);
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) l = poly_lcm(l, m(i, j).den());
    c.scale[i] = l;
    c.p[i].resize(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
      const RationalFn& f = m(i, j);
      if (f.is_zero()) continue;
      c.p[i][j] = f.den() == l ? f.num() : f.num() * divide_exact(l, f.den());
    }
  }
  return c;
}

// Pick the nonzero candidate with the fewest terms as pivot.
size_t choose_pivot(const std::vector<std::vector<LaurentPoly>>& p, size_t k, size_t col) {
  size_t best = p.size();
  for (size_t i = k; i < p.size(); ++i) {
    if (p[i][col].is_zero()) continue;
    if (best == p.size() || p[i][col].size() < p[best][col].size()) best = i;
  }
  return best;
}

}  // namespace

RationalFn determinant(const RfMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  size_t n = m.rows();
  if (n == 0) return RationalFn(1);
  if (n == 1) return m(0, 0);
  Cleared c = clear_rows(m);
  auto& p = c.p;
  bool negate = false;
  LaurentPoly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = choose_pivot(p, k, k);
    if (piv == n) return RationalFn();
    if (piv != k) {
      std::swap(p[piv], p[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = p[k][k] * p[i][j] - p[i][k] * p[k][j];
        p[i][j] = prev.is_constant() && prev.constant_term() == 1 ? v : divide_exact(v, prev);
      }
      p[i][k] = LaurentPoly();
    }
    prev = p[k][k];
  }
  LaurentPoly den(1);
  for (const auto& s : c.scale) den *= s;
  LaurentPoly d = negate ? -p[n - 1][n - 1] : p[n - 1][n - 1];
  return RationalFn(d, den);
}

RfMatrix inverse(const RfMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  size_t n = m.rows();
  if (n == 0) return RfMatrix();
  if (n == 1) {
    if (m(0, 0).is_zero()) throw SingularMatrix("singular 1x1 matrix");
    RfMatrix r(1, 1);
    r(0, 0) = m(0, 0).inverse();
    return r;
  }
  Cleared c = clear_rows(m);
  // Augment with the identity: [P | I].
  auto& p = c.p;
  for (size_t i = 0; i < n; ++i) {
    p[i].resize(2 * n);
    p[i][n + i] = LaurentPoly(1);
  }
  LaurentPoly prev(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = choose_pivot(p, k, k);
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != k) std::swap(p[piv], p[k]);
    bool unit_prev = prev.is_constant() && prev.constant_term() == 1;
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        LaurentPoly v = p[k][k] * p[i][j] - p[i][k] * p[k][j];
        p[i][j] = unit_prev ? v : divide_exact(v, prev);
      }
      p[i][k] = LaurentPoly();
    }
    prev = p[k][k];
  }
  // The left block is now diagonal, so row i of P^{-1} is right(i, :) / left(i, i).
  RfMatrix r(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (p[i][n + j].is_zero()) continue;
      // M = diag(scale)^{-1} P, hence M^{-1} = P^{-1} diag(scale).
      r(i, j) = RationalFn(p[i][n + j] * c.scale[j], p[i][i]);
    }
  return r;
}

}  // namespace gcalc
