// Small independent reference computations for the tests: dense univariate
// Laurent polynomials with integer coefficients, cofactor determinants and
// Burau matrices built from scratch.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gcalc/polyalg.hpp"

namespace oracle {

// exponent -> coefficient, no zero coefficients stored
struct Dense {
  std::map<int, long long> c;

  static Dense constant(long long v) {
    Dense d;
    if (v != 0) d.c[0] = v;
    return d;
  }
  static Dense mono(int e, long long v = 1) {
    Dense d;
    d.c[e] = v;
    return d;
  }
  Dense operator+(const Dense& o) const {
    Dense r = *this;
    for (auto [e, v] : o.c) r.c[e] += v;
    return r.trimmed();
  }
  Dense operator-() const {
    Dense r = *this;
    for (auto& [e, v] : r.c) v = -v;
    return r;
  }
  Dense operator-(const Dense& o) const { return *this + (-o); }
  Dense operator*(const Dense& o) const {
    Dense r;
    for (auto [e1, v1] : c)
      for (auto [e2, v2] : o.c) r.c[e1 + e2] += v1 * v2;
    return r.trimmed();
  }
  bool operator==(const Dense& o) const { return c == o.c; }
  Dense trimmed() const {
    Dense r;
    for (auto [e, v] : c)
      if (v != 0) r.c[e] = v;
    return r;
  }
  // Divided by its lowest power of t, with a positive lowest coefficient.
  Dense normalized() const {
    if (c.empty()) return *this;
    int lo = c.begin()->first;
    long long s = c.begin()->second < 0 ? -1 : 1;
    Dense r;
    for (auto [e, v] : c) r.c[e - lo] = s * v;
    return r;
  }
};

// Converts a Laurent polynomial in at most one variable with integer
// coefficients.
inline Dense from_gcalc(const gcalc::RationalFn& f) {
  if (!f.is_laurent()) throw std::runtime_error("not a Laurent polynomial");
  gcalc::LaurentPoly p = f.as_laurent();
  Dense d;
  for (const auto& t : p.terms()) {
    if (t.c.get_den() != 1) throw std::runtime_error("non-integer coefficient");
    if (t.m.powers().size() > 1) throw std::runtime_error("more than one variable");
    int e = t.m.powers().empty() ? 0 : t.m.powers()[0].second;
    d.c[e] = t.c.get_num().get_si();
  }
  return d;
}

// Quotient of ordinary polynomials (coefficients highest degree last),
// with a monic divisor; the remainder must vanish.
inline std::vector<long long> long_divide(std::vector<long long> a, const std::vector<long long>& b) {
  if (b.empty() || b.back() != 1) throw std::runtime_error("divisor must be monic");
  if (a.size() < b.size()) throw std::runtime_error("degree too small");
  std::vector<long long> q(a.size() - b.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    long long lead = a[k + b.size() - 1];
    q[k] = lead;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= lead * b[j];
  }
  for (long long v : a)
    if (v != 0) throw std::runtime_error("nonzero remainder");
  return q;
}

template <class T>
using Mat = std::vector<std::vector<T>>;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Mat<T>& m, T zero, T one) {
  size_t n = m.size();
  if (n == 0) return one;
  T sum = zero;
  for (size_t j = 0; j < n; ++j) {
    Mat<T> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    T term = m[0][j] * cofactor_det(minor, zero, one);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

// Unreduced Burau matrices: sigma_i^+ acts by [[1-t, 1], [t, 0]] on rows and
// columns i, i+1, sigma_i^- by [[0, 1/t], [1, 1-1/t]]; letters are +-i.
inline Mat<Dense> burau(const std::vector<int>& word, int n) {
  auto id = [&] {
    Mat<Dense> m(n, std::vector<Dense>(n));
    for (int i = 0; i < n; ++i) m[i][i] = Dense::constant(1);
    return m;
  };
  auto mul = [&](const Mat<Dense>& a, const Mat<Dense>& b) {
    Mat<Dense> r(n, std::vector<Dense>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
  };
  Mat<Dense> b = id();
  for (int l : word) {
    int i = (l > 0 ? l : -l) - 1;
    Mat<Dense> g = id();
    if (l > 0) {
      g[i][i] = Dense::constant(1) - Dense::mono(1);
      g[i][i + 1] = Dense::constant(1);
      g[i + 1][i] = Dense::mono(1);
      g[i + 1][i + 1] = Dense();
    } else {
      g[i][i] = Dense();
      g[i][i + 1] = Dense::mono(-1);
      g[i + 1][i] = Dense::constant(1);
      g[i + 1][i + 1] = Dense::constant(1) - Dense::mono(-1);
    }
    b = mul(b, g);
  }
  return b;
}

// det of I - Burau with the first row and column removed.
inline Dense burau_alexander(const std::vector<int>& word, int n) {
  Mat<Dense> b = burau(word, n);
  Mat<Dense> m;
  for (int i = 1; i < n; ++i) {
    std::vector<Dense> row;
    for (int j = 1; j < n; ++j) row.push_back((i == j ? Dense::constant(1) : Dense()) - b[i][j]);
    m.push_back(row);
  }
  return cofactor_det(m, Dense(), Dense::constant(1));
}

}  // namespace oracle
