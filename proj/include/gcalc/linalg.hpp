// Dense matrices over the rational function field with exact determinant and
// inverse.
#pragma once

#include <vector>

#include "gcalc/polyalg.hpp"

namespace gcalc {

struct SingularMatrix : Error {
  using Error::Error;
};

class RfMatrix {
 public:
  RfMatrix() = default;
  RfMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RfMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  RationalFn& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const RationalFn& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RfMatrix operator+(const RfMatrix& o) const;
  RfMatrix operator-(const RfMatrix& o) const;
  RfMatrix operator*(const RfMatrix& o) const;
  RfMatrix operator-() const;
  RfMatrix scaled(const RationalFn& c) const;
  RfMatrix transpose() const;
  bool operator==(const RfMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RfMatrix& o) const { return !(*this == o); }

  // Submatrix on the given row and column indices, in the given order.
  RfMatrix select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

  template <class Fn>
  RfMatrix map(Fn&& fn) const {
    RfMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = fn(a_[k]);
    return r;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<RationalFn> a_;
};

// Fraction-free (Bareiss) elimination after clearing row denominators.
RationalFn determinant(const RfMatrix& m);
// Fraction-free Gauss-Jordan; raises SingularMatrix when det m is zero.
RfMatrix inverse(const RfMatrix& m);

// Entrywise substitution and conjugation.
RfMatrix substitute(const RfMatrix& m, const Substitution& sub);
RfMatrix conjugate(const RfMatrix& m);

}  // namespace gcalc
