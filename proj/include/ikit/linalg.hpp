#pragma once

// Dense exact linear algebra over a coefficient field.

#include <string>
#include <vector>

#include "ikit/errors.hpp"
#include "ikit/field.hpp"

namespace ikit {

template <class C>
class Matrix {
 public:
  using domain_type = typename C::domain_type;

  Matrix() = default;
  Matrix(size_t rows, size_t cols, const domain_type& dom)
      : rows_(rows), cols_(cols), dom_(dom), a_(rows * cols, dom.zero()) {}

  static Matrix identity(size_t n, const domain_type& dom) {
    Matrix m(n, n, dom);
    for (size_t i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const domain_type& domain() const { return dom_; }

  C& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const C& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw LengthMismatch("matrix shapes do not match");
    Matrix r(x.rows_, y.cols_, x.dom_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const C& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r(x);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_identity() const { return *this == identity(rows_, dom_); }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      C inv = dom_.one() / (*this)(r, c);
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        C f = (*this)(i, c);
        for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix m(*this);
    return m.rref().size();
  }

  C determinant() const {
    if (rows_ != cols_) throw LengthMismatch("determinant of a non-square matrix");
    Matrix m(*this);
    C det = dom_.one();
    for (size_t c = 0; c < cols_; ++c) {
      size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return dom_.zero();
      if (p != c) {
        for (size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      C inv = dom_.one() / m(c, c);
      for (size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        C f = m(i, c) * inv;
        for (size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw SingularMatrix("inverse of a non-square matrix");
    const size_t n = rows_;
    Matrix aug(n, 2 * n, dom_);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = dom_.one();
    }
    auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    Matrix r(n, n, dom_);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
  }

  /// Canonical text used as an exact lookup key.
  std::string key() const {
    std::string s;
    for (const auto& x : a_) {
      s += x.to_string();
      s += ';';
    }
    return s;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  domain_type dom_{};
  std::vector<C> a_;
};

/// A canonical basis of the null space {v : M v = 0}: the rows of the reduced
/// echelon form of the solution space, so every vector has a distinct
/// leading (leftmost) position carrying a 1.
template <class C>
std::vector<std::vector<C>> nullspace(Matrix<C> m) {
  const size_t n = m.cols();
  auto pivots = m.rref();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<C>> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<C> v(n, m.domain().zero());
    v[free] = m.domain().one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  Matrix<C> b(basis.size(), n, m.domain());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < n; ++j) b(i, j) = basis[i][j];
  b.rref();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < n; ++j) basis[i][j] = b(i, j);
  return basis;
}

using ScalarMatrix = Matrix<Scalar>;

}  // namespace ikit
