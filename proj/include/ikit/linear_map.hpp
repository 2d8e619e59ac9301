#pragma once

#include <vector>

#include "ikit/linalg.hpp"
#include "ikit/polynomial.hpp"

namespace ikit {

/// Images of the acted variables under A: x_i -> sum_j A(i, j) x_j for the
/// first A.rows() variables of the ring; remaining variables are fixed.
inline std::vector<Poly> linear_images(const Ring& ring, const ScalarMatrix& A) {
  const size_t n = A.rows();
  if (A.cols() != n || n > ring->nvars())
    throw LengthMismatch("matrix size does not match the acted variables");
  std::vector<Poly> images;
  images.reserve(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) {
    if (i >= n) {
      images.push_back(Poly::variable(ring, i));
      continue;
    }
    std::vector<Term<Scalar>> ts;
    for (size_t j = 0; j < n; ++j)
      if (!A(i, j).is_zero()) ts.push_back({Monomial::variable(ring->nvars(), j), A(i, j)});
    images.push_back(Poly::from_terms(ring, std::move(ts)));
  }
  return images;
}

/// The substitution x_i -> sum_j A(i, j) x_j. Composition follows
/// apply(A, apply(B, p)) == apply(B * A, p).
inline Poly apply_linear_map(const Poly& p, const ScalarMatrix& A, bool check_invertible = true) {
  if (check_invertible && A.determinant().is_zero()) throw SingularMatrix("linear map is not invertible");
  return p.substitute(linear_images(p.ring(), A), p.ring());
}

/// Image of a point: (A v)_i = sum_j A(i, j) v_j. Invariants f of the
/// action above satisfy f(A v) == f(v).
inline std::vector<Scalar> apply_to_point(const ScalarMatrix& A, const std::vector<Scalar>& v) {
  std::vector<Scalar> w(A.rows(), A.domain().zero());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) w[i] += A(i, j) * v[j];
  return w;
}

}  // namespace ikit
