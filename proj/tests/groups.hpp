#pragma once

// Small groups used across the test suite.

#include <string>
#include <vector>

#include "ikit/finite_group.hpp"
#include "ikit/parse.hpp"

namespace testing_groups {

using namespace ikit;

inline ScalarMatrix matrix(const Field& K, const std::vector<std::vector<std::string>>& rows) {
  ScalarMatrix A(rows.size(), rows.size(), K);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) A(i, j) = parse_scalar(rows[i][j], K);
  return A;
}

inline Ring ring(const Field& K, std::vector<std::string> names, MonomialOrder ord = MonomialOrder::grevlex()) {
  return make_ring<Scalar>(std::move(names), ord, K);
}

inline Field sqrt2() { return Field::extension(parse_upoly("w^2 - 2", "w"), "w"); }

/// Dihedral group of order 16 generated by a reflection and a rotation by 45 degrees.
inline FiniteMatrixGroup d8() {
  Field K = sqrt2();
  return close_group(K, 2, {matrix(K, {{"1", "0"}, {"0", "-1"}}), matrix(K, {{"w/2", "-w/2"}, {"w/2", "w/2"}})});
}

inline FiniteMatrixGroup c2_swap(Field K = Field::rationals()) {
  return close_group(K, 2, {matrix(K, {{"0", "1"}, {"1", "0"}})});
}

inline FiniteMatrixGroup s3() {
  Field K = Field::rationals();
  return close_group(K, 3, {matrix(K, {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}),
                            matrix(K, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}})});
}

inline FiniteMatrixGroup pm_identity() {
  Field K = Field::rationals();
  return close_group(K, 2, {matrix(K, {{"-1", "0"}, {"0", "-1"}})});
}

inline FiniteMatrixGroup trivial(size_t n) {
  Field K = Field::rationals();
  return close_group(K, n, {ScalarMatrix::identity(n, K)});
}

inline Field cyclotomic(int n) {
  const char* m = n == 3 ? "w^2 + w + 1" : n == 4 ? "w^2 + 1" : n == 5 ? "w^4 + w^3 + w^2 + w + 1" : "w^2 - w + 1";
  return Field::extension(parse_upoly(m, "w"), "w");
}

/// Cyclic group of order n acting by the scalar matrix zeta * I on two variables.
inline FiniteMatrixGroup cn_scalar(int n) {
  Field K = cyclotomic(n);
  return close_group(K, 2, {matrix(K, {{"w", "0"}, {"0", "w"}})});
}

}  // namespace testing_groups
