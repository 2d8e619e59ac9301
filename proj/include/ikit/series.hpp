#pragma once

#include <vector>

#include "ikit/errors.hpp"
#include "ikit/field.hpp"

namespace ikit {

/// Univariate power series truncated after t^truncation.
template <class C>
struct PowerSeries {
  unsigned truncation = 0;
  std::vector<C> coefficients;  // size truncation + 1

  PowerSeries() = default;
  PowerSeries(unsigned d, const typename C::domain_type& dom) : truncation(d), coefficients(d + 1, dom.zero()) {}

  /// Series of a polynomial given by ascending coefficients.
  static PowerSeries from_polynomial(const std::vector<C>& poly, unsigned d, const typename C::domain_type& dom) {
    PowerSeries s(d, dom);
    for (size_t i = 0; i < poly.size() && i <= d; ++i) s.coefficients[i] = poly[i];
    return s;
  }

  /// Multiplicative inverse; the constant coefficient must be nonzero.
  PowerSeries inverse() const {
    const C& c0 = coefficients[0];
    if (c0.is_zero()) throw DivisionByZero("power series with zero constant term is not invertible");
    PowerSeries r(*this);
    C inv0 = c0.inverse();
    r.coefficients[0] = inv0;
    for (unsigned k = 1; k <= truncation; ++k) {
      C acc = c0 - c0;
      for (unsigned i = 1; i <= k; ++i) acc += coefficients[i] * r.coefficients[k - i];
      r.coefficients[k] = -(acc * inv0);
    }
    return r;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    for (unsigned k = 0; k <= truncation; ++k) coefficients[k] += o.coefficients[k];
    return *this;
  }
  PowerSeries scaled(const C& c) const {
    PowerSeries r(*this);
    for (auto& x : r.coefficients) x *= c;
    return r;
  }
};

}  // namespace ikit
