#pragma once

// Multivariate polynomial GCD over a field and the rational function field
// K(x_1, ..., x_k) built on it.

#include <map>
#include <string>
#include <vector>

#include "ikit/polynomial.hpp"

namespace ikit {

/// Exact quotient f / g; throws DivisionByZero when g does not divide f.
inline Poly exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const Ring& r = f.ring();
  std::vector<Term<Scalar>> q;
  Poly rem = f;
  const Term<Scalar>& lg = g.leading_term();
  while (!rem.is_zero()) {
    const Term<Scalar>& lt = rem.leading_term();
    if (!lg.mono.divides(lt.mono)) throw DivisionByZero("inexact polynomial division");
    Scalar c = lt.coeff / lg.coeff;
    Monomial m = lt.mono / lg.mono;
    rem = rem.sub_mul_term(c, m, g);
    q.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(r, std::move(q));
}

namespace detail {

/// Coefficients of f viewed as a polynomial in variable v, keyed by degree.
inline std::map<std::uint32_t, Poly> coefficients_in(const Poly& f, size_t v) {
  std::map<std::uint32_t, std::vector<Term<Scalar>>> parts;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    std::uint32_t e = m[v];
    m.set(v, 0);
    parts[e].push_back({std::move(m), t.coeff});
  }
  std::map<std::uint32_t, Poly> out;
  for (auto& [e, ts] : parts) out.emplace(e, Poly::from_terms(f.ring(), std::move(ts)));
  return out;
}

inline std::optional<size_t> main_variable(const Poly& f, const Poly& g) {
  for (size_t v = 0; v < f.ring()->nvars(); ++v)
    if (f.involves(v) || g.involves(v)) return v;
  return std::nullopt;
}

}  // namespace detail

Poly polynomial_gcd(const Poly& f, const Poly& g);

namespace detail {

inline Poly content_in(const Poly& f, size_t v) {
  Poly c(f.ring());
  for (const auto& [e, coeff] : coefficients_in(f, v)) {
    c = polynomial_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

/// Pseudo-remainder of a by b in variable v, up to a factor that is a
/// polynomial in the other variables.
inline Poly pseudo_remainder(Poly a, const Poly& b, size_t v) {
  const int db = b.degree_in(v);
  const Poly lb = coefficients_in(b, v).rbegin()->second;
  while (!a.is_zero() && a.degree_in(v) >= db) {
    auto ca = coefficients_in(a, v);
    const std::uint32_t da = ca.rbegin()->first;
    const Poly& la = ca.rbegin()->second;
    Monomial shift = Monomial::variable(a.ring()->nvars(), v, da - static_cast<std::uint32_t>(db));
    a = lb * a - la * b.mul_term(shift, a.ring()->domain.one());
  }
  return a;
}

}  // namespace detail

/// Monic greatest common divisor (leading coefficient 1 in the ring order);
/// gcd(0, 0) = 0.
inline Poly polynomial_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  auto v = detail::main_variable(f, g);
  if (!v) return Poly::constant(f.ring(), 1);
  const bool in_f = f.involves(*v), in_g = g.involves(*v);
  if (!in_f) return polynomial_gcd(f, detail::content_in(g, *v));
  if (!in_g) return polynomial_gcd(detail::content_in(f, *v), g);
  Poly cf = detail::content_in(f, *v), cg = detail::content_in(g, *v);
  Poly c = polynomial_gcd(cf, cg);
  Poly a = exact_divide(f, cf), b = exact_divide(g, cg);
  if (a.degree_in(*v) < b.degree_in(*v)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = detail::pseudo_remainder(a, b, *v);
    a = std::move(b);
    if (r.is_zero()) break;
    if (!r.involves(*v)) {
      a = Poly::constant(f.ring(), 1);
      break;
    }
    b = exact_divide(r, detail::content_in(r, *v));
  }
  return (c * exact_divide(a, detail::content_in(a, *v))).monic();
}

class RationalFunction;

/// The field K(x) of fractions of a polynomial ring.
class RationalFunctionField {
 public:
  RationalFunctionField() = default;
  explicit RationalFunctionField(Ring base) : base_(std::move(base)) {}

  const Ring& base() const { return base_; }
  const Field& constants() const { return base_->domain; }

  inline RationalFunction zero() const;
  inline RationalFunction one() const;
  inline RationalFunction from_int(long v) const;
  inline RationalFunction from_rational(const Rational& v) const;
  inline RationalFunction variable(size_t i) const;

  friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) {
    return a.base_ == b.base_ || (a.base_ && b.base_ && a.base_->same_as(*b.base_));
  }
  friend bool operator!=(const RationalFunctionField& a, const RationalFunctionField& b) { return !(a == b); }

 private:
  Ring base_;
};

/// Reduced fraction num/den with den monic in the base ring's order.
class RationalFunction {
 public:
  using domain_type = RationalFunctionField;

  RationalFunction() = default;
  explicit RationalFunction(Poly num) : num_(num), den_(Poly::constant(num.ring(), 1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return !num_.is_zero() && num_ == den_; }
  /// Element of the constant field K.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && (a.num_.is_zero() || a.den_ == b.den_);
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const {
    if (den_.is_zero() || den_.is_constant()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.size() > 1 || !den_.leading_monomial().is_one()) d = "(" + d + ")";
    return n + "/" + d;
  }
  bool is_compound() const { return num_.size() > 1 || !(den_.is_zero() || den_.is_constant()); }
  bool prints_negative() const {
    return (den_.is_zero() || den_.is_constant()) && num_.size() == 1 && num_.leading_coeff().prints_negative();
  }

  /// The same fraction scaled by a nonzero constant so that the leading
  /// coefficient of the numerator is 1.
  RationalFunction normalized_up_to_constant() const {
    if (is_zero()) return *this;
    RationalFunction r(*this);
    r.num_ = r.num_.monic();
    return r;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(num_.ring(), 1);
      return;
    }
    Poly g = polynomial_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    Scalar lc = den_.leading_coeff();
    if (!lc.is_one()) {
      Scalar inv = lc.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_, den_;
};

inline RationalFunction RationalFunctionField::zero() const { return RationalFunction(Poly(base_)); }
inline RationalFunction RationalFunctionField::one() const { return RationalFunction(Poly::constant(base_, 1)); }
inline RationalFunction RationalFunctionField::from_int(long v) const {
  return RationalFunction(Poly::constant(base_, v));
}
inline RationalFunction RationalFunctionField::from_rational(const Rational& v) const {
  return RationalFunction(Poly::constant(base_, base_->domain.from_rational(v)));
}
inline RationalFunction RationalFunctionField::variable(size_t i) const {
  return RationalFunction(Poly::variable(base_, i));
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace ikit
