#pragma once

// Exact ground fields: the rationals, prime fields GF(p), and simple
// extensions Q[t]/(m(t)). Field descriptions are interned for the lifetime of
// the process, so a `Field` is a cheap pointer-sized handle and two handles
// compare equal exactly when they describe the same field.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ikit/errors.hpp"

namespace ikit {

using Integer = mpz_class;
using Rational = mpq_class;

namespace upoly {

/// Dense univariate polynomial over Q, coefficients in ascending degree order,
/// no trailing zeros. The zero polynomial is the empty vector.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

inline UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline UPoly scale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

/// Division with remainder; `b` must be nonzero.
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly q, r(a);
  if (b.empty()) throw DivisionByZero("univariate division by zero polynomial");
  const int db = degree(b);
  if (degree(r) >= db) q.assign(r.size() - b.size() + 1, Rational(0));
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

inline UPoly monic(const UPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline UPoly derivative(const UPoly& a) {
  UPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

inline Rational eval(const UPoly& a, const Rational& x) {
  Rational r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

/// Returns s with s*a == 1 mod m, or nothing when gcd(a, m) != 1.
inline bool inverse_mod(const UPoly& a, const UPoly& m, UPoly& out) {
  UPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) return false;
  out = divmod(scale(s0, 1 / r0[0]), m).second;
  return true;
}

inline std::string to_string(const UPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (size_t k = a.size(); k-- > 0;) {
    const Rational& c = a[k];
    if (c == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    Rational ac = abs(c);
    if (mono.empty())
      term = ac.get_str();
    else if (ac == 1)
      term = mono;
    else
      term = ac.get_str() + "*" + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace upoly

enum class FieldKind { rationals, prime, extension };

/// Immutable description of a ground field.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  Integer p;                       // prime fields only
  upoly::UPoly minimal_poly;       // extensions only; monic
  std::string generator;           // extensions only
  std::vector<std::string> warnings;

  std::string describe() const {
    switch (kind) {
      case FieldKind::rationals: return "QQ";
      case FieldKind::prime: return "GF(" + p.get_str() + ")";
      case FieldKind::extension:
        return "QQ[" + generator + "]/(" + upoly::to_string(minimal_poly, generator) + ")";
    }
    return "?";
  }
};

namespace detail {

inline bool divisors_of(const Integer& n, std::vector<Integer>& out) {
  Integer a = abs(n);
  out.clear();
  if (a == 0) return false;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return true;
}

// Reducibility test for a monic squarefree m over Q of degree <= 4: rational
// roots, plus quadratic factors when the degree is 4.
inline bool has_small_factor(const upoly::UPoly& m) {
  const int deg = upoly::degree(m);
  // Substitute t = u / D to get a monic integer polynomial.
  Integer D = 1;
  for (const auto& c : m) {
    Integer den = c.get_den();
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> a(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(deg - i));
    Rational v = m[i] * Rational(pw);
    a[i] = v.get_num();
  }
  if (a[0] == 0) return true;
  std::vector<Integer> divs;
  divisors_of(a[0], divs);
  auto evalz = [&](const Integer& x) {
    Integer r = 0;
    for (int i = deg; i >= 0; --i) r = r * x + a[i];
    return r;
  };
  for (const auto& d : divs)
    if (evalz(d) == 0 || evalz(-d) == 0) return true;
  if (deg != 4) return false;
  // (u^2 + b u + c)(u^2 + b' u + c') with c c' = a0.
  const Integer a1 = a[1], a2 = a[2], a3 = a[3];
  for (const auto& d : divs) {
    for (int sgn : {1, -1}) {
      Integer c = d * sgn;
      Integer cp = a[0] / c;
      if (c != cp) {
        // b (c' - c) = a1 - a3 c
        Integer num = a1 - a3 * c, den = cp - c;
        if (num % den != 0) continue;
        Integer b = num / den, bp = a3 - b;
        if (c + cp + b * bp == a2) return true;
      } else {
        // b + b' = a3, b b' = a2 - 2c, and the u-coefficient b c + b' c = a3 c
        if (a1 != a3 * c) continue;
        Integer prod = a2 - 2 * c;
        Integer disc = a3 * a3 - 4 * prod;
        if (disc < 0) continue;
        Integer s = sqrt(disc);
        if (s * s == disc && (a3 + s) % 2 == 0) return true;
      }
    }
  }
  return false;
}

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }
  const FieldSpec* intern(FieldSpec spec) {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = spec.describe();
    auto it = fields_.find(key);
    if (it != fields_.end()) return it->second.get();
    auto owned = std::make_unique<FieldSpec>(std::move(spec));
    const FieldSpec* ptr = owned.get();
    fields_.emplace(key, std::move(owned));
    return ptr;
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<FieldSpec>> fields_;
};

}  // namespace detail

class Scalar;

/// Handle to an interned field description.
class Field {
 public:
  Field() : spec_(rationals().spec_) {}

  static Field rationals() {
    static const FieldSpec* q = detail::FieldRegistry::instance().intern(FieldSpec{});
    return Field(q);
  }

  static Field prime(const Integer& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw InvalidSpec("GF(p) requires a prime p, got " + p.get_str());
    FieldSpec s;
    s.kind = FieldKind::prime;
    s.p = p;
    return Field(detail::FieldRegistry::instance().intern(std::move(s)));
  }

  /// Q[name]/(m). `m` is made monic; it must have degree >= 2 and be
  /// squarefree. Irreducibility is checked for degree <= 4 only; a detected
  /// factor or an unchecked degree is recorded in `spec().warnings`.
  static Field extension(upoly::UPoly m, const std::string& name) {
    upoly::trim(m);
    if (upoly::degree(m) < 2)
      throw InvalidSpec("minimal polynomial must have degree >= 2");
    m = upoly::monic(m);
    if (upoly::degree(upoly::gcd(m, upoly::derivative(m))) != 0)
      throw InvalidSpec("minimal polynomial " + upoly::to_string(m, name) + " is not squarefree");
    FieldSpec s;
    s.kind = FieldKind::extension;
    s.minimal_poly = m;
    s.generator = name;
    if (upoly::degree(m) <= 4) {
      if (detail::has_small_factor(m))
        s.warnings.push_back("ReducibleMinimalPolynomial: " + upoly::to_string(m, name) +
                             " has a factor over QQ; the quotient has zero divisors");
    } else {
      s.warnings.push_back("irreducibility of " + upoly::to_string(m, name) +
                           " not verified (degree > 4)");
    }
    return Field(detail::FieldRegistry::instance().intern(std::move(s)));
  }

  const FieldSpec& spec() const { return *spec_; }
  FieldKind kind() const { return spec_->kind; }

  /// 0 for Q and its extensions, p for GF(p).
  unsigned long characteristic() const {
    return spec_->kind == FieldKind::prime ? spec_->p.get_ui() : 0UL;
  }
  bool is_infinite() const { return spec_->kind != FieldKind::prime; }
  int extension_degree() const {
    return spec_->kind == FieldKind::extension ? upoly::degree(spec_->minimal_poly) : 1;
  }
  std::string describe() const { return spec_->describe(); }

  inline Scalar zero() const;
  inline Scalar one() const;
  inline Scalar from_int(long v) const;
  inline Scalar from_rational(const Rational& v) const;
  inline Scalar generator() const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.spec_ != b.spec_; }

 private:
  explicit Field(const FieldSpec* s) : spec_(s) {}
  const FieldSpec* spec_;
};

/// An element of a `Field`, always in canonical form: reduced fractions with
/// positive denominator, residues in [0, p), extension elements reduced
/// modulo the minimal polynomial.
class Scalar {
 public:
  using domain_type = Field;

  Scalar() = default;
  Scalar(Field f, Rational v) : field_(f) {
    if (field_.kind() == FieldKind::extension) {
      if (v != 0) poly_.push_back(std::move(v));
    } else {
      value_ = std::move(v);
      canonicalize();
    }
  }
  Scalar(Field f, upoly::UPoly coeffs) : field_(f) {
    if (field_.kind() == FieldKind::extension) {
      poly_ = std::move(coeffs);
      upoly::trim(poly_);
      if (upoly::degree(poly_) >= field_.extension_degree())
        poly_ = upoly::divmod(poly_, field_.spec().minimal_poly).second;
    } else {
      upoly::trim(coeffs);
      if (coeffs.size() > 1) throw FieldMismatch("polynomial value in a non-extension field");
      value_ = coeffs.empty() ? Rational(0) : coeffs[0];
      canonicalize();
    }
  }

  const Field& field() const { return field_; }
  Field domain() const { return field_; }

  bool is_zero() const {
    return field_.kind() == FieldKind::extension ? poly_.empty() : value_ == 0;
  }
  bool is_one() const {
    if (field_.kind() == FieldKind::extension) return poly_.size() == 1 && poly_[0] == 1;
    return value_ == 1;
  }
  /// True when the element lies in the prime field (Q or GF(p)).
  bool is_rational() const {
    return field_.kind() != FieldKind::extension || poly_.size() <= 1;
  }
  Rational rational_value() const {
    if (field_.kind() != FieldKind::extension) return value_;
    if (poly_.size() > 1) throw FieldMismatch("element is not rational");
    return poly_.empty() ? Rational(0) : poly_[0];
  }
  /// Extension coordinates in ascending powers of the generator.
  upoly::UPoly coordinates() const {
    if (field_.kind() == FieldKind::extension) return poly_;
    upoly::UPoly r{value_};
    upoly::trim(r);
    return r;
  }

  Scalar operator-() const {
    Scalar r(*this);
    if (field_.kind() == FieldKind::extension) {
      for (auto& c : r.poly_) c = -c;
    } else {
      r.value_ = -r.value_;
      r.canonicalize();
    }
    return r;
  }

  Scalar& operator+=(const Scalar& b) {
    check(b);
    if (field_.kind() == FieldKind::extension) {
      poly_ = upoly::add(poly_, b.poly_);
    } else {
      value_ += b.value_;
      if (field_.kind() == FieldKind::prime) canonicalize();
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& b) {
    check(b);
    if (field_.kind() == FieldKind::extension) {
      poly_ = upoly::sub(poly_, b.poly_);
    } else {
      value_ -= b.value_;
      if (field_.kind() == FieldKind::prime) canonicalize();
    }
    return *this;
  }
  Scalar& operator*=(const Scalar& b) {
    check(b);
    if (field_.kind() == FieldKind::extension) {
      poly_ = upoly::mul(poly_, b.poly_);
      if (upoly::degree(poly_) >= field_.extension_degree())
        poly_ = upoly::divmod(poly_, field_.spec().minimal_poly).second;
    } else {
      value_ *= b.value_;
      if (field_.kind() == FieldKind::prime) canonicalize();
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& b) { return *this *= b.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero in " + field_.describe());
    switch (field_.kind()) {
      case FieldKind::rationals: {
        Scalar r(*this);
        r.value_ = 1 / value_;
        return r;
      }
      case FieldKind::prime: {
        Integer inv;
        Integer v = value_.get_num();
        mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), field_.spec().p.get_mpz_t());
        return Scalar(field_, Rational(inv));
      }
      case FieldKind::extension: {
        upoly::UPoly inv;
        if (!upoly::inverse_mod(poly_, field_.spec().minimal_poly, inv))
          throw DivisionByZero("element " + to_string() + " is a zero divisor in " +
                               field_.describe());
        return Scalar(field_, inv);
      }
    }
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.field_.kind() == FieldKind::extension) return a.poly_ == b.poly_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form; parses back to the same element.
  std::string to_string() const {
    if (field_.kind() == FieldKind::extension)
      return upoly::to_string(poly_, field_.spec().generator);
    return value_.get_str();
  }

  /// True when the printed form needs parentheses as a product factor.
  bool is_compound() const { return nonzero_coordinates() > 1; }

  /// Whether the printed form starts with a minus sign that can be pulled
  /// out in front of a term.
  bool prints_negative() const {
    switch (field_.kind()) {
      case FieldKind::prime: return false;
      case FieldKind::rationals: return value_ < 0;
      case FieldKind::extension: return nonzero_coordinates() == 1 && poly_.back() < 0;
    }
    return false;
  }

 private:
  int nonzero_coordinates() const {
    int n = 0;
    for (const auto& c : poly_) n += c != 0;
    return n;
  }
  void check(const Scalar& b) const {
    if (field_ != b.field_)
      throw FieldMismatch("scalars from " + field_.describe() + " and " + b.field_.describe());
  }
  void canonicalize() {
    if (field_.kind() == FieldKind::prime) {
      const Integer& p = field_.spec().p;
      if (value_.get_den() != 1) {
        Integer den = value_.get_den(), inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
          throw DivisionByZero("denominator divisible by p in GF(" + p.get_str() + ")");
        Integer num = value_.get_num() * inv;
        value_ = Rational(num);
      }
      Integer r;
      Integer num = value_.get_num();
      mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
      value_ = Rational(r);
    }
  }

  Field field_;
  Rational value_;
  upoly::UPoly poly_;
};

inline Scalar Field::zero() const { return Scalar(*this, Rational(0)); }
inline Scalar Field::one() const { return Scalar(*this, Rational(1)); }
inline Scalar Field::from_int(long v) const { return Scalar(*this, Rational(v)); }
inline Scalar Field::from_rational(const Rational& v) const { return Scalar(*this, v); }
inline Scalar Field::generator() const {
  if (kind() != FieldKind::extension) throw FieldMismatch(describe() + " has no generator");
  return Scalar(*this, upoly::UPoly{Rational(0), Rational(1)});
}

inline std::string format_scalar(const Scalar& s) { return s.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ikit
