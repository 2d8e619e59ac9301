#pragma once

// Sparse multivariate polynomials over a coefficient field `C`.
//
// A coefficient type provides field arithmetic (+ - * /, unary -, ==),
// `is_zero()`, `is_one()`, `to_string()`, `is_compound()`,
// `prints_negative()` and a `domain_type` that can produce `zero()`, `one()`
// and `from_int()`. `Scalar` (field.hpp) and `RationalFunction`
// (rational_function.hpp) are the two coefficient types used here.
//
// A polynomial belongs to a `PolyRing`: ordered variable names, a monomial
// order and the coefficient domain. Terms are stored strictly descending in
// the ring's order, so iteration, printing and leading terms are all
// deterministic.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ikit/errors.hpp"
#include "ikit/field.hpp"
#include "ikit/monomial.hpp"

namespace ikit {

template <class C>
struct PolyRing {
  using domain_type = typename C::domain_type;

  std::vector<std::string> names;
  MonomialOrder order;
  domain_type domain;

  size_t nvars() const { return names.size(); }

  std::optional<size_t> index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  bool same_as(const PolyRing& o) const {
    return names == o.names && order == o.order && domain == o.domain;
  }
};

template <class C>
using RingPtr = std::shared_ptr<const PolyRing<C>>;

template <class C>
RingPtr<C> make_ring(std::vector<std::string> names, MonomialOrder order,
                     typename C::domain_type domain) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InvalidSpec("duplicate variable name '" + n + "'");
  return std::make_shared<const PolyRing<C>>(PolyRing<C>{std::move(names), order, std::move(domain)});
}

template <class C>
struct Term {
  Monomial mono;
  C coeff;
};

template <class C>
class Polynomial {
 public:
  using coeff_type = C;

  Polynomial() = default;
  explicit Polynomial(RingPtr<C> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<C> ring, C c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }
  static Polynomial constant(RingPtr<C> ring, long v) {
    C c = ring->domain.from_int(v);
    return constant(std::move(ring), std::move(c));
  }
  static Polynomial variable(RingPtr<C> ring, size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), i), ring->domain.one()});
    return p;
  }
  static Polynomial variable(RingPtr<C> ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw ContextMismatch("no variable named '" + name + "'");
    return variable(std::move(ring), *idx);
  }
  static Polynomial monomial(RingPtr<C> ring, Monomial m, C c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Polynomial monomial(RingPtr<C> ring, Monomial m) {
    C one = ring->domain.one();
    return monomial(std::move(ring), std::move(m), std::move(one));
  }

  /// Builds a polynomial from terms in any order, combining repeats and
  /// dropping zeros.
  static Polynomial from_terms(RingPtr<C> ring, std::vector<Term<C>> terms) {
    Polynomial p(ring);
    const MonomialOrder& ord = ring->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<C>& a, const Term<C>& b) { return ord.greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    return p;
  }

  /// Trusted constructor: terms must already be strictly descending and
  /// nonzero.
  static Polynomial from_sorted_terms(RingPtr<C> ring, std::vector<Term<C>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<C>& ring() const { return ring_; }
  const std::vector<Term<C>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Greatest monomial and its coefficient; throws ZeroPolynomial on 0.
  const Term<C>& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const C& leading_coeff() const { return leading_term().coeff; }

  C constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return ring_->domain.zero();
  }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return ring_->domain.zero();
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  /// Sum of the terms of total degree `d`.
  Polynomial homogeneous_component(std::uint32_t d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }

  /// Degree in the variable with index `v`; -1 for zero.
  int degree_in(size_t v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[v]));
    return d;
  }

  bool involves(size_t v) const {
    for (const auto& t : terms_)
      if (t.mono[v] != 0) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    std::vector<Term<C>> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(prod));
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const C& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  /// This polynomial times c*m. Monomial orders are multiplicative, so the
  /// term order is preserved.
  Polynomial mul_term(const Monomial& m, const C& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  /// this - c*m*g, computed in a single merge pass.
  Polynomial sub_mul_term(const C& c, const Monomial& m, const Polynomial& g) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    const MonomialOrder& ord = ring_->order;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({std::move(gm), -(g.terms_[j].coeff * c)});
        ++j;
      } else {
        C v = terms_[i].coeff - g.terms_[j].coeff * c;
        if (!v.is_zero()) r.terms_.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, 1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const {
    if (is_zero() || terms_.front().coeff.is_one()) return *this;
    C inv = ring_->domain.one() / terms_.front().coeff;
    return scaled(inv);
  }

  /// Exact evaluation at a point with one coordinate per ring variable.
  C evaluate(const std::vector<C>& point) const {
    if (point.size() != ring_->nvars())
      throw LengthMismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                           std::to_string(ring_->nvars()) + " variables");
    C sum = ring_->domain.zero();
    std::vector<std::vector<C>> powers(point.size());
    for (const auto& t : terms_) {
      C v = t.coeff;
      for (size_t i = 0; i < point.size(); ++i) {
        std::uint32_t e = t.mono[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(ring_->domain.one());
        while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
        v *= pw[e];
      }
      sum += v;
    }
    return sum;
  }

  /// Image under the ring homomorphism sending variable i to images[i]; all
  /// images must share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr<C>& target) const {
    if (images.size() != ring_->nvars()) throw LengthMismatch("substitution needs one image per variable");
    Polynomial sum(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    std::vector<Term<C>> acc;
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.coeff);
      for (size_t i = 0; i < images.size(); ++i) {
        std::uint32_t e = t.mono[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, 1));
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        v *= pw[e];
      }
      for (auto& term : v.terms_) acc.push_back(std::move(term));
    }
    return from_terms(target, std::move(acc));
  }

  /// The same polynomial viewed in another ring, matching variables by name.
  /// Variables of this ring that are absent from `target` must not occur.
  Polynomial in_ring(const RingPtr<C>& target) const {
    if (ring_ == target) return *this;
    std::vector<std::optional<size_t>> map(ring_->nvars());
    for (size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->names[i]);
    std::vector<Term<C>> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!map[i]) throw ContextMismatch("variable '" + ring_->names[i] + "' missing from target ring");
        m.set(*map[i], t.mono[i]);
      }
      ts.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(ts));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      bool neg = t.coeff.prints_negative();
      C c = neg ? -t.coeff : t.coeff;
      std::string body;
      if (t.mono.is_one()) {
        body = c.to_string();
        if (c.is_compound() && terms_.size() > 1) body = "(" + body + ")";
      } else if (c.is_one()) {
        body = t.mono.to_string(ring_->names);
      } else {
        std::string cs = c.to_string();
        if (c.is_compound()) cs = "(" + cs + ")";
        body = cs + "*" + t.mono.to_string(ring_->names);
      }
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.terms_.empty()) return true;
    a.check_ring(b);
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void check_ring(const Polynomial& b) const {
    if (ring_ != b.ring_ && !(ring_ && b.ring_ && ring_->same_as(*b.ring_)))
      throw ContextMismatch("polynomials live in different rings");
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    a.check_ring(b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    const MonomialOrder& ord = a.ring_->order;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        C v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return r;
  }

  RingPtr<C> ring_;
  std::vector<Term<C>> terms_;
};

template <class C>
std::ostream& operator<<(std::ostream& os, const Polynomial<C>& p) {
  return os << p.to_string();
}

using Poly = Polynomial<Scalar>;
using Ring = RingPtr<Scalar>;

/// Monomials of degree `d` in all ring variables, ascending in the ring order.
template <class C>
std::vector<Monomial> monomials_of_degree(const RingPtr<C>& ring, std::uint32_t d) {
  auto ms = all_monomials_of_degree(ring->nvars(), d);
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->order.less(a, b); });
  return ms;
}

/// The same ring with a different monomial order; polynomials convert with
/// `in_ring`.
template <class C>
RingPtr<C> with_order(const RingPtr<C>& ring, MonomialOrder ord) {
  return make_ring<C>(ring->names, ord, ring->domain);
}

}  // namespace ikit
