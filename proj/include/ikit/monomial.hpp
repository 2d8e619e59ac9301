#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ikit/errors.hpp"

namespace ikit {

/// Exponent vector over a fixed variable list, with its total degree cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), 0u);
  }

  static Monomial variable(size_t nvars, size_t i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.e_[i] = power;
    m.deg_ = power;
    return m;
  }

  size_t size() const { return e_.size(); }
  std::uint32_t operator[](size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  void set(size_t i, std::uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  /// Whether this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    r.deg_ += b.deg_;
    return r;
  }

  /// Exact quotient; `b` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    r.deg_ -= b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    std::uint32_t d = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  /// True when the two monomials share no variable.
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += names[i];
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<std::uint32_t> e_;
  std::uint32_t deg_ = 0;
};

enum class OrderKind { lex, grevlex, gradedlex };

/// A monomial order: lex, grevlex or graded lex over all variables, or a
/// block-elimination order whose first `block` variables form a block that is
/// compared first (both blocks using the inner kind).
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
  static MonomialOrder gradedlex() { return MonomialOrder(OrderKind::gradedlex, 0); }
  static MonomialOrder elimination(size_t front_block, OrderKind inner = OrderKind::grevlex) {
    return MonomialOrder(inner, front_block);
  }
  static MonomialOrder from_name(const std::string& name) {
    if (name == "lex") return lex();
    if (name == "grevlex") return grevlex();
    if (name == "gradedlex" || name == "glex" || name == "deglex") return gradedlex();
    throw ParseError("unknown monomial order '" + name + "'");
  }

  OrderKind inner() const { return kind_; }
  size_t block() const { return block_; }
  bool is_elimination() const { return block_ > 0; }

  /// Three-way comparison: negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const size_t n = a.size();
    if (block_ == 0 || block_ >= n) {
      if (kind_ != OrderKind::lex && a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
      return compare_range(a, b, 0, n, kind_ == OrderKind::lex);
    }
    int c = compare_block(a, b, 0, block_);
    if (c != 0) return c;
    return compare_block(a, b, block_, n);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    std::string base = kind_ == OrderKind::lex       ? "lex"
                       : kind_ == OrderKind::grevlex ? "grevlex"
                                                     : "gradedlex";
    if (block_ == 0) return base;
    return "elimination(" + std::to_string(block_) + ", " + base + ")";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

 private:
  MonomialOrder(OrderKind k, size_t block) : kind_(k), block_(block) {}

  int compare_block(const Monomial& a, const Monomial& b, size_t lo, size_t hi) const {
    if (kind_ != OrderKind::lex) {
      std::uint32_t da = 0, db = 0;
      for (size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
    }
    return compare_range(a, b, lo, hi, kind_ == OrderKind::lex);
  }

  int compare_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi, bool lex_like) const {
    if (lex_like || kind_ == OrderKind::gradedlex) {
      for (size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    }
    // grevlex tie-break: the last differing variable decides, smaller
    // exponent wins.
    for (size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  OrderKind kind_ = OrderKind::grevlex;
  size_t block_ = 0;
};

/// All monomials of total degree `d` in `nvars` variables, unsorted.
inline std::vector<Monomial> all_monomials_of_degree(size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  std::function<void(size_t, std::uint32_t)> rec = [&](size_t i, std::uint32_t left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace ikit
