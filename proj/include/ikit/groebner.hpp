#pragma once

// Buchberger's algorithm with optional degree truncation, normal forms,
// reduced bases, elimination, dimension and membership tests.
//
// Pair selection follows the normal strategy: the pending pair whose lcm has
// the lowest total degree goes first, ties broken by the monomial order on
// the lcm and then by insertion order. Reducers are chosen as the first basis
// element (insertion order) whose leading monomial divides. Together these
// make every result a deterministic function of the input.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ikit/errors.hpp"
#include "ikit/polynomial.hpp"

namespace ikit {

template <class C>
struct GroebnerBasis {
  RingPtr<C> ring;
  std::vector<Polynomial<C>> generators;
  std::optional<unsigned> truncation;  // present for d-truncated bases
  bool reduced = false;

  const MonomialOrder& order() const { return ring->order; }
  size_t size() const { return generators.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : generators) out.push_back(g.leading_monomial());
    return out;
  }
  bool is_unit_ideal() const {
    for (const auto& g : generators)
      if (!g.is_zero() && g.leading_monomial().is_one()) return true;
    return false;
  }
};

namespace detail {

/// Full reduction of f by `basis` (all elements nonzero and monic).
template <class C>
Polynomial<C> reduce_fully(const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis) {
  const RingPtr<C>& ring = f.ring();
  std::vector<Term<C>> rem;
  Polynomial<C> p = f;
  while (!p.is_zero()) {
    const Term<C>& lt = p.leading_term();
    const Polynomial<C>* red = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red) {
      C c = lt.coeff / red->leading_coeff();
      Monomial m = lt.mono / red->leading_monomial();
      p = p.sub_mul_term(c, m, *red);
    } else {
      // Move the whole irreducible prefix at once.
      const auto& ts = p.terms();
      size_t k = 0;
      while (k < ts.size()) {
        bool divisible = false;
        for (const auto& g : basis)
          if (g.leading_monomial().divides(ts[k].mono)) {
            divisible = true;
            break;
          }
        if (divisible) break;
        rem.push_back(ts[k]);
        ++k;
      }
      std::vector<Term<C>> tail(ts.begin() + static_cast<std::ptrdiff_t>(k), ts.end());
      p = Polynomial<C>::from_sorted_terms(ring, std::move(tail));
    }
  }
  return Polynomial<C>::from_sorted_terms(ring, std::move(rem));
}

}  // namespace detail

/// Incremental Buchberger state. Supports adjoining elements, completing the
/// basis up to a degree bound, and continuing to higher degrees later without
/// recomputing processed pairs.
template <class C>
class GroebnerBuilder {
 public:
  explicit GroebnerBuilder(RingPtr<C> ring) : ring_(std::move(ring)) {}

  const RingPtr<C>& ring() const { return ring_; }
  const std::vector<Polynomial<C>>& elements() const { return basis_; }

  /// Adds a generator; it is reduced by the current basis first and ignored
  /// if it reduces to zero.
  void add_generator(const Polynomial<C>& f) {
    Polynomial<C> g = f.in_ring(ring_);
    if (g.is_zero()) return;
    g = detail::reduce_fully(g, basis_);
    if (!g.is_zero()) adjoin(g.monic());
  }

  /// Adjoins an element already in normal form with respect to the basis.
  void adjoin_normal_form(const Polynomial<C>& h) { adjoin(h.monic()); }

  /// Processes pending pairs with lcm degree <= bound (all pairs if absent).
  void complete(std::optional<unsigned> bound = std::nullopt) {
    for (;;) {
      size_t best = pairs_.size();
      for (size_t k = 0; k < pairs_.size(); ++k) {
        if (bound && pairs_[k].lcm.degree() > *bound) continue;
        if (best == pairs_.size() || pair_less(pairs_[k], pairs_[best])) best = k;
      }
      if (best == pairs_.size()) break;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial<C> s = spoly(basis_[pr.i], basis_[pr.j], pr.lcm);
      Polynomial<C> h = detail::reduce_fully(s, basis_);
      if (!h.is_zero()) adjoin(h.monic());
    }
    if (bound) bound_ = std::max(bound_.value_or(0), *bound);
  }

  bool has_pending(std::optional<unsigned> bound = std::nullopt) const {
    for (const auto& p : pairs_)
      if (!bound || p.lcm.degree() <= *bound) return true;
    return false;
  }

  Polynomial<C> normal_form(const Polynomial<C>& f) const {
    return detail::reduce_fully(f.in_ring(ring_), basis_);
  }

  GroebnerBasis<C> snapshot() const {
    GroebnerBasis<C> b;
    b.ring = ring_;
    b.generators = basis_;
    if (!pairs_.empty()) b.truncation = bound_.value_or(0);
    return b;
  }

 private:
  struct Pair {
    size_t i, j;  // i < j
    Monomial lcm;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ring_->order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Polynomial<C> spoly(const Polynomial<C>& f, const Polynomial<C>& g, const Monomial& l) const {
    Polynomial<C> a = f.mul_term(l / f.leading_monomial(), ring_->domain.one() / f.leading_coeff());
    return a.sub_mul_term(ring_->domain.one() / g.leading_coeff(), l / g.leading_monomial(), g);
  }

  // Gebauer-Moeller update.
  void adjoin(Polynomial<C> h) {
    const size_t k = basis_.size();
    const Monomial& lh = h.leading_monomial();
    // Chain criterion on old pairs.
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(basis_[p.i].leading_monomial(), lh) != p.lcm &&
                  lcm(basis_[p.j].leading_monomial(), lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    // New pairs (i, k), filtered.
    struct Cand {
      size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < k; ++i) {
      if (redundant_[i]) continue;
      const Monomial& li = basis_[i].leading_monomial();
      cands.push_back({i, lcm(li, lh), coprime(li, lh)});
    }
    // M criterion: drop (i,k) if some (j,k) has lcm properly dividing it.
    std::vector<Cand> m_kept;
    for (const auto& c : cands) {
      bool drop = false;
      for (const auto& d : cands)
        if (d.lcm != c.lcm && d.lcm.divides(c.lcm)) {
          drop = true;
          break;
        }
      if (!drop) m_kept.push_back(c);
    }
    // F criterion: one pair per lcm; product criterion drops the whole class.
    std::vector<Cand> f_kept;
    for (size_t a = 0; a < m_kept.size(); ++a) {
      bool seen = false, any_coprime = false;
      for (size_t b = 0; b < m_kept.size(); ++b) {
        if (m_kept[b].lcm != m_kept[a].lcm) continue;
        if (b < a) seen = true;
        any_coprime = any_coprime || m_kept[b].coprime;
      }
      if (!seen && !any_coprime) f_kept.push_back(m_kept[a]);
    }
    for (auto& c : f_kept) pairs_.push_back({c.i, k, std::move(c.lcm)});
    for (size_t i = 0; i < k; ++i)
      if (!redundant_[i] && lh.divides(basis_[i].leading_monomial())) redundant_[i] = true;
    basis_.push_back(std::move(h));
    redundant_.push_back(false);
  }

  RingPtr<C> ring_;
  std::vector<Polynomial<C>> basis_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
  std::optional<unsigned> bound_;
};

/// Gröbner basis (or d-truncated basis when `truncate` is set) of the ideal
/// generated by `gens`, under the order of `ring`.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& gens, const RingPtr<C>& ring,
                            std::optional<unsigned> truncate = std::nullopt) {
  GroebnerBuilder<C> b(ring);
  for (const auto& g : gens) b.add_generator(g);
  b.complete(truncate);
  GroebnerBasis<C> out = b.snapshot();
  out.truncation = truncate;
  return out;
}

/// Gröbner basis under the ring's own order.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& gens,
                            std::optional<unsigned> truncate = std::nullopt) {
  if (gens.empty()) throw InvalidSpec("buchberger needs at least one generator");
  return buchberger(gens, gens.front().ring(), truncate);
}

/// Unique remainder of f modulo the basis.
template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const GroebnerBasis<C>& B) {
  Polynomial<C> g = f.in_ring(B.ring);
  if (B.truncation && g.total_degree() > static_cast<int>(*B.truncation))
    throw TruncationInsufficient("degree " + std::to_string(g.total_degree()) + " exceeds truncation degree " +
                                 std::to_string(*B.truncation));
  return detail::reduce_fully(g, B.generators);
}

/// Minimal, inter-reduced, monic basis sorted by descending leading monomial.
template <class C>
GroebnerBasis<C> reduce_basis(const GroebnerBasis<C>& B) {
  if (B.truncation) throw TruncatedBasis("cannot reduce a truncated basis");
  std::vector<Polynomial<C>> minimal;
  const auto& gs = B.generators;
  for (size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].is_zero()) continue;
    bool redundant = false;
    for (size_t j = 0; j < gs.size() && !redundant; ++j) {
      if (i == j || gs[j].is_zero()) continue;
      const Monomial& lj = gs[j].leading_monomial();
      const Monomial& li = gs[i].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gs[i].monic());
  }
  std::vector<Polynomial<C>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<C>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term<C>& lt = minimal[i].leading_term();
    std::vector<Term<C>> tail(minimal[i].terms().begin() + 1, minimal[i].terms().end());
    Polynomial<C> t = detail::reduce_fully(Polynomial<C>::from_terms(B.ring, std::move(tail)), others);
    reduced.push_back(Polynomial<C>::monomial(B.ring, lt.mono, lt.coeff) + t);
  }
  const MonomialOrder& ord = B.ring->order;
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<C>& a, const Polynomial<C>& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  GroebnerBasis<C> out;
  out.ring = B.ring;
  out.generators = std::move(reduced);
  out.reduced = true;
  return out;
}

template <class C>
GroebnerBasis<C> reduced_groebner(const std::vector<Polynomial<C>>& gens, const RingPtr<C>& ring) {
  return reduce_basis(buchberger(gens, ring));
}

/// Intersection of the ideal with the subring of kept variables, as its
/// reduced Gröbner basis in a ring of the kept variables ordered by `inner`.
/// The computation uses the block order with the eliminated variables in
/// front.
template <class C>
std::vector<Polynomial<C>> elimination_ideal(const std::vector<Polynomial<C>>& gens,
                                             const std::set<std::string>& eliminate,
                                             OrderKind inner = OrderKind::grevlex,
                                             RingPtr<C>* kept_ring_out = nullptr) {
  if (gens.empty()) return {};
  const RingPtr<C>& src = gens.front().ring();
  std::vector<std::string> front, back;
  for (const auto& n : src->names) (eliminate.count(n) ? front : back).push_back(n);
  std::vector<std::string> all = front;
  all.insert(all.end(), back.begin(), back.end());
  auto elim_ring = make_ring<C>(all, MonomialOrder::elimination(front.size(), inner), src->domain);
  MonomialOrder kept_order = inner == OrderKind::lex       ? MonomialOrder::lex()
                             : inner == OrderKind::grevlex ? MonomialOrder::grevlex()
                                                           : MonomialOrder::gradedlex();
  auto kept_ring = make_ring<C>(back, kept_order, src->domain);
  if (kept_ring_out) *kept_ring_out = kept_ring;
  std::vector<Polynomial<C>> conv;
  for (const auto& g : gens) conv.push_back(g.in_ring(elim_ring));
  auto B = reduced_groebner(conv, elim_ring);
  std::vector<Polynomial<C>> out;
  for (const auto& g : B.generators) {
    bool free = true;
    for (size_t i = 0; i < front.size() && free; ++i) free = !g.involves(i);
    if (free) out.push_back(g.in_ring(kept_ring));
  }
  return out;
}

/// Krull dimension of R/I from the leading monomials of a full basis:
/// the largest size of a variable set S such that no leading monomial
/// involves only variables of S. Empty optional when I is the unit ideal.
template <class C>
std::optional<size_t> ideal_dimension(const GroebnerBasis<C>& B) {
  if (B.truncation) throw TruncatedBasis("dimension needs a full Gröbner basis");
  if (B.is_unit_ideal()) return std::nullopt;
  const size_t n = B.ring->nvars();
  if (n > 24) throw InvalidSpec("ideal_dimension supports at most 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : B.generators) {
    if (g.is_zero()) continue;
    std::uint32_t s = 0;
    const Monomial& m = g.leading_monomial();
    for (size_t i = 0; i < n; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  size_t best = 0;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    size_t card = static_cast<size_t>(__builtin_popcount(S));
    if (card <= best) continue;
    bool ok = true;
    for (auto s : supports)
      if ((s & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = card;
  }
  return best;
}

template <class C>
bool ideal_membership(const Polynomial<C>& f, const GroebnerBasis<C>& B) {
  return normal_form(f, B).is_zero();
}

/// Whether f vanishes on V(gens): 1 lies in (gens, 1 - u f) over the ring
/// extended by a fresh variable u.
template <class C>
bool radical_membership(const Polynomial<C>& f, const std::vector<Polynomial<C>>& gens) {
  if (f.is_zero()) return true;
  const RingPtr<C>& src = f.ring();
  std::string u = "_u";
  while (src->index_of(u)) u += "_";
  std::vector<std::string> names{u};
  names.insert(names.end(), src->names.begin(), src->names.end());
  auto ext = make_ring<C>(names, MonomialOrder::grevlex(), src->domain);
  std::vector<Polynomial<C>> gs;
  for (const auto& g : gens) gs.push_back(g.in_ring(ext));
  gs.push_back(Polynomial<C>::constant(ext, 1) - Polynomial<C>::variable(ext, 0) * f.in_ring(ext));
  return buchberger(gs, ext).is_unit_ideal();
}

/// Oracle for membership in the subalgebra K[g_1, ..., g_m]. Uses tag
/// variables T_i and a block order eliminating the original variables; a
/// polynomial is in the subalgebra iff its normal form involves only tags,
/// and that normal form, read in K[T], is the witness expression.
template <class C>
class SubalgebraOracle {
 public:
  SubalgebraOracle(const std::vector<Polynomial<C>>& gens, const RingPtr<C>& ring, std::string tag = "T")
      : src_(ring) {
    std::vector<std::string> names = ring->names, tags;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::string t = tag + std::to_string(i + 1);
      while (ring->index_of(t)) t = "_" + t;
      tags.push_back(t);
    }
    names.insert(names.end(), tags.begin(), tags.end());
    full_ = make_ring<C>(names, MonomialOrder::elimination(ring->nvars()), ring->domain);
    tag_ring_ = make_ring<C>(tags, MonomialOrder::grevlex(), ring->domain);
    std::vector<Polynomial<C>> rel;
    for (size_t i = 0; i < gens.size(); ++i)
      rel.push_back(Polynomial<C>::variable(full_, ring->nvars() + i) - gens[i].in_ring(full_));
    if (rel.empty())
      basis_ = GroebnerBasis<C>{full_, {}, std::nullopt, true};
    else
      basis_ = reduced_groebner(rel, full_);
  }

  const RingPtr<C>& tag_ring() const { return tag_ring_; }

  /// Witness polynomial in the tag variables, or nothing when f is not in the
  /// subalgebra.
  std::optional<Polynomial<C>> witness(const Polynomial<C>& f) const {
    Polynomial<C> h = normal_form(f.in_ring(full_), basis_);
    for (size_t i = 0; i < src_->nvars(); ++i)
      if (h.involves(i)) return std::nullopt;
    return h.in_ring(tag_ring_);
  }

  bool contains(const Polynomial<C>& f) const { return witness(f).has_value(); }

 private:
  RingPtr<C> src_, full_, tag_ring_;
  GroebnerBasis<C> basis_;
};

template <class C>
std::optional<Polynomial<C>> subalgebra_membership(const Polynomial<C>& f, const std::vector<Polynomial<C>>& gens) {
  return SubalgebraOracle<C>(gens, f.ring()).witness(f);
}

}  // namespace ikit
