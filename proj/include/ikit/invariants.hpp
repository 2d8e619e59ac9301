#pragma once

// Invariants of finite matrix groups: degree-wise bases, King's algorithm,
// Noether-bound checks, separating sets, primary invariants and bounds.

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ikit/finite_group.hpp"
#include "ikit/groebner.hpp"
#include "ikit/random.hpp"

namespace ikit {

/// Basis of the homogeneous invariants of degree d, from the linear system
/// sigma(f) = f for each generator sigma. Columns are the degree-d monomials in
/// descending order, so every basis element has a distinct leading monomial
/// with coefficient 1.
inline std::vector<Poly> invariant_basis(const FiniteMatrixGroup& G, const Ring& ring, unsigned d) {
  auto mons = monomials_of_degree(ring, d);
  std::reverse(mons.begin(), mons.end());
  std::map<std::vector<std::uint32_t>, size_t> col;
  for (size_t j = 0; j < mons.size(); ++j) col[mons[j].exponents()] = j;
  const Field& K = ring->domain;
  const size_t m = mons.size(), ng = G.generators().size();
  ScalarMatrix sys(std::max<size_t>(ng * m, 1), m, K);
  for (size_t g = 0; g < ng; ++g) {
    auto images = linear_images(ring, G.generators()[g]);
    for (size_t j = 0; j < m; ++j) {
      Poly diff = Poly::monomial(ring, mons[j]).substitute(images, ring) - Poly::monomial(ring, mons[j]);
      for (const auto& t : diff.terms()) sys(g * m + col.at(t.mono.exponents()), j) += t.coeff;
    }
  }
  std::vector<Poly> out;
  for (const auto& v : nullspace(sys)) {
    std::vector<Term<Scalar>> ts;
    for (size_t j = 0; j < m; ++j)
      if (!v[j].is_zero()) ts.push_back({mons[j], v[j]});
    out.push_back(Poly::from_sorted_terms(ring, std::move(ts)));
  }
  return out;
}

struct GeneratingSetResult {
  std::vector<Poly> generators;
  std::vector<unsigned> degrees;
  unsigned termination_degree = 0;
  bool minimal = true;
};

/// King's algorithm: a minimal homogeneous generating set of the invariant
/// ring, using d-truncated Gröbner bases of the ideal generated so far. The
/// ring's monomial order is the order used; the first G.dimension()
/// variables are acted on.
inline GeneratingSetResult king_generators(const FiniteMatrixGroup& G, const Ring& ring) {
  G.require_nonmodular("King's algorithm");
  GroupAction act(G, ring);
  const Scalar inv_order = G.field().from_int(static_cast<long>(G.order())).inverse();
  GeneratingSetResult res;
  GroebnerBuilder<Scalar> basis(ring);
  const unsigned limit = static_cast<unsigned>(G.order()) + 1;
  for (unsigned d = 1;; ++d) {
    if (d > limit) throw std::logic_error("King's algorithm did not terminate within |G| + 1 passes");
    basis.complete(d);
    std::vector<Monomial> M;
    for (const auto& t : monomials_of_degree(ring, d)) {
      bool divisible = false;
      for (const auto& g : basis.elements())
        if (g.leading_monomial().divides(t)) {
          divisible = true;
          break;
        }
      if (!divisible) M.push_back(t);
    }
    if (M.empty()) {
      res.termination_degree = d;
      return res;
    }
    auto images = parallel_map<Poly>(M.size(), [&](size_t i) {
      return orbit_sum(Poly::monomial(ring, M[i]), act).scaled(inv_order);
    });
    std::vector<bool> removed(M.size(), false);
    for (size_t i = 0; i < M.size(); ++i) {
      if (removed[i]) continue;
      const Poly& f = images[i];
      if (f.is_zero()) continue;
      Poly h = basis.normal_form(f);
      if (h.is_zero()) continue;
      res.generators.push_back(f);
      res.degrees.push_back(d);
      const Monomial lm = h.leading_monomial();
      basis.adjoin_normal_form(h);
      for (size_t k = 0; k < M.size(); ++k)
        if (M[k] == lm) removed[k] = true;
    }
    bool empty = true;
    for (bool r : removed) empty = empty && r;
    if (empty) {
      res.termination_degree = d;
      return res;
    }
  }
}

struct NoetherHilbertReport {
  unsigned group_order = 0;
  unsigned max_degree = 0;
  bool degree_bound_ok = false;       // max generator degree <= |G|
  bool hilbert_monomials_ok = false;  // all degree-|G| monomials in the ideal
  bool subalgebra_ok = false;         // Reynolds images lie in the subalgebra
  unsigned checked_up_to = 0;
  std::vector<std::string> failures;
  bool all_ok() const { return degree_bound_ok && hilbert_monomials_ok && subalgebra_ok; }
};

/// Checks Noether's bound, the Hilbert-ideal monomial lemma and generation of
/// the Reynolds images of all monomials of degree <= up_to.
inline NoetherHilbertReport verify_noether_and_hilbert(const FiniteMatrixGroup& G, const std::vector<Poly>& gens,
                                                       const Ring& ring, unsigned up_to) {
  G.require_nonmodular("Noether bound check");
  NoetherHilbertReport rep;
  rep.group_order = static_cast<unsigned>(G.order());
  rep.checked_up_to = up_to;
  for (const auto& g : gens) rep.max_degree = std::max(rep.max_degree, static_cast<unsigned>(g.total_degree()));
  rep.degree_bound_ok = rep.max_degree <= rep.group_order;
  if (!rep.degree_bound_ok) rep.failures.push_back("generator degree " + std::to_string(rep.max_degree) + " exceeds |G|");

  std::vector<Poly> in_ring;
  for (const auto& g : gens) in_ring.push_back(g.in_ring(ring));
  rep.hilbert_monomials_ok = true;
  if (in_ring.empty()) {
    rep.hilbert_monomials_ok = false;
    rep.failures.push_back("no generators");
  } else {
    auto B = buchberger(in_ring, ring);
    for (const auto& m : monomials_of_degree(ring, rep.group_order))
      if (!ideal_membership(Poly::monomial(ring, m), B)) {
        rep.hilbert_monomials_ok = false;
        rep.failures.push_back("monomial " + m.to_string(ring->names) + " not in the ideal of the generators");
        break;
      }
  }

  GroupAction act(G, ring);
  SubalgebraOracle<Scalar> oracle(in_ring, ring);
  std::vector<Monomial> mons;
  for (unsigned d = 1; d <= up_to; ++d)
    for (const auto& m : monomials_of_degree(ring, d)) mons.push_back(m);
  auto ok = parallel_map<char>(mons.size(), [&](size_t i) {
    return static_cast<char>(oracle.contains(orbit_sum(Poly::monomial(ring, mons[i]), act)));
  });
  rep.subalgebra_ok = true;
  for (size_t i = 0; i < mons.size(); ++i)
    if (!ok[i]) {
      rep.subalgebra_ok = false;
      rep.failures.push_back("Reynolds image of " + mons[i].to_string(ring->names) + " not generated");
      break;
    }
  return rep;
}

struct SeparatingSetResult {
  std::vector<Poly> invariants;
  bool homogeneous = true;
  std::string provenance;  // "noether" or "reduced"
  /// For each reduction step, the alpha vector used and the relation H.
  std::vector<std::vector<long>> alphas;
  std::vector<std::string> relations;
};

namespace detail {
inline std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base = "_" + base;
  return base;
}
}  // namespace detail

/// The coefficients of F(t, y) = prod_sigma (y - sum_i sigma(x_i) t^(i-1)),
/// viewed as a polynomial in t and y over K[x]. Constants are dropped, each
/// coefficient is made monic and repeated ones are removed.
inline SeparatingSetResult noether_separating_set(const FiniteMatrixGroup& G, const Ring& ring) {
  const size_t n = G.dimension();
  std::vector<std::string> names(ring->names.begin(), ring->names.begin() + static_cast<std::ptrdiff_t>(n));
  const std::string tn = detail::fresh_name(names, "t");
  names.push_back(tn);
  const std::string yn = detail::fresh_name(names, "y");
  names.push_back(yn);
  Ring big = make_ring<Scalar>(names, MonomialOrder::grevlex(), ring->domain);
  const size_t ti = n, yi = n + 1;
  Poly F = Poly::constant(big, 1);
  for (const auto& A : G.elements()) {
    Poly factor = Poly::variable(big, yi);
    for (size_t i = 0; i < n; ++i) {
      Poly image(big);
      for (size_t j = 0; j < n; ++j)
        if (!A(i, j).is_zero()) image += Poly::variable(big, j).scaled(A(i, j));
      factor -= image * Poly::monomial(big, Monomial::variable(big->nvars(), ti, static_cast<std::uint32_t>(i)));
    }
    F *= factor;
  }
  // Group by (y exponent descending, t exponent ascending).
  std::map<std::pair<long, long>, std::vector<Term<Scalar>>> groups;
  for (const auto& t : F.terms()) {
    Monomial xm(ring->nvars());
    for (size_t i = 0; i < n; ++i) xm.set(i, t.mono[i]);
    groups[{-static_cast<long>(t.mono[yi]), static_cast<long>(t.mono[ti])}].push_back({xm, t.coeff});
  }
  SeparatingSetResult res;
  res.provenance = "noether";
  for (auto& [key, ts] : groups) {
    Poly c = Poly::from_terms(ring, std::move(ts));
    if (c.is_constant()) continue;
    c = c.monic();
    if (std::find(res.invariants.begin(), res.invariants.end(), c) == res.invariants.end())
      res.invariants.push_back(c);
  }
  return res;
}

namespace detail {

/// Integer tuples of length k ordered by max-norm, then lexicographically
/// over the value sequence 1, 0, -1, 2, -2, ...; the first entry is nonzero.
class AlphaEnumerator {
 public:
  explicit AlphaEnumerator(size_t k) : k_(k) {}

  std::vector<long> next() {
    for (;;) {
      if (idx_.empty()) {
        ++norm_;
        idx_.assign(k_, 0);
      } else if (!advance()) {
        idx_.clear();
        continue;
      }
      std::vector<long> a(k_);
      long mx = 0;
      for (size_t i = 0; i < k_; ++i) {
        a[i] = value(idx_[i]);
        mx = std::max(mx, std::abs(a[i]));
      }
      if (mx == norm_ && a[0] != 0) return a;
    }
  }

 private:
  static long value(size_t r) {
    if (r == 0) return 1;
    if (r == 1) return 0;
    return r % 2 ? static_cast<long>((r + 1) / 2) : -static_cast<long>(r / 2);
  }
  bool advance() {
    const size_t levels = 2 * static_cast<size_t>(norm_) + 1;
    for (size_t i = k_; i-- > 0;) {
      if (++idx_[i] < levels) return true;
      idx_[i] = 0;
    }
    return false;
  }

  size_t k_;
  long norm_ = 0;
  std::vector<size_t> idx_;
};

}  // namespace detail

/// Shrinks a separating set to at most 2n + 1 elements by repeatedly
/// replacing f_1..f_k with alpha_1 f_i - alpha_i f_1 (i >= 2), where alpha is
/// a non-root of a relation H among the g_i = t (f_i(x) - f_i(y)).
inline SeparatingSetResult reduce_separating_set(const std::vector<Poly>& S, size_t n) {
  SeparatingSetResult res;
  res.provenance = "reduced";
  res.homogeneous = false;
  res.invariants = S;
  if (S.size() <= 2 * n + 1) {
    res.homogeneous = std::all_of(S.begin(), S.end(), [](const Poly& f) { return f.is_homogeneous(); });
    return res;
  }
  const Ring& ring = S.front().ring();
  const Field& K = ring->domain;
  if (!K.is_infinite()) throw FieldTooSmall("the 2n+1 reduction needs an infinite field, got " + K.describe());
  if (ring->nvars() < n) throw LengthMismatch("ring has fewer than n variables");

  while (res.invariants.size() > 2 * n + 1) {
    const auto& fs = res.invariants;
    const size_t k = fs.size();
    std::vector<std::string> names(ring->names.begin(), ring->names.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::string> ynames;
    for (size_t i = 0; i < n; ++i) {
      ynames.push_back(detail::fresh_name(names, ring->names[i] + "_b"));
      names.push_back(ynames.back());
    }
    const std::string tn = detail::fresh_name(names, "t");
    names.push_back(tn);
    std::vector<std::string> tags;
    for (size_t i = 0; i < k; ++i) {
      tags.push_back(detail::fresh_name(names, "T" + std::to_string(i + 1)));
      names.push_back(tags.back());
    }
    Ring big = make_ring<Scalar>(names, MonomialOrder::grevlex(), K);
    std::vector<Poly> ximg, yimg;
    for (size_t i = 0; i < ring->nvars(); ++i) {
      if (i >= n) {
        ximg.push_back(Poly(big));
        yimg.push_back(Poly(big));
        continue;
      }
      ximg.push_back(Poly::variable(big, i));
      yimg.push_back(Poly::variable(big, n + i));
    }
    Poly t = Poly::variable(big, 2 * n);
    std::vector<Poly> gens;
    for (size_t i = 0; i < k; ++i)
      gens.push_back(Poly::variable(big, 2 * n + 1 + i) - t * (fs[i].substitute(ximg, big) - fs[i].substitute(yimg, big)));
    std::set<std::string> elim(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(2 * n + 1));
    auto rel = elimination_ideal(gens, elim);
    if (rel.empty()) throw std::logic_error("no algebraic relation found among more than 2n+1 polynomials");
    const Poly& H = rel.back();  // least leading monomial
    detail::AlphaEnumerator en(k);
    std::vector<long> alpha;
    for (;;) {
      alpha = en.next();
      std::vector<Scalar> pt;
      for (long a : alpha) pt.push_back(K.from_int(a));
      if (!H.evaluate(pt).is_zero()) break;
    }
    std::vector<Poly> next;
    const Scalar a1 = K.from_int(alpha[0]);
    for (size_t i = 1; i < k; ++i) next.push_back(fs[i].scaled(a1) - fs[0].scaled(K.from_int(alpha[i])));
    res.alphas.push_back(alpha);
    res.relations.push_back(H.to_string());
    res.invariants = std::move(next);
  }
  res.homogeneous = std::all_of(res.invariants.begin(), res.invariants.end(), [](const Poly& f) { return f.is_homogeneous(); });
  return res;
}

struct SeparationReport {
  size_t pairs = 0;
  long coordinate_bound = 0;
  std::uint64_t seed = 0;
  size_t same_orbit_checked = 0, same_orbit_failures = 0;
  size_t distinct_checked = 0, distinct_failures = 0;
  std::vector<std::string> counterexamples;
  bool passed() const { return same_orbit_failures == 0 && distinct_failures == 0; }
  static constexpr const char* note =
      "sampled check on random integer points; a pass is evidence, not a proof of separation";
};

namespace detail {
inline std::string point_string(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}
}  // namespace detail

/// Samples pairs of points in the same orbit (w = A v) and in different
/// orbits, and checks that S agrees on the former and differs on the latter.
inline SeparationReport verify_separation_samples(const std::vector<Poly>& S, const FiniteMatrixGroup& G, size_t pairs,
                                                  long coordinate_bound = 10, std::uint64_t seed = 0) {
  SeparationReport rep;
  rep.pairs = pairs;
  rep.coordinate_bound = coordinate_bound;
  rep.seed = seed;
  const Field& K = G.field();
  const size_t n = G.dimension();
  XorShift64Star rng(seed);
  auto random_point = [&] {
    std::vector<Scalar> v;
    for (size_t i = 0; i < n; ++i) v.push_back(K.from_int(rng.range(-coordinate_bound, coordinate_bound)));
    return v;
  };
  auto values = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out;
    for (const auto& f : S) {
      std::vector<Scalar> pt(f.ring()->nvars(), K.zero());
      for (size_t i = 0; i < n; ++i) pt[i] = v[i];
      out.push_back(f.evaluate(pt));
    }
    return out;
  };
  auto note = [&](const std::string& s) {
    if (rep.counterexamples.size() < 5) rep.counterexamples.push_back(s);
  };
  for (size_t p = 0; p < pairs; ++p) {
    auto v = random_point();
    const auto& A = G.elements()[rng.below(G.order())];
    auto w = apply_to_point(A, v);
    ++rep.same_orbit_checked;
    if (values(v) != values(w)) {
      ++rep.same_orbit_failures;
      note("same orbit, different values: " + detail::point_string(v) + " vs " + detail::point_string(w));
    }
  }
  for (size_t p = 0; p < pairs; ++p) {
    std::vector<Scalar> v, w;
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
      v = random_point();
      w = random_point();
      found = true;
      for (const auto& A : G.elements())
        if (apply_to_point(A, v) == w) {
          found = false;
          break;
        }
    }
    if (!found) break;
    ++rep.distinct_checked;
    if (values(v) == values(w)) {
      ++rep.distinct_failures;
      note("different orbits, equal values: " + detail::point_string(v) + " vs " + detail::point_string(w));
    }
  }
  return rep;
}

namespace detail {
inline std::optional<size_t> dimension_of(const std::vector<Poly>& fs, const Ring& ring) {
  for (const auto& f : fs)
    if (!f.is_homogeneous() || f.is_constant())
      throw NonHomogeneousInput("expected nonconstant homogeneous polynomials, got " + f.to_string());
  if (fs.empty()) return ring->nvars();
  std::vector<Poly> conv;
  for (const auto& f : fs) conv.push_back(f.in_ring(ring));
  return ideal_dimension(buchberger(conv, ring));
}
}  // namespace detail

/// Partial homogeneous system of parameters: V(fs) has dimension n - k.
inline bool is_phsop(const std::vector<Poly>& fs, const Ring& ring) {
  auto dim = detail::dimension_of(fs, ring);
  return dim && fs.size() <= ring->nvars() && *dim == ring->nvars() - fs.size();
}

/// Homogeneous system of parameters: n polynomials whose common zero set is
/// the origin.
inline bool is_hsop(const std::vector<Poly>& fs, const Ring& ring) {
  return fs.size() == ring->nvars() && is_phsop(fs, ring);
}

struct PrimaryInvariants {
  std::vector<Poly> invariants;
  std::vector<Poly> forms;  // the linear forms whose orbit products were taken
  std::vector<unsigned> degrees;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
};

/// Orbit products of seeded random linear forms, kept only when they extend
/// the current partial system of parameters.
inline PrimaryInvariants dade_primary_invariants(const FiniteMatrixGroup& G, const Ring& ring, std::uint64_t seed = 0,
                                                 unsigned retries = 50, long coefficient_bound = 10) {
  const Field& K = G.field();
  if (!K.is_infinite()) throw FieldTooSmall("random linear forms need an infinite field, got " + K.describe());
  const size_t n = G.dimension();
  if (ring->nvars() != n) throw LengthMismatch("primary invariants need a ring with exactly n variables");
  GroupAction act(G, ring);
  XorShift64Star rng(seed);
  PrimaryInvariants res;
  res.seed = seed;
  for (size_t slot = 0; slot < n; ++slot) {
    bool ok = false;
    for (unsigned attempt = 0; attempt < retries && !ok; ++attempt) {
      ++res.attempts;
      Poly l(ring);
      for (size_t i = 0; i < n; ++i)
        l += Poly::variable(ring, i).scaled(K.from_int(rng.range(-coefficient_bound, coefficient_bound)));
      if (l.is_zero()) continue;
      std::vector<Poly> orbit;
      for (size_t e = 0; e < act.size(); ++e) {
        Poly img = act.apply(e, l);
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
      }
      Poly prod = Poly::constant(ring, 1);
      for (const auto& o : orbit) prod *= o;
      auto trial = res.invariants;
      trial.push_back(prod);
      if (is_phsop(trial, ring)) {
        res.invariants = std::move(trial);
        res.forms.push_back(l);
        res.degrees.push_back(static_cast<unsigned>(orbit.size()));
        ok = true;
      }
    }
    if (!ok)
      throw RetryLimitExceeded("no suitable linear form for primary invariant " + std::to_string(slot + 1) +
                               " after " + std::to_string(retries) + " attempts");
  }
  if (!is_hsop(res.invariants, ring)) throw std::logic_error("orbit products do not form an hsop");
  return res;
}

struct DegreeBoundReport {
  unsigned long symonds = 0;  // sum (d_i - 1): bound on secondary invariant degrees
  unsigned long coarse = 0;   // n (|G| - 1)
  unsigned long noether = 0;  // |G|
  bool noether_applies = true;
};

inline DegreeBoundReport degree_bound_report(size_t group_order, size_t n, const std::vector<unsigned>& primary_degrees,
                                             bool modular = false) {
  DegreeBoundReport r;
  for (unsigned d : primary_degrees) r.symonds += d ? d - 1 : 0;
  r.coarse = n * (group_order - 1);
  r.noether = group_order;
  r.noether_applies = !modular;
  return r;
}

}  // namespace ikit
