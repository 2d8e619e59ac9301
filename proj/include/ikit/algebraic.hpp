#pragma once

// Linear algebraic groups given by an ideal in group coordinates z and an
// action x_i -> f_i(z, x): the graph ideal, the Derksen ideal, generators of
// invariant rings and fields, and the separating variety.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ikit/groebner.hpp"
#include "ikit/invariants.hpp"
#include "ikit/linalg.hpp"
#include "ikit/parse.hpp"
#include "ikit/rational_function.hpp"

namespace ikit {

class AlgebraicGroupSpec {
 public:
  /// `ideal_gens` may only involve the group variables; `action[i]` is the
  /// image of x_i, a polynomial in group variables and x.
  AlgebraicGroupSpec(Field field, std::vector<std::string> group_vars, std::vector<std::string> x_names,
                     std::vector<std::string> y_names, const std::vector<std::string>& ideal_gens,
                     const std::vector<std::string>& action, bool linear_reductive);

  const Field& field() const { return field_; }
  const std::vector<std::string>& group_vars() const { return z_; }
  const std::vector<std::string>& x_names() const { return x_; }
  const std::vector<std::string>& y_names() const { return y_; }
  size_t n() const { return x_.size(); }
  bool linear_reductive() const { return reductive_; }

  /// Ring (z..., x...) with the z block eliminated first; ideal and action
  /// polynomials live here.
  const Ring& base_ring() const { return base_; }
  const std::vector<Poly>& ideal_gens() const { return ideal_; }
  const std::vector<Poly>& action() const { return action_; }
  /// Ring of the acted variables, grevlex.
  const Ring& x_ring() const { return xring_; }

  /// Each f_i is linear in x with coefficients in z.
  bool is_linear() const;
  /// A(z) with f_i = sum_j A[i][j] x_j; throws InvalidSpec for nonlinear actions.
  std::vector<std::vector<Poly>> action_matrix() const;
  /// Gröbner basis of the group ideal in the base ring (empty for r = 0).
  const std::vector<Poly>& group_ideal_basis() const { return ideal_basis_; }

 private:
  Field field_;
  std::vector<std::string> z_, x_, y_;
  Ring base_, xring_;
  std::vector<Poly> ideal_, action_, ideal_basis_;
  bool reductive_;
};

inline AlgebraicGroupSpec::AlgebraicGroupSpec(Field field, std::vector<std::string> group_vars,
                                              std::vector<std::string> x_names, std::vector<std::string> y_names,
                                              const std::vector<std::string>& ideal_gens,
                                              const std::vector<std::string>& action, bool linear_reductive)
    : field_(field), z_(std::move(group_vars)), x_(std::move(x_names)), y_(std::move(y_names)),
      reductive_(linear_reductive) {
  if (x_.empty()) throw InvalidSpec("algebraic group spec needs at least one acted variable");
  if (y_.empty())
    for (const auto& x : x_) y_.push_back(x.size() > 1 && x[0] == 'x' ? "y" + x.substr(1) : "y_" + x);
  if (y_.size() != x_.size()) throw InvalidSpec("need one y variable per x variable");
  if (action.size() != x_.size())
    throw InvalidSpec("action has " + std::to_string(action.size()) + " entries, expected " +
                      std::to_string(x_.size()));
  std::vector<std::string> names = z_;
  names.insert(names.end(), x_.begin(), x_.end());
  base_ = make_ring<Scalar>(names, MonomialOrder::elimination(z_.size()), field_);
  xring_ = make_ring<Scalar>(x_, MonomialOrder::grevlex(), field_);
  {
    std::vector<std::string> all = names;
    all.insert(all.end(), y_.begin(), y_.end());
    std::set<std::string> seen;
    for (const auto& s : all)
      if (!seen.insert(s).second) throw InvalidSpec("variable name '" + s + "' is used twice");
    if (field_.kind() == FieldKind::extension && seen.count(field_.spec().generator))
      throw InvalidSpec("variable name clashes with the field generator");
  }
  for (const auto& g : ideal_gens) {
    Poly p = parse_polynomial(g, base_);
    for (size_t i = z_.size(); i < base_->nvars(); ++i)
      if (p.involves(i)) throw InvalidSpec("group ideal generator " + g + " involves acted variables");
    if (!p.is_zero()) ideal_.push_back(p);
  }
  for (const auto& a : action) action_.push_back(parse_polynomial(a, base_));
  if (!ideal_.empty()) {
    auto B = reduced_groebner(ideal_, base_);
    if (B.is_unit_ideal()) throw InvalidSpec("group ideal is the unit ideal");
    ideal_basis_ = B.generators;
  }
}

inline bool AlgebraicGroupSpec::is_linear() const {
  const size_t r = z_.size();
  for (const auto& f : action_)
    for (const auto& t : f.terms()) {
      std::uint32_t xdeg = 0;
      for (size_t i = r; i < base_->nvars(); ++i) xdeg += t.mono[i];
      if (xdeg != 1) return false;
    }
  return true;
}

inline std::vector<std::vector<Poly>> AlgebraicGroupSpec::action_matrix() const {
  if (!is_linear()) throw InvalidSpec("the action is not linear in the acted variables");
  const size_t r = z_.size(), n = x_.size();
  std::vector<std::vector<std::vector<Term<Scalar>>>> parts(n, std::vector<std::vector<Term<Scalar>>>(n));
  for (size_t i = 0; i < n; ++i)
    for (const auto& t : action_[i].terms()) {
      size_t j = r;
      while (t.mono[j] == 0) ++j;
      Monomial m = t.mono;
      m.set(j, 0);
      parts[i][j - r].push_back({std::move(m), t.coeff});
    }
  std::vector<std::vector<Poly>> A(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A[i].push_back(Poly::from_terms(base_, std::move(parts[i][j])));
  return A;
}

struct DHat {
  Ring ring;  // (z..., y..., x...), z block eliminated first
  std::vector<Poly> generators;
};

/// Generators g_1..g_l, f_1 - y_1, ..., f_n - y_n of the ideal of the graph
/// {(sigma, v, sigma v)}.
inline DHat build_d_hat(const AlgebraicGroupSpec& spec) {
  std::vector<std::string> names = spec.group_vars();
  names.insert(names.end(), spec.y_names().begin(), spec.y_names().end());
  names.insert(names.end(), spec.x_names().begin(), spec.x_names().end());
  DHat d;
  d.ring = make_ring<Scalar>(names, MonomialOrder::elimination(spec.group_vars().size()), spec.field());
  for (const auto& g : spec.ideal_gens()) d.generators.push_back(g.in_ring(d.ring));
  for (size_t i = 0; i < spec.n(); ++i)
    d.generators.push_back(spec.action()[i].in_ring(d.ring) - Poly::variable(d.ring, spec.y_names()[i]));
  return d;
}

struct DerksenIdealResult {
  Ring ring;  // (y..., x...), grevlex
  std::vector<Poly> generators;
  std::string order = "grevlex";
  bool reduced = true;
};

/// The Derksen ideal: the graph ideal with the group variables eliminated,
/// as a reduced Gröbner basis.
inline DerksenIdealResult derksen_ideal(const AlgebraicGroupSpec& spec) {
  DHat d = build_d_hat(spec);
  DerksenIdealResult res;
  std::set<std::string> z(spec.group_vars().begin(), spec.group_vars().end());
  res.generators = elimination_ideal(d.generators, z, OrderKind::grevlex, &res.ring);
  return res;
}

/// The specializations at y = 0 of the homogeneous components of the Derksen
/// ideal generators; for linearly reductive groups these generate the
/// Hilbert ideal.
inline std::vector<Poly> hilbert_ideal_generators(const AlgebraicGroupSpec& spec, const DerksenIdealResult& D) {
  const Ring& xr = spec.x_ring();
  std::vector<Poly> images;
  for (size_t i = 0; i < D.ring->nvars(); ++i) {
    auto xi = xr->index_of(D.ring->names[i]);
    images.push_back(xi ? Poly::variable(xr, *xi) : Poly(xr));
  }
  std::vector<Poly> out;
  for (const auto& g : D.generators) {
    for (int d = 0; d <= g.total_degree(); ++d) {
      Poly h = g.homogeneous_component(static_cast<std::uint32_t>(d)).substitute(images, xr);
      if (h.is_zero()) continue;
      h = h.monic();
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
  }
  return out;
}

/// Basis of the homogeneous invariants of degree d for a linear action:
/// f(A(z) x) - f(x) must vanish modulo the group ideal.
inline std::vector<Poly> algebraic_invariant_basis(const AlgebraicGroupSpec& spec, unsigned d) {
  auto A = spec.action_matrix();
  const Ring& base = spec.base_ring();
  const Ring& xr = spec.x_ring();
  const size_t r = spec.group_vars().size(), n = spec.n();
  std::vector<Poly> images;
  for (size_t i = 0; i < r; ++i) images.push_back(Poly::variable(base, i));
  for (size_t i = 0; i < n; ++i) {
    Poly img(base);
    for (size_t j = 0; j < n; ++j) img += A[i][j] * Poly::variable(base, r + j);
    images.push_back(img);
  }
  auto mons = monomials_of_degree(xr, d);
  std::reverse(mons.begin(), mons.end());
  std::map<std::vector<std::uint32_t>, size_t> rows;
  std::vector<Poly> residues;
  for (const auto& m : mons) {
    Poly xm = Poly::monomial(xr, m).in_ring(base);
    Poly diff = xm.substitute(images, base) - xm;
    Poly res = detail::reduce_fully(diff, spec.group_ideal_basis());
    for (const auto& t : res.terms()) rows.emplace(t.mono.exponents(), rows.size());
    residues.push_back(std::move(res));
  }
  ScalarMatrix sys(std::max<size_t>(rows.size(), 1), mons.size(), spec.field());
  for (size_t j = 0; j < mons.size(); ++j)
    for (const auto& t : residues[j].terms()) sys(rows.at(t.mono.exponents()), j) = t.coeff;
  std::vector<Poly> out;
  for (const auto& v : nullspace(sys)) {
    std::vector<Term<Scalar>> ts;
    for (size_t j = 0; j < mons.size(); ++j)
      if (!v[j].is_zero()) ts.push_back({mons[j], v[j]});
    out.push_back(Poly::from_sorted_terms(xr, std::move(ts)));
  }
  return out;
}

/// Derksen's algorithm: degrees of the Hilbert ideal generators, then bases
/// of the invariants in those degrees. The result is generally not minimal.
inline GeneratingSetResult derksen_generators(const AlgebraicGroupSpec& spec) {
  if (!spec.linear_reductive())
    throw NotDeclaredReductive("Derksen's algorithm needs a group declared linearly reductive");
  auto D = derksen_ideal(spec);
  std::set<unsigned> degrees;
  for (const auto& h : hilbert_ideal_generators(spec, D))
    if (h.total_degree() > 0) degrees.insert(static_cast<unsigned>(h.total_degree()));
  GeneratingSetResult res;
  res.minimal = false;
  for (unsigned d : degrees)
    for (auto& f : algebraic_invariant_basis(spec, d)) {
      res.generators.push_back(std::move(f));
      res.degrees.push_back(d);
    }
  return res;
}

struct DerksenCheckReport {
  bool invariance_ok = false;     // every generator is invariant modulo the group ideal
  bool hilbert_ideal_ok = false;  // generators and the y = 0 specializations span one ideal
  std::vector<std::string> failures;
  bool all_ok() const { return invariance_ok && hilbert_ideal_ok; }
};

/// Consistency check for a Derksen generating set: exact invariance, and the
/// ideal generated by it equals the ideal of the specialized Derksen ideal.
inline DerksenCheckReport verify_derksen(const AlgebraicGroupSpec& spec, const std::vector<Poly>& gens) {
  DerksenCheckReport rep;
  auto A = spec.action_matrix();
  const Ring& base = spec.base_ring();
  const size_t r = spec.group_vars().size(), n = spec.n();
  std::vector<Poly> images;
  for (size_t i = 0; i < r; ++i) images.push_back(Poly::variable(base, i));
  for (size_t i = 0; i < n; ++i) {
    Poly img(base);
    for (size_t j = 0; j < n; ++j) img += A[i][j] * Poly::variable(base, r + j);
    images.push_back(img);
  }
  rep.invariance_ok = true;
  for (const auto& f : gens) {
    Poly fb = f.in_ring(base);
    if (!detail::reduce_fully(fb.substitute(images, base) - fb, spec.group_ideal_basis()).is_zero()) {
      rep.invariance_ok = false;
      rep.failures.push_back(f.to_string() + " is not invariant");
    }
  }
  auto h = hilbert_ideal_generators(spec, derksen_ideal(spec));
  std::vector<Poly> hx, gx;
  for (const auto& p : h) hx.push_back(p.in_ring(spec.x_ring()));
  for (const auto& p : gens) gx.push_back(p.in_ring(spec.x_ring()));
  rep.hilbert_ideal_ok = !hx.empty() && !gx.empty();
  if (rep.hilbert_ideal_ok) {
    auto H = buchberger(hx), Gb = buchberger(gx);
    for (const auto& p : gx) rep.hilbert_ideal_ok = rep.hilbert_ideal_ok && ideal_membership(p, H);
    for (const auto& p : hx) rep.hilbert_ideal_ok = rep.hilbert_ideal_ok && ideal_membership(p, Gb);
  }
  if (!rep.hilbert_ideal_ok) rep.failures.push_back("generators do not span the Hilbert ideal");
  return rep;
}

struct InvariantFieldResult {
  /// Reduced Gröbner basis of the Derksen ideal over K(x), in the y variables.
  std::vector<Polynomial<RationalFunction>> basis;
  /// Nonconstant coefficients, each scaled so its numerator is monic, without repeats.
  std::vector<RationalFunction> generators;
};

/// Generators of the invariant field K(x)^G: the coefficients of the reduced
/// Gröbner basis of the Derksen ideal computed over K(x).
inline InvariantFieldResult invariant_field_generators(const AlgebraicGroupSpec& spec) {
  RationalFunctionField L(spec.x_ring());
  const size_t r = spec.group_vars().size();
  std::vector<std::string> names = spec.group_vars();
  names.insert(names.end(), spec.y_names().begin(), spec.y_names().end());
  auto R = make_ring<RationalFunction>(names, MonomialOrder::elimination(r), L);
  using P = Polynomial<RationalFunction>;
  // Split base-ring polynomials into z-monomials with coefficients in K[x].
  auto lift = [&](const Poly& f) {
    std::map<std::vector<std::uint32_t>, std::vector<Term<Scalar>>> parts;
    for (const auto& t : f.terms()) {
      std::vector<std::uint32_t> ze(R->nvars(), 0), xe(spec.n(), 0);
      for (size_t i = 0; i < r; ++i) ze[i] = t.mono[i];
      for (size_t i = 0; i < spec.n(); ++i) xe[i] = t.mono[r + i];
      parts[ze].push_back({Monomial(xe), t.coeff});
    }
    std::vector<Term<RationalFunction>> ts;
    for (auto& [ze, xs] : parts)
      ts.push_back({Monomial(ze), RationalFunction(Poly::from_terms(spec.x_ring(), std::move(xs)))});
    return P::from_terms(R, std::move(ts));
  };
  std::vector<P> gens;
  for (const auto& g : spec.ideal_gens()) gens.push_back(lift(g));
  for (size_t i = 0; i < spec.n(); ++i) gens.push_back(lift(spec.action()[i]) - P::variable(R, r + i));
  std::set<std::string> z(spec.group_vars().begin(), spec.group_vars().end());
  InvariantFieldResult res;
  res.basis = elimination_ideal(gens, z);
  for (const auto& g : res.basis)
    for (const auto& t : g.terms()) {
      if (t.coeff.is_constant()) continue;
      RationalFunction c = t.coeff.normalized_up_to_constant();
      if (std::find(res.generators.begin(), res.generators.end(), c) == res.generators.end())
        res.generators.push_back(c);
    }
  return res;
}

struct SeparatingVarietyResult {
  Ring ring;  // (x..., y...), grevlex
  std::vector<Poly> generators;
};

/// Pairs (v, w) on which all invariants agree: K[x, y] intersected with
/// D(x, u) + D(y, u), where D is the Derksen ideal and u a shared set of new
/// variables.
inline SeparatingVarietyResult separating_variety(const AlgebraicGroupSpec& spec) {
  auto D = derksen_ideal(spec);
  const size_t n = spec.n();
  std::vector<std::string> taken = spec.x_names();
  taken.insert(taken.end(), spec.y_names().begin(), spec.y_names().end());
  std::vector<std::string> u;
  for (size_t i = 0; i < n; ++i) {
    u.push_back(detail::fresh_name(taken, "u" + std::to_string(i + 1)));
    taken.push_back(u.back());
  }
  std::vector<std::string> names = u;
  names.insert(names.end(), spec.x_names().begin(), spec.x_names().end());
  names.insert(names.end(), spec.y_names().begin(), spec.y_names().end());
  Ring big = make_ring<Scalar>(names, MonomialOrder::elimination(n), spec.field());
  // D lives in (y..., x...); map (y -> u, x -> x) and (y -> u, x -> y).
  std::vector<Poly> first, second;
  for (size_t i = 0; i < D.ring->nvars(); ++i) {
    const std::string& name = D.ring->names[i];
    auto yi = std::find(spec.y_names().begin(), spec.y_names().end(), name) - spec.y_names().begin();
    if (static_cast<size_t>(yi) < n) {
      first.push_back(Poly::variable(big, static_cast<size_t>(yi)));
      second.push_back(Poly::variable(big, static_cast<size_t>(yi)));
    } else {
      auto xi = std::find(spec.x_names().begin(), spec.x_names().end(), name) - spec.x_names().begin();
      first.push_back(Poly::variable(big, n + static_cast<size_t>(xi)));
      second.push_back(Poly::variable(big, 2 * n + static_cast<size_t>(xi)));
    }
  }
  std::vector<Poly> gens;
  for (const auto& g : D.generators) {
    gens.push_back(g.substitute(first, big));
    gens.push_back(g.substitute(second, big));
  }
  SeparatingVarietyResult res;
  res.generators = elimination_ideal(gens, std::set<std::string>(u.begin(), u.end()), OrderKind::grevlex, &res.ring);
  if (res.generators.empty()) {
    std::vector<std::string> kept = spec.x_names();
    kept.insert(kept.end(), spec.y_names().begin(), spec.y_names().end());
    res.ring = make_ring<Scalar>(kept, MonomialOrder::grevlex(), spec.field());
  }
  return res;
}

struct SeparatingSubalgebraResult {
  std::vector<Poly> invariants;
  unsigned degree_reached = 0;
};

/// Homogeneous invariants of rising degree until their differences
/// f(x) - f(y) cut out the separating variety set-theoretically.
inline SeparatingSubalgebraResult separating_subalgebra(const AlgebraicGroupSpec& spec, unsigned max_degree) {
  auto S = separating_variety(spec);
  const Ring& xy = S.ring;
  const size_t n = spec.n();
  std::vector<Poly> to_x, to_y;
  for (size_t i = 0; i < n; ++i) {
    to_x.push_back(Poly::variable(xy, i));
    to_y.push_back(Poly::variable(xy, n + i));
  }
  SeparatingSubalgebraResult res;
  std::vector<Poly> deltas;
  for (unsigned d = 1; d <= max_degree; ++d) {
    res.degree_reached = d;
    for (auto& f : algebraic_invariant_basis(spec, d)) {
      deltas.push_back(f.substitute(to_x, xy) - f.substitute(to_y, xy));
      res.invariants.push_back(std::move(f));
    }
    if (deltas.empty()) continue;
    bool done = true;
    for (const auto& s : S.generators)
      if (!radical_membership(s, deltas)) {
        done = false;
        break;
      }
    if (!done) continue;
    if (S.generators.empty()) return res;
    for (const auto& df : deltas)
      if (!radical_membership(df, S.generators))
        throw std::logic_error("invariant difference does not vanish on the separating variety");
    return res;
  }
  std::string partial;
  for (const auto& f : res.invariants) partial += (partial.empty() ? "" : ", ") + f.to_string();
  throw MaxDegreeExceeded("no separating set up to degree " + std::to_string(max_degree) + " (found so far: {" +
                          partial + "})");
}

}  // namespace ikit
