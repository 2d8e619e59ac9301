#pragma once

// Finite matrix groups acting linearly on the first n variables of a ring,
// with the row convention x_i -> sum_j A(i, j) x_j.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ikit/linear_map.hpp"
#include "ikit/parallel.hpp"
#include "ikit/series.hpp"

namespace ikit {

class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;

  const Field& field() const { return field_; }
  size_t dimension() const { return n_; }
  const std::vector<ScalarMatrix>& generators() const { return gens_; }
  /// All elements, identity first, in breadth-first discovery order.
  const std::vector<ScalarMatrix>& elements() const { return elems_; }
  size_t order() const { return elems_.size(); }

  std::optional<size_t> find(const ScalarMatrix& A) const {
    auto it = index_.find(A.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const ScalarMatrix& A) const { return find(A).has_value(); }

  /// True when char(K) divides |G|.
  bool is_modular() const {
    unsigned long p = field_.characteristic();
    return p != 0 && order() % p == 0;
  }

  void require_nonmodular(const char* what) const {
    if (is_modular())
      throw ModularCase(std::string(what) + ": characteristic " + std::to_string(field_.characteristic()) +
                        " divides the group order " + std::to_string(order()));
  }

  friend FiniteMatrixGroup close_group(const Field& field, size_t n, const std::vector<ScalarMatrix>& generators,
                                       size_t cap);

 private:
  Field field_;
  size_t n_ = 0;
  std::vector<ScalarMatrix> gens_, elems_;
  std::unordered_map<std::string, size_t> index_;
};

/// Breadth-first closure starting at the identity; each discovered element is
/// multiplied on the right by the generators in the order given.
inline FiniteMatrixGroup close_group(const Field& field, size_t n, const std::vector<ScalarMatrix>& generators,
                                     size_t cap = 100000) {
  FiniteMatrixGroup G;
  G.field_ = field;
  G.n_ = n;
  for (const auto& A : generators) {
    if (A.rows() != n || A.cols() != n)
      throw LengthMismatch("generator is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
    if (A.domain() != field) throw FieldMismatch("generator entries are not over " + field.describe());
    if (A.determinant().is_zero()) throw SingularGenerator("generator " + A.to_string() + " is singular");
  }
  G.gens_ = generators;
  auto push = [&](ScalarMatrix A) {
    std::string k = A.key();
    if (G.index_.count(k)) return;
    if (G.elems_.size() >= cap)
      throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
    G.index_.emplace(std::move(k), G.elems_.size());
    G.elems_.push_back(std::move(A));
  };
  push(ScalarMatrix::identity(n, field));
  for (size_t head = 0; head < G.elems_.size(); ++head)
    for (const auto& g : generators) push(G.elems_[head] * g);
  return G;
}

/// Precomputed variable images of every group element in a given ring.
class GroupAction {
 public:
  GroupAction(const FiniteMatrixGroup& G, Ring ring) : ring_(std::move(ring)) {
    if (G.field() != ring_->domain) throw FieldMismatch("group field differs from the ring's field");
    if (ring_->nvars() < G.dimension()) throw LengthMismatch("ring has fewer variables than the group dimension");
    for (const auto& A : G.elements()) images_.push_back(linear_images(ring_, A));
  }

  const Ring& ring() const { return ring_; }
  size_t size() const { return images_.size(); }
  Poly apply(size_t element, const Poly& f) const { return f.in_ring(ring_).substitute(images_[element], ring_); }

 private:
  Ring ring_;
  std::vector<std::vector<Poly>> images_;
};

/// Sum of sigma(f) over all elements, without the 1/|G| factor.
inline Poly orbit_sum(const Poly& f, const GroupAction& act) {
  Poly sum(act.ring());
  for (size_t i = 0; i < act.size(); ++i) sum += act.apply(i, f);
  return sum;
}

/// Averaging projection onto the invariants.
inline Poly reynolds(const Poly& f, const FiniteMatrixGroup& G, const GroupAction& act) {
  G.require_nonmodular("Reynolds operator");
  Scalar inv = G.field().from_int(static_cast<long>(G.order())).inverse();
  return orbit_sum(f, act).scaled(inv);
}

inline Poly reynolds(const Poly& f, const FiniteMatrixGroup& G) {
  return reynolds(f, G, GroupAction(G, f.ring()));
}

/// Whether f is fixed by every generator of G.
inline bool is_invariant(const Poly& f, const FiniteMatrixGroup& G) {
  for (const auto& A : G.generators())
    if (apply_linear_map(f, A, false) != f) return false;
  return true;
}

struct CosetDecomposition {
  std::vector<ScalarMatrix> subgroup;
  /// Representatives s with the cosets {h * s : h in H} partitioning G.
  std::vector<ScalarMatrix> representatives;
};

/// Checks that `H` is a subgroup of G (membership and closure under products).
inline void check_subgroup(const FiniteMatrixGroup& G, const std::vector<ScalarMatrix>& H) {
  if (H.empty()) throw NotASubgroup("subgroup element list is empty");
  std::unordered_map<std::string, bool> keys;
  for (const auto& h : H) {
    if (!G.contains(h)) throw NotASubgroup("element " + h.to_string() + " is not in the group");
    keys[h.key()] = true;
  }
  for (const auto& a : H)
    for (const auto& b : H)
      if (!keys.count((a * b).key())) throw NotASubgroup("subgroup list is not closed under products");
}

/// Coset decomposition G = union of H*s. Under the row convention
/// apply(h*s, f) = apply(s, apply(h, f)) = apply(s, f) for H-invariant f, so
/// these are the cosets the relative trace sums over.
inline CosetDecomposition coset_decomposition(const FiniteMatrixGroup& G, const std::vector<ScalarMatrix>& H) {
  check_subgroup(G, H);
  CosetDecomposition out;
  out.subgroup = H;
  std::vector<bool> covered(G.order(), false);
  for (size_t i = 0; i < G.order(); ++i) {
    if (covered[i]) continue;
    const ScalarMatrix& s = G.elements()[i];
    out.representatives.push_back(s);
    for (const auto& h : H) covered[*G.find(h * s)] = true;
  }
  return out;
}

/// Relative trace Tr_{G/H}(f) = sum over coset representatives s of s(f).
/// `representatives`, when given, replaces the default choice; it must hold
/// one element of every coset.
inline Poly relative_trace(const Poly& f, const FiniteMatrixGroup& G, const std::vector<ScalarMatrix>& H,
                           const std::vector<ScalarMatrix>* representatives = nullptr) {
  CosetDecomposition cd = coset_decomposition(G, H);
  for (const auto& h : H)
    if (apply_linear_map(f, h, false) != f) throw NotHInvariant("polynomial is not invariant under " + h.to_string());
  const std::vector<ScalarMatrix>* reps = &cd.representatives;
  if (representatives) {
    if (representatives->size() != cd.representatives.size())
      throw NotASubgroup("expected " + std::to_string(cd.representatives.size()) + " coset representatives");
    std::vector<bool> hit(G.order(), false);
    for (const auto& s : *representatives) {
      if (!G.contains(s)) throw NotASubgroup("representative " + s.to_string() + " is not in the group");
      for (const auto& h : H) {
        size_t k = *G.find(h * s);
        if (hit[k]) throw NotASubgroup("two representatives lie in the same coset");
        hit[k] = true;
      }
    }
    reps = representatives;
  }
  Poly sum(f.ring());
  for (const auto& s : *reps) sum += apply_linear_map(f, s, false);
  return sum;
}

enum class ElementKind { identity, reflection, bireflection, other };

inline const char* kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::identity: return "identity";
    case ElementKind::reflection: return "reflection";
    case ElementKind::bireflection: return "bireflection";
    default: return "other";
  }
}

struct ElementClass {
  size_t codimension;  // codimension of the fixed space, rank(A - I)
  ElementKind kind;    // strongest applicable label
};

inline ElementClass classify_element(const ScalarMatrix& A) {
  size_t c = (A - ScalarMatrix::identity(A.rows(), A.domain())).rank();
  ElementKind k = c == 0 ? ElementKind::identity
                  : c == 1 ? ElementKind::reflection
                  : c == 2 ? ElementKind::bireflection
                           : ElementKind::other;
  return {c, k};
}

/// Multiplicative order by repeated multiplication, capped at `cap`.
inline size_t element_order(const ScalarMatrix& A, size_t cap) {
  ScalarMatrix P = A;
  for (size_t k = 1; k <= cap; ++k) {
    if (P.is_identity()) return k;
    P = P * A;
  }
  throw CapExceeded("element order exceeds " + std::to_string(cap));
}

/// Whether the elements satisfying `pred` generate all of G.
inline bool generated_by_predicate(const FiniteMatrixGroup& G, const std::function<bool(const ScalarMatrix&)>& pred) {
  std::vector<ScalarMatrix> chosen;
  for (const auto& A : G.elements())
    if (pred(A)) chosen.push_back(A);
  if (chosen.empty()) return G.order() == 1;
  return close_group(G.field(), G.dimension(), chosen, G.order()).order() == G.order();
}

inline bool is_reflection_group(const FiniteMatrixGroup& G) {
  return generated_by_predicate(G, [](const ScalarMatrix& A) { return classify_element(A).codimension == 1; });
}

/// Generated by elements fixing a subspace of codimension at most 2.
inline bool is_bireflection_group(const FiniteMatrixGroup& G) {
  return generated_by_predicate(G, [](const ScalarMatrix& A) {
    size_t c = classify_element(A).codimension;
    return c == 1 || c == 2;
  });
}

/// Necessary condition for a Cohen-Macaulay invariant ring: G is generated by
/// p'-elements together with bireflections.
inline bool cm_necessary_condition(const FiniteMatrixGroup& G) {
  const unsigned long p = G.field().characteristic();
  return generated_by_predicate(G, [&](const ScalarMatrix& A) {
    if (p == 0 || element_order(A, G.order()) % p != 0) return true;
    return classify_element(A).codimension <= 2;
  });
}

/// Coefficients c_0..c_n of det(I - tA) = sum c_k t^k, via the
/// Faddeev-LeVerrier recursion for the characteristic polynomial.
inline std::vector<Scalar> det_one_minus_tA(const ScalarMatrix& A) {
  const Field& K = A.domain();
  if (K.characteristic() != 0) throw PositiveCharacteristic("Faddeev-LeVerrier needs characteristic 0");
  const size_t n = A.rows();
  // char poly det(tI - A) = sum_k a_k t^k with a_n = 1.
  std::vector<Scalar> a(n + 1, K.zero());
  a[n] = K.one();
  ScalarMatrix M(n, n, K);  // M_0 = 0
  for (size_t k = 1; k <= n; ++k) {
    ScalarMatrix next = A * M;
    for (size_t i = 0; i < n; ++i) next(i, i) += a[n - k + 1];
    M = next;
    ScalarMatrix AM = A * M;
    Scalar tr = K.zero();
    for (size_t i = 0; i < n; ++i) tr += AM(i, i);
    a[n - k] = -(tr / K.from_int(static_cast<long>(k)));
  }
  // det(I - tA) = t^n det(t^{-1} I - A): coefficient of t^k is a_{n-k}.
  std::vector<Scalar> c(n + 1, K.zero());
  for (size_t k = 0; k <= n; ++k) c[k] = a[n - k];
  return c;
}

/// Molien series (1/|G|) sum 1/det(I - t sigma), truncated after t^d.
inline PowerSeries<Scalar> molien_series(const FiniteMatrixGroup& G, unsigned d) {
  const Field& K = G.field();
  if (K.characteristic() != 0)
    throw PositiveCharacteristic("Molien's formula needs characteristic 0, field is " + K.describe());
  auto parts = parallel_map<PowerSeries<Scalar>>(G.order(), [&](size_t i) {
    return PowerSeries<Scalar>::from_polynomial(det_one_minus_tA(G.elements()[i]), d, K).inverse();
  });
  PowerSeries<Scalar> sum(d, K);
  for (const auto& p : parts) sum += p;
  return sum.scaled(K.from_int(static_cast<long>(G.order())).inverse());
}

}  // namespace ikit
