#pragma once

#include <vector>

#include "tannaka/category.hpp"
#include "tannaka/coalgebroid.hpp"

namespace tannaka {

// L(w) = (⊕_A w(A) ⊗_R w(A)^∨) / coend relations.  Fiber objects are read in
// the coordinates of their stored B-basis: component A has raw coordinates
// (x, φ) with x, φ ranging over the R-basis of B^{r_A} and its dual.
struct CoendPresentation {
  LinearFunctor functor;
  std::vector<std::size_t> rank;     // r_A
  std::vector<std::size_t> offset;   // start of T_A in raw coordinates
  std::size_t raw_ambient = 0;
  Presentation raw;                  // raw coordinates modulo relations
  Simplification simp;               // raw -> simplified carrier
  std::vector<Matrix> to_std;        // w(A) ambient -> B^{r_A}
  std::vector<Matrix> from_std;      // B^{r_A} -> w(A) ambient
  // Generator images in standard coordinates, indexed by a * objects + b.
  std::vector<std::vector<Matrix>> std_mor;

  const BAlgebra& algebra() const { return functor.algebra(); }
  const Ring& ring() const { return functor.ring(); }
  const Presentation& carrier() const { return simp.reduced; }
  std::size_t ambient() const { return carrier().rank(); }
  // R-dimension r_A d of the standard free fiber B^{r_A}.
  std::size_t fiber_dim(std::size_t a) const { return rank[a] * algebra().rank(); }
  // ι_A on raw T_A coordinates, (r_A d)^2 x ambient().
  Matrix insertion(std::size_t a) const;
  // ι_A(x ⊗ φ) for x in B^{r_A} and φ in its dual (standard coordinates).
  Matrix insert(std::size_t a, const Matrix& x, const Matrix& phi) const;
  // w(f) in standard coordinates for an element f of Hom(a, b).
  Matrix std_map(std::size_t a, std::size_t b, const Matrix& f) const;
};

// Throws ValidationError when the functor check fails or a fiber is not free.
CoendPresentation coend(const LinearFunctor& w);

// Both sides of every coend relation, as raw rows; used to assert the
// relation identities in L directly.
bool coend_relations_hold(const CoendPresentation& p);

// Δ(ι_A(x ⊗ φ)) = Σ_k ι_A(x ⊗ e_k^∨) ⊗ ι_A(e_k ⊗ φ), ε(ι_A(x ⊗ φ)) = φ(x).
// Throws ValidationError if Δ or ε fail to be well defined on the relations.
Coalgebroid induced_coalgebroid(const CoendPresentation& p);

// ρ(x) = Σ_k ι_A(x ⊗ e_k^∨) ⊗ e_k on w(A).
Comodule universal_coaction(const CoendPresentation& p, const Coalgebroid& c, std::size_t a);

// (L ⊗ w(f)) ρ_A = ρ_{A'} w(f) on all hom generators.
CheckReport check_coaction_naturality(const CoendPresentation& p, const Coalgebroid& c);

// Carrier map L(w) -> L(w') induced by a raw-coordinate map.
Matrix induced_map(const CoendPresentation& from, const CoendPresentation& to, const Matrix& raw);

// The raw map for a family of B-linear isomorphisms η_A: w(A) -> w'(A) in
// standard coordinates: x ⊗ φ -> η(x) ⊗ φ∘η^{-1}.
Matrix raw_transport(const CoendPresentation& from, const CoendPresentation& to,
                     const std::vector<Matrix>& eta);

// F: C -> C' commutes with s, t, Δ and ε.
CheckReport check_coalgebroid_morphism(const Coalgebroid& c, const Coalgebroid& d, const Matrix& f);
// Morphism check plus bijectivity.
CheckReport check_coalgebroid_isomorphism(const Coalgebroid& c, const Coalgebroid& d, const Matrix& f);

// The same functor with a new stored basis P·basis on object a (P an
// invertible B-matrix given on ambient standard coordinates).
LinearFunctor rebase(const LinearFunctor& w, std::size_t a, const Matrix& change);

// Objects reordered so that new object i is old object perm[i].
LinearFunctor permute_objects(const LinearFunctor& w, const std::vector<std::size_t>& perm);
// Raw map L(w) -> L(permute_objects(w, perm)).
Matrix raw_permutation(const CoendPresentation& from, const CoendPresentation& to,
                       const std::vector<std::size_t>& perm);

// Factors a cowedge {c_A: T_A -> X} (raw blocks stacked in raw order) through L.
// Returns nothing when the family violates a coend relation.
std::optional<Matrix> factor_cowedge(const CoendPresentation& p, const Presentation& target,
                                     const Matrix& cowedge);

// base_change(h, L(w)) -> L(base_change(h, w)), from p and the coend of the
// base-changed functor.
Matrix base_change_comparison(const RingMap& h, const CoendPresentation& p, const CoendPresentation& pbc);

Coalgebroid base_change(const RingMap& h, const Coalgebroid& c);
LinearFunctor base_change(const RingMap& h, const LinearFunctor& w);

}  // namespace tannaka
