#pragma once

// Small categories and fiber functors shared by the test suites and the
// fixture-file generator.

#include <string>
#include <vector>

#include "tannaka/monoidal.hpp"

namespace tannaka::fixtures {

// One object A with Hom(A, A) = R·id and w(A) = R^rank.
LinearFunctor one_object(const Ring& ring, std::size_t rank);

// Full subcategory of graded free modules.  Each object is a list of grades
// (one per basis vector); Hom(X, Y) is generated by the elementary matrices
// E_ij with grade(i) = grade(j), and w is the underlying free module.
LinearFunctor graded(const Ring& ring, const std::vector<std::string>& labels,
                     const std::vector<std::vector<int>>& grades);

// C2-graded lines {+, -}; with `biproduct` also the object +- = + ⊕ -.
LinearFunctor c2_lines(const Ring& ring, bool biproduct = false);

// Lines graded by {e, t} with t·t = t.
LinearFunctor idempotent_lines(const Ring& ring);

// One object, B = R x R, w = B: the pair groupoid on two points.
LinearFunctor pair_groupoid(const Ring& ring);

// One object with Hom = R·id ⊕ R·n, n∘n = 0, w = R and w(n) = 0.
LinearFunctor nilpotent(const Ring& ring);

// Rank-one lines indexed by the elements of a finite monoid with the given
// multiplication table; Hom(a, b) = R·id when a = b and 0 otherwise.  All
// structure maps are identities.  Duals are attached when `inverse` is given.
MonoidalModel monoid_lines(const Ring& ring, const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                           const std::vector<std::size_t>* inverse = nullptr);

// Z/order-graded lines, symmetric with duals.
MonoidalModel cyclic_lines(const Ring& ring, std::size_t order);
// {e, t} with t·t = t: symmetric, no duals.
MonoidalModel idempotent_monoidal(const Ring& ring);
// The pair groupoid with A ⊗ A = A and ψ the multiplication of B.
MonoidalModel pair_groupoid_monoidal(const Ring& ring);

// C = B with Δ(b) = b ⊗ 1 and ε = id.
Coalgebroid trivial_coalgebroid(const BAlgebra& b);
// n x n comatrix coalgebra: Δ(E_ij) = Σ_k E_ik ⊗ E_kj, ε(E_ij) = δ_ij.
Coalgebroid comatrix(const Ring& r, std::size_t n);
// Free on `count` grouplikes: Δ(x_g) = x_g ⊗ x_g, ε(x_g) = 1.
Coalgebroid grouplike(const Ring& r, std::size_t count);
// The line R with ρ(1) = x_g ⊗ 1, and its inclusion 1 -> x_g.
std::pair<Comodule, Matrix> grouplike_line(const Coalgebroid& c, std::size_t g);

}  // namespace tannaka::fixtures
