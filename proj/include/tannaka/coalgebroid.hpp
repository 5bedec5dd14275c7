#pragma once

#include <vector>

#include "tannaka/linear_system.hpp"

namespace tannaka {

// A B-B-coalgebroid realized on an R-module carrier with two commuting
// B-actions.  Δ lands in C ⊗_B C balanced by t on the left factor against s on
// the right; ε lands in B.
struct Coalgebroid {
  BAlgebra algebra;
  Presentation carrier;
  std::vector<Matrix> s_action;
  std::vector<Matrix> t_action;
  Matrix delta;  // n x n^2
  Matrix eps;    // n x d

  const Ring& ring() const { return algebra.ring(); }
  std::size_t ambient() const { return carrier.rank(); }
  BModule source_module() const { return BModule{algebra, carrier, s_action, std::nullopt}; }
  BModule target_module() const { return BModule{algebra, carrier, t_action, std::nullopt}; }
  // C ⊗_B C with the (t, s) balancing.
  Presentation tensor() const;
  // C ⊗_B C ⊗_B C, balanced (t, s) between neighbours.
  Presentation triple_tensor() const;
  // C ⊗_B M balanced by t against the action of M.
  Presentation tensor_with(const BModule& m) const;
  // (ε ⊗ id) and (id ⊗ ε) as maps C ⊗_B C -> C.
  Matrix counit_left() const;
  Matrix counit_right() const;
  // s(b) and t(b) as operators for b given in coordinates.
  Matrix s(const Matrix& b) const { return linear_combination(b, s_action, ambient(), ambient()); }
  Matrix t(const Matrix& b) const { return linear_combination(b, t_action, ambient(), ambient()); }
};

// Bimodule axioms, well-definedness of Δ and ε, coassociativity and both
// counit laws on every ambient generator.
CheckReport check_coalgebroid(const Coalgebroid& c);

struct Comodule {
  Coalgebroid coalgebroid;
  BModule carrier;
  Matrix rho;  // m x (n m), into C ⊗_B M
};

// (C, Δ) with B acting through s.
Comodule regular_comodule(const Coalgebroid& c);

CheckReport check_comodule(const Comodule& m);

// Comodule maps M -> N: B-linear X with X ρ_N = ρ_M (id ⊗ X).
struct ComoduleHomSpace {
  LinearSystem system;
  MapSpace space;
  Matrix map(const Matrix& element) const { return system.extract(element, 0); }
};
ComoduleHomSpace comodule_hom_space(const Comodule& m, const Comodule& n);
// Adds the comodule-map conditions for block `block` (M -> N) to a system.
void require_comodule_map(LinearSystem& system, std::size_t block, const Comodule& m, const Comodule& n);

// Whether X is a comodule map M -> N.
bool is_comodule_map(const Comodule& m, const Comodule& n, const Matrix& x);

enum class CounitVerdict { iso, epi_not_mono, not_epi };
const char* to_string(CounitVerdict v);

struct CounitComparison {
  CounitVerdict verdict;
  Presentation colimit;            // on ⊕ ambient(M_i)
  Matrix comparison;               // colimit ambient -> carrier ambient
  std::optional<Matrix> witness;   // a carrier vector outside the image, or a kernel element
  std::size_t diagram_relations = 0;
};

// Colimit of the diagram of the family {φ_i: M_i -> C} (morphisms: comodule
// maps g with φ_j g = φ_i) compared with the regular comodule.  Throws
// ValidationError when a family member fails its precondition.
CounitComparison counit_comparison(const Coalgebroid& c,
                                   const std::vector<std::pair<Comodule, Matrix>>& family);

}  // namespace tannaka
