#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tannaka/category.hpp"

namespace tannaka {

// The coefficient ring W_n = Z/p^n (F_p when n = 1).
Ring fl_ring(unsigned long p, unsigned n);

// A filtered F-module over W_n with σ = id.  M = W_n^rank; for i in [lo, hi],
// fil[i - lo] has rows forming a basis of Fil^i, ret[i - lo] (rank x k_i)
// satisfies fil * ret = id, and phi[i - lo] (k_i x rank) gives φ^i on those rows.
struct FLObject {
  std::string label;
  unsigned long p = 2;
  unsigned n = 1;
  std::size_t rank = 0;
  long lo = 0, hi = 0;
  std::vector<Matrix> fil, ret, phi;

  Ring ring() const { return fl_ring(p, n); }
  // Extended to all i: Fil^i = M below the window and 0 above it.
  Matrix fil_at(long i) const;
  Matrix ret_at(long i) const;
  Matrix phi_at(long i) const;
  // Projection of M onto Fil^i along the stored splitting.
  Matrix projection(long i) const;
};

// M(r): rank one, Fil^r = M, Fil^{r+1} = 0, φ^r = 1.
FLObject fl_twist(unsigned long p, unsigned n, long r);

// Window shape, exhaustiveness, decreasing split filtration, φ compatibility
// and spanning images.
CheckReport check_fl_object(const FLObject& x);

struct FLHom {
  MapSpace space;            // generators as flattened rank_x x rank_y matrices
  std::vector<Matrix> maps;  // the same generators unflattened
};
// Maps g: M_X -> M_Y with g(Fil^i) ⊆ Fil^i and φ^i_Y g = g φ^i_X.
FLHom fl_hom_space(const FLObject& x, const FLObject& y);
bool is_fl_morphism(const FLObject& x, const FLObject& y, const Matrix& g);

// Tensor product with Fil^k = Σ_{i+j=k} Fil^i ⊗ Fil^j and φ built from the
// graded pieces cut out by the stored splittings.  Throws ValidationError when
// the splittings are inconsistent or the result fails check_fl_object.
FLObject fl_tensor(const FLObject& x, const FLObject& y);

// An isomorphism X -> Y whose inverse is also a morphism, found by
// enumerating Hom(X, Y) within `bound` elements.
std::optional<Matrix> fl_isomorphism(const FLObject& x, const FLObject& y, std::size_t bound = 4096);

// The full subcategory on `objects` with the forgetful functor to W_n-modules.
// Throws ValidationError if an object fails its checks, the objects disagree
// on (p, n), or labels repeat.
LinearFunctor fl_to_category(const std::vector<FLObject>& objects);

}  // namespace tannaka
