#pragma once

#include <optional>
#include <vector>

#include "tannaka/reconstruct.hpp"

namespace tannaka {

// Monoidal structure on a LinearCategory with n objects.  Tensor products of
// objects must again be objects; hom elements are coordinate rows.
struct MonoidalData {
  std::size_t unit = 0;
  std::vector<std::size_t> tensor;  // [a * n + b] -> a ⊗ b
  // [((a * n + a2) * n + b) * n + b2]: one row per generator pair (f, g) with
  // f: a -> b, g: a2 -> b2, at index f * gens(a2, b2) + g, holding f ⊗ g.
  std::vector<Matrix> hom_tensor;
  std::vector<Matrix> assoc;         // [(a * n + b) * n + c] ∈ Hom((ab)c, a(bc))
  std::vector<Matrix> left_unitor;   // [a] ∈ Hom(I a, a)
  std::vector<Matrix> right_unitor;  // [a] ∈ Hom(a I, a)

  std::size_t obj(std::size_t a, std::size_t b) const { return tensor[a * count() + b]; }
  std::size_t count() const { return left_unitor.size(); }
  const Matrix& hom(std::size_t a, std::size_t a2, std::size_t b, std::size_t b2) const {
    const std::size_t n = count();
    return hom_tensor[((a * n + a2) * n + b) * n + b2];
  }
  const Matrix& associator(std::size_t a, std::size_t b, std::size_t c) const {
    return assoc[(a * count() + b) * count() + c];
  }
};

// ψ_{a,b}: w(a) ⊗_B w(b) -> w(a ⊗ b) on ambient kron coordinates, and
// ψ₀: B -> w(I).
struct FunctorMonoidalData {
  std::vector<Matrix> psi;  // [a * n + b]
  Matrix psi0;
};

struct SymmetryData {
  std::vector<Matrix> sigma;  // [a * n + b] ∈ Hom(a b, b a)
};

struct DualityData {
  std::vector<std::size_t> dual;
  std::vector<Matrix> ev;    // [a] ∈ Hom(a^∨ a, I)
  std::vector<Matrix> coev;  // [a] ∈ Hom(I, a a^∨)
};

// Everything needed for the Hopf pipeline.
struct MonoidalModel {
  LinearFunctor functor;
  MonoidalData mon;
  FunctorMonoidalData fmon;
  std::optional<SymmetryData> sym;
  std::optional<DualityData> dual;
};

// f ⊗ g for elements f ∈ Hom(a, b), g ∈ Hom(a2, b2).
Matrix tensor_hom(const LinearCategory& c, const MonoidalData& mon, std::size_t a, std::size_t a2,
                  std::size_t b, std::size_t b2, const Matrix& f, const Matrix& g);

// Tensor bifunctoriality, naturality and invertibility of a, l, r, pentagon,
// triangle, the strong-monoidal axioms for ψ, and (when given) the symmetry
// and duality axioms.  Failures cite the objects involved.
CheckReport check_monoidal_data(const LinearFunctor& w, const MonoidalData& mon, const FunctorMonoidalData& fmon,
                                const SymmetryData* sym = nullptr, const DualityData* dual = nullptr);
CheckReport check_monoidal_model(const MonoidalModel& m);

// The same data with objects reordered so that new object i is old object perm[i].
MonoidalModel permute_objects(const MonoidalModel& m, const std::vector<std::size_t>& perm);

struct Bialgebroid {
  Coalgebroid coalgebroid;
  Matrix mu;      // n^2 x n on L ⊗_R L
  Matrix unit;    // 1 x n
  Matrix s_map;   // d x n, b -> s(b)
  Matrix t_map;   // d x n, b -> t(b)
  std::optional<Matrix> antipode;

  std::size_t ambient() const { return coalgebroid.ambient(); }
  const Presentation& carrier() const { return coalgebroid.carrier; }
};

// μ(ι_A(x ⊗ φ), ι_A'(y ⊗ χ)) = ι_{AA'}(ψ(x ⊗ y) ⊗ (φ ⊗ χ)∘ψ^{-1}) with unit
// ι_I(ψ₀(1) ⊗ ψ₀^{-1}).  Throws ValidationError on incoherent data or when μ
// is not well defined on the coend relations.
Bialgebroid induced_bialgebroid(const CoendPresentation& p, const Coalgebroid& c, const MonoidalData& mon,
                                const FunctorMonoidalData& fmon);

// Coalgebroid isomorphism that also preserves μ and the unit.
CheckReport check_bialgebroid_isomorphism(const Bialgebroid& a, const Bialgebroid& b, const Matrix& f);

// Associativity, unit, s and t as central algebra maps, multiplicativity of
// Δ and ε; commutativity of μ when `commutative`.
CheckReport check_bialgebroid(const Bialgebroid& bi, bool commutative = false);

// S(ι_A(x ⊗ φ)) = ι_{A^∨}(d_A(φ) ⊗ ev_x∘d_A^{-1}), where d_A: w(A)^∨ -> w(A^∨)
// is solved from ψ₀^{-1} w(ev_A) ψ(d_A(φ) ⊗ x) = φ(x).  Throws ValidationError
// when some d_A is not invertible or S is not well defined.
Matrix induced_antipode(const Bialgebroid& bi, const CoendPresentation& p, const MonoidalData& mon,
                        const FunctorMonoidalData& fmon, const DualityData& dual);

// S∘s = t, S∘t = s, S∘S = id, μ(S ⊗ id)Δ = t∘ε and μ(id ⊗ S)Δ = s∘ε.
CheckReport check_antipode(const Bialgebroid& bi, const Matrix& s);

struct FusionOperators {
  Matrix right;  // u ⊗ v -> u_(1) ⊗ u_(2) v
  Matrix left;   // u ⊗ v -> u_(1) v ⊗ u_(2)
  Presentation right_source, left_source, target;
  bool right_bijective = false;
  bool left_bijective = false;
  std::optional<Matrix> right_kernel, right_cokernel, left_kernel, left_cokernel;
  bool hopf() const { return right_bijective && left_bijective; }
};

// Φ_right on L ⊗ L balanced (t, t), Φ_left on (s, s); both land in the (t, s)
// balanced tensor where Δ lives.
FusionOperators fusion_operators(const Bialgebroid& bi);

}  // namespace tannaka
