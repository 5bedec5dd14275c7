#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tannaka/linalg.hpp"
#include "tannaka/report.hpp"

namespace tannaka {

// A commutative R-algebra B, free of rank d over R with basis e_0..e_{d-1}.
// mult[i] is the matrix of x -> x * e_i on coordinate rows.
class BAlgebra {
 public:
  // B = R.
  static BAlgebra trivial(const Ring& ring);
  // structure[i] is d x d with row j the coordinates of e_i * e_j.
  static BAlgebra from_structure(const Ring& ring, std::vector<Matrix> structure, Matrix unit);
  // R x ... x R (k factors) with idempotent basis.
  static BAlgebra split(const Ring& ring, std::size_t factors);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const Matrix& unit() const { return unit_; }
  const Matrix& mult_matrix(std::size_t i) const { return mult_[i]; }
  std::span<const Matrix> mult_matrices() const { return mult_; }
  // Matrix of x -> x * b.
  Matrix mult_by(const Matrix& b) const;
  Matrix multiply(const Matrix& x, const Matrix& y) const;
  Matrix basis_element(std::size_t i) const { return Matrix::unit_row(ring_, rank_, i); }
  bool is_trivial() const;

  // Commutativity, associativity and the unit law on basis triples.
  CheckReport check() const;

  bool operator==(const BAlgebra& o) const {
    return ring_ == o.ring_ && mult_ == o.mult_ && unit_ == o.unit_;
  }

 private:
  BAlgebra(Ring ring, std::size_t rank, std::vector<Matrix> mult, Matrix unit)
      : ring_(std::move(ring)), rank_(rank), mult_(std::move(mult)), unit_(std::move(unit)) {}

  Ring ring_;
  std::size_t rank_;
  std::vector<Matrix> mult_;
  Matrix unit_;
};

// The R-module R^rank / rowspan(relations).  Relations are kept in normal form.
class Presentation {
 public:
  Presentation(const Ring& ring, std::size_t rank, const Matrix& relations);
  static Presentation free(const Ring& ring, std::size_t rank);

  const Ring& ring() const { return relations_.ring(); }
  std::size_t rank() const { return rank_; }
  const Matrix& relations() const { return relations_; }

  Matrix reduce(const Matrix& v) const { return reduce_modulo(relations_, v); }
  // Every row of v is zero in the quotient.
  bool contains(const Matrix& v) const;
  bool equal(const Matrix& a, const Matrix& b) const { return contains(a - b); }
  bool is_zero_module() const;
  // Number of elements, for finite rings.
  std::optional<mpz_class> cardinality() const;
  QuotientStructure structure() const { return quotient_structure(relations_, rank_); }
  // Rank if the module is free, nullopt otherwise (fields, Z, Z/N).
  std::optional<std::size_t> free_rank() const;

  bool operator==(const Presentation& o) const { return rank_ == o.rank_ && relations_ == o.relations_; }

 private:
  std::size_t rank_;
  Matrix relations_;
};

// Maps between presentations are matrices on ambient coordinates.
bool is_well_defined(const Matrix& f, const Presentation& src, const Presentation& tgt);
bool maps_equal(const Matrix& f, const Matrix& g, const Presentation& tgt);
// A standard basis vector of the target outside image + relations, if any.
std::optional<Matrix> surjectivity_witness(const Matrix& f, const Presentation& tgt);
// A nonzero element of src mapping to zero, if any.
std::optional<Matrix> injectivity_witness(const Matrix& f, const Presentation& src,
                                          const Presentation& tgt);
bool is_isomorphism(const Matrix& f, const Presentation& src, const Presentation& tgt);
// Inverse of a bijective map (on ambient representatives), or nullopt.
std::optional<Matrix> inverse_map(const Matrix& f, const Presentation& src, const Presentation& tgt);

// Canonical representatives of every element of a module over a finite ring,
// one per class, in enumeration order.  Nothing when the ring is infinite or
// more than `bound` ambient vectors would be visited.
std::optional<std::vector<Matrix>> enumerate_elements(const Presentation& p, std::size_t bound);

// The balanced tensor product: ambient kron coordinates (i, j) -> i * right.rank() + j,
// relations from both factors plus x*a_b ⊗ y - x ⊗ y*c_b for paired actions a_b, c_b.
Presentation balanced_tensor(const Presentation& left, std::span<const Matrix> left_actions,
                             const Presentation& right, std::span<const Matrix> right_actions);
// Plain tensor over R.
Presentation tensor_over_r(const Presentation& left, const Presentation& right);

// The module span(gens) / span(trivial) presented on the rows of gens.
Presentation subquotient(const Matrix& gens, const Matrix& trivial);

// Removes generators that a unit-pivot relation expresses through the others.
struct Simplification {
  Presentation reduced;
  Matrix to_reduced;    // old ambient -> new ambient
  Matrix from_reduced;  // new ambient -> old ambient (coordinate inclusion)
  std::vector<std::size_t> kept;
};
Simplification simplify(const Presentation& p);

// A finitely presented B-module realized as an R-module with commuting action
// matrices, one per basis element of B.
struct BModule {
  BAlgebra algebra;
  Presentation pres;
  std::vector<Matrix> action;
  std::optional<Matrix> basis;  // rows form a B-basis when present

  static BModule free(const BAlgebra& algebra, std::size_t rank);
  static BModule regular(const BAlgebra& algebra) { return free(algebra, 1); }

  const Ring& ring() const { return algebra.ring(); }
  std::size_t ambient() const { return pres.rank(); }
  Matrix act(const Matrix& b) const;
  // Action matrices commute, realize the structure constants, the unit acts as
  // the identity, and relations are stable.
  CheckReport check() const;
};

// Same actions on a new presentation; the stored basis is dropped.
BModule with_presentation(const BModule& m, const Presentation& p);
BModule transport(const BModule& m, const Simplification& s);
BModule simplify(const BModule& m, Simplification* out = nullptr);

struct BLinearMap {
  BModule source;
  BModule target;
  Matrix matrix;

  // Well defined on relations and B-linear modulo target relations.
  CheckReport check() const;
};

// g after f.
BLinearMap compose(const BLinearMap& g, const BLinearMap& f);
BLinearMap identity_map(const BModule& m);
bool is_isomorphism(const BLinearMap& f);

BModule tensor_over_b(const BModule& m, const BModule& n);

struct DualModule {
  BModule dual;
  // dual ⊗_R M -> B on ambient kron coordinates, factoring through ⊗_B.
  Matrix evaluation;
};
// Requires a stored B-basis.
DualModule dual_over_b(const BModule& m);
// B-coordinates (1 x rank*d) of x with respect to the stored basis.
Matrix basis_coordinates(const BModule& m, const Matrix& x);

struct Cokernel {
  BModule module;
  Matrix projection;  // target ambient -> cokernel ambient
};
Cokernel cokernel(const BLinearMap& f);

// Freeness over a local B whose maximal ideal is generated by `maximal_ideal`
// (coordinate rows in B).  Returns a B-basis (ambient rows) when M is free,
// nullopt when not; throws UnsupportedError when the data do not describe a
// local ring.
std::optional<Matrix> is_free_over_local(const BModule& m, std::span<const Matrix> maximal_ideal);
// The standard choice for B = R: no generators over fields, {p} over Z/p^n.
std::vector<Matrix> default_maximal_ideal(const BAlgebra& b);

// Supported ring maps: identity, Z -> Z/N, Z -> F_p, Z -> Q, Z/N -> Z/M (M | N).
class RingMap {
 public:
  RingMap(Ring source, Ring target);
  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  Value apply(const Value& v) const { return target_.reduce(v); }

 private:
  Ring source_;
  Ring target_;
};

Matrix base_change(const RingMap& h, const Matrix& m);
Presentation base_change(const RingMap& h, const Presentation& p);
BAlgebra base_change(const RingMap& h, const BAlgebra& b);
BModule base_change(const RingMap& h, const BModule& m);
BLinearMap base_change(const RingMap& h, const BLinearMap& f);

// Helpers for the standard free module B^r (ambient coordinates (k, l) <-> the
// l-th B-coordinate of the k-th component).
namespace free_module {
Matrix basis_element(const BAlgebra& b, std::size_t rank, std::size_t k);
// phi(x) in B for phi in the dual of B^r and x in B^r, both as coordinates.
Matrix pairing(const BAlgebra& b, std::size_t rank, const Matrix& phi, const Matrix& x);
// Matrix of phi -> phi ∘ w for a B-linear w: B^r -> B^s given on ambient coordinates.
Matrix dual_map(const BAlgebra& b, std::size_t r, std::size_t s, const Matrix& w);
// B-linear map B^r -> B^s given by an r x s matrix with entries in B.
Matrix from_b_matrix(const BAlgebra& b, const std::vector<std::vector<Matrix>>& entries);
}  // namespace free_module

}  // namespace tannaka
