#pragma once

#include <string>
#include <vector>

#include "tannaka/linear_system.hpp"

namespace tannaka {

// A finite R-linear category.  Hom(a, b) is an R-module presented on its
// generators; composition is given on generator pairs.
class LinearCategory {
 public:
  LinearCategory(Ring ring, std::vector<std::string> objects);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  // Index of a label; throws ValidationError when absent.
  std::size_t index(const std::string& label) const;

  const Presentation& hom(std::size_t a, std::size_t b) const { return hom_[a * size() + b]; }
  std::size_t gens(std::size_t a, std::size_t b) const { return hom(a, b).rank(); }
  // Replaces Hom(a, b); resets the compositions touching it to zero.
  void set_hom(std::size_t a, std::size_t b, Presentation p);

  // comp(a, b, c) has one row per pair (g, f) of generators g: b -> c and
  // f: a -> b, at index g * gens(a, b) + f, holding g∘f in Hom(a, c).
  const Matrix& comp(std::size_t a, std::size_t b, std::size_t c) const {
    return comp_[(a * size() + b) * size() + c];
  }
  void set_comp(std::size_t a, std::size_t b, std::size_t c, Matrix table);
  // Sets g∘f for single generators.
  void set_composite(std::size_t a, std::size_t b, std::size_t c, std::size_t g, std::size_t f,
                     const Matrix& value);

  const Matrix& id(std::size_t a) const { return id_[a]; }
  void set_id(std::size_t a, Matrix element);

  // g∘f for elements g ∈ Hom(b, c), f ∈ Hom(a, b) given as coordinate rows.
  Matrix compose(std::size_t a, std::size_t b, std::size_t c, const Matrix& g, const Matrix& f) const;
  Matrix generator(std::size_t a, std::size_t b, std::size_t k) const {
    return Matrix::unit_row(ring_, gens(a, b), k);
  }

 private:
  Ring ring_;
  std::vector<std::string> objects_;
  std::vector<Presentation> hom_;
  std::vector<Matrix> comp_;
  std::vector<Matrix> id_;
};

// Two-sided inverse of f ∈ Hom(a, b), if any.
std::optional<Matrix> hom_inverse(const LinearCategory& c, std::size_t a, std::size_t b, const Matrix& f);

// Well-definedness of composition over relations, associativity on generator
// triples, and both unit laws.
CheckReport check_category(const LinearCategory& c);

// An R-linear functor into free B-modules: obj[a] carries a stored B-basis and
// mor(a, b)[k] is the B-linear matrix of the k-th generator of Hom(a, b).
class LinearFunctor {
 public:
  LinearFunctor(LinearCategory domain, BAlgebra algebra);

  const LinearCategory& domain() const { return domain_; }
  const BAlgebra& algebra() const { return algebra_; }
  const Ring& ring() const { return domain_.ring(); }

  const BModule& obj(std::size_t a) const { return obj_[a]; }
  void set_obj(std::size_t a, BModule m);
  const std::vector<Matrix>& mor(std::size_t a, std::size_t b) const {
    return mor_[a * domain_.size() + b];
  }
  void set_mor(std::size_t a, std::size_t b, std::vector<Matrix> images);
  // w(f) for an element f of Hom(a, b).
  Matrix map(std::size_t a, std::size_t b, const Matrix& f) const;

 private:
  LinearCategory domain_;
  BAlgebra algebra_;
  std::vector<BModule> obj_;
  std::vector<std::vector<Matrix>> mor_;
};

// Standard free fiber object B^rank.
inline BModule standard_free(const BAlgebra& b, std::size_t rank) { return BModule::free(b, rank); }

// Module axioms and freeness of every object, B-linearity of every generator
// image, compatibility with hom relations, composition and identities.
CheckReport check_functor(const LinearFunctor& w);

// Natural families {η_a: F(a) -> G(a)}, one unknown block per object.
struct NatSpace {
  LinearSystem system;
  MapSpace space;
  Matrix component(const Matrix& family, std::size_t a) const { return system.extract(family, a); }
};
NatSpace nat_space(const LinearFunctor& f, const LinearFunctor& g);

}  // namespace tannaka
