#include "tannaka/category.hpp"

namespace tannaka {

LinearCategory::LinearCategory(Ring ring, std::vector<std::string> objects)
    : ring_(std::move(ring)), objects_(std::move(objects)) {
  const std::size_t n = objects_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (objects_[i] == objects_[j]) throw ValidationError("duplicate object label '" + objects_[i] + "'");
    }
  }
  hom_.assign(n * n, Presentation::free(ring_, 0));
  comp_.assign(n * n * n, Matrix(ring_, 0, 0));
  for (std::size_t a = 0; a < n; ++a) id_.emplace_back(ring_, 1, 0);
}

std::size_t LinearCategory::index(const std::string& label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == label) return i;
  }
  throw ValidationError("unknown object '" + label + "'");
}

void LinearCategory::set_hom(std::size_t a, std::size_t b, Presentation p) {
  if (p.ring() != ring_) throw ValidationError("hom module over the wrong ring");
  hom_[a * size() + b] = std::move(p);
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Matrix& t = comp_[(x * n + y) * n + z];
        if (t.rows() != gens(y, z) * gens(x, y) || t.cols() != gens(x, z)) {
          t = Matrix(ring_, gens(y, z) * gens(x, y), gens(x, z));
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (id_[x].cols() != gens(x, x)) id_[x] = Matrix(ring_, 1, gens(x, x));
  }
}

void LinearCategory::set_comp(std::size_t a, std::size_t b, std::size_t c, Matrix table) {
  if (table.rows() != gens(b, c) * gens(a, b) || table.cols() != gens(a, c)) {
    throw ValidationError("composition table " + objects_[a] + "," + objects_[b] + "," + objects_[c] +
                          " has the wrong shape");
  }
  comp_[(a * size() + b) * size() + c] = std::move(table);
}

void LinearCategory::set_composite(std::size_t a, std::size_t b, std::size_t c, std::size_t g,
                                   std::size_t f, const Matrix& value) {
  comp_[(a * size() + b) * size() + c].set_row(g * gens(a, b) + f, value);
}

void LinearCategory::set_id(std::size_t a, Matrix element) {
  if (element.rows() != 1 || element.cols() != gens(a, a)) {
    throw ValidationError("identity of " + objects_[a] + " has the wrong shape");
  }
  id_[a] = std::move(element);
}

Matrix LinearCategory::compose(std::size_t a, std::size_t b, std::size_t c, const Matrix& g,
                               const Matrix& f) const {
  return kron(g, f) * comp(a, b, c);
}

CheckReport check_category(const LinearCategory& c) {
  CheckReport report;
  const std::size_t n = c.size();
  const Ring& ring = c.ring();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        const Matrix& t = c.comp(a, b, d);
        const json where{{"objects", {c.objects()[a], c.objects()[b], c.objects()[d]}}};
        // Relations of either factor compose to relations.
        Matrix left = kron(c.hom(b, d).relations(), Matrix::identity(ring, c.gens(a, b))) * t;
        Matrix right = kron(Matrix::identity(ring, c.gens(b, d)), c.hom(a, b).relations()) * t;
        if (!c.hom(a, d).contains(left) || !c.hom(a, d).contains(right)) {
          report.fail("category.well_defined", "composition does not respect hom relations", where);
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t f = 0; f < c.gens(a, b); ++f) {
        Matrix fe = c.generator(a, b, f);
        json where{{"from", c.objects()[a]}, {"to", c.objects()[b]}, {"generator", f}};
        if (!c.hom(a, b).equal(c.compose(a, b, b, c.id(b), fe), fe)) {
          report.fail("category.left_unit", "id∘f != f", where);
        }
        if (!c.hom(a, b).equal(c.compose(a, a, b, fe, c.id(a)), fe)) {
          report.fail("category.right_unit", "f∘id != f", where);
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t e = 0; e < n; ++e) {
          for (std::size_t f = 0; f < c.gens(a, b); ++f) {
            for (std::size_t g = 0; g < c.gens(b, d); ++g) {
              for (std::size_t h = 0; h < c.gens(d, e); ++h) {
                Matrix fe = c.generator(a, b, f), ge = c.generator(b, d, g), he = c.generator(d, e, h);
                Matrix lhs = c.compose(a, d, e, he, c.compose(a, b, d, ge, fe));
                Matrix rhs = c.compose(a, b, e, c.compose(b, d, e, he, ge), fe);
                if (!c.hom(a, e).equal(lhs, rhs)) {
                  report.fail("category.associativity", "h∘(g∘f) != (h∘g)∘f",
                              {{"objects", {c.objects()[a], c.objects()[b], c.objects()[d], c.objects()[e]}},
                               {"generators", {f, g, h}}});
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

LinearFunctor::LinearFunctor(LinearCategory domain, BAlgebra algebra)
    : domain_(std::move(domain)), algebra_(std::move(algebra)) {
  if (algebra_.ring() != domain_.ring()) throw ValidationError("functor algebra and category rings differ");
  const std::size_t n = domain_.size();
  obj_.assign(n, BModule::free(algebra_, 0));
  mor_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mor_[a * n + b].assign(domain_.gens(a, b), Matrix(ring(), 0, 0));
    }
  }
}

void LinearFunctor::set_obj(std::size_t a, BModule m) {
  if (!(m.algebra == algebra_)) throw ValidationError("fiber object over the wrong algebra");
  obj_[a] = std::move(m);
  const std::size_t n = domain_.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (auto& w : mor_[x * n + y]) {
        if (w.rows() != obj_[x].ambient() || w.cols() != obj_[y].ambient()) {
          w = Matrix(ring(), obj_[x].ambient(), obj_[y].ambient());
        }
      }
    }
  }
}

void LinearFunctor::set_mor(std::size_t a, std::size_t b, std::vector<Matrix> images) {
  if (images.size() != domain_.gens(a, b)) throw ValidationError("one image per hom generator expected");
  for (const auto& m : images) {
    if (m.rows() != obj_[a].ambient() || m.cols() != obj_[b].ambient()) {
      throw ValidationError("generator image has the wrong shape");
    }
  }
  mor_[a * domain_.size() + b] = std::move(images);
}

Matrix LinearFunctor::map(std::size_t a, std::size_t b, const Matrix& f) const {
  return linear_combination(f, mor(a, b), obj_[a].ambient(), obj_[b].ambient());
}

CheckReport check_functor(const LinearFunctor& w) {
  CheckReport report;
  const LinearCategory& c = w.domain();
  const std::size_t n = c.size();
  const auto& names = c.objects();
  for (std::size_t a = 0; a < n; ++a) {
    CheckReport m = w.obj(a).check();
    for (const auto& v : m.violations()) {
      report.fail("functor.object", v.check + ": " + v.message, {{"object", names[a]}});
    }
    if (!w.obj(a).basis) report.fail("functor.free", "fiber object has no verified B-basis", {{"object", names[a]}});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const BModule &src = w.obj(a), &tgt = w.obj(b);
      for (std::size_t k = 0; k < c.gens(a, b); ++k) {
        const json where{{"from", names[a]}, {"to", names[b]}, {"generator", k}};
        BLinearMap f{src, tgt, w.mor(a, b)[k]};
        for (const auto& v : f.check().violations()) report.fail("functor.morphism", v.check + ": " + v.message, where);
      }
      const Matrix& rel = c.hom(a, b).relations();
      for (std::size_t i = 0; i < rel.rows(); ++i) {
        if (!tgt.pres.contains(w.map(a, b, rel.row(i)))) {
          report.fail("functor.relations", "a hom relation is not sent to zero",
                      {{"from", names[a]}, {"to", names[b]}, {"relation", i}});
        }
      }
    }
    if (!maps_equal(w.map(a, a, c.id(a)), Matrix::identity(w.ring(), w.obj(a).ambient()), w.obj(a).pres)) {
      report.fail("functor.identity", "w(id) != id", {{"object", names[a]}});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t f = 0; f < c.gens(a, b); ++f) {
          for (std::size_t g = 0; g < c.gens(b, d); ++g) {
            Matrix gf = c.compose(a, b, d, c.generator(b, d, g), c.generator(a, b, f));
            Matrix lhs = w.map(a, d, gf);
            Matrix rhs = w.mor(a, b)[f] * w.mor(b, d)[g];
            if (!maps_equal(lhs, rhs, w.obj(d).pres)) {
              report.fail("functor.composition", "w(g∘f) != w(g)w(f)",
                          {{"objects", {names[a], names[b], names[d]}}, {"generators", {f, g}}});
            }
          }
        }
      }
    }
  }
  return report;
}

NatSpace nat_space(const LinearFunctor& f, const LinearFunctor& g) {
  const LinearCategory& c = f.domain();
  if (g.domain().size() != c.size() || !(f.algebra() == g.algebra())) {
    throw ValidationError("nat_space: functors have different domains or algebras");
  }
  const Ring& ring = f.ring();
  const std::size_t n = c.size();
  LinearSystem sys(ring);
  std::vector<Matrix> target_rel;
  for (std::size_t a = 0; a < n; ++a) {
    sys.add_block(f.obj(a).ambient(), g.obj(a).ambient());
    target_rel.push_back(g.obj(a).pres.relations());
  }
  using Term = LinearSystem::Term;
  for (std::size_t a = 0; a < n; ++a) {
    const BModule &fa = f.obj(a), &ga = g.obj(a);
    const std::size_t p = fa.ambient(), q = ga.ambient();
    // Well defined on relations.
    {
      Term t{a, fa.pres.relations(), Matrix::identity(ring, q)};
      sys.require(std::span<const Term>(&t, 1), ga.pres.relations());
    }
    // B-linear.
    for (std::size_t i = 0; i < f.algebra().rank(); ++i) {
      Term ts[] = {{a, fa.action[i], Matrix::identity(ring, q)}, {a, Matrix::identity(ring, p), -ga.action[i]}};
      sys.require(ts, ga.pres.relations());
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < c.gens(a, b); ++k) {
        // F(k) η_b = η_a G(k) as maps F(a) -> G(b).
        Term ts[] = {{b, f.mor(a, b)[k], Matrix::identity(ring, g.obj(b).ambient())},
                     {a, Matrix::identity(ring, f.obj(a).ambient()), -g.mor(a, b)[k]}};
        sys.require(ts, g.obj(b).pres.relations());
      }
    }
  }
  MapSpace space = map_space(sys, target_rel);
  return NatSpace{std::move(sys), std::move(space)};
}

std::optional<Matrix> hom_inverse(const LinearCategory& c, std::size_t a, std::size_t b, const Matrix& f) {
  const Ring& r = c.ring();
  const std::size_t gba = c.gens(b, a), gaa = c.gens(a, a), gbb = c.gens(b, b);
  const Matrix& rel_a = c.hom(a, a).relations();
  const Matrix& rel_b = c.hom(b, b).relations();
  // Unknowns (g, r_a, r_b) with g∘f + r_a·Rel_aa = id_a and f∘g + r_b·Rel_bb = id_b.
  Matrix m(r, gba + rel_a.rows() + rel_b.rows(), gaa + gbb);
  for (std::size_t k = 0; k < gba; ++k) {
    const Matrix g = c.generator(b, a, k);
    m.set_block(k, 0, c.compose(a, b, a, g, f));
    m.set_block(k, gaa, c.compose(b, a, b, f, g));
  }
  if (rel_a.rows() > 0) m.set_block(gba, 0, rel_a);
  if (rel_b.rows() > 0) m.set_block(gba + rel_a.rows(), gaa, rel_b);
  auto x = solve(m, hstack(c.id(a), c.id(b)));
  if (!x) return std::nullopt;
  return x->block(0, 0, 1, gba);
}

}  // namespace tannaka
