#include "tannaka/monoidal.hpp"

#include <array>
#include <functional>

namespace tannaka {

namespace {

Matrix identity(const Ring& r, std::size_t n) { return Matrix::identity(r, n); }

json objs(const LinearCategory& c, std::initializer_list<std::size_t> ids) {
  json out = json::array();
  for (std::size_t i : ids) out.push_back(c.objects().at(i));
  return out;
}

// Composite of a path of hom elements, listed in the order they are applied.
Matrix chain(const LinearCategory& c, const std::vector<std::size_t>& path, const std::vector<Matrix>& maps) {
  Matrix acc = maps[0];
  for (std::size_t k = 1; k < maps.size(); ++k) acc = c.compose(path[0], path[k], path[k + 1], maps[k], acc);
  return acc;
}

// B ⊗_B M -> M and M ⊗_B B -> M on ambient kron coordinates.
Matrix left_unit_map(const BModule& m) {
  const std::size_t d = m.algebra.rank(), amb = m.ambient();
  Matrix out(m.pres.ring(), d * amb, amb);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < amb; ++j) out.set_row(i * amb + j, m.action[i].row(j));
  }
  return out;
}

Matrix right_unit_map(const BModule& m) {
  const std::size_t d = m.algebra.rank(), amb = m.ambient();
  Matrix out(m.pres.ring(), amb * d, amb);
  for (std::size_t j = 0; j < amb; ++j) {
    for (std::size_t i = 0; i < d; ++i) out.set_row(j * d + i, m.action[i].row(j));
  }
  return out;
}

bool b_linear(const Matrix& f, const BModule& src, const BModule& tgt) {
  for (std::size_t i = 0; i < src.algebra.rank(); ++i) {
    if (!maps_equal(src.action[i] * f, f * tgt.action[i], tgt.pres)) return false;
  }
  return true;
}

// Coordinates of a B-linear functional on B^r from its values on the e_k.
Matrix functional(const BAlgebra& b, std::size_t r, const std::function<Matrix(std::size_t)>& value) {
  const std::size_t d = b.rank();
  Matrix out(b.ring(), 1, r * d);
  for (std::size_t k = 0; k < r; ++k) out.set_block(0, k * d, value(k));
  return out;
}

class MonoidalChecker {
 public:
  MonoidalChecker(const LinearFunctor& w, const MonoidalData& mon, const FunctorMonoidalData& fmon)
      : w_(w), c_(w.domain()), mon_(mon), fmon_(fmon), n_(c_.size()) {}

  bool shape(CheckReport& rep) {
    const std::size_t n = n_;
    auto bad = [&](const std::string& what) {
      rep.fail("monoidal.shape", what);
      return false;
    };
    if (mon_.unit >= n) return bad("unit object out of range");
    if (mon_.tensor.size() != n * n || mon_.left_unitor.size() != n || mon_.right_unitor.size() != n ||
        mon_.assoc.size() != n * n * n || mon_.hom_tensor.size() != n * n * n * n || fmon_.psi.size() != n * n) {
      return bad("table sizes do not match the object count");
    }
    for (std::size_t t : mon_.tensor) {
      if (t >= n) return bad("tensor product out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t b2 = 0; b2 < n; ++b2) {
            const Matrix& t = mon_.hom(a, a2, b, b2);
            if (t.rows() != c_.gens(a, b) * c_.gens(a2, b2) || t.cols() != c_.gens(mon_.obj(a, a2), mon_.obj(b, b2))) {
              return bad("hom tensor table has the wrong shape");
            }
          }
        }
        for (std::size_t b = 0; b < n; ++b) {
          const Matrix& x = mon_.associator(a, a2, b);
          if (x.rows() != 1 || x.cols() != c_.gens(mon_.obj(mon_.obj(a, a2), b), mon_.obj(a, mon_.obj(a2, b)))) {
            return bad("associator has the wrong shape");
          }
        }
        const Matrix& psi = fmon_.psi[a * n + a2];
        if (psi.rows() != w_.obj(a).ambient() * w_.obj(a2).ambient() ||
            psi.cols() != w_.obj(mon_.obj(a, a2)).ambient()) {
          return bad("ψ has the wrong shape");
        }
      }
      if (mon_.left_unitor[a].cols() != c_.gens(mon_.obj(mon_.unit, a), a) ||
          mon_.right_unitor[a].cols() != c_.gens(mon_.obj(a, mon_.unit), a)) {
        return bad("unitor has the wrong shape");
      }
    }
    if (fmon_.psi0.rows() != w_.algebra().rank() || fmon_.psi0.cols() != w_.obj(mon_.unit).ambient()) {
      return bad("ψ₀ has the wrong shape");
    }
    return true;
  }

  Matrix tensor(std::size_t a, std::size_t a2, std::size_t b, std::size_t b2, const Matrix& f, const Matrix& g) const {
    return tensor_hom(c_, mon_, a, a2, b, b2, f, g);
  }

  void tensor_functor(CheckReport& rep) {
    const std::size_t n = n_;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        const std::size_t t = mon_.obj(a, a2);
        if (!c_.hom(t, t).equal(tensor(a, a2, a, a2, c_.id(a), c_.id(a2)), c_.id(t))) {
          rep.fail("tensor.identity", "id ⊗ id != id", {{"objects", objs(c_, {a, a2})}});
        }
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t b2 = 0; b2 < n; ++b2) {
            const std::size_t tb = mon_.obj(b, b2);
            const Presentation& target = c_.hom(t, tb);
            const Presentation& h1 = c_.hom(a, b);
            const Presentation& h2 = c_.hom(a2, b2);
            bool ok = true;
            for (std::size_t r = 0; r < h1.relations().rows() && ok; ++r) {
              for (std::size_t g = 0; g < h2.rank() && ok; ++g) {
                ok = target.contains(tensor(a, a2, b, b2, h1.relations().row(r), c_.generator(a2, b2, g)));
              }
            }
            for (std::size_t r = 0; r < h2.relations().rows() && ok; ++r) {
              for (std::size_t f = 0; f < h1.rank() && ok; ++f) {
                ok = target.contains(tensor(a, a2, b, b2, c_.generator(a, b, f), h2.relations().row(r)));
              }
            }
            if (!ok) rep.fail("tensor.well_defined", "⊗ does not respect hom relations", {{"from", objs(c_, {a, a2})}, {"to", objs(c_, {b, b2})}});
          }
        }
      }
    }
    // Interchange: (g ⊗ g')∘(f ⊗ f') = (g∘f) ⊗ (g'∘f') on generators.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t b2 = 0; b2 < n; ++b2) {
            for (std::size_t e = 0; e < n; ++e) {
              for (std::size_t e2 = 0; e2 < n; ++e2) {
                interchange(rep, a, a2, b, b2, e, e2);
              }
            }
          }
        }
      }
    }
  }

  void interchange(CheckReport& rep, std::size_t a, std::size_t a2, std::size_t b, std::size_t b2, std::size_t e,
                   std::size_t e2) {
    const std::size_t ta = mon_.obj(a, a2), tb = mon_.obj(b, b2), te = mon_.obj(e, e2);
    for (std::size_t f = 0; f < c_.gens(a, b); ++f) {
      for (std::size_t f2 = 0; f2 < c_.gens(a2, b2); ++f2) {
        Matrix ff = tensor(a, a2, b, b2, c_.generator(a, b, f), c_.generator(a2, b2, f2));
        for (std::size_t g = 0; g < c_.gens(b, e); ++g) {
          for (std::size_t g2 = 0; g2 < c_.gens(b2, e2); ++g2) {
            Matrix gg = tensor(b, b2, e, e2, c_.generator(b, e, g), c_.generator(b2, e2, g2));
            Matrix lhs = c_.compose(ta, tb, te, gg, ff);
            Matrix rhs = tensor(a, a2, e, e2, c_.compose(a, b, e, c_.generator(b, e, g), c_.generator(a, b, f)),
                                c_.compose(a2, b2, e2, c_.generator(b2, e2, g2), c_.generator(a2, b2, f2)));
            if (!c_.hom(ta, te).equal(lhs, rhs)) {
              rep.fail("tensor.interchange", "(g⊗g')∘(f⊗f') != (g∘f)⊗(g'∘f')",
                       {{"objects", objs(c_, {a, a2, b, b2, e, e2})}});
              return;
            }
          }
        }
      }
    }
  }

  void invertible(CheckReport& rep, const char* id, std::size_t a, std::size_t b, const Matrix& f,
                  const json& where) {
    if (!hom_inverse(c_, a, b, f)) rep.fail(id, "not invertible", where);
  }

  // Naturality of the associator in one variable at a time, and of the unitors.
  void structure_naturality(CheckReport& rep) {
    const std::size_t n = n_, u = mon_.unit;
    auto O = [&](std::size_t x, std::size_t y) { return mon_.obj(x, y); };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          invertible(rep, "associator.invertible", O(O(x, y), z), O(x, O(y, z)), mon_.associator(x, y, z),
                     {{"objects", objs(c_, {x, y, z})}});
        }
      }
      invertible(rep, "unitor.invertible", O(u, x), x, mon_.left_unitor[x], {{"object", c_.objects()[x]}, {"side", "left"}});
      invertible(rep, "unitor.invertible", O(x, u), x, mon_.right_unitor[x], {{"object", c_.objects()[x]}, {"side", "right"}});
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t k = 0; k < c_.gens(a, b); ++k) {
          const Matrix f = c_.generator(a, b, k);
          // Unitors: f∘l_a = l_b∘(id_I ⊗ f), f∘r_a = r_b∘(f ⊗ id_I).
          Matrix l1 = c_.compose(O(u, a), a, b, f, mon_.left_unitor[a]);
          Matrix l2 = c_.compose(O(u, a), O(u, b), b, mon_.left_unitor[b], tensor(u, a, u, b, c_.id(u), f));
          if (!c_.hom(O(u, a), b).equal(l1, l2)) {
            rep.fail("unitor.natural", "left unitor not natural", {{"from", c_.objects()[a]}, {"to", c_.objects()[b]}, {"generator", k}});
          }
          Matrix r1 = c_.compose(O(a, u), a, b, f, mon_.right_unitor[a]);
          Matrix r2 = c_.compose(O(a, u), O(b, u), b, mon_.right_unitor[b], tensor(a, u, b, u, f, c_.id(u)));
          if (!c_.hom(O(a, u), b).equal(r1, r2)) {
            rep.fail("unitor.natural", "right unitor not natural", {{"from", c_.objects()[a]}, {"to", c_.objects()[b]}, {"generator", k}});
          }
          for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
              for (int slot = 0; slot < 3; ++slot) assoc_natural(rep, a, b, k, y, z, slot);
            }
          }
        }
      }
    }
  }

  // a∘((f⊗g)⊗h) = (f⊗(g⊗h))∘a with the generator in position `slot`.
  void assoc_natural(CheckReport& rep, std::size_t a, std::size_t b, std::size_t k, std::size_t y, std::size_t z,
                     int slot) {
    auto O = [&](std::size_t x, std::size_t w) { return mon_.obj(x, w); };
    std::array<std::size_t, 3> src{}, tgt{};
    std::array<std::size_t, 2> others{y, z};
    for (int i = 0, o = 0; i < 3; ++i) {
      if (i == slot) {
        src[i] = a;
        tgt[i] = b;
      } else {
        src[i] = tgt[i] = others[o++];
      }
    }
    std::array<Matrix, 3> m{c_.id(src[0]), c_.id(src[1]), c_.id(src[2])};
    m[slot] = c_.generator(a, b, k);
    const auto [x0, x1, x2] = src;
    const auto [y0, y1, y2] = tgt;
    Matrix left = tensor(O(x0, x1), x2, O(y0, y1), y2, tensor(x0, x1, y0, y1, m[0], m[1]), m[2]);
    Matrix right = tensor(x0, O(x1, x2), y0, O(y1, y2), m[0], tensor(x1, x2, y1, y2, m[1], m[2]));
    Matrix lhs = c_.compose(O(O(x0, x1), x2), O(O(y0, y1), y2), O(y0, O(y1, y2)), mon_.associator(y0, y1, y2), left);
    Matrix rhs = c_.compose(O(O(x0, x1), x2), O(x0, O(x1, x2)), O(y0, O(y1, y2)), right, mon_.associator(x0, x1, x2));
    if (!c_.hom(O(O(x0, x1), x2), O(y0, O(y1, y2))).equal(lhs, rhs)) {
      rep.fail("associator.natural", "associator not natural",
               {{"source", objs(c_, {x0, x1, x2})}, {"target", objs(c_, {y0, y1, y2})}, {"generator", k}});
    }
  }

  void pentagon_triangle(CheckReport& rep) {
    const std::size_t n = n_, u = mon_.unit;
    auto O = [&](std::size_t x, std::size_t y) { return mon_.obj(x, y); };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            // ((ab)c)d -> (ab)(cd) -> a(b(cd))
            Matrix lhs = chain(c_, {O(O(O(a, b), c), d), O(O(a, b), O(c, d)), O(a, O(b, O(c, d)))},
                               {mon_.associator(O(a, b), c, d), mon_.associator(a, b, O(c, d))});
            // ((ab)c)d -> (a(bc))d -> a((bc)d) -> a(b(cd))
            Matrix rhs = chain(c_, {O(O(O(a, b), c), d), O(O(a, O(b, c)), d), O(a, O(O(b, c), d)), O(a, O(b, O(c, d)))},
                               {tensor(O(O(a, b), c), d, O(a, O(b, c)), d, mon_.associator(a, b, c), c_.id(d)),
                                mon_.associator(a, O(b, c), d),
                                tensor(a, O(O(b, c), d), a, O(b, O(c, d)), c_.id(a), mon_.associator(b, c, d))});
            if (!c_.hom(O(O(O(a, b), c), d), O(a, O(b, O(c, d)))).equal(lhs, rhs)) {
              rep.fail("monoidal.pentagon", "pentagon fails", {{"objects", objs(c_, {a, b, c, d})}});
            }
          }
        }
        // (aI)b -> a(Ib) -> ab equals r_a ⊗ id_b.
        Matrix lhs = chain(c_, {O(O(a, u), b), O(a, O(u, b)), O(a, b)},
                           {mon_.associator(a, u, b), tensor(a, O(u, b), a, b, c_.id(a), mon_.left_unitor[b])});
        Matrix rhs = tensor(O(a, u), b, a, b, mon_.right_unitor[a], c_.id(b));
        if (!c_.hom(O(O(a, u), b), O(a, b)).equal(lhs, rhs)) {
          rep.fail("monoidal.triangle", "triangle fails", {{"objects", objs(c_, {a, b})}});
        }
      }
    }
  }

  void functor_axioms(CheckReport& rep) {
    const std::size_t n = n_, u = mon_.unit;
    const BAlgebra& alg = w_.algebra();
    auto O = [&](std::size_t x, std::size_t y) { return mon_.obj(x, y); };
    auto W = [&](std::size_t a) -> const BModule& { return w_.obj(a); };
    auto psi = [&](std::size_t a, std::size_t b) -> const Matrix& { return fmon_.psi[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        BModule src = tensor_over_b(W(a), W(b));
        const BModule& tgt = W(O(a, b));
        json where{{"objects", objs(c_, {a, b})}};
        if (!is_well_defined(psi(a, b), src.pres, tgt.pres)) {
          rep.fail("functor.psi_well_defined", "ψ does not respect relations", where);
          continue;
        }
        if (!b_linear(psi(a, b), src, tgt)) rep.fail("functor.psi_linear", "ψ is not B-linear", where);
        if (!is_isomorphism(psi(a, b), src.pres, tgt.pres)) rep.fail("functor.psi_invertible", "ψ is not invertible", where);
      }
    }
    BModule bmod = BModule::free(alg, 1);
    if (!b_linear(fmon_.psi0, bmod, W(u)) || !is_isomorphism(fmon_.psi0, bmod.pres, W(u).pres)) {
      rep.fail("functor.psi0", "ψ₀ is not a B-linear isomorphism");
    }
    if (!rep.ok()) return;
    // Naturality of ψ in each variable on generators.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t k = 0; k < c_.gens(a, b); ++k) {
          const Matrix f = c_.generator(a, b, k);
          const Matrix wf = w_.map(a, b, f);
          for (std::size_t y = 0; y < n; ++y) {
            Matrix lhs = kron(wf, identity(w_.ring(), W(y).ambient())) * psi(b, y);
            Matrix rhs = psi(a, y) * w_.map(O(a, y), O(b, y), tensor(a, y, b, y, f, c_.id(y)));
            Matrix lhs2 = kron(identity(w_.ring(), W(y).ambient()), wf) * psi(y, b);
            Matrix rhs2 = psi(y, a) * w_.map(O(y, a), O(y, b), tensor(y, a, y, b, c_.id(y), f));
            if (!maps_equal(lhs, rhs, W(O(b, y)).pres) || !maps_equal(lhs2, rhs2, W(O(y, b)).pres)) {
              rep.fail("functor.psi_natural", "ψ not natural", {{"from", c_.objects()[a]}, {"to", c_.objects()[b]}, {"generator", k}, {"other", c_.objects()[y]}});
            }
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          Matrix lhs = kron(psi(a, b), identity(w_.ring(), W(c).ambient())) * psi(O(a, b), c) *
                       w_.map(O(O(a, b), c), O(a, O(b, c)), mon_.associator(a, b, c));
          Matrix rhs = kron(identity(w_.ring(), W(a).ambient()), psi(b, c)) * psi(a, O(b, c));
          if (!maps_equal(lhs, rhs, W(O(a, O(b, c))).pres)) {
            rep.fail("functor.hexagon", "ψ incompatible with the associator", {{"objects", objs(c_, {a, b, c})}});
          }
        }
      }
      Matrix l = kron(fmon_.psi0, identity(w_.ring(), W(a).ambient())) * psi(u, a) * w_.map(O(u, a), a, mon_.left_unitor[a]);
      if (!maps_equal(l, left_unit_map(W(a)), W(a).pres)) {
        rep.fail("functor.left_unit", "ψ incompatible with the left unitor", {{"object", c_.objects()[a]}});
      }
      Matrix r = kron(identity(w_.ring(), W(a).ambient()), fmon_.psi0) * psi(a, u) * w_.map(O(a, u), a, mon_.right_unitor[a]);
      if (!maps_equal(r, right_unit_map(W(a)), W(a).pres)) {
        rep.fail("functor.right_unit", "ψ incompatible with the right unitor", {{"object", c_.objects()[a]}});
      }
    }
  }

  void symmetry(CheckReport& rep, const SymmetryData& sym) {
    const std::size_t n = n_;
    auto O = [&](std::size_t x, std::size_t y) { return mon_.obj(x, y); };
    if (sym.sigma.size() != n * n) {
      rep.fail("symmetry.shape", "σ table size does not match the object count");
      return;
    }
    auto s = [&](std::size_t a, std::size_t b) -> const Matrix& { return sym.sigma[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (s(a, b).rows() != 1 || s(a, b).cols() != c_.gens(O(a, b), O(b, a))) {
          rep.fail("symmetry.shape", "σ has the wrong shape", {{"objects", objs(c_, {a, b})}});
          return;
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        json where{{"objects", objs(c_, {a, b})}};
        Matrix twice = c_.compose(O(a, b), O(b, a), O(a, b), s(b, a), s(a, b));
        if (!c_.hom(O(a, b), O(a, b)).equal(twice, c_.id(O(a, b)))) rep.fail("symmetry.involution", "σσ != id", where);
        // w(σ) is the swap of tensor factors.
        const BModule &wa = w_.obj(a), &wb = w_.obj(b);
        Matrix lhs = fmon_.psi[a * n + b] * w_.map(O(a, b), O(b, a), s(a, b));
        Matrix rhs = swap_matrix(w_.ring(), wa.ambient(), wb.ambient()) * fmon_.psi[b * n + a];
        if (!maps_equal(lhs, rhs, w_.obj(O(b, a)).pres)) rep.fail("symmetry.functor", "w(σ) is not the swap", where);
        for (std::size_t k = 0; k < c_.gens(a, b); ++k) {
          const Matrix f = c_.generator(a, b, k);
          for (std::size_t y = 0; y < n; ++y) {
            Matrix l = c_.compose(O(a, y), O(b, y), O(y, b), s(b, y), tensor(a, y, b, y, f, c_.id(y)));
            Matrix r = c_.compose(O(a, y), O(y, a), O(y, b), tensor(y, a, y, b, c_.id(y), f), s(a, y));
            if (!c_.hom(O(a, y), O(y, b)).equal(l, r)) {
              rep.fail("symmetry.natural", "σ not natural", {{"from", c_.objects()[a]}, {"to", c_.objects()[b]}, {"generator", k}, {"other", c_.objects()[y]}});
            }
          }
        }
        for (std::size_t c = 0; c < n; ++c) {
          // (ab)c -> a(bc) -> (bc)a -> b(ca)  vs  (ab)c -> (ba)c -> b(ac) -> b(ca)
          Matrix lhs2 = chain(c_, {O(O(a, b), c), O(a, O(b, c)), O(O(b, c), a), O(b, O(c, a))},
                              {mon_.associator(a, b, c), s(a, O(b, c)), mon_.associator(b, c, a)});
          Matrix rhs2 = chain(c_, {O(O(a, b), c), O(O(b, a), c), O(b, O(a, c)), O(b, O(c, a))},
                              {tensor(O(a, b), c, O(b, a), c, s(a, b), c_.id(c)), mon_.associator(b, a, c),
                               tensor(b, O(a, c), b, O(c, a), c_.id(b), s(a, c))});
          if (!c_.hom(O(O(a, b), c), O(b, O(c, a))).equal(lhs2, rhs2)) {
            rep.fail("symmetry.hexagon", "hexagon fails", {{"objects", objs(c_, {a, b, c})}});
          }
        }
      }
    }
  }

  void duality(CheckReport& rep, const DualityData& dual) {
    const std::size_t n = n_, u = mon_.unit;
    auto O = [&](std::size_t x, std::size_t y) { return mon_.obj(x, y); };
    if (dual.dual.size() != n || dual.ev.size() != n || dual.coev.size() != n) {
      rep.fail("duality.shape", "duality tables do not match the object count");
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t v = dual.dual[a];
      if (v >= n || dual.ev[a].rows() != 1 || dual.ev[a].cols() != c_.gens(O(v, a), u) || dual.coev[a].rows() != 1 ||
          dual.coev[a].cols() != c_.gens(u, O(a, v))) {
        rep.fail("duality.shape", "ev or coev has the wrong shape", {{"object", c_.objects()[a]}});
        return;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t v = dual.dual[a];
      json where{{"object", c_.objects()[a]}};
      auto li = hom_inverse(c_, O(u, a), a, mon_.left_unitor[a]);
      auto ri = hom_inverse(c_, O(v, u), v, mon_.right_unitor[v]);
      auto ai = hom_inverse(c_, O(O(v, a), v), O(v, O(a, v)), mon_.associator(v, a, v));
      if (!li || !ri || !ai) {
        rep.fail("duality.snake", "structure maps are not invertible", where);
        continue;
      }
      // a -> Ia -> (a a^∨)a -> a(a^∨ a) -> aI -> a
      Matrix right = chain(c_, {a, O(u, a), O(O(a, v), a), O(a, O(v, a)), O(a, u), a},
                           {*li, tensor(u, a, O(a, v), a, dual.coev[a], c_.id(a)), mon_.associator(a, v, a),
                            tensor(a, O(v, a), a, u, c_.id(a), dual.ev[a]), mon_.right_unitor[a]});
      if (!c_.hom(a, a).equal(right, c_.id(a))) rep.fail("duality.snake_right", "(id ⊗ ev)(coev ⊗ id) != id", where);
      // a^∨ -> a^∨ I -> a^∨(a a^∨) -> (a^∨ a)a^∨ -> I a^∨ -> a^∨
      Matrix left = chain(c_, {v, O(v, u), O(v, O(a, v)), O(O(v, a), v), O(u, v), v},
                          {*ri, tensor(v, u, v, O(a, v), c_.id(v), dual.coev[a]), *ai,
                           tensor(O(v, a), v, u, v, dual.ev[a], c_.id(v)), mon_.left_unitor[v]});
      if (!c_.hom(v, v).equal(left, c_.id(v))) rep.fail("duality.snake_left", "(ev ⊗ id)(id ⊗ coev) != id", where);
    }
  }

 private:
  const LinearFunctor& w_;
  const LinearCategory& c_;
  const MonoidalData& mon_;
  const FunctorMonoidalData& fmon_;
  std::size_t n_;
};

}  // namespace

Matrix tensor_hom(const LinearCategory& c, const MonoidalData& mon, std::size_t a, std::size_t a2, std::size_t b,
                  std::size_t b2, const Matrix& f, const Matrix& g) {
  const Matrix& table = mon.hom(a, a2, b, b2);
  if (table.rows() == 0) return Matrix(c.ring(), 1, c.gens(mon.obj(a, a2), mon.obj(b, b2)));
  return kron(f, g) * table;
}

CheckReport check_monoidal_data(const LinearFunctor& w, const MonoidalData& mon, const FunctorMonoidalData& fmon,
                                const SymmetryData* sym, const DualityData* dual) {
  CheckReport rep;
  MonoidalChecker ch(w, mon, fmon);
  if (!ch.shape(rep)) return rep;
  ch.tensor_functor(rep);
  ch.structure_naturality(rep);
  ch.pentagon_triangle(rep);
  ch.functor_axioms(rep);
  if (sym) ch.symmetry(rep, *sym);
  if (dual) ch.duality(rep, *dual);
  return rep;
}

CheckReport check_monoidal_model(const MonoidalModel& m) {
  return check_monoidal_data(m.functor, m.mon, m.fmon, m.sym ? &*m.sym : nullptr, m.dual ? &*m.dual : nullptr);
}

MonoidalModel permute_objects(const MonoidalModel& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv.at(perm[i]) = i;
  const MonoidalData& o = m.mon;
  MonoidalData mon;
  mon.unit = inv[o.unit];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mon.tensor.push_back(inv[o.obj(perm[i], perm[j])]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t j2 = 0; j2 < n; ++j2) mon.hom_tensor.push_back(o.hom(perm[i], perm[i2], perm[j], perm[j2]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) mon.assoc.push_back(o.associator(perm[i], perm[j], perm[k]));
    }
    mon.left_unitor.push_back(o.left_unitor[perm[i]]);
    mon.right_unitor.push_back(o.right_unitor[perm[i]]);
  }
  FunctorMonoidalData fmon{{}, m.fmon.psi0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) fmon.psi.push_back(m.fmon.psi[perm[i] * n + perm[j]]);
  }
  MonoidalModel out{permute_objects(m.functor, perm), mon, fmon, std::nullopt, std::nullopt};
  if (m.sym) {
    SymmetryData sym;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sym.sigma.push_back(m.sym->sigma[perm[i] * n + perm[j]]);
    }
    out.sym = sym;
  }
  if (m.dual) {
    DualityData dual;
    for (std::size_t i = 0; i < n; ++i) {
      dual.dual.push_back(inv[m.dual->dual[perm[i]]]);
      dual.ev.push_back(m.dual->ev[perm[i]]);
      dual.coev.push_back(m.dual->coev[perm[i]]);
    }
    out.dual = dual;
  }
  return out;
}

CheckReport check_bialgebroid_isomorphism(const Bialgebroid& a, const Bialgebroid& b, const Matrix& f) {
  CheckReport rep = check_coalgebroid_isomorphism(a.coalgebroid, b.coalgebroid, f);
  if (!rep.ok()) return rep;
  if (!maps_equal(a.mu * f, kron(f, f) * b.mu, b.carrier())) rep.fail("morphism.mu", "F(uv) != F(u)F(v)");
  if (!maps_equal(a.unit * f, b.unit, b.carrier())) rep.fail("morphism.unit", "F(1) != 1");
  return rep;
}

Bialgebroid induced_bialgebroid(const CoendPresentation& p, const Coalgebroid& c, const MonoidalData& mon,
                                const FunctorMonoidalData& fmon) {
  const LinearFunctor& w = p.functor;
  CheckReport rep = check_monoidal_data(w, mon, fmon);
  if (!rep.ok()) throw ValidationError("monoidal data check failed: " + rep.summary());
  const Ring& ring = p.ring();
  const BAlgebra& alg = p.algebra();
  const std::size_t n = w.domain().size(), d = alg.rank(), raw = p.raw_ambient;

  // P[a] row φ, block u: φ(e_u) ∈ B for ambient generators e_u of w(a).
  std::vector<Matrix> pair;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t dim = p.fiber_dim(a), amb = w.obj(a).ambient();
    pair.emplace_back(ring, dim, amb * d);
    for (std::size_t f = 0; f < dim; ++f) {
      for (std::size_t u = 0; u < amb; ++u) {
        pair[a].set_block(f, u * d, free_module::pairing(alg, p.rank[a], Matrix::unit_row(ring, dim, f), p.to_std[a].row(u)));
      }
    }
  }

  Matrix mu_raw(ring, raw * raw, raw);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      const std::size_t t = mon.obj(a, a2);
      const Matrix& psi = fmon.psi[a * n + a2];
      BModule src = tensor_over_b(w.obj(a), w.obj(a2));
      auto psi_inv = inverse_map(psi, src.pres, w.obj(t).pres);
      if (!psi_inv) throw ValidationError("ψ is not invertible");
      const std::size_t da = p.fiber_dim(a), db = p.fiber_dim(a2), amb2 = w.obj(a2).ambient();
      Matrix xmap = kron(p.from_std[a], p.from_std[a2]) * psi * p.to_std[t];
      // (φ ⊗ χ)∘ψ^{-1} in dual coordinates of B^{r_t}.
      std::vector<Matrix> pre;  // ψ^{-1}(e_k) on ambient kron coordinates
      for (std::size_t k = 0; k < p.rank[t]; ++k) {
        pre.push_back(free_module::basis_element(alg, p.rank[t], k) * p.from_std[t] * *psi_inv);
      }
      Matrix theta(ring, da * db, p.fiber_dim(t));
      for (std::size_t f = 0; f < da; ++f) {
        for (std::size_t g = 0; g < db; ++g) {
          theta.set_row(f * db + g, functional(alg, p.rank[t], [&](std::size_t k) {
                          Matrix acc(ring, 1, d);
                          for (std::size_t i = 0; i < pre[k].cols(); ++i) {
                            if (pre[k].at(0, i) == 0) continue;
                            Matrix pu = pair[a].block(f, (i / amb2) * d, 1, d);
                            Matrix pv = pair[a2].block(g, (i % amb2) * d, 1, d);
                            acc = acc + alg.multiply(pu, pv).scaled(pre[k].at(0, i));
                          }
                          return acc;
                        }));
        }
      }
      for (std::size_t x = 0; x < da; ++x) {
        for (std::size_t f = 0; f < da; ++f) {
          for (std::size_t y = 0; y < db; ++y) {
            for (std::size_t g = 0; g < db; ++g) {
              const std::size_t row = (p.offset[a] + x * da + f) * raw + (p.offset[a2] + y * db + g);
              mu_raw.set_block(row, p.offset[t], kron(xmap.row(x * db + y), theta.row(f * db + g)));
            }
          }
        }
      }
    }
  }

  const std::size_t u = mon.unit;
  const BModule& wu = w.obj(u);
  auto psi0_inv = inverse_map(fmon.psi0, Presentation::free(ring, d), wu.pres);
  if (!psi0_inv) throw ValidationError("ψ₀ is not invertible");
  Matrix theta0 = functional(alg, p.rank[u], [&](std::size_t k) {
    return free_module::basis_element(alg, p.rank[u], k) * p.from_std[u] * *psi0_inv;
  });
  Matrix image = fmon.psi0 * p.to_std[u];  // d x du: ψ₀(b_i) in standard coordinates
  const Matrix ins = p.insertion(u);
  BModule fiber = BModule::free(alg, p.rank[u]);
  Matrix s_map(ring, d, p.ambient()), t_map(ring, d, p.ambient());
  for (std::size_t i = 0; i < d; ++i) {
    s_map.set_row(i, kron(image.row(i), theta0) * ins);
    t_map.set_row(i, kron(alg.unit() * image, theta0 * fiber.action[i]) * ins);
  }
  Matrix unit = kron(alg.unit() * image, theta0) * ins;

  const Matrix& q = p.simp.to_reduced;
  const Matrix& from = p.simp.from_reduced;
  Matrix mu_q = mu_raw * q;
  const Matrix& rel = p.raw.relations();
  const Matrix id_raw = identity(ring, raw);
  if (!p.carrier().contains(kron(rel, id_raw) * mu_q) || !p.carrier().contains(kron(id_raw, rel) * mu_q)) {
    throw ValidationError("μ is not well defined on the coend relations");
  }
  return Bialgebroid{c, kron(from, from) * mu_q, unit, s_map, t_map, std::nullopt};
}

CheckReport check_bialgebroid(const Bialgebroid& bi, bool commutative) {
  CheckReport rep;
  const Coalgebroid& c = bi.coalgebroid;
  const Ring& ring = c.ring();
  const BAlgebra& alg = c.algebra;
  const Presentation& L = c.carrier;
  const std::size_t n = c.ambient(), d = alg.rank();
  const Matrix in = identity(ring, n);
  if (bi.mu.rows() != n * n || bi.mu.cols() != n || bi.unit.rows() != 1 || bi.unit.cols() != n ||
      bi.s_map.rows() != d || bi.t_map.rows() != d || bi.s_map.cols() != n || bi.t_map.cols() != n) {
    rep.fail("bialgebroid.shape", "structure maps have the wrong shape");
    return rep;
  }
  if (!is_well_defined(bi.mu, tensor_over_r(L, L), L)) {
    rep.fail("bialgebroid.mu_well_defined", "μ does not respect relations");
    return rep;
  }
  if (!maps_equal(kron(bi.mu, in) * bi.mu, kron(in, bi.mu) * bi.mu, L)) rep.fail("bialgebroid.associative", "μ is not associative");
  if (!maps_equal(kron(bi.unit, in) * bi.mu, in, L) || !maps_equal(kron(in, bi.unit) * bi.mu, in, L)) {
    rep.fail("bialgebroid.unital", "1 is not a two-sided unit");
  }
  if (commutative && !maps_equal(swap_matrix(ring, n, n) * bi.mu, bi.mu, L)) {
    rep.fail("bialgebroid.commutative", "μ is not commutative");
  }
  // B x B -> B multiplication table.
  Matrix mult(ring, d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) mult.set_row(i * d + j, alg.multiply(alg.basis_element(i), alg.basis_element(j)));
  }
  for (const auto& [name, map, actions] :
       {std::tuple{"source", &bi.s_map, &c.s_action}, std::tuple{"target", &bi.t_map, &c.t_action}}) {
    const Matrix& m = *map;
    if (!maps_equal(kron(m, m) * bi.mu, mult * m, L) || !maps_equal(alg.unit() * m, bi.unit, L)) {
      rep.fail("bialgebroid.algebra_map", std::string(name) + " map is not an algebra map");
    }
    for (std::size_t i = 0; i < d; ++i) {
      Matrix left(ring, n, n);
      for (std::size_t j = 0; j < n; ++j) left.set_row(j, kron(m.row(i), in.row(j)) * bi.mu);
      if (!maps_equal(left, (*actions)[i], L)) {
        rep.fail("bialgebroid.action", std::string(name) + " map does not induce the " + name + " action", {{"basis", i}});
      }
    }
  }
  if (!maps_equal(kron(bi.s_map, bi.t_map) * bi.mu, swap_matrix(ring, d, d) * kron(bi.t_map, bi.s_map) * bi.mu, L)) {
    rep.fail("bialgebroid.central", "s(b) and t(b') do not commute");
  }
  const Presentation lt = c.tensor();
  if (!maps_equal(bi.unit * c.delta, kron(bi.unit, bi.unit), lt)) rep.fail("bialgebroid.delta_unit", "Δ(1) != 1 ⊗ 1");
  if (bi.unit * c.eps != alg.unit()) rep.fail("bialgebroid.eps_unit", "ε(1) != 1");
  // Δ(uv) = Δ(u)Δ(v) factorwise.
  Matrix middle = kron(in, kron(swap_matrix(ring, n, n), in));
  Matrix mumu = kron(bi.mu, bi.mu);
  bool mult_ok = true;
  for (std::size_t x = 0; x < n && mult_ok; ++x) {
    for (std::size_t y = 0; y < n && mult_ok; ++y) {
      Matrix lhs = kron(in.row(x), in.row(y)) * bi.mu * c.delta;
      Matrix rhs = kron(c.delta.row(x), c.delta.row(y)) * middle * mumu;
      if (!lt.equal(lhs, rhs)) {
        rep.fail("bialgebroid.delta_multiplicative", "Δ(uv) != Δ(u)Δ(v)", {{"u", x}, {"v", y}});
        mult_ok = false;
      }
    }
  }
  // ε(uv) = ε(u s(ε(v))).
  Matrix lhs = bi.mu * c.eps;
  Matrix rhs = kron(in, c.eps * bi.s_map) * bi.mu * c.eps;
  if (lhs != rhs) rep.fail("bialgebroid.eps_multiplicative", "ε(uv) != ε(u s(ε(v)))");
  return rep;
}

Matrix induced_antipode(const Bialgebroid& bi, const CoendPresentation& p, const MonoidalData& mon,
                        const FunctorMonoidalData& fmon, const DualityData& dual) {
  const LinearFunctor& w = p.functor;
  const LinearCategory& cat = w.domain();
  const Ring& ring = p.ring();
  const BAlgebra& alg = p.algebra();
  const std::size_t n = cat.size(), d = alg.rank(), u = mon.unit, raw = p.raw_ambient;
  auto psi0_inv = inverse_map(fmon.psi0, Presentation::free(ring, d), w.obj(u).pres);
  if (!psi0_inv) throw ValidationError("ψ₀ is not invertible");

  std::vector<Matrix> d_std, d_inv;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t v = dual.dual[a], da = p.fiber_dim(a), m = w.obj(v).ambient();
    const std::size_t va = mon.obj(v, a);
    Matrix eval = fmon.psi[v * n + a] * w.map(va, u, dual.ev[a]) * *psi0_inv;  // (m · amb_a) x d
    // Solve D N = P: column block x holds φ -> φ(e_x).
    Matrix big_n(ring, m, da * d), big_p(ring, da, da * d);
    for (std::size_t x = 0; x < da; ++x) {
      Matrix ex = Matrix::unit_row(ring, da, x) * p.from_std[a];
      big_n.set_block(0, x * d, kron(identity(ring, m), ex) * eval);
      for (std::size_t f = 0; f < da; ++f) {
        big_p.set_block(f, x * d, free_module::pairing(alg, p.rank[a], Matrix::unit_row(ring, da, f), Matrix::unit_row(ring, da, x)));
      }
    }
    auto sol = solve(big_n, big_p);
    if (!sol) throw ValidationError("d_" + cat.objects()[a] + " does not exist");
    d_std.push_back(*sol * p.to_std[v]);
    auto inv = inverse_map(d_std[a], Presentation::free(ring, da), Presentation::free(ring, p.fiber_dim(v)));
    if (!inv) throw ValidationError("d_" + cat.objects()[a] + " is not invertible");
    d_inv.push_back(*inv);
  }

  Matrix s_raw(ring, raw, raw);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t v = dual.dual[a], da = p.fiber_dim(a);
    for (std::size_t x = 0; x < da; ++x) {
      Matrix theta = functional(alg, p.rank[v], [&](std::size_t k) {
        return free_module::pairing(alg, p.rank[a], free_module::basis_element(alg, p.rank[v], k) * d_inv[a],
                                    Matrix::unit_row(ring, da, x));
      });
      for (std::size_t f = 0; f < da; ++f) {
        s_raw.set_block(p.offset[a] + x * da + f, p.offset[v], kron(d_std[a].row(f), theta));
      }
    }
  }
  const Matrix sq = s_raw * p.simp.to_reduced;
  if (!p.carrier().contains(p.raw.relations() * sq)) throw ValidationError("S is not well defined on the coend relations");
  (void)bi;
  return p.simp.from_reduced * sq;
}

CheckReport check_antipode(const Bialgebroid& bi, const Matrix& s) {
  CheckReport rep;
  const Coalgebroid& c = bi.coalgebroid;
  const Presentation& L = c.carrier;
  const std::size_t n = c.ambient();
  if (s.rows() != n || s.cols() != n) {
    rep.fail("antipode.shape", "S has the wrong shape");
    return rep;
  }
  if (!is_well_defined(s, L, L)) {
    rep.fail("antipode.well_defined", "S does not respect relations");
    return rep;
  }
  if (!maps_equal(bi.s_map * s, bi.t_map, L)) rep.fail("antipode.source", "S∘s != t");
  if (!maps_equal(bi.t_map * s, bi.s_map, L)) rep.fail("antipode.target", "S∘t != s");
  if (!maps_equal(s * s, identity(c.ring(), n), L)) rep.fail("antipode.involution", "S∘S != id");
  const Matrix in = identity(c.ring(), n);
  if (!maps_equal(c.delta * kron(s, in) * bi.mu, c.eps * bi.t_map, L)) {
    rep.fail("antipode.convolution_left", "μ(S ⊗ id)Δ != t∘ε");
  }
  if (!maps_equal(c.delta * kron(in, s) * bi.mu, c.eps * bi.s_map, L)) {
    rep.fail("antipode.convolution_right", "μ(id ⊗ S)Δ != s∘ε");
  }
  return rep;
}

FusionOperators fusion_operators(const Bialgebroid& bi) {
  const Coalgebroid& c = bi.coalgebroid;
  const Ring& ring = c.ring();
  const std::size_t n = c.ambient();
  const Matrix in = identity(ring, n);
  FusionOperators out{kron(c.delta, in) * kron(in, bi.mu),
                      kron(c.delta, in) * kron(in, swap_matrix(ring, n, n)) * kron(bi.mu, in),
                      balanced_tensor(c.carrier, c.t_action, c.carrier, c.t_action),
                      balanced_tensor(c.carrier, c.s_action, c.carrier, c.s_action),
                      c.tensor(),
                      false,
                      false,
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      std::nullopt};
  if (!is_well_defined(out.right, out.right_source, out.target) ||
      !is_well_defined(out.left, out.left_source, out.target)) {
    throw ValidationError("fusion operators are not well defined on the chosen balancings");
  }
  out.right_kernel = injectivity_witness(out.right, out.right_source, out.target);
  out.right_cokernel = surjectivity_witness(out.right, out.target);
  out.left_kernel = injectivity_witness(out.left, out.left_source, out.target);
  out.left_cokernel = surjectivity_witness(out.left, out.target);
  out.right_bijective = !out.right_kernel && !out.right_cokernel;
  out.left_bijective = !out.left_kernel && !out.left_cokernel;
  return out;
}

}  // namespace tannaka
