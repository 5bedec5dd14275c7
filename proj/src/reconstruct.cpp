#include "tannaka/reconstruct.hpp"

namespace tannaka {

namespace {

Matrix identity(const Ring& r, std::size_t n) { return Matrix::identity(r, n); }

// Element of the dual of B^r with unit coordinate in component k.
Matrix dual_basis(const BAlgebra& b, std::size_t r, std::size_t k) { return free_module::basis_element(b, r, k); }

}  // namespace

Matrix CoendPresentation::insertion(std::size_t a) const {
  const std::size_t dim = fiber_dim(a);
  return simp.to_reduced.block(offset[a], 0, dim * dim, ambient());
}

Matrix CoendPresentation::insert(std::size_t a, const Matrix& x, const Matrix& phi) const {
  return kron(x, phi) * insertion(a);
}

Matrix CoendPresentation::std_map(std::size_t a, std::size_t b, const Matrix& f) const {
  return linear_combination(f, std_mor[a * functor.domain().size() + b], fiber_dim(a), fiber_dim(b));
}

CoendPresentation coend(const LinearFunctor& w) {
  CheckReport rep = check_functor(w);
  if (!rep.ok()) throw ValidationError("functor check failed: " + rep.summary());
  const LinearCategory& c = w.domain();
  const Ring& ring = w.ring();
  const BAlgebra& b = w.algebra();
  const std::size_t n = c.size(), d = b.rank();

  CoendPresentation p{w, {}, {}, 0, Presentation::free(ring, 0),
                      simplify(Presentation::free(ring, 0)), {}, {}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    const BModule& m = w.obj(a);
    const std::size_t r = m.basis->rows();
    p.rank.push_back(r);
    p.offset.push_back(p.raw_ambient);
    p.raw_ambient += (r * d) * (r * d);
    p.to_std.push_back(basis_coordinates(m, identity(ring, m.ambient())));
    Matrix from(ring, r * d, m.ambient());
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < d; ++l) from.set_row(k * d + l, m.basis->row(k) * m.action[l]);
    }
    p.from_std.push_back(std::move(from));
  }
  p.std_mor.resize(n * n);
  std::vector<Matrix> rel_parts;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      for (const auto& wf : w.mor(a, a2)) {
        Matrix sm = p.from_std[a] * wf * p.to_std[a2];
        p.std_mor[a * n + a2].push_back(sm);
        const std::size_t da = p.fiber_dim(a), db = p.fiber_dim(a2);
        // ι_{A'}(x w(f) ⊗ φ) - ι_A(x ⊗ φ∘w(f)) for x in B^{r_A}, φ in the dual of B^{r_A'}.
        Matrix dual = free_module::dual_map(b, p.rank[a], p.rank[a2], sm);
        Matrix rows(ring, da * db, p.raw_ambient);
        rows.set_block(0, p.offset[a2], kron(sm, identity(ring, db)));
        rows.set_block(0, p.offset[a], rows.block(0, p.offset[a], da * db, da * da) - kron(identity(ring, da), dual));
        rel_parts.push_back(std::move(rows));
      }
    }
  }
  p.raw = Presentation(ring, p.raw_ambient, vstack(rel_parts, ring, p.raw_ambient));
  p.simp = simplify(p.raw);
  return p;
}

bool coend_relations_hold(const CoendPresentation& p) {
  const LinearFunctor& w = p.functor;
  const std::size_t n = w.domain().size();
  const BAlgebra& b = p.algebra();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      for (const auto& sm : p.std_mor[a * n + a2]) {
        const std::size_t da = p.fiber_dim(a), db = p.fiber_dim(a2);
        Matrix dual = free_module::dual_map(b, p.rank[a], p.rank[a2], sm);
        Matrix lhs = kron(sm, identity(p.ring(), db)) * p.insertion(a2);
        Matrix rhs = kron(identity(p.ring(), da), dual) * p.insertion(a);
        if (!maps_equal(lhs, rhs, p.carrier())) return false;
      }
    }
  }
  return true;
}

Coalgebroid induced_coalgebroid(const CoendPresentation& p) {
  const Ring& ring = p.ring();
  const BAlgebra& b = p.algebra();
  const std::size_t d = b.rank(), n = p.ambient(), raw = p.raw_ambient;
  Matrix delta_raw(ring, raw, n * n), eps_raw(ring, raw, d);
  std::vector<Matrix> s_raw(d, Matrix(ring, raw, raw)), t_raw(d, Matrix(ring, raw, raw));
  for (std::size_t a = 0; a < p.functor.domain().size(); ++a) {
    const std::size_t r = p.rank[a], dim = p.fiber_dim(a), off = p.offset[a];
    const Matrix ins = p.insertion(a);
    Matrix block(ring, dim * dim, n * n);
    for (std::size_t k = 0; k < r; ++k) {
      Matrix ek = free_module::basis_element(b, r, k);
      Matrix u = kron(identity(ring, dim), dual_basis(b, r, k)) * ins;  // x -> ι(x ⊗ e_k^∨)
      Matrix v = kron(ek, identity(ring, dim)) * ins;                   // φ -> ι(e_k ⊗ φ)
      block = block + kron(u, v);
    }
    delta_raw.set_block(off, 0, block);
    for (std::size_t x = 0; x < dim; ++x) {
      for (std::size_t f = 0; f < dim; ++f) {
        eps_raw.set_row(off + x * dim + f, free_module::pairing(b, r, Matrix::unit_row(ring, dim, f),
                                                                Matrix::unit_row(ring, dim, x)));
      }
    }
    BModule fiber = BModule::free(b, r);
    for (std::size_t i = 0; i < d; ++i) {
      s_raw[i].set_block(off, off, kron(fiber.action[i], identity(ring, dim)));
      t_raw[i].set_block(off, off, kron(identity(ring, dim), fiber.action[i]));
    }
  }
  const Matrix& to = p.simp.to_reduced;
  const Matrix& from = p.simp.from_reduced;
  Coalgebroid c{b, p.carrier(), {}, {}, from * delta_raw, from * eps_raw};
  for (std::size_t i = 0; i < d; ++i) {
    c.s_action.push_back(from * s_raw[i] * to);
    c.t_action.push_back(from * t_raw[i] * to);
  }
  const Matrix& rel = p.raw.relations();
  if (!c.tensor().contains(rel * delta_raw)) throw ValidationError("Δ is not well defined on the coend relations");
  if (!(rel * eps_raw).is_zero()) throw ValidationError("ε is not well defined on the coend relations");
  for (std::size_t i = 0; i < d; ++i) {
    if (!p.raw.contains(rel * s_raw[i]) || !p.raw.contains(rel * t_raw[i])) {
      throw ValidationError("B-actions are not well defined on the coend relations");
    }
  }
  return c;
}

Comodule universal_coaction(const CoendPresentation& p, const Coalgebroid& c, std::size_t a) {
  const BModule& m = p.functor.obj(a);
  const std::size_t r = p.rank[a], n = p.ambient();
  const Matrix ins = p.insertion(a);
  Matrix rho(p.ring(), m.ambient(), n * m.ambient());
  for (std::size_t k = 0; k < r; ++k) {
    Matrix coeff = kron(p.to_std[a], dual_basis(p.algebra(), r, k)) * ins;
    rho = rho + kron(coeff, m.basis->row(k));
  }
  return Comodule{c, m, rho};
}

CheckReport check_coaction_naturality(const CoendPresentation& p, const Coalgebroid& c) {
  CheckReport report;
  const LinearFunctor& w = p.functor;
  const auto& names = w.domain().objects();
  const std::size_t n = w.domain().size();
  std::vector<Comodule> rho;
  for (std::size_t a = 0; a < n; ++a) rho.push_back(universal_coaction(p, c, a));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      for (std::size_t k = 0; k < w.mor(a, a2).size(); ++k) {
        const Matrix& wf = w.mor(a, a2)[k];
        Matrix lhs = wf * rho[a2].rho;
        Matrix rhs = rho[a].rho * kron(identity(p.ring(), c.ambient()), wf);
        if (!maps_equal(lhs, rhs, c.tensor_with(w.obj(a2)))) {
          report.fail("coaction.naturality", "(L ⊗ w(f))ρ_A != ρ_A' w(f)",
                      {{"from", names[a]}, {"to", names[a2]}, {"generator", k}});
        }
      }
    }
  }
  return report;
}

Matrix induced_map(const CoendPresentation& from, const CoendPresentation& to, const Matrix& raw) {
  return from.simp.from_reduced * raw * to.simp.to_reduced;
}

Matrix raw_transport(const CoendPresentation& from, const CoendPresentation& to,
                     const std::vector<Matrix>& eta) {
  const Ring& ring = from.ring();
  const BAlgebra& b = from.algebra();
  Matrix raw(ring, from.raw_ambient, to.raw_ambient);
  for (std::size_t a = 0; a < eta.size(); ++a) {
    const std::size_t r = from.rank[a], r2 = to.rank[a];
    auto inv = inverse_map(eta[a], Presentation::free(ring, from.fiber_dim(a)), Presentation::free(ring, to.fiber_dim(a)));
    if (!inv) throw ValidationError("transport: component is not invertible");
    Matrix dual = free_module::dual_map(b, r2, r, *inv);
    raw.set_block(from.offset[a], to.offset[a], kron(eta[a], dual));
  }
  return raw;
}

CheckReport check_coalgebroid_morphism(const Coalgebroid& c, const Coalgebroid& d, const Matrix& f) {
  CheckReport report;
  if (f.rows() != c.ambient() || f.cols() != d.ambient()) {
    report.fail("morphism.shape", "map has the wrong shape");
    return report;
  }
  if (!is_well_defined(f, c.carrier, d.carrier)) report.fail("morphism.well_defined", "relations not preserved");
  for (std::size_t i = 0; i < c.algebra.rank(); ++i) {
    if (!maps_equal(c.s_action[i] * f, f * d.s_action[i], d.carrier)) {
      report.fail("morphism.source", "F s(b) != s(b) F", {{"basis", i}});
    }
    if (!maps_equal(c.t_action[i] * f, f * d.t_action[i], d.carrier)) {
      report.fail("morphism.target", "F t(b) != t(b) F", {{"basis", i}});
    }
  }
  if (!maps_equal(c.delta * kron(f, f), f * d.delta, d.tensor())) report.fail("morphism.delta", "(F⊗F)Δ != ΔF");
  if (f * d.eps != c.eps) report.fail("morphism.eps", "εF != ε");
  return report;
}

CheckReport check_coalgebroid_isomorphism(const Coalgebroid& c, const Coalgebroid& d, const Matrix& f) {
  CheckReport report = check_coalgebroid_morphism(c, d, f);
  if (report.ok() && !is_isomorphism(f, c.carrier, d.carrier)) report.fail("morphism.bijective", "map is not bijective");
  return report;
}

LinearFunctor rebase(const LinearFunctor& w, std::size_t a, const Matrix& change) {
  LinearFunctor out = w;
  BModule m = w.obj(a);
  const std::size_t r = m.basis->rows(), d = w.algebra().rank();
  Matrix from(w.ring(), r * d, m.ambient());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < d; ++l) from.set_row(k * d + l, m.basis->row(k) * m.action[l]);
  }
  m.basis = change * from;
  std::vector<std::vector<Matrix>> saved;
  for (std::size_t x = 0; x < w.domain().size(); ++x) {
    for (std::size_t y = 0; y < w.domain().size(); ++y) saved.push_back(w.mor(x, y));
  }
  out.set_obj(a, m);
  for (std::size_t x = 0; x < w.domain().size(); ++x) {
    for (std::size_t y = 0; y < w.domain().size(); ++y) out.set_mor(x, y, saved[x * w.domain().size() + y]);
  }
  return out;
}

LinearFunctor permute_objects(const LinearFunctor& w, const std::vector<std::size_t>& perm) {
  const LinearCategory& c = w.domain();
  const std::size_t n = c.size();
  if (perm.size() != n) throw ValidationError("permutation size mismatch");
  std::vector<std::string> labels;
  for (std::size_t i : perm) labels.push_back(c.objects().at(i));
  LinearCategory pc(c.ring(), labels);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pc.set_hom(i, j, c.hom(perm[i], perm[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) pc.set_comp(i, j, k, c.comp(perm[i], perm[j], perm[k]));
    }
    pc.set_id(i, c.id(perm[i]));
  }
  LinearFunctor out(pc, w.algebra());
  for (std::size_t i = 0; i < n; ++i) out.set_obj(i, w.obj(perm[i]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set_mor(i, j, w.mor(perm[i], perm[j]));
  }
  return out;
}

Matrix raw_permutation(const CoendPresentation& from, const CoendPresentation& to,
                       const std::vector<std::size_t>& perm) {
  Matrix raw(from.ring(), from.raw_ambient, to.raw_ambient);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::size_t dim = to.fiber_dim(i);
    raw.set_block(from.offset[perm[i]], to.offset[i], identity(from.ring(), dim * dim));
  }
  return raw;
}

std::optional<Matrix> factor_cowedge(const CoendPresentation& p, const Presentation& target,
                                     const Matrix& cowedge) {
  if (cowedge.rows() != p.raw_ambient || cowedge.cols() != target.rank()) {
    throw ValidationError("cowedge has the wrong shape");
  }
  if (!is_well_defined(cowedge, p.raw, target)) return std::nullopt;
  return p.simp.from_reduced * cowedge;
}

Matrix base_change_comparison(const RingMap& h, const CoendPresentation& p, const CoendPresentation& pbc) {
  return base_change(h, p.simp.from_reduced) * pbc.simp.to_reduced;
}

Coalgebroid base_change(const RingMap& h, const Coalgebroid& c) {
  Coalgebroid out{base_change(h, c.algebra), base_change(h, c.carrier), {}, {},
                  base_change(h, c.delta), base_change(h, c.eps)};
  for (const auto& a : c.s_action) out.s_action.push_back(base_change(h, a));
  for (const auto& a : c.t_action) out.t_action.push_back(base_change(h, a));
  return out;
}

LinearFunctor base_change(const RingMap& h, const LinearFunctor& w) {
  const LinearCategory& c = w.domain();
  const std::size_t n = c.size();
  LinearCategory bc(h.target(), c.objects());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bc.set_hom(i, j, base_change(h, c.hom(i, j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) bc.set_comp(i, j, k, base_change(h, c.comp(i, j, k)));
    }
    bc.set_id(i, base_change(h, c.id(i)));
  }
  LinearFunctor out(bc, base_change(h, w.algebra()));
  for (std::size_t i = 0; i < n; ++i) out.set_obj(i, base_change(h, w.obj(i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Matrix> images;
      for (const auto& m : w.mor(i, j)) images.push_back(base_change(h, m));
      out.set_mor(i, j, std::move(images));
    }
  }
  return out;
}

}  // namespace tannaka
