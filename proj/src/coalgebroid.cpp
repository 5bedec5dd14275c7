#include "tannaka/coalgebroid.hpp"

namespace tannaka {

namespace {

Matrix identity(const Ring& r, std::size_t n) { return Matrix::identity(r, n); }

std::vector<Matrix> kron_each_left(const Ring& r, std::size_t n, const std::vector<Matrix>& acts) {
  std::vector<Matrix> out;
  for (const auto& a : acts) out.push_back(kron(identity(r, n), a));
  return out;
}

// Row (i, j) = sum_l eps[i][l] * acts[l] row j: the map x ⊗ y -> ε(x)·y.
Matrix counit_on_left(const Matrix& eps, const std::vector<Matrix>& acts, std::size_t n, std::size_t m) {
  Matrix out(eps.ring(), n * m, m);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix op = linear_combination(eps.row(i), acts, m, m);
    out.set_block(i * m, 0, op);
  }
  return out;
}

}  // namespace

Presentation Coalgebroid::tensor() const { return balanced_tensor(carrier, t_action, carrier, s_action); }

Presentation Coalgebroid::triple_tensor() const {
  Presentation p12 = tensor();
  return balanced_tensor(p12, kron_each_left(ring(), ambient(), t_action), carrier, s_action);
}

Presentation Coalgebroid::tensor_with(const BModule& m) const {
  return balanced_tensor(carrier, t_action, m.pres, m.action);
}

Matrix Coalgebroid::counit_left() const { return counit_on_left(eps, s_action, ambient(), ambient()); }

Matrix Coalgebroid::counit_right() const {
  const std::size_t n = ambient();
  Matrix out(ring(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.set_row(i * n + j, linear_combination(eps.row(j), t_action, n, n).row(i));
    }
  }
  return out;
}

CheckReport check_coalgebroid(const Coalgebroid& c) {
  CheckReport report;
  const Ring& ring = c.ring();
  const std::size_t n = c.ambient(), d = c.algebra.rank();
  if (c.delta.rows() != n || c.delta.cols() != n * n || c.eps.rows() != n || c.eps.cols() != d ||
      c.s_action.size() != d || c.t_action.size() != d) {
    report.fail("coalgebroid.shape", "structure maps have the wrong shape");
    return report;
  }
  for (const auto& v : c.source_module().check().violations()) report.fail("coalgebroid.source_action", v.message);
  for (const auto& v : c.target_module().check().violations()) report.fail("coalgebroid.target_action", v.message);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!maps_equal(c.s_action[i] * c.t_action[j], c.t_action[j] * c.s_action[i], c.carrier)) {
        report.fail("coalgebroid.actions_commute", "source and target actions do not commute", {{"i", i}, {"j", j}});
      }
    }
  }
  const Presentation cc = c.tensor();
  if (!cc.contains(c.carrier.relations() * c.delta)) {
    report.fail("coalgebroid.delta_well_defined", "Δ does not respect carrier relations");
  }
  if (!(c.carrier.relations() * c.eps).is_zero()) {
    report.fail("coalgebroid.eps_well_defined", "ε does not vanish on carrier relations");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!maps_equal(c.s_action[i] * c.delta, c.delta * kron(c.s_action[i], identity(ring, n)), cc)) {
      report.fail("coalgebroid.delta_source_linear", "Δ(s(b)x) != s(b)Δ(x)", {{"basis", i}});
    }
    if (!maps_equal(c.t_action[i] * c.delta, c.delta * kron(identity(ring, n), c.t_action[i]), cc)) {
      report.fail("coalgebroid.delta_target_linear", "Δ(t(b)x) != Δ(x)t(b)", {{"basis", i}});
    }
    if (c.s_action[i] * c.eps != c.eps * c.algebra.mult_matrix(i)) {
      report.fail("coalgebroid.eps_source_linear", "ε(s(b)x) != bε(x)", {{"basis", i}});
    }
    if (c.t_action[i] * c.eps != c.eps * c.algebra.mult_matrix(i)) {
      report.fail("coalgebroid.eps_target_linear", "ε(t(b)x) != ε(x)b", {{"basis", i}});
    }
  }
  const Presentation ccc = c.triple_tensor();
  Matrix lhs = c.delta * kron(c.delta, identity(ring, n));
  Matrix rhs = c.delta * kron(identity(ring, n), c.delta);
  for (std::size_t x = 0; x < n; ++x) {
    if (!ccc.equal(lhs.row(x), rhs.row(x))) {
      report.fail("coalgebroid.coassociativity", "(Δ⊗id)Δ != (id⊗Δ)Δ", {{"generator", x}});
    }
  }
  Matrix left = c.delta * c.counit_left();
  Matrix right = c.delta * c.counit_right();
  for (std::size_t x = 0; x < n; ++x) {
    Matrix e = Matrix::unit_row(ring, n, x);
    if (!c.carrier.equal(left.row(x), e)) report.fail("coalgebroid.counit_left", "(ε⊗id)Δ != id", {{"generator", x}});
    if (!c.carrier.equal(right.row(x), e)) report.fail("coalgebroid.counit_right", "(id⊗ε)Δ != id", {{"generator", x}});
  }
  return report;
}

Comodule regular_comodule(const Coalgebroid& c) {
  return Comodule{c, c.source_module(), c.delta};
}

CheckReport check_comodule(const Comodule& m) {
  CheckReport report;
  const Coalgebroid& c = m.coalgebroid;
  const Ring& ring = c.ring();
  const std::size_t n = c.ambient(), k = m.carrier.ambient(), d = c.algebra.rank();
  if (m.rho.rows() != k || m.rho.cols() != n * k) {
    report.fail("comodule.shape", "coaction has the wrong shape");
    return report;
  }
  for (const auto& v : m.carrier.check().violations()) report.fail("comodule.module", v.message);
  const Presentation cm = c.tensor_with(m.carrier);
  if (!cm.contains(m.carrier.pres.relations() * m.rho)) {
    report.fail("comodule.well_defined", "ρ does not respect carrier relations");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!maps_equal(m.carrier.action[i] * m.rho, m.rho * kron(c.s_action[i], identity(ring, k)), cm)) {
      report.fail("comodule.linear", "ρ(bx) != s(b)ρ(x)", {{"basis", i}});
    }
  }
  Presentation p12 = c.tensor();
  Presentation ccm = balanced_tensor(p12, kron_each_left(ring, n, c.t_action), m.carrier.pres, m.carrier.action);
  Matrix lhs = m.rho * kron(c.delta, identity(ring, k));
  Matrix rhs = m.rho * kron(identity(ring, n), m.rho);
  Matrix counit = m.rho * counit_on_left(c.eps, m.carrier.action, n, k);
  for (std::size_t x = 0; x < k; ++x) {
    if (!ccm.equal(lhs.row(x), rhs.row(x))) {
      report.fail("comodule.coassociativity", "(Δ⊗id)ρ != (id⊗ρ)ρ", {{"generator", x}});
    }
    if (!m.carrier.pres.equal(counit.row(x), Matrix::unit_row(ring, k, x))) {
      report.fail("comodule.counit", "(ε⊗id)ρ != id", {{"generator", x}});
    }
  }
  return report;
}

void require_comodule_map(LinearSystem& sys, std::size_t block, const Comodule& m, const Comodule& n) {
  const Ring& ring = m.carrier.ring();
  const Coalgebroid& c = m.coalgebroid;
  const std::size_t p = m.carrier.ambient(), q = n.carrier.ambient(), cn = c.ambient();
  using Term = LinearSystem::Term;
  {
    Term t{block, m.carrier.pres.relations(), identity(ring, q)};
    sys.require(std::span<const Term>(&t, 1), n.carrier.pres.relations());
  }
  for (std::size_t i = 0; i < c.algebra.rank(); ++i) {
    Term ts[] = {{block, m.carrier.action[i], identity(ring, q)}, {block, identity(ring, p), -n.carrier.action[i]}};
    sys.require(ts, n.carrier.pres.relations());
  }
  // X ρ_N - ρ_M (id ⊗ X)
  const std::size_t offset = sys.block_offset(block);
  Matrix coeffs(ring, sys.unknowns(), p * cn * q);
  coeffs.set_block(offset, 0, kron(identity(ring, p), n.rho));
  coeffs = coeffs - coeffs_kron_left_identity(m.rho, cn, p, q, offset, sys.unknowns());
  sys.require_raw(coeffs, c.tensor_with(n.carrier).relations());
}

ComoduleHomSpace comodule_hom_space(const Comodule& m, const Comodule& n) {
  LinearSystem sys(m.carrier.ring());
  sys.add_block(m.carrier.ambient(), n.carrier.ambient());
  require_comodule_map(sys, 0, m, n);
  std::vector<Matrix> rel{n.carrier.pres.relations()};
  MapSpace space = map_space(sys, rel);
  return ComoduleHomSpace{std::move(sys), std::move(space)};
}

bool is_comodule_map(const Comodule& m, const Comodule& n, const Matrix& x) {
  if (x.rows() != m.carrier.ambient() || x.cols() != n.carrier.ambient()) return false;
  BLinearMap f{m.carrier, n.carrier, x};
  if (!f.check().ok()) return false;
  const std::size_t cn = m.coalgebroid.ambient();
  return maps_equal(x * n.rho, m.rho * kron(identity(m.carrier.ring(), cn), x),
                    m.coalgebroid.tensor_with(n.carrier));
}

const char* to_string(CounitVerdict v) {
  switch (v) {
    case CounitVerdict::iso:
      return "iso";
    case CounitVerdict::epi_not_mono:
      return "epi_not_mono";
    case CounitVerdict::not_epi:
      return "not_epi";
  }
  return "?";
}

CounitComparison counit_comparison(const Coalgebroid& c,
                                   const std::vector<std::pair<Comodule, Matrix>>& family) {
  const Ring& ring = c.ring();
  const Comodule reg = regular_comodule(c);
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [m, phi] = family[i];
    if (!check_comodule(m).ok()) throw ValidationError("family member " + std::to_string(i) + " is not a comodule");
    if (!is_comodule_map(m, reg, phi)) {
      throw ValidationError("family member " + std::to_string(i) + " is not a comodule map into C");
    }
    offset.push_back(total);
    total += m.carrier.ambient();
  }
  std::vector<Matrix> rel_parts;
  Matrix psi(ring, total, c.ambient());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [m, phi] = family[i];
    const Matrix& r = m.carrier.pres.relations();
    Matrix placed(ring, r.rows(), total);
    placed.set_block(0, offset[i], r);
    rel_parts.push_back(std::move(placed));
    psi.set_block(offset[i], 0, phi);
  }
  std::size_t diagram_rows = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      const auto& [mi, phi_i] = family[i];
      const auto& [mj, phi_j] = family[j];
      const std::size_t p = mi.carrier.ambient(), q = mj.carrier.ambient();
      LinearSystem sys(ring);
      sys.add_block(p, q);
      require_comodule_map(sys, 0, mi, mj);
      LinearSystem::Term t{0, identity(ring, p), phi_j};
      sys.require(std::span<const LinearSystem::Term>(&t, 1), c.carrier.relations(), -phi_i);
      auto g0 = sys.particular();
      if (!g0) continue;
      // ι_j(g0 x) - ι_i(x)
      Matrix rows(ring, p, total);
      rows.set_block(0, offset[j], sys.extract(*g0, 0));
      rows.set_block(0, offset[i], rows.block(0, offset[i], p, p) - identity(ring, p));
      rel_parts.push_back(rows);
      Matrix hs = sys.solutions();
      for (std::size_t h = 0; h < hs.rows(); ++h) {
        Matrix hrows(ring, p, total);
        hrows.set_block(0, offset[j], sys.extract(hs.row(h), 0));
        rel_parts.push_back(std::move(hrows));
      }
      diagram_rows += p * (1 + hs.rows());
    }
  }
  Presentation colimit(ring, total, vstack(rel_parts, ring, total));
  CounitComparison out{CounitVerdict::iso, colimit, psi, std::nullopt, diagram_rows};
  if (auto w = surjectivity_witness(psi, c.carrier)) {
    out.verdict = CounitVerdict::not_epi;
    out.witness = *w;
  } else if (auto k = injectivity_witness(psi, colimit, c.carrier)) {
    out.verdict = CounitVerdict::epi_not_mono;
    out.witness = *k;
  }
  return out;
}

}  // namespace tannaka
