#include "tannaka/flmod.hpp"

#include <set>

namespace tannaka {

namespace {

Value power(unsigned long p, long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return Value(out);
}

Matrix zero(const Ring& r, std::size_t rows, std::size_t cols) { return Matrix(r, rows, cols); }

struct Summand {
  Matrix basis;
  Matrix retraction;
};

// A basis of rowspan(gens) with a retraction, when that span is a free direct
// summand of W_n^rank.  Rows independent mod p are chosen greedily and the
// choice is completed to a basis of W_n^rank by unit vectors.
std::optional<Summand> summand_basis(const Matrix& gens, std::size_t rank, unsigned long p) {
  const Ring& ring = gens.ring();
  const Ring fp = Ring::prime_field(p);
  auto mod_p = [&](const Matrix& m) {
    Matrix out(fp, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    }
    return out;
  };
  Matrix chosen(ring, 0, rank);
  Matrix chosen_p(fp, 0, rank);
  auto try_add = [&](const Matrix& row) {
    Matrix next = vstack(chosen_p, mod_p(row));
    if (span_size(next) > chosen_p.rows()) {
      chosen_p = next;
      chosen = vstack(chosen, row);
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < gens.rows() && chosen.rows() < rank; ++i) try_add(gens.row(i));
  const std::size_t k = chosen.rows();
  if (!in_row_span(chosen, gens)) return std::nullopt;
  for (std::size_t j = 0; j < rank && chosen.rows() < rank; ++j) try_add(Matrix::unit_row(ring, rank, j));
  auto inv = solve(chosen, Matrix::identity(ring, rank));
  if (!inv) return std::nullopt;
  return Summand{chosen.block(0, 0, k, rank), inv->block(0, 0, rank, k)};
}

}  // namespace

Ring fl_ring(unsigned long p, unsigned n) {
  if (n == 0) throw ValidationError("W_n needs n >= 1");
  if (n == 1) return Ring::prime_field(p);
  Ring::prime_field(p);  // rejects composite p
  return Ring::integers_mod(mpz_class(power(p, n)));
}

Matrix FLObject::fil_at(long i) const {
  const Ring r = ring();
  if (i < lo) return Matrix::identity(r, rank);
  if (i > hi) return zero(r, 0, rank);
  return fil[static_cast<std::size_t>(i - lo)];
}

Matrix FLObject::ret_at(long i) const {
  const Ring r = ring();
  if (i < lo) return Matrix::identity(r, rank);
  if (i > hi) return zero(r, rank, 0);
  return ret[static_cast<std::size_t>(i - lo)];
}

Matrix FLObject::phi_at(long i) const {
  const Ring r = ring();
  if (i < lo) return (ret_at(lo) * phi_at(lo)).scaled(power(p, lo - i));
  if (i > hi) return zero(r, 0, rank);
  return phi[static_cast<std::size_t>(i - lo)];
}

Matrix FLObject::projection(long i) const { return ret_at(i) * fil_at(i); }

FLObject fl_twist(unsigned long p, unsigned n, long r) {
  const Ring ring = fl_ring(p, n);
  const Matrix one = Matrix::identity(ring, 1);
  return FLObject{"M(" + std::to_string(r) + ")", p, n, 1, r, r, {one}, {one}, {one}};
}

CheckReport check_fl_object(const FLObject& x) {
  CheckReport rep;
  const Ring ring = x.ring();
  const std::size_t levels = x.hi >= x.lo ? static_cast<std::size_t>(x.hi - x.lo + 1) : 0;
  if (levels == 0 || x.fil.size() != levels || x.ret.size() != levels || x.phi.size() != levels) {
    rep.fail("fl.shape", "window and level data disagree", {{"lo", x.lo}, {"hi", x.hi}});
    return rep;
  }
  for (std::size_t l = 0; l < levels; ++l) {
    const std::size_t k = x.fil[l].rows();
    if (!(x.fil[l].ring() == ring) || x.fil[l].cols() != x.rank || x.ret[l].rows() != x.rank ||
        x.ret[l].cols() != k || x.phi[l].rows() != k || x.phi[l].cols() != x.rank) {
      rep.fail("fl.shape", "level matrices have the wrong shape", {{"level", x.lo + static_cast<long>(l)}});
    }
  }
  if (!rep.ok()) return rep;

  const Matrix id = Matrix::identity(ring, x.rank);
  if (!in_row_span(x.fil[0], id)) {
    rep.fail("fl.exhaustive", "the lowest filtration step is not all of M", {{"level", x.lo}});
  }
  for (long i = x.lo; i <= x.hi; ++i) {
    const auto l = static_cast<std::size_t>(i - x.lo);
    if (x.fil[l] * x.ret[l] != Matrix::identity(ring, x.fil[l].rows())) {
      rep.fail("fl.summand", "stored retraction does not split Fil^i", {{"level", i}});
    }
    if (i == x.hi) continue;
    if (!in_row_span(x.fil[l], x.fil[l + 1])) {
      rep.fail("fl.decreasing", "Fil^{i+1} is not contained in Fil^i", {{"level", i}});
      continue;
    }
    Matrix incl = x.fil[l + 1] * x.ret[l];
    Matrix lhs = incl * x.phi[l];
    Matrix rhs = x.phi[l + 1].scaled(Value(x.p));
    if (lhs != rhs) {
      rep.fail("fl.compatibility", "φ^i on Fil^{i+1} differs from p·φ^{i+1}",
               {{"level", i}, {"restricted", matrix_to_json(lhs)}, {"expected", matrix_to_json(rhs)}});
    }
  }
  Matrix images(ring, 0, x.rank);
  for (const auto& m : x.phi) images = vstack(images, m);
  if (!in_row_span(images, id)) {
    rep.fail("fl.span", "the images of the φ^i do not span M", {{"images", matrix_to_json(images)}});
  }
  return rep;
}

namespace {

LinearSystem hom_system(const FLObject& x, const FLObject& y) {
  const Ring ring = x.ring();
  LinearSystem sys(ring);
  const std::size_t g = sys.add_block(x.rank, y.rank);
  const Matrix id_y = Matrix::identity(ring, y.rank);
  const Matrix none = zero(ring, 0, y.rank);
  for (long i = std::min(x.lo, y.lo); i <= std::max(x.hi, y.hi); ++i) {
    const Matrix fx = x.fil_at(i);
    if (fx.rows() == 0) continue;
    const LinearSystem::Term keep{g, fx, id_y - y.projection(i)};
    sys.require(std::span(&keep, 1), none);
    const LinearSystem::Term eq[] = {{g, fx, y.ret_at(i) * y.phi_at(i)}, {g, -x.phi_at(i), id_y}};
    sys.require(eq, none);
  }
  return sys;
}

}  // namespace

FLHom fl_hom_space(const FLObject& x, const FLObject& y) {
  if (x.p != y.p || x.n != y.n) throw ValidationError("FL objects over different W_n");
  LinearSystem sys = hom_system(x, y);
  const Matrix none = zero(x.ring(), 0, y.rank);
  FLHom out{map_space(sys, std::span(&none, 1)), {}};
  for (std::size_t k = 0; k < out.space.generators.rows(); ++k) {
    out.maps.push_back(unflatten(out.space.generators.row(k), x.rank, y.rank));
  }
  return out;
}

bool is_fl_morphism(const FLObject& x, const FLObject& y, const Matrix& g) {
  if (g.rows() != x.rank || g.cols() != y.rank) return false;
  for (long i = std::min(x.lo, y.lo); i <= std::max(x.hi, y.hi); ++i) {
    const Matrix fx = x.fil_at(i);
    if (fx.rows() == 0) continue;
    const Matrix moved = fx * g;
    if (!in_row_span(y.fil_at(i), moved)) return false;
    if (moved * y.ret_at(i) * y.phi_at(i) != x.phi_at(i) * g) return false;
  }
  return true;
}

FLObject fl_tensor(const FLObject& x, const FLObject& y) {
  if (x.p != y.p || x.n != y.n) throw ValidationError("FL objects over different W_n");
  const Ring ring = x.ring();
  const std::size_t rank = x.rank * y.rank;

  // Graded pieces: K_i = P_{lo+1} ⋯ P_i (1 - P_{i+1}), and φ^i on M via the retraction.
  auto pieces = [&](const FLObject& z) {
    std::vector<Matrix> k, f;
    Matrix t = Matrix::identity(ring, z.rank);
    for (long i = z.lo; i <= z.hi; ++i) {
      if (i > z.lo) t = t * z.projection(i);
      k.push_back(t * (Matrix::identity(ring, z.rank) - z.projection(i + 1)));
      f.push_back(z.ret_at(i) * z.phi_at(i));
    }
    return std::pair{k, f};
  };
  auto [kx, fx] = pieces(x);
  auto [ky, fy] = pieces(y);

  FLObject out{x.label + "⊗" + y.label, x.p, x.n, rank, x.lo + y.lo, x.hi + y.hi, {}, {}, {}};
  for (long m = out.lo; m <= out.hi; ++m) {
    Matrix gens(ring, 0, rank);
    for (long i = x.lo; i <= x.hi; ++i) gens = vstack(gens, kron(x.fil_at(i), y.fil_at(m - i)));
    auto s = summand_basis(gens, rank, x.p);
    if (!s) throw ValidationError("Fil^" + std::to_string(m) + " of the tensor product is not a free summand");
    Matrix phi(ring, rank, rank);
    for (long i = x.lo; i <= x.hi; ++i) {
      for (long j = y.lo; j <= y.hi; ++j) {
        const auto a = static_cast<std::size_t>(i - x.lo), b = static_cast<std::size_t>(j - y.lo);
        if (i + j < m) {
          if (!(s->basis * kron(kx[a], ky[b])).is_zero()) {
            throw ValidationError("splittings disagree with the tensor filtration at level " + std::to_string(m));
          }
          continue;
        }
        phi = phi + kron(kx[a] * fx[a], ky[b] * fy[b]).scaled(power(x.p, i + j - m));
      }
    }
    out.fil.push_back(s->basis);
    out.ret.push_back(s->retraction);
    out.phi.push_back(s->basis * phi);
  }
  CheckReport rep = check_fl_object(out);
  if (!rep.ok()) throw ValidationError("tensor product fails its checks: " + rep.summary());
  return out;
}

std::optional<Matrix> fl_isomorphism(const FLObject& x, const FLObject& y, std::size_t bound) {
  if (x.rank != y.rank) return std::nullopt;
  FLHom h = fl_hom_space(x, y);
  auto elems = enumerate_elements(h.space.module, bound);
  if (!elems) return std::nullopt;
  const Presentation free_x = Presentation::free(x.ring(), x.rank);
  for (const auto& e : *elems) {
    Matrix g = linear_combination(e, h.maps, x.rank, y.rank);
    auto inv = inverse_map(g, free_x, Presentation::free(y.ring(), y.rank));
    if (inv && is_fl_morphism(y, x, *inv)) return g;
  }
  return std::nullopt;
}

LinearFunctor fl_to_category(const std::vector<FLObject>& objects) {
  if (objects.empty()) {
    // No objects pins down no W_n; use F_2 for the empty category.
    const Ring ring = Ring::prime_field(2);
    return LinearFunctor(LinearCategory(ring, {}), BAlgebra::trivial(ring));
  }
  const Ring ring = objects.front().ring();
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& o : objects) {
    if (o.p != objects.front().p || o.n != objects.front().n) throw ValidationError("FL objects over different W_n");
    if (!seen.insert(o.label).second) throw ValidationError("repeated FL label " + o.label);
    CheckReport rep = check_fl_object(o);
    if (!rep.ok()) throw ValidationError("FL object " + o.label + " fails its checks: " + rep.summary());
    labels.push_back(o.label);
  }
  const std::size_t n = objects.size();
  LinearCategory c(ring, labels);
  std::vector<FLHom> homs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      homs.push_back(fl_hom_space(objects[a], objects[b]));
      c.set_hom(a, b, homs.back().space.module);
    }
  }
  auto hom = [&](std::size_t a, std::size_t b) -> const FLHom& { return homs[a * n + b]; };
  // Coordinates of a matrix in the generators of Hom(a, b).
  auto coords = [&](std::size_t a, std::size_t b, const Matrix& m) {
    auto x = solve(hom(a, b).space.generators, flatten(m));
    if (!x) throw ValidationError("composite outside the hom space");
    return *x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        const auto& f = hom(a, b).maps;
        const auto& g = hom(b, d).maps;
        Matrix table(ring, g.size() * f.size(), c.gens(a, d));
        for (std::size_t gi = 0; gi < g.size(); ++gi) {
          for (std::size_t fi = 0; fi < f.size(); ++fi) table.set_row(gi * f.size() + fi, coords(a, d, f[fi] * g[gi]));
        }
        c.set_comp(a, b, d, table);
      }
    }
    c.set_id(a, coords(a, a, Matrix::identity(ring, objects[a].rank)));
  }
  LinearFunctor w(c, BAlgebra::trivial(ring));
  for (std::size_t a = 0; a < n; ++a) w.set_obj(a, BModule::free(w.algebra(), objects[a].rank));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) w.set_mor(a, b, hom(a, b).maps);
  }
  return w;
}

}  // namespace tannaka
