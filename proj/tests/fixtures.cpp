#include "fixtures.hpp"

namespace tannaka::fixtures {

LinearFunctor one_object(const Ring& ring, std::size_t rank) {
  LinearCategory c(ring, {"A"});
  c.set_hom(0, 0, Presentation::free(ring, 1));
  c.set_comp(0, 0, 0, Matrix::from_ints(ring, {{1}}));
  c.set_id(0, Matrix::row_vector(ring, {1}));
  LinearFunctor w(c, BAlgebra::trivial(ring));
  w.set_obj(0, BModule::free(w.algebra(), rank));
  w.set_mor(0, 0, {Matrix::identity(ring, rank)});
  return w;
}

LinearFunctor graded(const Ring& ring, const std::vector<std::string>& labels,
                     const std::vector<std::vector<int>>& grades) {
  const std::size_t n = labels.size();
  LinearCategory c(ring, labels);
  // gens[a][b] lists the pairs (i, j) with equal grades.
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> gens(
      n, std::vector<std::vector<std::pair<std::size_t, std::size_t>>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < grades[a].size(); ++i) {
        for (std::size_t j = 0; j < grades[b].size(); ++j) {
          if (grades[a][i] == grades[b][j]) gens[a][b].emplace_back(i, j);
        }
      }
      c.set_hom(a, b, Presentation::free(ring, gens[a][b].size()));
    }
  }
  auto find = [&](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
    const auto& g = gens[a][b];
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] == std::make_pair(i, j)) return k;
    }
    return g.size();
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        // g∘f for f = E_ij: a -> b and g = E_jk: b -> d is E_ik.
        for (std::size_t fi = 0; fi < gens[a][b].size(); ++fi) {
          for (std::size_t gi = 0; gi < gens[b][d].size(); ++gi) {
            auto [i, j] = gens[a][b][fi];
            auto [j2, k] = gens[b][d][gi];
            Matrix value(ring, 1, gens[a][d].size());
            if (j == j2) value.set(0, find(a, d, i, k), 1);
            c.set_composite(a, b, d, gi, fi, value);
          }
        }
      }
    }
    Matrix id(ring, 1, gens[a][a].size());
    for (std::size_t i = 0; i < grades[a].size(); ++i) id.set(0, find(a, a, i, i), 1);
    c.set_id(a, id);
  }
  LinearFunctor w(c, BAlgebra::trivial(ring));
  for (std::size_t a = 0; a < n; ++a) w.set_obj(a, BModule::free(w.algebra(), grades[a].size()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Matrix> images;
      for (auto [i, j] : gens[a][b]) {
        Matrix e(ring, grades[a].size(), grades[b].size());
        e.set(i, j, 1);
        images.push_back(std::move(e));
      }
      w.set_mor(a, b, std::move(images));
    }
  }
  return w;
}

LinearFunctor c2_lines(const Ring& ring, bool biproduct) {
  if (biproduct) return graded(ring, {"+", "-", "+-"}, {{0}, {1}, {0, 1}});
  return graded(ring, {"+", "-"}, {{0}, {1}});
}

LinearFunctor idempotent_lines(const Ring& ring) { return graded(ring, {"e", "t"}, {{0}, {1}}); }

LinearFunctor pair_groupoid(const Ring& ring) {
  LinearCategory c(ring, {"A"});
  c.set_hom(0, 0, Presentation::free(ring, 1));
  c.set_comp(0, 0, 0, Matrix::from_ints(ring, {{1}}));
  c.set_id(0, Matrix::row_vector(ring, {1}));
  LinearFunctor w(c, BAlgebra::split(ring, 2));
  w.set_obj(0, BModule::regular(w.algebra()));
  w.set_mor(0, 0, {Matrix::identity(ring, 2)});
  return w;
}

LinearFunctor nilpotent(const Ring& ring) {
  LinearCategory c(ring, {"A"});
  c.set_hom(0, 0, Presentation::free(ring, 2));
  // generators: 0 = id, 1 = n
  c.set_comp(0, 0, 0, Matrix::from_ints(ring, {{1, 0}, {0, 1}, {0, 1}, {0, 0}}));
  c.set_id(0, Matrix::row_vector(ring, {1, 0}));
  LinearFunctor w(c, BAlgebra::trivial(ring));
  w.set_obj(0, BModule::free(w.algebra(), 1));
  w.set_mor(0, 0, {Matrix::identity(ring, 1), Matrix(ring, 1, 1)});
  return w;
}

MonoidalModel monoid_lines(const Ring& ring, const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                           const std::vector<std::size_t>* inverse) {
  const std::size_t n = labels.size();
  std::vector<std::vector<int>> grades;
  for (std::size_t a = 0; a < n; ++a) grades.push_back({static_cast<int>(a)});
  LinearFunctor w = graded(ring, labels, grades);
  const LinearCategory& c = w.domain();
  const Matrix one = Matrix::from_ints(ring, {{1}});
  MonoidalData mon;
  mon.unit = unit;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mon.tensor.push_back(table[a][b]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          const std::size_t rows = c.gens(a, b) * c.gens(a2, b2);
          mon.hom_tensor.push_back(rows == 1 ? one : Matrix(ring, rows, c.gens(table[a][a2], table[b][b2])));
        }
      }
    }
  }
  mon.assoc.assign(n * n * n, one);
  mon.left_unitor.assign(n, one);
  mon.right_unitor.assign(n, one);
  FunctorMonoidalData fmon{std::vector<Matrix>(n * n, one), one};
  MonoidalModel m{w, mon, fmon, SymmetryData{std::vector<Matrix>(n * n, one)}, std::nullopt};
  if (inverse) m.dual = DualityData{*inverse, std::vector<Matrix>(n, one), std::vector<Matrix>(n, one)};
  return m;
}

MonoidalModel cyclic_lines(const Ring& ring, std::size_t order) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> inverse;
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back(order == 2 ? (a == 0 ? "+" : "-") : std::to_string(a));
    for (std::size_t b = 0; b < order; ++b) table[a][b] = (a + b) % order;
    inverse.push_back((order - a) % order);
  }
  return monoid_lines(ring, labels, table, 0, &inverse);
}

MonoidalModel idempotent_monoidal(const Ring& ring) {
  return monoid_lines(ring, {"e", "t"}, {{0, 1}, {1, 1}}, 0);
}

MonoidalModel pair_groupoid_monoidal(const Ring& ring) {
  LinearFunctor w = pair_groupoid(ring);
  const BAlgebra& b = w.algebra();
  const Matrix one = Matrix::from_ints(ring, {{1}});
  Matrix psi(ring, 4, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) psi.set_row(i * 2 + j, b.multiply(b.basis_element(i), b.basis_element(j)));
  }
  MonoidalData mon{0, {0}, {one}, {one}, {one}, {one}};
  FunctorMonoidalData fmon{{psi}, Matrix::identity(ring, 2)};
  return MonoidalModel{w, mon, fmon, SymmetryData{{one}}, DualityData{{0}, {one}, {one}}};
}

}  // namespace tannaka::fixtures

namespace tannaka::fixtures {

Coalgebroid trivial_coalgebroid(const BAlgebra& b) {
  const Ring& r = b.ring();
  const std::size_t d = b.rank();
  Matrix delta(r, d, d * d);
  for (std::size_t i = 0; i < d; ++i) delta.set_row(i, kron(b.basis_element(i), b.unit()));
  std::vector<Matrix> acts(b.mult_matrices().begin(), b.mult_matrices().end());
  return Coalgebroid{b, Presentation::free(r, d), acts, acts, delta, Matrix::identity(r, d)};
}

Coalgebroid comatrix(const Ring& r, std::size_t n) {
  BAlgebra b = BAlgebra::trivial(r);
  const std::size_t dim = n * n;
  Matrix delta(r, dim, dim * dim), eps(r, dim, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) delta.add_to(i * n + j, (i * n + k) * dim + (k * n + j), 1);
      if (i == j) eps.set(i * n + j, 0, 1);
    }
  }
  return Coalgebroid{b, Presentation::free(r, dim), {Matrix::identity(r, dim)}, {Matrix::identity(r, dim)}, delta, eps};
}

Coalgebroid grouplike(const Ring& r, std::size_t count) {
  Matrix delta(r, count, count * count), eps(r, count, 1);
  for (std::size_t g = 0; g < count; ++g) {
    delta.set(g, g * count + g, 1);
    eps.set(g, 0, 1);
  }
  return Coalgebroid{BAlgebra::trivial(r), Presentation::free(r, count), {Matrix::identity(r, count)},
                     {Matrix::identity(r, count)}, delta, eps};
}

std::pair<Comodule, Matrix> grouplike_line(const Coalgebroid& c, std::size_t g) {
  const Ring& r = c.ring();
  Comodule m{c, BModule::free(c.algebra, 1), Matrix::unit_row(r, c.ambient(), g)};
  return {m, Matrix::unit_row(r, c.ambient(), g)};
}

}  // namespace tannaka::fixtures
