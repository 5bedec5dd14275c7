#include "doctest.h"
#include "fixtures.hpp"
#include "tannaka/monoidal.hpp"

using namespace tannaka;
namespace fx = tannaka::fixtures;

namespace {

struct Pipeline {
  CoendPresentation p;
  Coalgebroid c;
  Bialgebroid bi;
};

Pipeline run(const MonoidalModel& m) {
  CoendPresentation p = coend(m.functor);
  Coalgebroid c = induced_coalgebroid(p);
  Bialgebroid bi = induced_bialgebroid(p, c, m.mon, m.fmon);
  return {std::move(p), std::move(c), std::move(bi)};
}

bool cites(const CheckReport& rep, const std::string& id, const json& objects) {
  for (const auto& v : rep.violations()) {
    if (v.check == id && v.witness.contains("objects") && v.witness["objects"] == objects) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("coherence checks") {
  Ring f3 = Ring::prime_field(3), f5 = Ring::prime_field(5);
  CHECK(check_monoidal_model(fx::cyclic_lines(f3, 2)).ok());
  CHECK(check_monoidal_model(fx::cyclic_lines(Ring::prime_field(2), 3)).ok());
  CHECK(check_monoidal_model(fx::cyclic_lines(Ring::integers_mod(4), 2)).ok());
  CHECK(check_monoidal_model(fx::idempotent_monoidal(f3)).ok());
  CHECK(check_monoidal_model(fx::pair_groupoid_monoidal(f3)).ok());

  SUBCASE("broken pentagon") {
    MonoidalModel m = fx::cyclic_lines(f5, 2);
    // a_{-,-,-} scaled by 2.
    m.mon.assoc[(1 * 2 + 1) * 2 + 1] = Matrix::from_ints(f5, {{2}});
    CheckReport rep = check_monoidal_model(m);
    CHECK(rep.has("monoidal.pentagon"));
    CHECK(cites(rep, "monoidal.pentagon", json::array({"-", "-", "-", "-"})));
    CHECK(!cites(rep, "monoidal.pentagon", json::array({"+", "+", "+", "+"})));
  }
  SUBCASE("broken snake") {
    MonoidalModel m = fx::cyclic_lines(f5, 2);
    m.dual->ev[1] = Matrix::from_ints(f5, {{2}});
    CheckReport rep = check_monoidal_model(m);
    CHECK(rep.has("duality.snake_right"));
    CHECK(rep.has("duality.snake_left"));
    CHECK(!rep.has("monoidal.pentagon"));
  }
  SUBCASE("w(σ) must be the swap") {
    MonoidalModel m = fx::cyclic_lines(f5, 2);
    m.sym->sigma[1] = Matrix::from_ints(f5, {{4}});
    m.sym->sigma[2] = Matrix::from_ints(f5, {{4}});
    CheckReport rep = check_monoidal_model(m);
    CHECK(rep.has("symmetry.functor"));
    CHECK(!rep.has("symmetry.involution"));
  }
  SUBCASE("ψ incompatible with the associator") {
    MonoidalModel m = fx::cyclic_lines(f5, 2);
    m.fmon.psi[1] = Matrix::from_ints(f5, {{2}});
    CHECK(check_monoidal_model(m).has("functor.hexagon"));
  }
  SUBCASE("tensor of a hom relation") {
    MonoidalModel m = fx::cyclic_lines(f5, 2);
    m.mon.hom_tensor[0] = Matrix::from_ints(f5, {{3}});
    CheckReport rep = check_monoidal_model(m);
    CHECK(rep.has("tensor.identity"));
  }
}

TEST_CASE("hom inverses") {
  LinearFunctor w = fx::nilpotent(Ring::prime_field(3));
  const LinearCategory& c = w.domain();
  auto inv = hom_inverse(c, 0, 0, Matrix::row_vector(c.ring(), {2, 1}));
  REQUIRE(inv);
  // (2 + n)^{-1} = 2 - n = 2 + 2n over F_3.
  CHECK(*inv == Matrix::row_vector(c.ring(), {2, 2}));
  CHECK(!hom_inverse(c, 0, 0, Matrix::row_vector(c.ring(), {0, 1})));
}

TEST_CASE("C2 Hopf pipeline") {
  Ring f3 = Ring::prime_field(3);
  MonoidalModel m = fx::cyclic_lines(f3, 2);
  Pipeline pl = run(m);
  const Presentation& L = pl.p.carrier();
  REQUIRE(L.free_rank() == 2);
  std::vector<Matrix> x{pl.p.insertion(0), pl.p.insertion(1)};
  CHECK(check_bialgebroid(pl.bi, true).ok());
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t h = 0; h < 2; ++h) CHECK(maps_equal(kron(x[g], x[h]) * pl.bi.mu, x[(g + h) % 2], L));
  }
  CHECK(maps_equal(pl.bi.unit, x[0], L));

  Matrix s = induced_antipode(pl.bi, pl.p, m.mon, m.fmon, *m.dual);
  CHECK(check_antipode(pl.bi, s).ok());
  CHECK(maps_equal(x[1] * s, x[1], L));
  CHECK(maps_equal(pl.bi.unit * s, pl.bi.unit, L));
  CHECK(maps_equal(s * s, Matrix::identity(f3, L.rank()), L));

  FusionOperators fu = fusion_operators(pl.bi);
  CHECK(fu.right_bijective);
  CHECK(fu.left_bijective);
  CHECK(fu.hopf());
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t h = 0; h < 2; ++h) {
      CHECK(maps_equal(kron(x[g], x[h]) * fu.right, kron(x[g], x[(g + h) % 2]), fu.target));
    }
  }
}

TEST_CASE("cyclic groups of order 3 give x_g ↦ x_{-g}") {
  Ring f2 = Ring::prime_field(2);
  MonoidalModel m = fx::cyclic_lines(f2, 3);
  Pipeline pl = run(m);
  CHECK(check_bialgebroid(pl.bi, true).ok());
  Matrix s = induced_antipode(pl.bi, pl.p, m.mon, m.fmon, *m.dual);
  CHECK(check_antipode(pl.bi, s).ok());
  for (std::size_t g = 0; g < 3; ++g) {
    CHECK(maps_equal(pl.p.insertion(g) * s, pl.p.insertion((3 - g) % 3), pl.p.carrier()));
  }
  CHECK(fusion_operators(pl.bi).hopf());
}

TEST_CASE("idempotent monoid is not Hopf") {
  Ring f3 = Ring::prime_field(3);
  MonoidalModel m = fx::idempotent_monoidal(f3);
  Pipeline pl = run(m);
  CHECK(check_bialgebroid(pl.bi, true).ok());
  FusionOperators fu = fusion_operators(pl.bi);
  CHECK(!fu.right_bijective);
  CHECK(!fu.hopf());
  REQUIRE(fu.right_kernel);
  // The witness replays: nonzero in the source, zero after Φ_right.
  CHECK(!fu.right_source.contains(*fu.right_kernel));
  CHECK(fu.target.contains(*fu.right_kernel * fu.right));
  const Matrix xe = pl.p.insertion(0), xt = pl.p.insertion(1);
  CHECK(maps_equal(kron(xt, xe) * fu.right, kron(xt, xt), fu.target));
  CHECK(maps_equal(kron(xt, xt) * fu.right, kron(xt, xt), fu.target));
  // Φ_right has rank 3 on the 4-dimensional source.
  CHECK(span_size(normal_form(vstack(fu.right, fu.target.relations()))) == 3);
}

TEST_CASE("pair groupoid bialgebroid over B = R x R") {
  Ring f3 = Ring::prime_field(3);
  MonoidalModel m = fx::pair_groupoid_monoidal(f3);
  Pipeline pl = run(m);
  CheckReport rep = check_bialgebroid(pl.bi, true);
  CHECK_MESSAGE(rep.ok(), rep.summary());
  Matrix s = induced_antipode(pl.bi, pl.p, m.mon, m.fmon, *m.dual);
  CheckReport srep = check_antipode(pl.bi, s);
  CHECK_MESSAGE(srep.ok(), srep.summary());
  FusionOperators fu = fusion_operators(pl.bi);
  CHECK(fu.hopf());
}

TEST_CASE("Z/4 coefficients") {
  MonoidalModel m = fx::cyclic_lines(Ring::integers_mod(4), 2);
  Pipeline pl = run(m);
  CHECK(check_bialgebroid(pl.bi, true).ok());
  Matrix s = induced_antipode(pl.bi, pl.p, m.mon, m.fmon, *m.dual);
  CHECK(check_antipode(pl.bi, s).ok());
  CHECK(fusion_operators(pl.bi).hopf());
}

TEST_CASE("object permutation gives an isomorphic bialgebroid") {
  MonoidalModel m = fx::cyclic_lines(Ring::prime_field(2), 3);
  std::vector<std::size_t> perm{2, 0, 1};
  MonoidalModel pm = permute_objects(m, perm);
  REQUIRE(check_monoidal_model(pm).ok());
  Pipeline a = run(m), b = run(pm);
  Matrix iso = induced_map(a.p, b.p, raw_permutation(a.p, b.p, perm));
  CHECK(check_bialgebroid_isomorphism(a.bi, b.bi, iso).ok());
}

TEST_CASE("incoherent input is rejected") {
  Ring f5 = Ring::prime_field(5);
  // One object with A ⊗ A = A and w = R^2: ψ cannot be invertible.
  LinearFunctor w = fx::one_object(f5, 2);
  const Matrix one = Matrix::from_ints(f5, {{1}});
  Matrix psi(f5, 4, 2);
  psi.set(0, 0, 1);
  psi.set(3, 1, 1);
  MonoidalData mon{0, {0}, {one}, {one}, {one}, {one}};
  FunctorMonoidalData fmon{{psi}, Matrix::row_vector(f5, {1, 0})};
  CHECK(!check_monoidal_data(w, mon, fmon).ok());
  CoendPresentation p = coend(w);
  Coalgebroid c = induced_coalgebroid(p);
  CHECK_THROWS_AS(induced_bialgebroid(p, c, mon, fmon), ValidationError);
}
