#include "tannaka/module.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tannaka {

// ---------------------------------------------------------------- BAlgebra

BAlgebra BAlgebra::trivial(const Ring& ring) {
  return BAlgebra(ring, 1, {Matrix::identity(ring, 1)}, Matrix::row_vector(ring, {1}));
}

BAlgebra BAlgebra::from_structure(const Ring& ring, std::vector<Matrix> structure, Matrix unit) {
  const std::size_t d = structure.size();
  if (unit.rows() != 1 || unit.cols() != d) throw ValidationError("algebra unit must be 1 x rank");
  for (const auto& s : structure) {
    if (s.rows() != d || s.cols() != d) throw ValidationError("structure constants must be rank x rank x rank");
  }
  // mult[i] row j = e_j * e_i = structure[j] row i.
  std::vector<Matrix> mult(d, Matrix(ring, d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) mult[i].set(j, k, structure[j].at(i, k));
    }
  }
  return BAlgebra(ring, d, std::move(mult), std::move(unit));
}

BAlgebra BAlgebra::split(const Ring& ring, std::size_t factors) {
  std::vector<Matrix> structure;
  for (std::size_t i = 0; i < factors; ++i) {
    Matrix s(ring, factors, factors);
    s.set(i, i, 1);
    structure.push_back(std::move(s));
  }
  Matrix unit(ring, 1, factors);
  for (std::size_t i = 0; i < factors; ++i) unit.set(0, i, 1);
  return from_structure(ring, std::move(structure), std::move(unit));
}

Matrix BAlgebra::mult_by(const Matrix& b) const {
  return linear_combination(b, mult_, rank_, rank_);
}

Matrix BAlgebra::multiply(const Matrix& x, const Matrix& y) const { return x * mult_by(y); }

bool BAlgebra::is_trivial() const {
  return rank_ == 1 && unit_ == Matrix::row_vector(ring_, {1}) && mult_[0] == Matrix::identity(ring_, 1);
}

CheckReport BAlgebra::check() const {
  CheckReport report;
  for (std::size_t i = 0; i < rank_; ++i) {
    Matrix ei = basis_element(i);
    if (multiply(unit_, ei) != ei) report.fail("algebra.unit", "u * e_i != e_i", {{"i", i}});
    for (std::size_t j = 0; j < rank_; ++j) {
      Matrix ej = basis_element(j);
      if (multiply(ei, ej) != multiply(ej, ei)) {
        report.fail("algebra.commutativity", "e_i e_j != e_j e_i", {{"i", i}, {"j", j}});
      }
      for (std::size_t k = 0; k < rank_; ++k) {
        Matrix ek = basis_element(k);
        if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek))) {
          report.fail("algebra.associativity", "(e_i e_j) e_k != e_i (e_j e_k)",
                      {{"i", i}, {"j", j}, {"k", k}});
        }
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ Presentation

Presentation::Presentation(const Ring& ring, std::size_t rank, const Matrix& relations)
    : rank_(rank), relations_(ring, 0, rank) {
  if (relations.cols() != rank) {
    throw ValidationError("relations have " + std::to_string(relations.cols()) + " columns, expected " +
                          std::to_string(rank));
  }
  relations_ = normal_form(relations);
}

Presentation Presentation::free(const Ring& ring, std::size_t rank) {
  return Presentation(ring, rank, Matrix(ring, 0, rank));
}

bool Presentation::contains(const Matrix& v) const {
  if (v.cols() != rank_) throw ValidationError("element width does not match module rank");
  return reduce(v).is_zero();
}

std::optional<std::vector<Matrix>> enumerate_elements(const Presentation& p, std::size_t bound) {
  const Ring& r = p.ring();
  if (!r.is_finite()) return std::nullopt;
  mpz_class total = 1;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    total *= r.modulus();
    if (total > bound) return std::nullopt;
  }
  std::vector<Matrix> out;
  std::set<std::vector<std::string>> seen;
  std::vector<mpz_class> digits(p.rank(), 0);
  for (mpz_class k = 0; k < total; ++k) {
    Matrix v(r, 1, p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) v.set(0, i, Value(digits[i]));
    Matrix c = reduce_modulo(p.relations(), v);
    if (seen.insert(c.to_strings().at(0)).second) out.push_back(std::move(c));
    for (std::size_t i = p.rank(); i-- > 0;) {
      if (++digits[i] < r.modulus()) break;
      digits[i] = 0;
    }
  }
  return out;
}

bool Presentation::is_zero_module() const {
  return !surjectivity_witness(Matrix(ring(), 0, rank_), *this).has_value();
}

std::optional<mpz_class> Presentation::cardinality() const {
  if (!ring().is_finite()) return std::nullopt;
  QuotientStructure s = structure();
  mpz_class total = 1;
  for (std::size_t i = 0; i < s.free_rank; ++i) total *= ring().modulus();
  for (const auto& t : s.torsion) total *= t;
  return total;
}

std::optional<std::size_t> Presentation::free_rank() const {
  QuotientStructure s = structure();
  if (!s.torsion.empty()) return std::nullopt;
  return s.free_rank;
}

bool is_well_defined(const Matrix& f, const Presentation& src, const Presentation& tgt) {
  if (f.rows() != src.rank() || f.cols() != tgt.rank()) throw ValidationError("map shape mismatch");
  return tgt.contains(src.relations() * f);
}

bool maps_equal(const Matrix& f, const Matrix& g, const Presentation& tgt) {
  return tgt.contains(f - g);
}

std::optional<Matrix> surjectivity_witness(const Matrix& f, const Presentation& tgt) {
  Matrix span = normal_form(vstack(f, tgt.relations()));
  for (std::size_t j = 0; j < tgt.rank(); ++j) {
    Matrix e = Matrix::unit_row(tgt.ring(), tgt.rank(), j);
    if (!reduce_modulo(span, e).is_zero()) return e;
  }
  return std::nullopt;
}

std::optional<Matrix> injectivity_witness(const Matrix& f, const Presentation& src,
                                          const Presentation& tgt) {
  Matrix k = kernel(vstack(f, tgt.relations()));
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Matrix y = k.block(i, 0, 1, src.rank());
    if (!src.contains(y)) return src.reduce(y);
  }
  return std::nullopt;
}

bool is_isomorphism(const Matrix& f, const Presentation& src, const Presentation& tgt) {
  return is_well_defined(f, src, tgt) && !surjectivity_witness(f, tgt) &&
         !injectivity_witness(f, src, tgt);
}

std::optional<Matrix> inverse_map(const Matrix& f, const Presentation& src, const Presentation& tgt) {
  if (!is_isomorphism(f, src, tgt)) return std::nullopt;
  Matrix stacked = vstack(f, tgt.relations());
  auto x = solve(stacked, Matrix::identity(tgt.ring(), tgt.rank()));
  if (!x) return std::nullopt;
  return x->block(0, 0, tgt.rank(), src.rank());
}

Presentation balanced_tensor(const Presentation& left, std::span<const Matrix> left_actions,
                             const Presentation& right, std::span<const Matrix> right_actions) {
  if (left_actions.size() != right_actions.size()) throw ValidationError("balanced tensor: action count mismatch");
  const Ring& ring = left.ring();
  const std::size_t m = left.rank(), n = right.rank();
  std::vector<Matrix> parts;
  parts.push_back(kron(left.relations(), Matrix::identity(ring, n)));
  parts.push_back(kron(Matrix::identity(ring, m), right.relations()));
  for (std::size_t b = 0; b < left_actions.size(); ++b) {
    parts.push_back(kron(left_actions[b], Matrix::identity(ring, n)) -
                    kron(Matrix::identity(ring, m), right_actions[b]));
  }
  return Presentation(ring, m * n, vstack(parts, ring, m * n));
}

Presentation tensor_over_r(const Presentation& left, const Presentation& right) {
  return balanced_tensor(left, {}, right, {});
}

Presentation subquotient(const Matrix& gens, const Matrix& trivial) {
  const Ring& ring = gens.ring();
  Matrix k = kernel(vstack(gens, trivial));
  return Presentation(ring, gens.rows(), k.block(0, 0, k.rows(), gens.rows()));
}

Simplification simplify(const Presentation& p) {
  const Ring& ring = p.ring();
  const Matrix& h = p.relations();
  const std::size_t m = p.rank();
  std::vector<long> unit_row_at(m, -1);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (h.at(i, j) == 0) continue;
      if (h.at(i, j) == 1) unit_row_at[j] = static_cast<long>(i);
      break;
    }
  }
  std::vector<std::size_t> kept;
  std::vector<std::size_t> new_index(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (unit_row_at[j] < 0) {
      new_index[j] = kept.size();
      kept.push_back(j);
    }
  }
  const std::size_t k = kept.size();
  Matrix to(ring, m, k), from(ring, k, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (unit_row_at[j] < 0) {
      to.set(j, new_index[j], 1);
      from.set(new_index[j], j, 1);
    } else {
      for (std::size_t c = 0; c < k; ++c) to.set(j, c, ring.neg(h.at(unit_row_at[j], kept[c])));
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool unit_pivot = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (h.at(i, j) == 0) continue;
      unit_pivot = h.at(i, j) == 1;
      break;
    }
    if (!unit_pivot) rest.push_back(i);
  }
  Matrix rel = h.select_rows(rest).select_cols(kept);
  return Simplification{Presentation(ring, k, rel), std::move(to), std::move(from), std::move(kept)};
}

// ----------------------------------------------------------------- BModule

BModule BModule::free(const BAlgebra& algebra, std::size_t rank) {
  const Ring& ring = algebra.ring();
  const std::size_t d = algebra.rank();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Matrix> blocks(rank, algebra.mult_matrix(i));
    action.push_back(block_diagonal(blocks, ring));
  }
  Matrix basis(ring, rank, rank * d);
  for (std::size_t k = 0; k < rank; ++k) basis.set_block(k, k * d, algebra.unit());
  return BModule{algebra, Presentation::free(ring, rank * d), std::move(action), std::move(basis)};
}

Matrix BModule::act(const Matrix& b) const {
  return linear_combination(b, action, ambient(), ambient());
}

CheckReport BModule::check() const {
  CheckReport report;
  const std::size_t d = algebra.rank();
  if (action.size() != d) {
    report.fail("module.action_count", "expected one action matrix per basis element of B");
    return report;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!is_well_defined(action[i], pres, pres)) {
      report.fail("module.relations_stable", "action does not preserve relations", {{"basis", i}});
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (!maps_equal(action[i] * action[j], action[j] * action[i], pres)) {
        report.fail("module.commuting", "action matrices do not commute", {{"i", i}, {"j", j}});
      }
      // x e_i e_j = x (e_i e_j)
      Matrix prod = algebra.multiply(algebra.basis_element(i), algebra.basis_element(j));
      if (!maps_equal(action[i] * action[j], act(prod), pres)) {
        report.fail("module.structure", "action does not realize the structure constants",
                    {{"i", i}, {"j", j}});
      }
    }
  }
  if (!maps_equal(act(algebra.unit()), Matrix::identity(ring(), ambient()), pres)) {
    report.fail("module.unit", "unit of B does not act as the identity");
  }
  if (basis) {
    const std::size_t r = basis->rows();
    Matrix g(ring(), r * d, ambient());
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < d; ++l) g.set_row(k * d + l, basis->row(k) * action[l]);
    }
    if (!is_isomorphism(g, Presentation::free(ring(), r * d), pres)) {
      report.fail("module.basis", "stored basis is not a B-basis");
    }
  }
  return report;
}

BModule with_presentation(const BModule& m, const Presentation& p) {
  BModule out = m;
  out.pres = p;
  out.basis.reset();
  return out;
}

BModule transport(const BModule& m, const Simplification& s) {
  BModule out{m.algebra, s.reduced, {}, std::nullopt};
  for (const auto& a : m.action) out.action.push_back(s.from_reduced * a * s.to_reduced);
  if (m.basis) out.basis = *m.basis * s.to_reduced;
  return out;
}

BModule simplify(const BModule& m, Simplification* out) {
  Simplification s = simplify(m.pres);
  BModule result = transport(m, s);
  if (out) *out = std::move(s);
  return result;
}

CheckReport BLinearMap::check() const {
  CheckReport report;
  if (matrix.rows() != source.ambient() || matrix.cols() != target.ambient()) {
    report.fail("map.shape", "matrix shape does not match source and target");
    return report;
  }
  if (!is_well_defined(matrix, source.pres, target.pres)) {
    report.fail("map.well_defined", "source relations are not sent into target relations");
  }
  for (std::size_t i = 0; i < source.algebra.rank(); ++i) {
    if (!maps_equal(source.action[i] * matrix, matrix * target.action[i], target.pres)) {
      report.fail("map.b_linear", "map does not commute with the action", {{"basis", i}});
    }
  }
  return report;
}

BLinearMap compose(const BLinearMap& g, const BLinearMap& f) {
  return BLinearMap{f.source, g.target, f.matrix * g.matrix};
}

BLinearMap identity_map(const BModule& m) {
  return BLinearMap{m, m, Matrix::identity(m.ring(), m.ambient())};
}

bool is_isomorphism(const BLinearMap& f) {
  return f.check().ok() && is_isomorphism(f.matrix, f.source.pres, f.target.pres);
}

BModule tensor_over_b(const BModule& m, const BModule& n) {
  if (!(m.algebra == n.algebra)) throw ValidationError("tensor_over_b: algebra mismatch");
  const Ring& ring = m.ring();
  BModule out{m.algebra, balanced_tensor(m.pres, m.action, n.pres, n.action), {}, std::nullopt};
  for (const auto& a : m.action) out.action.push_back(kron(a, Matrix::identity(ring, n.ambient())));
  if (m.basis && n.basis) out.basis = kron(*m.basis, *n.basis);
  return out;
}

Matrix basis_coordinates(const BModule& m, const Matrix& x) {
  if (!m.basis) throw ValidationError("module has no stored B-basis");
  const std::size_t r = m.basis->rows(), d = m.algebra.rank();
  Matrix g(m.ring(), r * d, m.ambient());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < d; ++l) g.set_row(k * d + l, m.basis->row(k) * m.action[l]);
  }
  auto sol = solve(vstack(g, m.pres.relations()), x);
  if (!sol) throw ValidationError("element is not in the span of the stored basis");
  return sol->block(0, 0, x.rows(), r * d);
}

DualModule dual_over_b(const BModule& m) {
  if (!m.basis) throw ValidationError("dual_over_b: module is not marked free (no stored B-basis)");
  if (!m.check().ok()) throw ValidationError("dual_over_b: stored basis does not verify");
  const BAlgebra& b = m.algebra;
  const std::size_t r = m.basis->rows(), d = b.rank(), amb = m.ambient();
  BModule dual = BModule::free(b, r);
  Matrix coords = basis_coordinates(m, Matrix::identity(m.ring(), amb));
  Matrix ev(m.ring(), r * d * amb, d);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      for (std::size_t j = 0; j < amb; ++j) {
        Matrix beta = coords.block(j, i * d, 1, d);
        ev.set_row((i * d + l) * amb + j, b.multiply(b.basis_element(l), beta));
      }
    }
  }
  return DualModule{std::move(dual), std::move(ev)};
}

Cokernel cokernel(const BLinearMap& f) {
  const BModule& t = f.target;
  Presentation p(t.ring(), t.ambient(), vstack(t.pres.relations(), f.matrix));
  BModule out{t.algebra, std::move(p), t.action, std::nullopt};
  return Cokernel{std::move(out), Matrix::identity(t.ring(), t.ambient())};
}

namespace {

// Smallest prime factor and whether n is a power of it.
std::pair<mpz_class, bool> prime_power(const mpz_class& n) {
  mpz_class p = 2;
  while (p * p <= n && !mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) ++p;
  if (p * p > n) p = n;
  mpz_class rest = n;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
  return {p, rest == 1};
}

constexpr unsigned long kLocalEnumerationLimit = 1UL << 16;

// Checks that B is local with maximal ideal generated by `gens`.
void validate_local(const BAlgebra& b, std::span<const Matrix> gens) {
  const Ring& ring = b.ring();
  const std::size_t d = b.rank();
  std::vector<Matrix> parts;
  for (const auto& g : gens) {
    if (g.rows() != 1 || g.cols() != d) throw ValidationError("maximal ideal generator must be 1 x rank(B)");
    parts.push_back(b.mult_by(g));
  }
  Matrix ideal = normal_form(vstack(parts, ring, d));
  auto in_ideal = [&](const Matrix& x) { return reduce_modulo(ideal, x).is_zero(); };
  if (in_ideal(b.unit())) throw UnsupportedError("maximal ideal data generate the unit ideal");

  if (ring.kind() == Ring::Kind::Integers) throw UnsupportedError("Integers are not local");
  if (!ring.is_finite()) {
    // Rationals: only B = Q itself with the zero ideal.
    if (d == 1 && ideal.rows() == 0) return;
    throw UnsupportedError("locality of this algebra over Rationals cannot be verified");
  }
  mpz_class size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= ring.modulus();
  if (size > kLocalEnumerationLimit) throw UnsupportedError("algebra too large to verify locality");
  // Local with maximal ideal m  <=>  every element outside m is a unit.
  for (mpz_class idx = 0; idx < size; ++idx) {
    Matrix x(ring, 1, d);
    mpz_class c = idx;
    for (std::size_t i = 0; i < d; ++i) {
      x.set(0, i, Value(mod_floor(c, ring.modulus())));
      c /= ring.modulus();
    }
    if (in_ideal(x)) continue;
    if (!solve(b.mult_by(x), b.unit())) {
      throw UnsupportedError("element " + x.str() + " is neither a unit nor in the given maximal ideal");
    }
  }
}

}  // namespace

std::vector<Matrix> default_maximal_ideal(const BAlgebra& b) {
  const Ring& ring = b.ring();
  if (!b.is_trivial()) throw UnsupportedError("maximal ideal must be supplied for B != R");
  if (ring.is_field()) return {};
  if (ring.kind() == Ring::Kind::IntegersMod) {
    auto [p, is_power] = prime_power(ring.modulus());
    if (!is_power) throw UnsupportedError(ring.name() + " is not local");
    return {Matrix::row_vector(ring, std::vector<Value>{Value(p)})};
  }
  throw UnsupportedError(ring.name() + " is not local");
}

std::optional<Matrix> is_free_over_local(const BModule& m, std::span<const Matrix> maximal_ideal) {
  validate_local(m.algebra, maximal_ideal);
  const Ring& ring = m.ring();
  const std::size_t d = m.algebra.rank(), amb = m.ambient();
  std::vector<Matrix> parts{m.pres.relations()};
  for (const auto& g : maximal_ideal) parts.push_back(m.act(g));
  Matrix span = vstack(parts, ring, amb);
  std::vector<Matrix> lifts;
  for (std::size_t j = 0; j < amb; ++j) {
    Matrix e = Matrix::unit_row(ring, amb, j);
    if (in_row_span(span, e)) continue;
    lifts.push_back(e);
    std::vector<Matrix> grown{span};
    for (std::size_t l = 0; l < d; ++l) grown.push_back(e * m.action[l]);
    span = vstack(grown, ring, amb);
  }
  const std::size_t k = lifts.size();
  Matrix g(ring, k * d, amb);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < d; ++l) g.set_row(i * d + l, lifts[i] * m.action[l]);
  }
  if (injectivity_witness(g, Presentation::free(ring, k * d), m.pres)) return std::nullopt;
  // Basis rows are the lifts scaled by the unit of B.
  Matrix basis(ring, k, amb);
  for (std::size_t i = 0; i < k; ++i) basis.set_row(i, lifts[i] * m.act(m.algebra.unit()));
  return basis;
}

// ----------------------------------------------------------------- RingMap

RingMap::RingMap(Ring source, Ring target) : source_(std::move(source)), target_(std::move(target)) {
  using K = Ring::Kind;
  if (source_ == target_) return;
  if (source_.kind() == K::Integers) {
    if (target_.kind() == K::Rationals || target_.is_finite()) return;
  }
  if (source_.is_finite() && target_.is_finite()) {
    if (mpz_divisible_p(source_.modulus().get_mpz_t(), target_.modulus().get_mpz_t())) return;
  }
  throw UnsupportedError("unsupported ring map " + source_.name() + " -> " + target_.name());
}

Matrix base_change(const RingMap& h, const Matrix& m) {
  if (m.ring() != h.source()) throw ValidationError("base_change: matrix is over " + m.ring().name());
  Matrix out(h.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, h.apply(m.at(i, j)));
  }
  return out;
}

Presentation base_change(const RingMap& h, const Presentation& p) {
  return Presentation(h.target(), p.rank(), base_change(h, p.relations()));
}

BAlgebra base_change(const RingMap& h, const BAlgebra& b) {
  const std::size_t d = b.rank();
  std::vector<Matrix> structure;
  for (std::size_t i = 0; i < d; ++i) {
    // row j = e_i e_j = e_j * e_i = mult[i] row j
    structure.push_back(base_change(h, b.mult_matrix(i)));
  }
  // structure[i] row j must be e_i e_j; by commutativity this is mult[i] row j.
  return BAlgebra::from_structure(h.target(), std::move(structure), base_change(h, b.unit()));
}

BModule base_change(const RingMap& h, const BModule& m) {
  BModule out{base_change(h, m.algebra), base_change(h, m.pres), {}, std::nullopt};
  for (const auto& a : m.action) out.action.push_back(base_change(h, a));
  if (m.basis) out.basis = base_change(h, *m.basis);
  return out;
}

BLinearMap base_change(const RingMap& h, const BLinearMap& f) {
  return BLinearMap{base_change(h, f.source), base_change(h, f.target), base_change(h, f.matrix)};
}

// ------------------------------------------------------------- free_module

namespace free_module {

Matrix basis_element(const BAlgebra& b, std::size_t rank, std::size_t k) {
  Matrix out(b.ring(), 1, rank * b.rank());
  out.set_block(0, k * b.rank(), b.unit());
  return out;
}

Matrix pairing(const BAlgebra& b, std::size_t rank, const Matrix& phi, const Matrix& x) {
  const std::size_t d = b.rank();
  Matrix out(b.ring(), 1, d);
  for (std::size_t k = 0; k < rank; ++k) {
    out = out + b.multiply(phi.block(0, k * d, 1, d), x.block(0, k * d, 1, d));
  }
  return out;
}

Matrix dual_map(const BAlgebra& b, std::size_t r, std::size_t s, const Matrix& w) {
  const std::size_t d = b.rank();
  if (w.rows() != r * d || w.cols() != s * d) throw ValidationError("dual_map: shape mismatch");
  Matrix out(b.ring(), s * d, r * d);
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < r; ++k) images.push_back(basis_element(b, r, k) * w);
  for (std::size_t kp = 0; kp < s; ++kp) {
    for (std::size_t lp = 0; lp < d; ++lp) {
      Matrix phi = Matrix::unit_row(b.ring(), s * d, kp * d + lp);
      for (std::size_t k = 0; k < r; ++k) out.set_block(kp * d + lp, k * d, pairing(b, s, phi, images[k]));
    }
  }
  return out;
}

Matrix from_b_matrix(const BAlgebra& b, const std::vector<std::vector<Matrix>>& entries) {
  const std::size_t d = b.rank(), r = entries.size(), s = r == 0 ? 0 : entries[0].size();
  Matrix out(b.ring(), r * d, s * d);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      for (std::size_t kp = 0; kp < s; ++kp) {
        out.set_block(k * d + l, kp * d, b.multiply(b.basis_element(l), entries[k][kp]));
      }
    }
  }
  return out;
}

}  // namespace free_module

}  // namespace tannaka
