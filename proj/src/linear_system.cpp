#include "tannaka/linear_system.hpp"

namespace tannaka {

std::size_t LinearSystem::add_block(std::size_t rows, std::size_t cols) {
  blocks_.push_back({rows, cols, total_});
  total_ += rows * cols;
  return blocks_.size() - 1;
}

void LinearSystem::require(std::span<const Term> terms, const Matrix& relations,
                           const std::optional<Matrix>& constant) {
  if (terms.empty() && !constant) return;
  const std::size_t m = terms.empty() ? constant->rows() : terms[0].left.rows();
  const std::size_t k = relations.cols();
  Matrix coeffs(ring_, total_ + 1, m * k);
  for (const auto& t : terms) {
    const Block& b = blocks_.at(t.block);
    if (t.left.rows() != m || t.left.cols() != b.rows || t.right.rows() != b.cols || t.right.cols() != k) {
      throw ValidationError("linear system: term shape mismatch");
    }
    // vec(L X R) = vec(X) (L^T ⊗ R) in row-major order.
    Matrix c = kron(t.left.transpose(), t.right);
    coeffs.set_block(b.offset, 0, coeffs.block(b.offset, 0, c.rows(), c.cols()) + c);
  }
  if (constant) {
    if (constant->rows() != m || constant->cols() != k) throw ValidationError("linear system: constant shape");
    coeffs.set_block(total_, 0, flatten(*constant));
  }
  conditions_.emplace_back(std::move(coeffs), kron(Matrix::identity(ring_, m), relations));
}

void LinearSystem::require_raw(const Matrix& coeffs, const Matrix& relations,
                               const std::optional<Matrix>& constant) {
  if (relations.cols() == 0) return;
  if (coeffs.rows() != total_ || coeffs.cols() % relations.cols() != 0) {
    throw ValidationError("linear system: raw coefficient shape mismatch");
  }
  const std::size_t m = coeffs.cols() / relations.cols();
  Matrix full(ring_, total_ + 1, coeffs.cols());
  full.set_block(0, 0, coeffs);
  if (constant) full.set_block(total_, 0, flatten(*constant));
  conditions_.emplace_back(std::move(full), kron(Matrix::identity(ring_, m), relations));
}

void LinearSystem::require_times(std::size_t block, const Matrix& right, const Matrix& relations) {
  Term t{block, Matrix::identity(ring_, blocks_.at(block).rows), right};
  require(std::span<const Term>(&t, 1), relations);
}

Matrix LinearSystem::assemble() const {
  std::size_t cols = 0, extra = 0;
  for (const auto& [c, r] : conditions_) {
    cols += c.cols();
    extra += r.rows();
  }
  Matrix out(ring_, total_ + 1 + extra, cols);
  std::size_t col = 0, row = total_ + 1;
  for (const auto& [c, r] : conditions_) {
    out.set_block(0, col, c);
    out.set_block(row, col, r);
    col += c.cols();
    row += r.rows();
  }
  return out;
}

Matrix LinearSystem::solutions() const {
  if (conditions_.empty()) return Matrix::identity(ring_, total_);
  Matrix k = kernel(assemble());
  // Combinations of kernel rows whose constant coordinate vanishes.
  Matrix cut = k.block(0, 0, k.rows(), total_ + 1);
  Matrix sel(ring_, total_ + 1, 1);
  sel.set(total_, 0, 1);
  Matrix inner = kernel(cut * sel);  // combinations with zero constant part
  Matrix sols = inner * cut;
  return normal_form(sols.block(0, 0, sols.rows(), total_));
}

std::optional<Matrix> LinearSystem::particular() const {
  if (conditions_.empty()) return Matrix(ring_, 1, total_);
  Matrix k = kernel(assemble());
  Matrix cut = k.block(0, 0, k.rows(), total_ + 1);
  Matrix sel(ring_, total_ + 1, 1);
  sel.set(total_, 0, 1);
  auto c = solve(cut * sel, Matrix::row_vector(ring_, {1}));
  if (!c) return std::nullopt;
  Matrix x = *c * cut;
  return x.block(0, 0, 1, total_);
}

Matrix LinearSystem::trivial(std::span<const Matrix> block_relations) const {
  if (block_relations.size() != blocks_.size()) throw ValidationError("linear system: one relation per block");
  std::vector<Matrix> parts;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    Matrix rows = kron(Matrix::identity(ring_, b.rows), block_relations[i]);
    Matrix placed(ring_, rows.rows(), total_);
    placed.set_block(0, b.offset, rows);
    parts.push_back(std::move(placed));
  }
  return vstack(parts, ring_, total_);
}

Matrix LinearSystem::extract(const Matrix& solution, std::size_t block) const {
  const Block& b = blocks_.at(block);
  return unflatten(solution.block(0, b.offset, 1, b.rows * b.cols), b.rows, b.cols);
}

Matrix LinearSystem::embed(std::size_t block, const Matrix& value) const {
  const Block& b = blocks_.at(block);
  Matrix out(ring_, 1, total_);
  out.set_block(0, b.offset, flatten(value));
  return out;
}

Matrix coeffs_kron_left_identity(const Matrix& a, std::size_t n, std::size_t p, std::size_t q,
                                 std::size_t offset, std::size_t unknowns) {
  // (a kron(I_n, X))[x][(c, j)] = sum_i a[x][(c, i)] X[i][j]
  const std::size_t m = a.rows();
  Matrix out(a.ring(), unknowns, m * n * q);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < p; ++i) {
        const Value& v = a.at(x, c * p + i);
        if (v == 0) continue;
        for (std::size_t j = 0; j < q; ++j) out.add_to(offset + i * q + j, (x * n + c) * q + j, v);
      }
    }
  }
  return out;
}

Matrix coeffs_kron_right_identity(const Matrix& a, std::size_t n, std::size_t p, std::size_t q,
                                  std::size_t offset, std::size_t unknowns) {
  // (a kron(X, I_n))[x][(j, c)] = sum_i a[x][(i, c)] X[i][j]
  const std::size_t m = a.rows();
  Matrix out(a.ring(), unknowns, m * q * n);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t c = 0; c < n; ++c) {
        const Value& v = a.at(x, i * n + c);
        if (v == 0) continue;
        for (std::size_t j = 0; j < q; ++j) out.add_to(offset + i * q + j, x * q * n + j * n + c, v);
      }
    }
  }
  return out;
}

MapSpace map_space(const LinearSystem& system, std::span<const Matrix> block_relations) {
  Matrix gens = system.solutions();
  Matrix triv = system.trivial(block_relations);
  return MapSpace{gens, subquotient(gens, triv)};
}

}  // namespace tannaka
