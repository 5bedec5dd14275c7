#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tannaka/module.hpp"

namespace tannaka {

// Homogeneous linear conditions on a vector of unknowns grouped into matrix
// blocks.  Each condition says that every row of sum_t left_t * X_t * right_t
// (plus an optional constant) lies in the row span of a relation matrix.
// Constants are handled by homogenizing with one extra unknown fixed to 1.
class LinearSystem {
 public:
  explicit LinearSystem(Ring ring) : ring_(std::move(ring)) {}

  // Adds a rows x cols block of unknowns and returns its index.
  std::size_t add_block(std::size_t rows, std::size_t cols);
  std::size_t unknowns() const { return total_; }
  std::size_t block_offset(std::size_t block) const { return blocks_[block].offset; }

  struct Term {
    std::size_t block;
    Matrix left;   // m x rows(block)
    Matrix right;  // cols(block) x k
  };
  // Every row of sum_t left_t X_t right_t + constant lies in rowspan(relations).
  void require(std::span<const Term> terms, const Matrix& relations,
               const std::optional<Matrix>& constant = std::nullopt);
  // u * coeffs + constant ∈ rowspan(relations) for the full unknown row u;
  // coeffs has unknowns() rows.
  void require_raw(const Matrix& coeffs, const Matrix& relations,
                   const std::optional<Matrix>& constant = std::nullopt);
  // Shorthand for a single block with left = identity.
  void require_times(std::size_t block, const Matrix& right, const Matrix& relations);

  // Generators of the homogeneous solution module (rows of length unknowns()).
  Matrix solutions() const;
  // One solution of the affine system (constant terms included), if any.
  std::optional<Matrix> particular() const;
  // Flattened rows of length unknowns() for families whose every block row lies
  // in the matching relation span, given per block.
  Matrix trivial(std::span<const Matrix> block_relations) const;

  // The matrix value of `block` inside a solution row.
  Matrix extract(const Matrix& solution, std::size_t block) const;
  // A flattened row with `value` placed at `block`.
  Matrix embed(std::size_t block, const Matrix& value) const;

 private:
  struct Block {
    std::size_t rows, cols, offset;
  };
  // Homogeneous system [coeffs ; relations] with one extra leading column
  // block for the constant.
  Matrix assemble() const;

  Ring ring_;
  std::vector<Block> blocks_;
  std::size_t total_ = 0;
  // Coefficients as (unknowns + 1) x k pieces (last row is the constant),
  // paired with their relation spans.
  std::vector<std::pair<Matrix, Matrix>> conditions_;
};

// Coefficients (rows indexed by the entries of a p x q unknown X, placed at
// `offset` inside `unknowns`) of the linear maps X -> a * kron(I_n, X) and
// X -> a * kron(X, I_n), flattened row-major.
Matrix coeffs_kron_left_identity(const Matrix& a, std::size_t n, std::size_t p, std::size_t q,
                                 std::size_t offset, std::size_t unknowns);
Matrix coeffs_kron_right_identity(const Matrix& a, std::size_t n, std::size_t p, std::size_t q,
                                  std::size_t offset, std::size_t unknowns);

// The module of solutions modulo trivial ones, presented on the solution
// generators.
struct MapSpace {
  Matrix generators;  // rows are flattened solutions
  Presentation module;
};
MapSpace map_space(const LinearSystem& system, std::span<const Matrix> block_relations);

}  // namespace tannaka
