#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tannaka/ring.hpp"

namespace tannaka {

// Dense matrix over a Ring.  Row-vector convention throughout: a vector is a
// 1 x n matrix, a linear map is a matrix acting on the right, and "f then g"
// is the product F * G.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows);
  // Single row.
  static Matrix row_vector(const Ring& ring, std::initializer_list<long> entries);
  static Matrix row_vector(const Ring& ring, std::vector<Value> entries);
  // e_i in R^n as a 1 x n matrix.
  static Matrix unit_row(const Ring& ring, std::size_t n, std::size_t i);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Value& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Value& v) { entries_[i * cols_ + j] = ring_.reduce(v); }
  // Adds v to entry (i, j).
  void add_to(std::size_t i, std::size_t j, const Value& v) {
    auto& e = entries_[i * cols_ + j];
    e = ring_.reduce(e + v);
  }
  std::span<const Value> row_span(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  Matrix row(std::size_t i) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_cols(std::span<const std::size_t> indices) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  void set_row(std::size_t i, const Matrix& row);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Value& c) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::vector<std::vector<std::string>> to_strings() const;
  std::string str() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Stacks rows of a on top of rows of b; widths must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> parts, const Ring& ring, std::size_t cols);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> parts, const Ring& ring);
// Kronecker product with index (i, j) -> i * b.rows() + j; matches the row
// convention (x ⊗ y) * kron(F, G) = xF ⊗ yG.
Matrix kron(const Matrix& a, const Matrix& b);
// Permutation matrix sending x ⊗ y to y ⊗ x for x in R^m, y in R^n.
Matrix swap_matrix(const Ring& ring, std::size_t m, std::size_t n);
// Sum_k c_k * mats[k] for a coefficient row c.
Matrix linear_combination(const Matrix& coeffs, std::span<const Matrix> mats,
                          std::size_t rows, std::size_t cols);
// Row-major flattening of an m x n matrix into 1 x mn, and back.
Matrix flatten(const Matrix& m);
Matrix unflatten(const Matrix& row, std::size_t rows, std::size_t cols);

}  // namespace tannaka
