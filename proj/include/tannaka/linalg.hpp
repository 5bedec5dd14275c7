#pragma once

#include <optional>
#include <vector>

#include "tannaka/matrix.hpp"

namespace tannaka {

// Canonical generator matrix of the row span of m: reduced row echelon form over
// fields, Hermite normal form over Integers, Howell form over IntegersMod.
// Zero rows are dropped, so equal spans give identical results.
Matrix normal_form(const Matrix& m);

// Canonical representative of v modulo the row span of `basis`, which must be
// in normal form.  Works row by row on a matrix of several vectors.
Matrix reduce_modulo(const Matrix& basis, const Matrix& v);

// Whether every row of v lies in the row span of m.
bool in_row_span(const Matrix& m, const Matrix& v);

// Generators of {x : x * m = 0}, in normal form.
Matrix kernel(const Matrix& m);

// Some x with x * m = b (b may have several rows; x gets one row per row of b),
// or nullopt if any row is not solvable.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

// Number of rows of normal_form(m).  Over a field this is the rank.
std::size_t span_size(const Matrix& m);

struct SmithForm {
  Matrix u;  // unimodular, rows x rows
  Matrix d;  // diagonal, d_i | d_{i+1}, d_i >= 0
  Matrix v;  // unimodular, cols x cols
};

// U * m * V = D over the Integers.  Throws ValidationError for other rings.
SmithForm smith(const Matrix& m);

// Determinant over any commutative ring via fraction-free elimination over Q
// (the result is reduced into the ring).
Value determinant(const Matrix& m);

// Invariant structure of R^n / rowspan(relations) for R = Integers or
// IntegersMod(N): the quotient is ⊕ R/(d_i) ⊕ R^free over Integers, and
// ⊕ Z/gcd(d_i, N) over Z/N (with d_i = 0 meaning Z/N).
struct QuotientStructure {
  std::vector<mpz_class> torsion;  // nontrivial cyclic factors, each > 1
  std::size_t free_rank = 0;       // copies of R itself
};
QuotientStructure quotient_structure(const Matrix& relations, std::size_t ambient);

}  // namespace tannaka
