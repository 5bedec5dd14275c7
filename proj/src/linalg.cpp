#include "tannaka/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace tannaka {
namespace {

using Row = std::vector<Value>;

bool row_is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Value& v) { return v == 0; });
}

// r := r - q * s
void axpy(const Ring& ring, Row& r, const Value& q, const Row& s) {
  if (q == 0) return;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (s[j] != 0) r[j] = ring.reduce(r[j] - q * s[j]);
  }
}

// Unit u with u * a == gcd(a, N) (mod N).
Value stabilizing_unit(const Ring& ring, const Value& a) {
  const mpz_class& n = ring.modulus();
  mpz_class an = a.get_num();
  mpz_class d;
  mpz_gcd(d.get_mpz_t(), an.get_mpz_t(), n.get_mpz_t());
  mpz_class a1 = an / d, n1 = n / d;
  mpz_class u0 = 0;
  if (n1 != 1) mpz_invert(u0.get_mpz_t(), a1.get_mpz_t(), n1.get_mpz_t());
  for (mpz_class u = u0;; u += n1) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return Value(mod_floor(u, n));
  }
}

// Replaces (r, s) by a unimodular combination with s[c] == 0 and r[c] the gcd.
void eliminate(const Ring& ring, Row& r, Row& s, std::size_t c) {
  if (ring.is_field()) {
    Value q = ring.mul(s[c], ring.inverse(r[c]));
    axpy(ring, s, q, r);
    return;
  }
  mpz_class a = r[c].get_num(), b = s[c].get_num();
  mpz_class g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class ag = a / g, bg = b / g;
  Row nr(r.size()), ns(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    nr[j] = ring.reduce(Value(x) * r[j] + Value(y) * s[j]);
    ns[j] = ring.reduce(Value(-bg) * r[j] + Value(ag) * s[j]);
  }
  r = std::move(nr);
  s = std::move(ns);
}

void normalize_pivot(const Ring& ring, Row& r, std::size_t c) {
  Value factor;
  switch (ring.kind()) {
    case Ring::Kind::Integers:
      if (r[c] > 0) return;
      factor = -1;
      break;
    case Ring::Kind::Rationals:
    case Ring::Kind::PrimeField:
      factor = ring.inverse(r[c]);
      break;
    case Ring::Kind::IntegersMod:
      factor = stabilizing_unit(ring, r[c]);
      break;
  }
  for (auto& v : r) v = ring.reduce(v * factor);
}

Value floor_quotient(const Ring& ring, const Value& a, const Value& pivot) {
  if (ring.kind() == Ring::Kind::Rationals || ring.kind() == Ring::Kind::PrimeField) {
    return ring.mul(a, ring.inverse(pivot));
  }
  if (ring.kind() == Ring::Kind::IntegersMod && ring.is_field()) {
    return ring.mul(a, ring.inverse(pivot));
  }
  mpz_class q;
  mpz_class an = a.get_num(), pn = pivot.get_num();
  mpz_fdiv_q(q.get_mpz_t(), an.get_mpz_t(), pn.get_mpz_t());
  return Value(q);
}

std::size_t pivot_column(const Row& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) return j;
  }
  return r.size();
}

std::vector<Row> to_rows(const Matrix& m) {
  std::vector<Row> rows(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  }
  return rows;
}

Matrix from_rows(const Ring& ring, const std::vector<Row>& rows, std::size_t cols) {
  Matrix out(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, rows[i][j]);
  }
  return out;
}

std::vector<Row> normal_form_rows(const Ring& ring, std::vector<Row> rows, std::size_t ncols) {
  const bool residue = ring.kind() == Ring::Kind::IntegersMod;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < ncols && pr < rows.size(); ++c) {
    for (std::size_t i = pr + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (rows[pr][c] == 0) {
        std::swap(rows[pr], rows[i]);
        continue;
      }
      eliminate(ring, rows[pr], rows[i], c);
    }
    if (rows[pr][c] == 0) continue;
    normalize_pivot(ring, rows[pr], c);
    for (std::size_t k = 0; k < pr; ++k) {
      if (rows[k][c] != 0) axpy(ring, rows[k], floor_quotient(ring, rows[k][c], rows[pr][c]), rows[pr]);
    }
    if (residue) {
      // Howell step: the annihilator multiple of the pivot row must stay in the
      // span of the rows below it.
      Value ann(ring.modulus() / rows[pr][c].get_num());
      Row extra = rows[pr];
      for (auto& v : extra) v = ring.reduce(v * ann);
      if (!row_is_zero(extra)) rows.push_back(std::move(extra));
    }
    ++pr;
  }
  rows.resize(std::min(pr, rows.size()));
  std::erase_if(rows, row_is_zero);
  return rows;
}


// The same elimination on machine integers, for residue rings whose modulus
// fits in 31 bits.
namespace small {

using I = std::int64_t;
using SRow = std::vector<I>;

I mod(__int128 a, I n) {
  I r = static_cast<I>(a % n);
  return r < 0 ? r + n : r;
}

// g = gcd(a, b) >= 0 with x a + y b = g.
I gcdext(I a, I b, I& x, I& y) {
  I x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    I q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

I inverse(I a, I n) {
  I x, y;
  gcdext(mod(a, n), n, x, y);
  return mod(x, n);
}

I stabilizing_unit(I a, I n) {
  I x, y;
  const I d = gcdext(a, n, x, y);
  const I a1 = a / d, n1 = n / d;
  I u = n1 == 1 ? 0 : inverse(a1, n1);
  for (;; u += n1) {
    if (gcdext(u, n, x, y) == 1) return mod(u, n);
  }
}

bool zero(const SRow& r) {
  return std::all_of(r.begin(), r.end(), [](I v) { return v == 0; });
}

void axpy(I n, SRow& r, I q, const SRow& s) {
  if (q == 0) return;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (s[j] != 0) r[j] = mod(static_cast<__int128>(r[j]) - static_cast<__int128>(q) * s[j], n);
  }
}

std::vector<SRow> normal_form_rows(I n, bool field, std::vector<SRow> rows, std::size_t ncols) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < ncols && pr < rows.size(); ++c) {
    for (std::size_t i = pr + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (rows[pr][c] == 0) {
        std::swap(rows[pr], rows[i]);
        continue;
      }
      SRow& r = rows[pr];
      SRow& s = rows[i];
      if (field) {
        axpy(n, s, mod(static_cast<__int128>(s[c]) * inverse(r[c], n), n), r);
        continue;
      }
      I x, y;
      const I g = gcdext(r[c], s[c], x, y);
      const I ag = r[c] / g, bg = s[c] / g;
      for (std::size_t j = 0; j < r.size(); ++j) {
        const I rj = r[j], sj = s[j];
        r[j] = mod(static_cast<__int128>(x) * rj + static_cast<__int128>(y) * sj, n);
        s[j] = mod(static_cast<__int128>(-bg) * rj + static_cast<__int128>(ag) * sj, n);
      }
    }
    if (rows[pr][c] == 0) continue;
    const I factor = field ? inverse(rows[pr][c], n) : stabilizing_unit(rows[pr][c], n);
    for (auto& v : rows[pr]) v = mod(static_cast<__int128>(v) * factor, n);
    const I piv = rows[pr][c];
    for (std::size_t k = 0; k < pr; ++k) {
      if (rows[k][c] == 0) continue;
      const I q = field ? mod(static_cast<__int128>(rows[k][c]) * inverse(piv, n), n) : rows[k][c] / piv;
      axpy(n, rows[k], q, rows[pr]);
    }
    if (!field) {
      const I ann = n / piv;
      SRow extra = rows[pr];
      for (auto& v : extra) v = mod(static_cast<__int128>(v) * ann, n);
      if (!zero(extra)) rows.push_back(std::move(extra));
    }
    ++pr;
  }
  rows.resize(std::min(pr, rows.size()));
  std::erase_if(rows, zero);
  return rows;
}

}  // namespace small

bool small_residue(const Ring& ring) {
  return ring.is_finite() && ring.modulus() < (1L << 31);
}

std::vector<Row> normal_form_rows_any(const Ring& ring, std::vector<Row> rows, std::size_t ncols) {
  if (!small_residue(ring)) return normal_form_rows(ring, std::move(rows), ncols);
  const small::I n = ring.modulus().get_si();
  std::vector<small::SRow> srows(rows.size(), small::SRow(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) srows[i][j] = rows[i][j].get_num().get_si();
  }
  // IntegersMod(p) keeps the field elimination of the general path.
  srows = small::normal_form_rows(n, ring.is_field(), std::move(srows), ncols);
  std::vector<Row> out(srows.size(), Row(ncols));
  for (std::size_t i = 0; i < srows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) out[i][j] = Value(srows[i][j]);
  }
  return out;
}

}  // namespace

Matrix normal_form(const Matrix& m) {
  auto rows = normal_form_rows_any(m.ring(), to_rows(m), m.cols());
  return from_rows(m.ring(), rows, m.cols());
}

Matrix reduce_modulo(const Matrix& basis, const Matrix& v) {
  const Ring& ring = v.ring();
  auto brows = to_rows(basis);
  auto vrows = to_rows(v);
  for (auto& x : vrows) {
    for (const auto& b : brows) {
      std::size_t c = pivot_column(b);
      if (c == b.size() || x[c] == 0) continue;
      axpy(ring, x, floor_quotient(ring, x[c], b[c]), b);
    }
  }
  return from_rows(ring, vrows, v.cols());
}

bool in_row_span(const Matrix& m, const Matrix& v) {
  if (v.rows() == 0) return true;
  return reduce_modulo(normal_form(m), v).is_zero();
}

Matrix kernel(const Matrix& m) {
  const Ring& ring = m.ring();
  const std::size_t n = m.cols(), r = m.rows();
  if (small_residue(ring)) {
    const small::I mod = ring.modulus().get_si();
    std::vector<small::SRow> rows(r, small::SRow(n + r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j).get_num().get_si();
      rows[i][n + i] = 1;
    }
    rows = small::normal_form_rows(mod, ring.is_field(), std::move(rows), n + r);
    std::vector<small::SRow> ker;
    for (const auto& row : rows) {
      if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n), [](small::I v) { return v == 0; })) {
        ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
      }
    }
    ker = small::normal_form_rows(mod, ring.is_field(), std::move(ker), r);
    Matrix out(ring, ker.size(), r);
    for (std::size_t i = 0; i < ker.size(); ++i) {
      for (std::size_t j = 0; j < r; ++j) out.set(i, j, Value(ker[i][j]));
    }
    return out;
  }
  Matrix aug = hstack(m, Matrix::identity(ring, r));
  auto rows = normal_form_rows(ring, to_rows(aug), n + r);
  std::vector<Row> ker;
  for (const auto& row : rows) {
    if (pivot_column(row) >= n) ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return normal_form(from_rows(ring, ker, r));
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  const Ring& ring = m.ring();
  const std::size_t n = m.cols(), r = m.rows();
  if (b.cols() != n) throw ValidationError("solve: right-hand side width mismatch");
  Matrix aug = hstack(m, Matrix::identity(ring, r));
  auto rows = normal_form_rows_any(ring, to_rows(aug), n + r);
  Matrix x(ring, b.rows(), r);
  for (std::size_t k = 0; k < b.rows(); ++k) {
    Row v(n + r);
    for (std::size_t j = 0; j < n; ++j) v[j] = b.at(k, j);
    for (const auto& row : rows) {
      std::size_t c = pivot_column(row);
      if (c >= n) break;
      if (v[c] == 0) continue;
      auto q = ring.divide(v[c], row[c]);
      if (!q) return std::nullopt;
      axpy(ring, v, *q, row);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0) return std::nullopt;
    }
    for (std::size_t j = 0; j < r; ++j) x.set(k, j, ring.neg(v[n + j]));
  }
  return x;
}

std::size_t span_size(const Matrix& m) { return normal_form(m).rows(); }

SmithForm smith(const Matrix& m) {
  const Ring& ring = m.ring();
  if (ring.kind() != Ring::Kind::Integers) throw ValidationError("smith: ring must be Integers");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j).get_num();
  }
  std::vector<std::vector<mpz_class>> u(rows, std::vector<mpz_class>(rows));
  std::vector<std::vector<mpz_class>> v(cols, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
  for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(u[i], u[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& row : a) std::swap(row[j], row[k]);
    for (auto& row : v) std::swap(row[j], row[k]);
  };
  // row_i -= q row_k
  auto row_op = [&](std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
    for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
  };
  // col_j -= q col_k
  auto col_op = [&](std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][k];
  };

  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto pick_pivot = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      mpz_class best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          mpz_class mag = abs(a[i][j]);
          if (bi == rows || mag < best) {
            best = mag;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return false;
      swap_rows(t, bi);
      swap_cols(t, bj);
      return true;
    };
    if (!pick_pivot()) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_op(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_op(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot spot.
        std::size_t bi = t, bj = t;
        mpz_class best = abs(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0 && abs(a[i][t]) < best) {
            best = abs(a[i][t]);
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0 && abs(a[t][j]) < best) {
            best = abs(a[t][j]);
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold in any row whose entries the pivot does not divide.
      bool folded = false;
      for (std::size_t i = t + 1; i < rows && !folded; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            row_op(t, i, mpz_class(-1));
            folded = true;
            break;
          }
        }
      }
      if (!folded) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }

  SmithForm out{Matrix(ring, rows, rows), Matrix(ring, rows, cols), Matrix(ring, cols, cols)};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) out.u.set(i, j, Value(u[i][j]));
    for (std::size_t j = 0; j < cols; ++j) out.d.set(i, j, Value(a[i][j]));
  }
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.v.set(i, j, Value(v[i][j]));
  }
  return out;
}

Value determinant(const Matrix& m) {
  if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  // Bareiss over Q on the integer/rational lifts.
  std::vector<std::vector<Value>> a(n, std::vector<Value>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }
  Value det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return m.ring().zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Value f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return m.ring().reduce(det);
}

QuotientStructure quotient_structure(const Matrix& relations, std::size_t ambient) {
  const Ring& ring = relations.ring();
  if (relations.cols() != ambient) throw ValidationError("quotient_structure: width mismatch");
  QuotientStructure out;
  if (ring.is_field() && ring.kind() != Ring::Kind::IntegersMod) {
    out.free_rank = ambient - span_size(relations);
    return out;
  }
  // Lift to Z; over Z/N the relation module also contains N * Z^ambient.
  Ring z = Ring::integers();
  std::size_t extra = ring.kind() == Ring::Kind::IntegersMod ? ambient : 0;
  Matrix lift(z, relations.rows() + extra, ambient);
  for (std::size_t i = 0; i < relations.rows(); ++i) {
    for (std::size_t j = 0; j < ambient; ++j) lift.set(i, j, relations.at(i, j));
  }
  for (std::size_t j = 0; j < extra; ++j) lift.set(relations.rows() + j, j, Value(ring.modulus()));
  SmithForm s = smith(lift);
  std::size_t diag = std::min(lift.rows(), ambient);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < diag; ++i) {
    mpz_class d = s.d.at(i, i).get_num();
    if (d == 0) continue;
    ++nonzero;
    if (d == 1) continue;
    if (ring.kind() == Ring::Kind::IntegersMod && d == ring.modulus()) {
      ++out.free_rank;
      continue;
    }
    out.torsion.push_back(d);
  }
  out.free_rank += ambient - nonzero;
  return out;
}

}  // namespace tannaka
