#include "tannaka/matrix.hpp"

#include <sstream>

namespace tannaka {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw ValidationError("matrix entry count does not match " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  }
  for (auto& e : entries_) e = ring_.reduce(e);
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_ints(const Ring& ring,
                         std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  std::vector<Value> entries;
  entries.reserve(nrows * ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw ValidationError("ragged matrix literal");
    for (long v : r) entries.emplace_back(v);
  }
  return Matrix(ring, nrows, ncols, std::move(entries));
}

Matrix Matrix::row_vector(const Ring& ring, std::initializer_list<long> entries) {
  std::vector<Value> v;
  for (long e : entries) v.emplace_back(e);
  return row_vector(ring, std::move(v));
}

Matrix Matrix::row_vector(const Ring& ring, std::vector<Value> entries) {
  std::size_t n = entries.size();
  return Matrix(ring, 1, n, std::move(entries));
}

Matrix Matrix::unit_row(const Ring& ring, std::size_t n, std::size_t i) {
  Matrix m(ring, 1, n);
  m.entries_[i] = 1;
  return m;
}

Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(ring_, indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[r * cols_ + j] = at(indices[r], j);
  }
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> indices) const {
  Matrix out(ring_, rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0; c < indices.size(); ++c) {
      out.entries_[i * indices.size() + c] = at(i, indices[c]);
    }
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  Matrix out(ring_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) out.entries_[i * ncols + j] = at(r0 + i, c0 + j);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries_[(r0 + i) * cols_ + c0 + j] = m.at(i, j);
  }
}

void Matrix::set_row(std::size_t i, const Matrix& row) { set_block(i, 0, row); }

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix sum: shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = ring_.reduce(entries_[k] + o.entries_[k]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix difference: shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = ring_.reduce(entries_[k] - o.entries_[k]);
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.reduce(-entries_[k]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw ValidationError("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix out(ring_, rows_, o.cols_);
  Value acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Value& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Value& b = o.at(k, j);
        if (b == 0) continue;
        out.entries_[i * o.cols_ + j] += a * b;
      }
    }
  }
  for (auto& e : out.entries_) e = ring_.reduce(e);
  return out;
}

Matrix Matrix::scaled(const Value& c) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.reduce(entries_[k] * c);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(ring_.to_string(at(i, j)));
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j).get_str();
    os << "]";
  }
  return os << "]";
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ValidationError("vstack: width mismatch");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix vstack(std::span<const Matrix> parts, const Ring& ring, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ValidationError("vstack: width mismatch");
    rows += p.rows();
  }
  Matrix out(ring, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack: height mismatch");
  Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix block_diagonal(std::span<const Matrix> parts, const Ring& ring) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix out(ring, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Value& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.rows(); ++j) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Value& y = b.at(j, l);
          if (y == 0) continue;
          out.set(i * b.rows() + j, k * b.cols() + l, x * y);
        }
      }
    }
  }
  return out;
}

Matrix swap_matrix(const Ring& ring, std::size_t m, std::size_t n) {
  Matrix out(ring, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i * n + j, j * m + i, 1);
  }
  return out;
}

Matrix linear_combination(const Matrix& coeffs, std::span<const Matrix> mats, std::size_t rows,
                          std::size_t cols) {
  Matrix out(coeffs.ring(), rows, cols);
  if (coeffs.cols() != mats.size()) throw ValidationError("linear_combination: length mismatch");
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const Value& c = coeffs.at(0, k);
    if (c == 0) continue;
    out = out + mats[k].scaled(c);
  }
  return out;
}

Matrix flatten(const Matrix& m) {
  Matrix out(m.ring(), 1, m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(0, i * m.cols() + j, m.at(i, j));
  }
  return out;
}

Matrix unflatten(const Matrix& row, std::size_t rows, std::size_t cols) {
  Matrix out(row.ring(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, row.at(0, i * cols + j));
  }
  return out;
}

}  // namespace tannaka
