#pragma once

// Brute-force oracles over Z/n with plain integer arithmetic.  They share no
// code with the library: spans and kernels are found by enumerating every
// coefficient vector.

#include <cstddef>
#include <functional>
#include <vector>

namespace tannaka::testing {

using IntMatrix = std::vector<std::vector<long>>;

inline std::size_t encode(long n, const std::vector<long>& v) {
  std::size_t code = 0;
  for (long x : v) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(((x % n) + n) % n);
  return code;
}

inline std::size_t power(long n, std::size_t k) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= static_cast<std::size_t>(n);
  return p;
}

// Calls f(v, code) for every v in (Z/n)^len.
inline void for_each_vector(long n, std::size_t len,
                            const std::function<void(const std::vector<long>&, std::size_t)>& f) {
  std::vector<long> v(len, 0);
  const std::size_t total = power(n, len);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = len; i-- > 0;) {
      v[i] = static_cast<long>(c % static_cast<std::size_t>(n));
      c /= static_cast<std::size_t>(n);
    }
    f(v, code);
  }
}

inline void for_each_matrix(long n, std::size_t rows, std::size_t cols,
                            const std::function<void(const IntMatrix&)>& f) {
  IntMatrix m(rows, std::vector<long>(cols));
  for_each_vector(n, rows * cols, [&](const std::vector<long>& flat, std::size_t) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = flat[i * cols + j];
    }
    f(m);
  });
}

// Indicator of the row span of m inside (Z/n)^cols.
inline std::vector<bool> span_of(long n, const IntMatrix& m, std::size_t cols) {
  std::vector<bool> in(power(n, cols), false);
  std::vector<long> acc(cols);
  for_each_vector(n, m.size(), [&](const std::vector<long>& coeffs, std::size_t) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) acc[j] = (acc[j] + coeffs[i] * m[i][j]) % n;
    }
    in[encode(n, acc)] = true;
  });
  return in;
}

// Indicator of {x in (Z/n)^rows : x m = 0}.
inline std::vector<bool> kernel_of(long n, const IntMatrix& m, std::size_t rows, std::size_t cols) {
  std::vector<bool> in(power(n, rows), false);
  for_each_vector(n, rows, [&](const std::vector<long>& x, std::size_t code) {
    bool zero = true;
    for (std::size_t j = 0; j < cols && zero; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < rows; ++i) s += x[i] * m[i][j];
      zero = s % n == 0;
    }
    in[code] = zero;
  });
  return in;
}

inline IntMatrix multiply(long n, const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % n;
    }
  }
  return out;
}

inline bool equal_mod(long n, const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if ((((a[i][j] - b[i][j]) % n) + n) % n != 0) return false;
    }
  }
  return true;
}

}  // namespace tannaka::testing
