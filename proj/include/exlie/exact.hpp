// Exact arithmetic helpers: rationals, big integers, integer matrices,
// Smith normal form, and modular linear algebra.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exlie {

using Rat = boost::rational<long long>;
using BigInt = boost::multiprecision::cpp_int;

inline long long rat_num(const Rat& r) { return r.numerator(); }
inline long long rat_den(const Rat& r) { return r.denominator(); }

inline long long to_integer(const Rat& r, const char* what = "value") {
  if (r.denominator() != 1)
    throw std::domain_error(std::string(what) + " is not an integer");
  return r.numerator();
}

// Dense integer matrix, row-major. Sizes here are small (rank <= 4 Cartan
// data, dim <= 56 Gram matrices); entries can grow only inside the BigInt
// based routines.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntMat mul(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMat::mul shape mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        long long v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != cols)
      throw std::invalid_argument("IntMat::apply shape mismatch");
    std::vector<long long> r(rows, 0);
    for (int i = 0; i < rows; ++i) {
      long long s = 0;
      for (int j = 0; j < cols; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  IntMat transpose() const {
    IntMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Fraction-free Gaussian elimination (Bareiss); exact for any size thanks to
// BigInt intermediates.
inline BigInt det(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = m.at(i, j);
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(b[k], b[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
    prev = b[k][k];
  }
  return sign * b[n - 1][n - 1];
}

// Smith normal form diagonal (nonnegative, each dividing the next, zeros last).
inline std::vector<BigInt> smith_diagonal(const IntMat& m) {
  int rows = m.rows, cols = m.cols;
  std::vector<std::vector<BigInt>> b(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b[i][j] = m.at(i, j);
  int n = std::min(rows, cols);
  std::vector<BigInt> diag;
  int r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // Find a nonzero pivot with minimal absolute value.
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int i = r0; i < rows; ++i)
      for (int j = c0; j < cols; ++j) {
        BigInt v = abs(b[i][j]);
        if (v != 0 && (pr < 0 || v < best)) { pr = i; pc = j; best = v; }
      }
    if (pr < 0) break;
    std::swap(b[r0], b[pr]);
    for (int i = r0; i < rows; ++i) std::swap(b[i][c0], b[i][pc]);
    bool again = true;
    while (again) {
      again = false;
      for (int i = r0 + 1; i < rows; ++i) {
        BigInt q = b[i][c0] / b[r0][c0];
        if (q != 0)
          for (int j = c0; j < cols; ++j) b[i][j] -= q * b[r0][j];
        if (b[i][c0] != 0) { std::swap(b[r0], b[i]); again = true; }
      }
      for (int j = c0 + 1; j < cols; ++j) {
        BigInt q = b[r0][j] / b[r0][c0];
        if (q != 0)
          for (int i = r0; i < rows; ++i) b[i][j] -= q * b[i][c0];
        if (b[r0][j] != 0) {
          for (int i = r0; i < rows; ++i) std::swap(b[i][c0], b[i][j]);
          again = true;
        }
      }
    }
    diag.push_back(abs(b[r0][c0]));
    ++r0;
    ++c0;
  }
  // Enforce the divisibility chain d_i | d_{i+1}.
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 0) std::swap(diag[i], diag[j]);
      if (diag[j] % diag[i] != 0) {
        BigInt g = gcd(diag[i], diag[j]);
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  while (static_cast<int>(diag.size()) < n) diag.push_back(0);
  return diag;
}

// ---- modular helpers -------------------------------------------------------

inline long long mod_norm(long long v, long long p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

inline long long mod_pow(long long b, long long e, long long p) {
  b = mod_norm(b, p);
  long long r = 1;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long long mod_inv(long long v, long long p) {
  v = mod_norm(v, p);
  if (v == 0) throw std::domain_error("mod_inv of zero");
  return mod_pow(v, p - 2, p);  // p prime
}

using ModMat = std::vector<std::vector<long long>>;

// Row echelon reduction in place; returns rank. Entries normalized to [0,p).
inline int row_reduce_mod_p(ModMat& m, long long p, std::vector<int>* pivot_cols = nullptr) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (auto& row : m)
    for (auto& v : row) v = mod_norm(v, p);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    long long inv = mod_inv(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long long f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = mod_norm(m[i][j] - f * m[r][j], p);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

inline int rank_mod_p(const IntMat& m, long long p) {
  ModMat mm(m.rows, std::vector<long long>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) mm[i][j] = mod_norm(m.at(i, j), p);
  return row_reduce_mod_p(mm, p);
}

// Basis of the right kernel {x : m x = 0} over F_p, as rows.
inline ModMat kernel_mod_p(ModMat m, long long p) {
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<int> piv;
  row_reduce_mod_p(m, p, &piv);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  ModMat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<long long> v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) {
      // row r has pivot at piv[r]; entry at column c gives the dependency
      if (r < m.size()) v[piv[r]] = mod_norm(-m[r][c], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact characteristic polynomial of a small integer matrix via
// Faddeev-LeVerrier; coefficients returned low degree first, leading 1.
inline std::vector<Rat> char_poly(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("char_poly of non-square matrix");
  int n = m.rows;
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  c[n] = Rat(1);
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Rat(m.at(i, j));
  // M_1 = I; iterate M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = (i == j) ? c[n] : Rat(0);
    } else {
      std::vector<std::vector<Rat>> T(n, std::vector<Rat>(n, Rat(0)));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          if (A[i][l] == Rat(0)) continue;
          for (int j = 0; j < n; ++j) T[i][j] += A[i][l] * M[l][j];
        }
      for (int i = 0; i < n; ++i) T[i][i] += c[n - k + 1];
      M = std::move(T);
    }
    // tr(A*M)
    Rat tr(0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / Rat(k);
  }
  return c;
}

}  // namespace exlie
