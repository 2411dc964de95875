// Ordinary character tables of finite Weyl groups by Dixon's modular variant
// of Burnside's class-algebra method, plus the pieces of character theory the
// rest of the library leans on: b-invariants (lowest symmetric power of the
// reflection representation containing a character), induction and
// restriction along subgroups, inner products and j-induction.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "exlie/exact.hpp"
#include "exlie/weyl.hpp"

namespace exlie {

namespace detail {

// Characteristic polynomial of a square matrix over F_p, low degree first,
// monic; Faddeev-LeVerrier, valid since p exceeds the matrix dimension.
inline std::vector<long long> char_poly_mod_p(const std::vector<std::vector<long long>>& m,
                                              long long p) {
  int n = static_cast<int>(m.size());
  std::vector<long long> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<long long>> N(n, std::vector<long long>(n, 0));
  for (int k = 1; k <= n; ++k) {
    // N_k = M (N_{k-1} + c_{n-k+1} I)
    std::vector<std::vector<long long>> t = N;
    for (int i = 0; i < n; ++i) t[i][i] = mod_norm(t[i][i] + c[n - k + 1], p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int l = 0; l < n; ++l) s = (s + m[i][l] * t[l][j]) % p;
        N[i][j] = s;
      }
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr = (tr + N[i][i]) % p;
    c[n - k] = mod_norm(-tr * mod_inv(k % p, p), p);
  }
  return c;
}

inline long long poly_eval_mod_p(const std::vector<long long>& c, long long x, long long p) {
  long long v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = (v * x + c[i]) % p;
  return v;
}

}  // namespace detail

class CharTable {
 public:
  explicit CharTable(const WeylGroup& W) : W_(&W) { build(); }

  const WeylGroup& group() const { return *W_; }
  int num_chars() const { return static_cast<int>(values_.size()); }
  // Value list per conjugacy class, in the group's class order.
  const std::vector<long long>& values(int chi) const { return values_[chi]; }
  long long degree(int chi) const { return values_[chi][0]; }

  // Smallest d with <chi, Sym^d(reflection rep)> nonzero.
  int b_invariant(int chi) const {
    if (b_cache_.empty()) b_cache_.assign(num_chars(), -1);
    if (b_cache_[chi] >= 0) return b_cache_[chi];
    for (int d = 0; d <= 100; ++d) {
      ensure_sym(d);
      if (inner(values_[chi], sym_chars_[d]) != 0) {
        b_cache_[chi] = d;
        return d;
      }
    }
    throw std::logic_error("b-invariant exceeds bound");
  }

  // Multiplicity of chi inside Sym^d of the reflection representation.
  long long sym_multiplicity(int chi, int d) const {
    ensure_sym(d);
    return inner(values_[chi], sym_chars_[d]);
  }

  // Inner product of two rational class functions; asserts integrality.
  long long inner(const std::vector<long long>& a, const std::vector<long long>& b) const {
    BigInt s = 0;
    for (int c = 0; c < W_->num_classes(); ++c)
      s += BigInt(W_->class_size(c)) * a[c] * b[c];
    BigInt n = W_->size();
    if (s % n != 0) throw std::logic_error("non-integral inner product");
    return static_cast<long long>(BigInt(s / n));
  }

  // Multiplicities of each irreducible inside a class function.
  std::vector<long long> decompose(const std::vector<long long>& cf) const {
    std::vector<long long> m(num_chars());
    for (int i = 0; i < num_chars(); ++i) m[i] = inner(cf, values_[i]);
    return m;
  }

  // Index of the character equal to the given value list, or -1.
  int find(const std::vector<long long>& vals) const {
    for (int i = 0; i < num_chars(); ++i)
      if (values_[i] == vals) return i;
    return -1;
  }

  int trivial() const {
    std::vector<long long> one(W_->num_classes(), 1);
    int i = find(one);
    if (i < 0) throw std::logic_error("missing trivial character");
    return i;
  }

  // The character that is -1 at every reflection (the determinant of the
  // reflection representation).
  int sign() const {
    std::vector<long long> s(W_->num_classes());
    for (int c = 0; c < W_->num_classes(); ++c) {
      BigInt d = det(W_->matrix(W_->class_rep(c)));
      s[c] = static_cast<long long>(d);
    }
    int i = find(s);
    if (i < 0) throw std::logic_error("missing sign character");
    return i;
  }

  long long class_order(int c) const { return orders_[c]; }

 private:
  const WeylGroup* W_;
  std::vector<std::vector<long long>> values_;
  std::vector<long long> orders_;
  mutable std::vector<int> b_cache_;
  mutable std::vector<std::vector<long long>> sym_chars_;
  mutable std::vector<std::vector<long long>> power_traces_;  // [class][i] = tr(M^i)

  void ensure_sym(int d) const {
    int k = W_->num_classes();
    if (power_traces_.empty()) {
      power_traces_.assign(k, {});
      for (int c = 0; c < k; ++c) power_traces_[c] = {static_cast<long long>(W_->num_gens())};
    }
    while (static_cast<int>(sym_chars_.size()) <= d) {
      int m = static_cast<int>(sym_chars_.size());
      if (m == 0) {
        sym_chars_.push_back(std::vector<long long>(k, 1));
        continue;
      }
      std::vector<long long> row(k);
      for (int c = 0; c < k; ++c) {
        // Power sums tr(M^i) repeat with the element order; index 0 holds the
        // trace of the identity, i.e. the dimension.
        long long ord = orders_[c];
        while (static_cast<long long>(power_traces_[c].size()) <= std::min<long long>(m, ord - 1))
          extend_powers(c);
        // m h_m = sum_{i=1..m} h_{m-i} p_i
        BigInt acc = 0;
        for (int i = 1; i <= m; ++i) {
          long long pi = power_traces_[c][i % ord];
          acc += BigInt(sym_chars_[m - i][c]) * pi;
        }
        if (acc % m != 0) throw std::logic_error("non-integral symmetric power trace");
        row[c] = static_cast<long long>(BigInt(acc / m));
      }
      sym_chars_.push_back(std::move(row));
    }
  }

  void extend_powers(int c) const {
    // Append tr(M^i) for the next i by repeated multiplication.
    int e = W_->class_rep(c);
    int i = static_cast<int>(power_traces_[c].size());
    int x = e;
    for (int t = 1; t < i; ++t) x = W_->mult(x, e);
    IntMat m = W_->matrix(x);
    long long tr = 0;
    for (int r = 0; r < m.rows; ++r) tr += m.at(r, r);
    power_traces_[c].push_back(tr);
  }

  void build() {
    const WeylGroup& W = *W_;
    int k = W.num_classes();
    int n = W.size();
    // Class element lists, inverse classes, element orders.
    std::vector<std::vector<int>> cls(k);
    for (int e = 0; e < n; ++e) cls[W.class_of(e)].push_back(e);
    std::vector<int> istar(k);
    orders_.resize(k);
    long long exponent = 1;
    for (int c = 0; c < k; ++c) {
      int r = W.class_rep(c);
      istar[c] = W.class_of(W.inv(r));
      long long o = 1;
      int x = r;
      while (x != W.identity()) {
        x = W.mult(x, r);
        ++o;
      }
      orders_[c] = o;
      exponent = std::lcm(exponent, o);
    }
    // A prime p = 1 mod exponent(W), large enough that degrees (at most
    // sqrt|W|) and values (bounded by degrees) lift uniquely from F_p.
    long long p = pick_prime(exponent, std::max<long long>(4 * n, 2500));

    // Class algebra structure constants: B_i[m][j] = #{x in C_i : x^{-1} z_j in C_m}
    // so that the row vector of central characters is a common eigenvector.
    std::vector<std::vector<std::vector<long long>>> B(
        k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int zj = W.class_rep(j);
        for (int x : cls[i]) {
          int y = W.mult(W.inv(x), zj);
          ++B[i][W.class_of(y)][j];
        }
      }

    // Split F_p^k into common eigenlines of the commuting matrices B_i.
    std::vector<std::vector<std::vector<long long>>> spaces;
    {
      std::vector<std::vector<long long>> full(k, std::vector<long long>(k, 0));
      for (int i = 0; i < k; ++i) full[i][i] = 1;
      spaces.push_back(full);
    }
    for (int i = 1; i < k; ++i) {
      std::vector<std::vector<std::vector<long long>>> next;
      for (auto& S : spaces) {
        int d = static_cast<int>(S.size());
        if (d == 1) {
          next.push_back(std::move(S));
          continue;
        }
        // Pivot columns of the RREF basis give coordinates on S.
        std::vector<int> piv;
        {
          ModMat tmp = S;
          row_reduce_mod_p(tmp, p, &piv);
        }
        std::vector<std::vector<long long>> rest(d, std::vector<long long>(d, 0));
        for (int s = 0; s < d; ++s) {
          // image of row s under B_i (row-vector times transpose)
          std::vector<long long> img(k, 0);
          for (int col = 0; col < k; ++col) {
            long long acc = 0;
            for (int c2 = 0; c2 < k; ++c2) acc = (acc + S[s][c2] * B[i][col][c2]) % p;
            img[col] = acc;
          }
          for (int t = 0; t < d; ++t) rest[t][s] = img[piv[t]];
        }
        auto cp = detail::char_poly_mod_p(rest, p);
        int found = 0;
        for (long long lam = 0; lam < p && found < d; ++lam) {
          if (detail::poly_eval_mod_p(cp, lam, p) != 0) continue;
          ModMat m = rest;
          for (int t = 0; t < d; ++t) m[t][t] = mod_norm(m[t][t] - lam, p);
          ModMat ker = kernel_mod_p(m, p);
          if (ker.empty()) continue;
          std::vector<std::vector<long long>> eigvecs;
          for (const auto& kv : ker) {
            std::vector<long long> lifted(k, 0);
            for (int s = 0; s < d; ++s)
              for (int c2 = 0; c2 < k; ++c2)
                lifted[c2] = (lifted[c2] + kv[s] * S[s][c2]) % p;
            eigvecs.push_back(std::move(lifted));
          }
          found += static_cast<int>(eigvecs.size());
          row_reduce_mod_p(eigvecs, p);
          next.push_back(std::move(eigvecs));
        }
        if (found != d) throw std::logic_error("class algebra failed to split");
      }
      spaces = std::move(next);
      bool all1 = true;
      for (const auto& S : spaces)
        if (S.size() != 1) all1 = false;
      if (all1) break;
    }
    for (const auto& S : spaces)
      if (S.size() != 1) throw std::logic_error("class algebra not fully split");

    // Each eigenline, scaled so the identity-class entry is 1, is the vector
    // of central characters w_j = |C_j| chi(g_j) / chi(1) mod p.
    values_.clear();
    for (const auto& S : spaces) {
      std::vector<long long> w = S[0];
      if (w[0] == 0) throw std::logic_error("central character vanishes at identity");
      long long s0 = mod_inv(w[0], p);
      for (auto& x : w) x = x * s0 % p;
      // |W| / chi(1)^2 = sum_j w_j w_{j*} / |C_j|
      long long s = 0;
      for (int j = 0; j < k; ++j) {
        long long t = w[j] * w[istar[j]] % p;
        s = (s + t * mod_inv(W.class_size(j) % p, p)) % p;
      }
      long long target = n % p * mod_inv(s, p) % p;  // chi(1)^2 mod p
      long long deg = -1;
      for (long long d = 1; d * d <= n; ++d)
        if (d * d % p == target) {
          if (deg >= 0) throw std::logic_error("ambiguous degree lift");
          deg = d;
        }
      if (deg < 0) throw std::logic_error("no degree lift");
      std::vector<long long> vals(k);
      for (int j = 0; j < k; ++j) {
        long long v = w[j] * (deg % p) % p * mod_inv(W.class_size(j) % p, p) % p;
        if (v > p / 2) v -= p;
        if (v < -deg || v > deg) throw std::logic_error("character value lift out of range");
        vals[j] = v;
      }
      values_.push_back(std::move(vals));
    }
    if (static_cast<int>(values_.size()) != k) throw std::logic_error("wrong character count");
    BigInt sq = 0;
    for (const auto& v : values_) sq += BigInt(v[0]) * v[0];
    if (sq != n) throw std::logic_error("degrees fail sum of squares");
    std::sort(values_.begin(), values_.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                if (a[0] != b[0]) return a[0] < b[0];
                return a < b;
              });
    for (int i = 1; i < k; ++i)
      if (values_[i] == values_[i - 1]) throw std::logic_error("duplicate characters");
  }

  static long long pick_prime(long long exponent, long long lower) {
    for (long long c = std::max<long long>(1, (lower - 1) / exponent);; ++c) {
      long long p = c * exponent + 1;
      if (p < lower) continue;
      bool prime = p > 1;
      for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) { prime = false; break; }
      if (prime) return p;
    }
  }
};

// Fusion of conjugacy classes of a reflection subgroup into a containing
// group realized on the same root system.
inline std::vector<int> class_fusion(const WeylGroup& sub, const WeylGroup& amb) {
  std::vector<int> f(sub.num_classes());
  for (int c = 0; c < sub.num_classes(); ++c)
    f[c] = amb.class_of(amb.id_of_perm(sub.perm(sub.class_rep(c))));
  return f;
}

// Ind_{sub}^{amb} of a class function given by its values on sub's classes.
inline std::vector<long long> induce_values(const WeylGroup& sub,
                                            const std::vector<long long>& vals,
                                            const WeylGroup& amb) {
  std::vector<int> fus = class_fusion(sub, amb);
  long long index = amb.size() / sub.size();
  std::vector<long long> out(amb.num_classes(), 0);
  for (int c = 0; c < amb.num_classes(); ++c) {
    BigInt acc = 0;
    for (int j = 0; j < sub.num_classes(); ++j)
      if (fus[j] == c) acc += BigInt(sub.class_size(j)) * vals[j];
    acc *= index;
    BigInt den = amb.class_size(c);
    if (acc % den != 0) throw std::logic_error("non-integral induced value");
    out[c] = static_cast<long long>(BigInt(acc / den));
  }
  return out;
}

// Res_{sub} of an ambient class function.
inline std::vector<long long> restrict_values(const WeylGroup& sub,
                                              const std::vector<long long>& vals,
                                              const WeylGroup& amb) {
  std::vector<int> fus = class_fusion(sub, amb);
  std::vector<long long> out(sub.num_classes());
  for (int j = 0; j < sub.num_classes(); ++j) out[j] = vals[fus[j]];
  return out;
}

// j-induction: the unique constituent of Ind chi' having the same
// b-invariant as chi'; requires multiplicity one and uniqueness.
inline int j_induce(const WeylGroup& sub, const CharTable& subT, int chi_sub,
                    const WeylGroup& amb, const CharTable& ambT) {
  int b = subT.b_invariant(chi_sub);
  std::vector<long long> ind = induce_values(sub, subT.values(chi_sub), amb);
  std::vector<long long> mult = ambT.decompose(ind);
  int found = -1;
  for (int i = 0; i < ambT.num_chars(); ++i) {
    if (mult[i] == 0) continue;
    if (ambT.b_invariant(i) == b) {
      if (found >= 0) throw std::logic_error("j-induction not unique");
      if (mult[i] != 1) throw std::logic_error("j-induction multiplicity exceeds one");
      found = i;
    }
  }
  if (found < 0) throw std::logic_error("j-induction has no b-preserving constituent");
  return found;
}

}  // namespace exlie
