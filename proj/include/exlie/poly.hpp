// Sparse multivariate polynomials over a coefficient ring, plus a generic
// square-matrix template used for symbolic and finite-field linear algebra.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlie/gf.hpp"

namespace exlie {

// Ring over the integers (stateless).
struct ZRing {
  using Elt = long long;
  static Elt zero() { return 0; }
  static Elt one() { return 1; }
  static bool is_zero(Elt a) { return a == 0; }
  static Elt add(Elt a, Elt b) { return a + b; }
  static Elt sub(Elt a, Elt b) { return a - b; }
  static Elt neg(Elt a) { return -a; }
  static Elt mul(Elt a, Elt b) { return a * b; }
  static Elt from_int(long long n) { return n; }
};

// Ring view over a GF instance (stateful; keeps a pointer).
struct GFRing {
  const GF* F = nullptr;
  using Elt = int;
  GFRing() = default;
  explicit GFRing(const GF& f) : F(&f) {}
  Elt zero() const { return GF::ZERO; }
  Elt one() const { return F->one(); }
  bool is_zero(Elt a) const { return a == GF::ZERO; }
  Elt add(Elt a, Elt b) const { return F->add(a, b); }
  Elt sub(Elt a, Elt b) const { return F->sub(a, b); }
  Elt neg(Elt a) const { return F->neg(a); }
  Elt mul(Elt a, Elt b) const { return F->mul(a, b); }
  Elt from_int(long long n) const { return F->from_int(n); }
};

// Monomial exponent vector; degrees stay tiny (<= 3 per variable in every
// identity handled here, a few more during peeling).
constexpr int kMaxPolyVars = 8;
using Mono = std::array<uint8_t, kMaxPolyVars>;

template <class Ring>
class Poly {
 public:
  using Elt = typename Ring::Elt;

  Poly() = default;
  explicit Poly(Ring r) : ring_(r) {}

  static Poly constant(Ring r, Elt c) {
    Poly p(r);
    if (!r.is_zero(c)) p.terms_[Mono{}] = c;
    return p;
  }

  static Poly variable(Ring r, int idx, Elt coeff) {
    Poly p(r);
    if (idx < 0 || idx >= kMaxPolyVars) throw std::out_of_range("Poly variable index");
    if (!r.is_zero(coeff)) {
      Mono m{};
      m[idx] = 1;
      p.terms_[m] = coeff;
    }
    return p;
  }

  const std::map<Mono, Elt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Ring ring() const { return ring_; }

  Elt coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, ring_.neg(c));
    return r;
  }

  Poly operator*(const Poly& o) const {
    Poly r(ring_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Mono m{};
        for (int i = 0; i < kMaxPolyVars; ++i) {
          int e = m1[i] + m2[i];
          if (e > 255) throw std::overflow_error("Poly exponent overflow");
          m[i] = static_cast<uint8_t>(e);
        }
        r.add_term(m, ring_.mul(c1, c2));
      }
    return r;
  }

  Poly scaled(Elt c) const {
    Poly r(ring_);
    if (ring_.is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, ring_.mul(v, c));
    return r;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Substitutes values for every variable.
  Elt evaluate(const std::vector<Elt>& vals) const {
    Elt acc = ring_.zero();
    for (const auto& [m, c] : terms_) {
      Elt t = c;
      for (int i = 0; i < kMaxPolyVars; ++i)
        for (int e = 0; e < m[i]; ++e) {
          if (i >= static_cast<int>(vals.size()))
            throw std::out_of_range("Poly::evaluate missing value");
          t = ring_.mul(t, vals[i]);
        }
      acc = ring_.add(acc, t);
    }
    return acc;
  }

  // The sub-polynomial of all terms whose exponents in the watched variables
  // match the given monomial exactly, with those variables stripped.
  Poly coefficient_of(const Mono& target, const std::vector<int>& watched) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      bool match = true;
      for (int v : watched)
        if (m[v] != target[v]) { match = false; break; }
      if (!match) continue;
      Mono stripped = m;
      for (int v : watched) stripped[v] = 0;
      r.add_term(stripped, c);
    }
    return r;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
  }

  void add_term(const Mono& m, Elt c) {
    if (ring_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += coeff_str(c);
      for (int i = 0; i < kMaxPolyVars; ++i) {
        if (m[i] == 0) continue;
        s += "*" + (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
        if (m[i] > 1) s += "^" + std::to_string(static_cast<int>(m[i]));
      }
    }
    return s;
  }

 private:
  Ring ring_{};
  std::map<Mono, Elt> terms_;

  static std::string coeff_str(long long c) { return std::to_string(c); }
  static std::string coeff_str(int c) { return std::to_string(c); }
};

// Ring of polynomials, so matrices over polynomials reuse the Mat template.
template <class Base>
struct PolyRing {
  Base base{};
  using Elt = Poly<Base>;
  PolyRing() = default;
  explicit PolyRing(Base b) : base(b) {}
  Elt zero() const { return Poly<Base>(base); }
  Elt one() const { return Poly<Base>::constant(base, base.one()); }
  bool is_zero(const Elt& a) const { return a.is_zero(); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return zero() - a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt from_int(long long n) const { return Poly<Base>::constant(base, base.from_int(n)); }
};

// Dense square matrix over an arbitrary ring.
template <class Ring>
class Mat {
 public:
  using Elt = typename Ring::Elt;

  Mat() = default;
  Mat(Ring r, int n) : ring_(r), n_(n), a_(static_cast<size_t>(n) * n, r.zero()) {}

  static Mat identity(Ring r, int n) {
    Mat m(r, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
  }

  int size() const { return n_; }
  Ring ring() const { return ring_; }

  Elt& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Elt& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  Mat mul(const Mat& o) const {
    Mat r(ring_, n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Elt& v = at(i, k);
        if (ring_.is_zero(v)) continue;
        for (int j = 0; j < n_; ++j) {
          if (ring_.is_zero(o.at(k, j))) continue;
          r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(v, o.at(k, j)));
        }
      }
    return r;
  }

  std::vector<Elt> apply(const std::vector<Elt>& v) const {
    std::vector<Elt> r(n_, ring_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (ring_.is_zero(at(i, j)) || ring_.is_zero(v[j])) continue;
        r[i] = ring_.add(r[i], ring_.mul(at(i, j), v[j]));
      }
    return r;
  }

  Mat transpose() const {
    Mat r(ring_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j) {
          if (!(at(i, j) == ring_.one())) return false;
        } else if (!ring_.is_zero(at(i, j))) {
          return false;
        }
      }
    return true;
  }

 private:
  Ring ring_{};
  int n_ = 0;
  std::vector<Elt> a_;
};

// Entrywise image of an integer matrix in another ring.
template <class Ring>
Mat<Ring> embed_matrix(Ring r, const Mat<ZRing>& m) {
  Mat<Ring> out(r, m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.at(i, j) = r.from_int(m.at(i, j));
  return out;
}

// Row rank over a field ring (GFRing).
template <class Ring>
int field_rank(Mat<Ring> a) {
  Ring R = a.ring();
  int n = a.size(), rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!R.is_zero(a.at(r, c))) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    typename Ring::Elt inv = R.F->inv(a.at(rank, c));
    for (int j = 0; j < n; ++j) a.at(rank, j) = R.mul(a.at(rank, j), inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || R.is_zero(a.at(r, c))) continue;
      typename Ring::Elt f = a.at(r, c);
      for (int j = 0; j < n; ++j) a.at(r, j) = R.sub(a.at(r, j), R.mul(f, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

// Gaussian inverse over a field ring (GFRing); throws if singular.
template <class Ring>
Mat<Ring> field_inverse(const Mat<Ring>& m) {
  Ring R = m.ring();
  int n = m.size();
  Mat<Ring> a = m, inv = Mat<Ring>::identity(R, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!R.is_zero(a.at(r, c))) { piv = r; break; }
    if (piv < 0) throw std::domain_error("field_inverse: singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    // scale row c to make pivot 1: multiply by inverse (field!)
    typename Ring::Elt pv = a.at(c, c);
    typename Ring::Elt pv_inv = R.F->inv(pv);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) = R.mul(a.at(c, j), pv_inv);
      inv.at(c, j) = R.mul(inv.at(c, j), pv_inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || R.is_zero(a.at(r, c))) continue;
      typename Ring::Elt f = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = R.sub(a.at(r, j), R.mul(f, a.at(c, j)));
        inv.at(r, j) = R.sub(inv.at(r, j), R.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

}  // namespace exlie
