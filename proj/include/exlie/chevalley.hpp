// Chevalley basis of the Lie algebra attached to a root system: integral
// structure constants with every extraspecial sign positive (Carter's
// convention), divided-power adjoint matrices, generator actions on the
// algebra and its dual over exact and finite-field domains, group commutator
// constants, the invariant bilinear forms of the two exceptional types, and
// centralizer dimensions.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "exlie/exact.hpp"
#include "exlie/gf.hpp"
#include "exlie/poly.hpp"
#include "exlie/rootsys.hpp"

namespace exlie {

// Basis order: e_gamma for each root index gamma (positives first, as in the
// root system), then h_i for each simple coroot. The dual basis is indexed
// the same way, with e'_gamma dual to e_{-gamma} and h'_i dual to h_i; this
// matches the convention in which {e'_gamma : gamma > 0} spans n*.
class Chevalley {
 public:
  explicit Chevalley(const RootSystem& R) : R_(&R) { build(); }

  const RootSystem& roots() const { return *R_; }
  int dim() const { return R_->num_roots() + R_->rank(); }
  int e_index(int root) const { return root; }
  int h_index(int i) const { return R_->num_roots() + i; }

  // Root index of root(r) + root(s), or -1 when the sum is not a root.
  int sum_index(int r, int s) const {
    std::vector<int> v = R_->root(r);
    const auto& w = R_->root(s);
    for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    return R_->index_of(v);
  }

  // p in the r-string through s: the largest k with s - k r a root.
  int string_down(int r, int s) const {
    int p = 0, cur = s;
    while (true) {
      std::vector<int> v = R_->root(cur);
      const auto& w = R_->root(r);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
      int idx = R_->index_of(v);
      if (idx < 0) return p;
      cur = idx;
      ++p;
    }
  }

  // Bracket constant: [e_r, e_s] = N(r,s) e_{r+s} when r+s is a root.
  long long N(int r, int s) const { return nmat_.at(r, s); }

  // [x_a, x_b] of two basis elements as a sparse vector.
  std::vector<std::pair<int, long long>> bracket(int a, int b) const {
    std::vector<std::pair<int, long long>> out;
    int nr = R_->num_roots();
    if (a >= nr && b >= nr) return out;  // Cartan is abelian
    if (a >= nr) {  // [h_i, e_b] = <b, alpha_i^vee> e_b
      long long c = R_->cartan_pairing(b, R_->simple(a - nr));
      if (c) out.emplace_back(b, c);
      return out;
    }
    if (b >= nr) {
      long long c = R_->cartan_pairing(a, R_->simple(b - nr));
      if (c) out.emplace_back(a, -c);
      return out;
    }
    if (b == R_->negate(a)) {  // [e_r, e_{-r}] = h_r in simple coroots
      const auto& cr = R_->coroot(a);
      for (int i = 0; i < R_->rank(); ++i)
        if (cr[i]) out.emplace_back(h_index(i), static_cast<long long>(cr[i]));
      return out;
    }
    int t = sum_index(a, b);
    if (t >= 0) out.emplace_back(t, nmat_.at(a, b));
    return out;
  }

  // ad(e_r) over the integers.
  const Mat<ZRing>& ad_e(int r) const { return dpow_[r][1]; }

  // i-th divided power (ad e_r)^i / i!; index 0 is the identity.
  const Mat<ZRing>& divided_power(int r, int i) const {
    if (i >= static_cast<int>(dpow_[r].size())) return zero_;
    return dpow_[r][i];
  }
  int num_divided_powers(int r) const { return static_cast<int>(dpow_[r].size()); }

  // Coefficient of e_{i a + b} in Ad(x_a(t)) e_b, per power of t.
  long long M(int a, int b, int i) const {
    const Mat<ZRing>& d = divided_power(a, i);
    if (d.size() == 0) return 0;
    std::vector<int> v = R_->root(b);
    const auto& w = R_->root(a);
    for (size_t k = 0; k < v.size(); ++k) v[k] += i * w[k];
    int row = R_->index_of(v);
    return row < 0 ? 0 : d.at(row, b);
  }

  // Ad(n_r) over the integers, n_r = x_r(1) x_{-r}(-1) x_r(1).
  const Mat<ZRing>& ad_n(int r) const { return adn_[r]; }

  // Ad(n_a) e_b = eta(a,b) e_{w_a(b)}; the sign is +-1 by construction.
  long long eta(int a, int b) const { return adn_[a].at(R_->reflect(b, a), b); }

 private:
  const RootSystem* R_;
  IntMat nmat_;                               // N constants, 0 where undefined
  std::vector<std::vector<Mat<ZRing>>> dpow_;  // per root: divided powers of ad
  std::vector<Mat<ZRing>> adn_;
  Mat<ZRing> zero_;

  long long n_positive(int u, int v) const { return nmat_.at(u, v); }

  // N for any sign pattern, reading only positive pairs of smaller height
  // from the table filled so far.
  long long n_lookup(int x, int y) const {
    int npos = R_->num_pos();
    bool px = x < npos, py = y < npos;
    if (px && py) return nmat_.at(x, y);
    if (!px && !py) return -n_lookup(R_->negate(x), R_->negate(y));
    if (!px) return -n_lookup_mixed(y, x);  // x negative, y positive
    return n_lookup_mixed(x, y);
  }

  // x positive, y negative, x+y a root; reduce through the cyclic identity
  // N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y) with z = -x-y.
  long long n_lookup_mixed(int x, int y) const {
    int s = sum_index(x, y);
    if (s < 0) return 0;
    int z = R_->negate(s);
    long long num, den;
    if (s < R_->num_pos()) {  // z negative: (y,z) -> positive pair (-y,-z)
      num = R_->norm(z) * (-n_positive(R_->negate(y), R_->negate(z)));
      den = R_->norm(x);
    } else {  // z positive: (z,x) is a positive pair
      num = R_->norm(z) * n_positive(z, x);
      den = R_->norm(y);
    }
    if (num % den != 0) throw std::logic_error("non-integral structure constant");
    return num / den;
  }

  void build() {
    int nr = R_->num_roots(), npos = R_->num_pos();
    nmat_ = IntMat(nr, nr);

    // Positive pairs, by increasing height of the sum (root index order).
    for (int t = 0; t < npos; ++t) {
      if (R_->height(t) < 2) continue;
      // pairs u <= v with u + v = t; the extraspecial pair minimizes u
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < npos; ++u) {
        std::vector<int> w = R_->root(t);
        const auto& cu = R_->root(u);
        for (size_t i = 0; i < w.size(); ++i) w[i] -= cu[i];
        int v = R_->index_of(w);
        if (v >= 0 && v < npos && u <= v) pairs.emplace_back(u, v);
      }
      if (pairs.empty()) throw std::logic_error("positive root with no additive decomposition");
      auto [r, s] = pairs.front();
      nmat_.at(r, s) = string_down(r, s) + 1;
      nmat_.at(s, r) = -nmat_.at(r, s);
      // remaining pairs via the Jacobi identity on (-r, u, v), whose other
      // terms involve only sums of smaller height plus the extraspecial N
      long long nt_mr = -(R_->norm(s) * nmat_.at(r, s));
      if (nt_mr % R_->norm(t) != 0) throw std::logic_error("non-integral structure constant");
      nt_mr /= R_->norm(t);
      for (size_t k = 1; k < pairs.size(); ++k) {
        auto [u, v] = pairs[k];
        long long acc = 0;
        int umr = sum_index(u, R_->negate(r));
        if (umr >= 0) acc += n_lookup(R_->negate(r), u) * n_lookup(umr, v);
        int vmr = sum_index(v, R_->negate(r));
        if (vmr >= 0) acc += n_lookup(v, R_->negate(r)) * n_lookup(vmr, u);
        if (acc % nt_mr != 0) throw std::logic_error("non-integral structure constant");
        nmat_.at(u, v) = -acc / nt_mr;
        nmat_.at(v, u) = acc / nt_mr;
      }
    }
    // Extend to all sign patterns and check |N| = p + 1 throughout.
    IntMat full(nr, nr);
    for (int x = 0; x < nr; ++x)
      for (int y = 0; y < nr; ++y) {
        if (y == R_->negate(x) || sum_index(x, y) < 0) continue;
        full.at(x, y) = n_lookup(x, y);
        if (std::abs(full.at(x, y)) != string_down(x, y) + 1)
          throw std::logic_error("structure constant magnitude violates root string");
      }
    nmat_ = full;

    // Divided powers of ad(e_r): exact integer matrices, division asserted.
    int d = dim();
    zero_ = Mat<ZRing>(ZRing{}, 0);
    dpow_.resize(nr);
    for (int r = 0; r < nr; ++r) {
      Mat<ZRing> ad(ZRing{}, d);
      for (int b = 0; b < d; ++b)
        for (auto& [row, c] : bracket(r, b)) ad.at(row, b) += c;
      dpow_[r].push_back(Mat<ZRing>::identity(ZRing{}, d));
      dpow_[r].push_back(ad);
      for (int i = 2;; ++i) {
        Mat<ZRing> next = dpow_[r][i - 1].mul(ad);
        bool nonzero = false;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            if (next.at(a, b) % i != 0) throw std::logic_error("divided power not integral");
            next.at(a, b) /= i;
            nonzero |= next.at(a, b) != 0;
          }
        if (!nonzero) break;
        dpow_[r].push_back(next);
        if (i > 8) throw std::logic_error("ad nilpotency bound exceeded");
      }
    }

    // Ad(n_r) and the eta signs.
    adn_.reserve(nr);
    for (int r = 0; r < nr; ++r) {
      Mat<ZRing> m = ad_x_int(r, 1).mul(ad_x_int(R_->negate(r), -1)).mul(ad_x_int(r, 1));
      for (int b = 0; b < nr; ++b) {
        int w = R_->reflect(b, r);
        for (int a = 0; a < d; ++a)
          if ((a == w) ? (std::abs(m.at(a, b)) != 1) : (m.at(a, b) != 0))
            throw std::logic_error("Ad(n) is not a signed permutation on root vectors");
      }
      adn_.push_back(std::move(m));
    }
  }

 public:
  // Ad(x_r(t)) over the integers for an integer parameter.
  Mat<ZRing> ad_x_int(int r, long long t) const {
    Mat<ZRing> m = dpow_[r][0];
    long long tp = 1;
    for (size_t i = 1; i < dpow_[r].size(); ++i) {
      tp *= t;
      if (tp == 0) break;
      for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b) m.at(a, b) += tp * dpow_[r][i].at(a, b);
    }
    return m;
  }
};

// ---------------------------------------------------------------------------
// Generator matrices over an arbitrary coefficient ring.

template <class Ring>
Mat<Ring> adjoint_x(const Chevalley& C, Ring ring, int root, const typename Ring::Elt& t) {
  Mat<Ring> m = embed_matrix(ring, C.divided_power(root, 0));
  typename Ring::Elt tp = ring.one();
  for (int i = 1; i < C.num_divided_powers(root); ++i) {
    tp = ring.mul(tp, t);
    const Mat<ZRing>& d = C.divided_power(root, i);
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        if (d.at(a, b)) m.at(a, b) = ring.add(m.at(a, b), ring.mul(tp, ring.from_int(d.at(a, b))));
  }
  return m;
}

// Ad(h_root(t)): e_beta scales by t^{<beta, root^vee>}; trivial on the
// Cartan. t_inv must be the inverse of t (negative pairings occur).
template <class Ring>
Mat<Ring> adjoint_h(const Chevalley& C, Ring ring, int root, const typename Ring::Elt& t,
                    const typename Ring::Elt& t_inv) {
  const RootSystem& R = C.roots();
  Mat<Ring> m = Mat<Ring>::identity(ring, C.dim());
  for (int b = 0; b < R.num_roots(); ++b) {
    int a = R.cartan_pairing(b, root);
    typename Ring::Elt v = ring.one();
    for (int i = 0; i < std::abs(a); ++i) v = ring.mul(v, a > 0 ? t : t_inv);
    m.at(b, b) = v;
  }
  return m;
}

template <class Ring>
Mat<Ring> adjoint_n(const Chevalley& C, Ring ring, int root) {
  return embed_matrix(ring, C.ad_n(root));
}

// ---------------------------------------------------------------------------
// Coadjoint matrices: with e'_gamma dual to e_{-gamma} and h'_i dual to h_i,
// the coadjoint matrix of g is J (Ad(g^{-1}))^T J where J swaps e-indices
// with their negatives.

template <class Ring>
Mat<Ring> dualize(const Chevalley& C, const Mat<Ring>& ad_g_inv) {
  const RootSystem& R = C.roots();
  int d = C.dim(), nr = R.num_roots();
  auto flip = [&](int i) { return i < nr ? R.negate(i) : i; };
  Mat<Ring> m(ad_g_inv.ring(), d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) m.at(a, b) = ad_g_inv.at(flip(b), flip(a));
  return m;
}

template <class Ring>
Mat<Ring> coadjoint_x(const Chevalley& C, Ring ring, int root, const typename Ring::Elt& t) {
  return dualize(C, adjoint_x(C, ring, root, ring.neg(t)));
}

template <class Ring>
Mat<Ring> coadjoint_h(const Chevalley& C, Ring ring, int root, const typename Ring::Elt& t,
                      const typename Ring::Elt& t_inv) {
  return dualize(C, adjoint_h(C, ring, root, t_inv, t));
}

template <class Ring>
Mat<Ring> coadjoint_n(const Chevalley& C, Ring ring, int root) {
  // n^{-1} = x(-1) x_-(1) x(-1)
  const RootSystem& R = C.roots();
  Mat<ZRing> inv =
      C.ad_x_int(root, -1).mul(C.ad_x_int(R.negate(root), 1)).mul(C.ad_x_int(root, -1));
  return dualize(C, embed_matrix(ring, inv));
}

// ---------------------------------------------------------------------------
// Membership predicates on dual vectors (coordinates in the primed basis).

template <class Ring>
bool in_n_star(const Chevalley& C, Ring ring, const std::vector<typename Ring::Elt>& xi) {
  for (int i = C.roots().num_pos(); i < C.dim(); ++i)
    if (!ring.is_zero(xi[i])) return false;
  return true;
}

template <class Ring>
bool in_b_star(const Chevalley& C, Ring ring, const std::vector<typename Ring::Elt>& xi) {
  // vanishes on n: no e'_gamma component with gamma negative
  const RootSystem& R = C.roots();
  for (int i = R.num_pos(); i < R.num_roots(); ++i)
    if (!ring.is_zero(xi[i])) return false;
  return true;
}

// l* = {zeta : zeta(n_P + n_P^-) = 0} for the Levi spanned by the given
// ambient simple indices: support only on Levi roots and the Cartan.
template <class Ring>
bool in_l_star(const Chevalley& C, Ring ring, const std::vector<int>& levi,
               const std::vector<typename Ring::Elt>& xi) {
  const RootSystem& R = C.roots();
  std::vector<bool> allowed(R.num_roots(), false);
  for (int r : R.subsystem_roots(levi)) allowed[r] = true;
  for (int i = 0; i < R.num_roots(); ++i)
    if (!allowed[i] && !ring.is_zero(xi[i])) return false;
  return true;
}

// n_P* = {zeta : zeta(l + n_P) = 0}: support only on e'_gamma for gamma a
// positive root outside the Levi subsystem.
template <class Ring>
bool in_np_star(const Chevalley& C, Ring ring, const std::vector<int>& levi,
                const std::vector<typename Ring::Elt>& xi) {
  const RootSystem& R = C.roots();
  std::vector<bool> levi_root(R.num_roots(), false);
  for (int r : R.subsystem_roots(levi)) levi_root[r] = true;
  for (int i = 0; i < C.dim(); ++i) {
    bool ok = i < R.num_pos() && !levi_root[i];
    if (!ok && !ring.is_zero(xi[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Group commutator constants: x_a(s)^{-1} x_b(t)^{-1} x_a(s) x_b(t) written
// as an ordered product of x_{i b + j a}(c (-t)^i s^j), i, j > 0, factors in
// the root order of R.

struct CommutatorTerm {
  int root;     // index of i*b + j*a
  int i, j;
  long long c;
};

inline std::vector<CommutatorTerm> commutator_constants(const Chevalley& C, int a, int b) {
  const RootSystem& R = C.roots();
  if (b == a || b == R.negate(a)) throw std::invalid_argument("commutator needs b != +-a");
  using PR = PolyRing<ZRing>;
  PR ring{};
  auto X = [&](int r, const Poly<ZRing>& p) {
    // Ad(x_r(p)) over Z[s,t]
    Mat<PR> m = embed_matrix(ring, C.divided_power(r, 0));
    Poly<ZRing> pp = ring.one();
    for (int i = 1; i < C.num_divided_powers(r); ++i) {
      pp = pp * p;
      const Mat<ZRing>& d = C.divided_power(r, i);
      for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
          if (d.at(x, y)) m.at(x, y) = m.at(x, y) + pp.scaled(d.at(x, y));
    }
    return m;
  };
  Poly<ZRing> s = Poly<ZRing>::variable(ZRing{}, 0, 1);
  Poly<ZRing> t = Poly<ZRing>::variable(ZRing{}, 1, 1);
  Poly<ZRing> zero(ZRing{});
  Mat<PR> q = X(a, zero - s).mul(X(b, zero - t)).mul(X(a, s)).mul(X(b, t));

  // Peel off factors in increasing root order; the h-row of the column of
  // e_{-gamma} reads the parameter of the leading remaining factor exactly.
  std::vector<CommutatorTerm> out;
  for (int g = 0; g < R.num_pos(); ++g) {
    // g must be of the form i*b + j*a with i, j > 0
    bool expressible = false;
    int gi = 0, gj = 0;
    for (int i = 1; i <= 6 && !expressible; ++i)
      for (int j = 1; j <= 6 && !expressible; ++j) {
        std::vector<int> v(R.rank(), 0);
        for (int k = 0; k < R.rank(); ++k) v[k] = i * R.root(b)[k] + j * R.root(a)[k];
        if (R.index_of(v) == g) {
          expressible = true;
          gi = i;
          gj = j;
        }
      }
    if (!expressible) continue;
    int probe = -1;
    for (int k = 0; k < R.rank(); ++k)
      if (R.coroot(g)[k]) { probe = k; break; }
    Poly<ZRing> entry = q.at(C.h_index(probe), R.negate(g));
    long long den = R.coroot(g)[probe];
    Poly<ZRing> param(ZRing{});
    for (const auto& [m, c] : entry.terms()) {
      if (c % den != 0) throw std::logic_error("commutator peel: non-integral parameter");
      param.add_term(m, c / den);
    }
    if (param.is_zero()) continue;
    q = X(g, zero - param).mul(q);
    // the parameter must be a single monomial c (-t)^i s^j
    if (param.terms().size() != 1) throw std::logic_error("commutator peel: non-monomial");
    const auto& [mono, coeff] = *param.terms().begin();
    if (mono[0] != gj || mono[1] != gi) throw std::logic_error("commutator peel: wrong monomial");
    long long c = coeff * ((gi % 2) ? -1 : 1);  // strip the (-t)^i sign
    out.push_back({g, gi, gj, c});
  }
  if (!q.is_identity()) throw std::logic_error("commutator peel: residue is not the identity");
  return out;
}

// ---------------------------------------------------------------------------
// The invariant symmetric bilinear forms of Lemma-type normalization: on G2
// (e_l, e_{-l}) is 3 for short l and 1 for long, on F4 it is 2 and 1, and
// the Cartan block follows from invariance, (h_i, h_j) = <a_j, a_i^vee> k_j.

inline IntMat bilinear_form(const Chevalley& C) {
  const RootSystem& R = C.roots();
  char letter = R.type().factors.size() == 1 ? R.type().factors[0].letter : 0;
  if (letter != 'G' && letter != 'F')
    throw std::invalid_argument("bilinear form is provided for G2 and F4 only");
  long long short_pair = letter == 'G' ? 3 : 2;
  IntMat B(C.dim(), C.dim());
  for (int r = 0; r < R.num_roots(); ++r)
    B.at(r, R.negate(r)) = R.is_long(r) ? 1 : short_pair;
  for (int i = 0; i < R.rank(); ++i)
    for (int j = 0; j < R.rank(); ++j) {
      long long kj = R.is_long(R.simple(j)) ? 1 : short_pair;
      B.at(C.h_index(i), C.h_index(j)) = R.cartan_pairing(R.simple(j), R.simple(i)) * kj;
    }
  for (int i = 0; i < C.dim(); ++i)
    for (int j = 0; j < i; ++j)
      if (B.at(i, j) != B.at(j, i)) throw std::logic_error("bilinear form not symmetric");
  return B;
}

struct FormCheck {
  int gram_rank = 0;
  bool invariant = false;
};

// Rank of the form over F_p and invariance under the adjoint generator
// matrices x_gamma(1), n_gamma, h_gamma(t) for t a generator of F_p^*.
inline FormCheck check_form(const Chevalley& C, const IntMat& B, int p) {
  FormCheck out;
  out.gram_rank = rank_mod_p(B, p);
  GF F(p, 1);
  GFRing ring(F);
  Mat<GFRing> Bp(ring, C.dim());
  for (int i = 0; i < C.dim(); ++i)
    for (int j = 0; j < C.dim(); ++j) Bp.at(i, j) = F.from_int(B.at(i, j));
  out.invariant = true;
  auto check = [&](const Mat<GFRing>& g) {
    if (!(g.transpose().mul(Bp).mul(g) == Bp)) out.invariant = false;
  };
  for (int r = 0; r < C.roots().num_roots(); ++r) {
    check(adjoint_x(C, ring, r, F.one()));
    check(adjoint_n(C, ring, r));
    int t = F.q() > 2 ? F.generator() : F.one();
    check(adjoint_h(C, ring, r, t, F.inv(t)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer dimensions over F_{p^k}.

// dim of {y in g : [y, x] = 0}.
inline int lie_centralizer_dim_adjoint(const Chevalley& C, const GF& F,
                                       const std::vector<int>& x) {
  GFRing ring(F);
  int d = C.dim();
  Mat<GFRing> L(ring, d);  // column b = [y_b, x]
  for (int b = 0; b < d; ++b)
    for (int a = 0; a < d; ++a) {
      if (F.is_zero(x[a])) continue;
      for (auto& [row, c] : C.bracket(b, a))
        L.at(row, b) = F.add(L.at(row, b), F.mul(x[a], F.from_int(c)));
    }
  return d - field_rank(L);
}

// dim of {y in g : y . xi = 0} for xi in g* (infinitesimal coadjoint action,
// (y.xi)(z) = -xi([y, z])).
inline int lie_centralizer_dim_coadjoint(const Chevalley& C, const GF& F,
                                         const std::vector<int>& xi) {
  const RootSystem& R = C.roots();
  GFRing ring(F);
  int d = C.dim(), nr = R.num_roots();
  auto flip = [&](int i) { return i < nr ? R.negate(i) : i; };
  Mat<GFRing> L(ring, d);  // column b = y_b . xi in the primed basis
  for (int b = 0; b < d; ++b)
    for (int z = 0; z < d; ++z)
      for (auto& [row, c] : C.bracket(b, z)) {
        // contribution -xi([y_b, z]) to the e'_{-z} (resp h'_z) slot
        int val = F.mul(xi[flip(row)], F.from_int(-c));
        L.at(flip(z), b) = F.add(L.at(flip(z), b), val);
      }
  return d - field_rank(L);
}

}  // namespace exlie
