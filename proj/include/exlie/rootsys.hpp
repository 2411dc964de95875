// Root systems of types A-D (rank <= 4), G2, F4 and finite products: roots,
// coroots, Cartan pairings, reflections, the theta-tilde subsets, and
// recognition of reflection subsystems by Cartan type.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlie/exact.hpp"

namespace exlie {

// Exact coordinates of v in the span of the columns of D (possibly fewer
// columns than rows): solve the normal equations (D^T D) c = D^T v by Cramer
// and insist the result is integral. Throws if the columns are dependent or
// the solution is not an integer vector.
inline std::vector<long long> integer_coords_in_basis(const IntMat& D,
                                                      const std::vector<long long>& v) {
  int n = D.rows, k = D.cols;
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector/basis size mismatch");
  IntMat dtd(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long s = 0;
      for (int t = 0; t < n; ++t) s += static_cast<long long>(D.at(t, i)) * D.at(t, j);
      dtd.at(i, j) = s;
    }
  BigInt d0 = det(dtd);
  if (d0 == 0) throw std::invalid_argument("basis columns are linearly dependent");
  std::vector<long long> rhs(k, 0);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < n; ++t) rhs[i] += static_cast<long long>(D.at(t, i)) * v[t];
  std::vector<long long> coords(k);
  for (int j = 0; j < k; ++j) {
    IntMat m = dtd;
    for (int i = 0; i < k; ++i) m.at(i, j) = rhs[i];
    BigInt dj = det(m);
    if (dj % d0 != 0) throw std::invalid_argument("vector has non-integral coordinates");
    coords[j] = static_cast<long long>(dj / d0);
  }
  return coords;
}

struct CartanFactor {
  char letter = 0;  // 'A', 'B', 'C', 'D', 'G', 'F'
  int rank = 0;
  bool operator==(const CartanFactor& o) const { return letter == o.letter && rank == o.rank; }
  bool operator<(const CartanFactor& o) const {
    if (rank != o.rank) return rank > o.rank;
    return letter < o.letter;
  }
};

// A Cartan type: one or more irreducible factors, canonically sorted
// (descending rank, then letter).
struct CartanType {
  std::vector<CartanFactor> factors;

  static CartanType parse(const std::string& s) {
    CartanType t;
    size_t i = 0;
    while (i < s.size()) {
      char letter = s[i];
      if (letter == 'x' || letter == '*' || letter == '+') { ++i; continue; }
      if (letter < 'A' || letter > 'G')
        throw std::invalid_argument("unsupported Cartan type: " + s);
      ++i;
      if (i < s.size() && s[i] == '~') ++i;  // tilde markers are dropped here
      if (i >= s.size() || s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("missing rank in Cartan type: " + s);
      int rank = s[i] - '0';
      ++i;
      t.factors.push_back({letter, rank});
    }
    if (t.factors.empty()) throw std::invalid_argument("empty Cartan type");
    t.validate();
    t.canonicalize();
    return t;
  }

  void validate() const {
    for (const auto& f : factors) {
      bool ok = false;
      switch (f.letter) {
        case 'A': ok = f.rank >= 1 && f.rank <= 4; break;
        case 'B': ok = f.rank >= 2 && f.rank <= 4; break;
        case 'C': ok = f.rank >= 2 && f.rank <= 4; break;
        case 'D': ok = f.rank == 4; break;
        case 'G': ok = f.rank == 2; break;
        case 'F': ok = f.rank == 4; break;
        default: ok = false;
      }
      if (!ok)
        throw std::invalid_argument("unsupported Cartan factor: " + std::string(1, f.letter) +
                                    std::to_string(f.rank));
    }
  }

  void canonicalize() { std::stable_sort(factors.begin(), factors.end()); }

  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) s += "x";
      s += factors[i].letter;
      s += std::to_string(factors[i].rank);
    }
    return s;
  }

  bool operator==(const CartanType& o) const { return factors == o.factors; }
};

struct SubsystemFactor {
  char letter = 0;
  int rank = 0;
  bool tilde = false;            // all roots short inside a two-length ambient system
  std::vector<int> simples;      // ambient root indices, canonical factor order
};

struct Subsystem {
  std::vector<SubsystemFactor> factors;

  std::string type_string() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) s += "x";
      s += factors[i].letter;
      if (factors[i].tilde) s += "~";
      s += std::to_string(factors[i].rank);
    }
    return s;
  }

  CartanType abstract_type() const {
    CartanType t;
    for (const auto& f : factors) t.factors.push_back({f.letter, f.rank});
    t.canonicalize();
    return t;
  }

  std::vector<int> all_simples() const {
    std::vector<int> r;
    for (const auto& f : factors) r.insert(r.end(), f.simples.begin(), f.simples.end());
    return r;
  }

  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
};

class RootSystem {
 public:
  explicit RootSystem(const CartanType& type) : type_(type) { build(); }
  explicit RootSystem(const std::string& type) : RootSystem(CartanType::parse(type)) {}

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int num_pos() const { return npos_; }
  int num_roots() const { return 2 * npos_; }

  // Root coordinates in the simple-root basis. Positive roots occupy indices
  // [0, num_pos) ordered by height then descending-lex; root(i + num_pos) is
  // the negative of root(i).
  const std::vector<int>& root(int idx) const { return roots_[idx]; }
  // Coroot coordinates in the simple-coroot basis.
  const std::vector<int>& coroot(int idx) const { return coroots_[idx]; }

  int negate(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  bool is_positive(int idx) const { return idx < npos_; }
  int height(int idx) const {
    const auto& c = roots_[idx];
    return std::accumulate(c.begin(), c.end(), 0);
  }

  int index_of(const std::vector<int>& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
  }

  // Index of the i-th simple root (equals i by the fixed order; asserted).
  int simple(int i) const { return i; }

  long long norm(int idx) const { return inner(idx, idx); }
  bool is_long(int idx) const { return norm(idx) == factor_max_norm_[factor_of_root(idx)]; }
  bool is_short(int idx) const { return !is_long(idx); }
  int factor_of_root(int idx) const {
    const auto& c = roots_[idx];
    for (int j = 0; j < rank_; ++j)
      if (c[j] != 0) return factor_of_col_[j];
    throw std::logic_error("zero root");
  }
  int num_factors() const { return static_cast<int>(factor_cols_.size()); }
  bool factor_two_lengths(int f) const { return factor_two_lengths_[f]; }

  long long inner(int a, int b) const {
    const auto& x = roots_[a];
    const auto& y = roots_[b];
    long long s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < rank_; ++j) s += static_cast<long long>(x[i]) * gram_.at(i, j) * y[j];
    }
    return s;
  }

  // <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha); always an integer.
  int cartan_pairing(int beta, int alpha) const {
    long long two_ba = 2 * inner(beta, alpha);
    long long aa = norm(alpha);
    if (two_ba % aa != 0) throw std::logic_error("non-integral Cartan pairing");
    return static_cast<int>(two_ba / aa);
  }

  const IntMat& cartan_matrix() const { return cartan_; }

  // s_{by}(of): reflection of a root in another root; result is a root index.
  int reflect(int of, int by) const {
    int c = cartan_pairing(of, by);
    std::vector<int> v = roots_[of];
    const auto& b = roots_[by];
    for (int i = 0; i < rank_; ++i) v[i] -= c * b[i];
    int idx = index_of(v);
    if (idx < 0) throw std::logic_error("reflection left the root system");
    return idx;
  }

  // Roots beta with beta^vee - alpha^vee not a coroot for any simple alpha.
  std::vector<int> theta_tilde() const {
    return theta_tilde_of(all_root_indices(), simple_indices());
  }

  // Same test inside the subsystem spanned by sub_roots (all of its roots, as
  // ambient indices) with simple system sub_simples.
  std::vector<int> theta_tilde_of(const std::vector<int>& sub_roots,
                                  const std::vector<int>& sub_simples) const {
    std::set<std::vector<int>> coroot_set;
    for (int i : sub_roots) coroot_set.insert(coroots_[i]);
    std::vector<int> out;
    for (int b : sub_roots) {
      bool ok = true;
      for (int a : sub_simples) {
        std::vector<int> d = coroots_[b];
        for (int i = 0; i < rank_; ++i) d[i] -= coroots_[a][i];
        if (coroot_set.count(d)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(b);
    }
    return out;
  }

  struct SubsetJ {
    std::vector<int> roots;  // ambient root indices, ascending
    BigInt index;            // coroot-lattice index = |det| in coroot coordinates
    Subsystem sub;
  };

  // Linearly independent rank-size subsets of theta_tilde whose coroot-lattice
  // index is a positive power of the prime r.
  std::vector<SubsetJ> theta_tilde_r(int r) const {
    return theta_tilde_r_of(all_root_indices(), simple_indices(), r);
  }

  // Same enumeration inside a subsystem: the index is taken in the coroot
  // lattice of the subsystem, i.e. determinants are computed in the basis of
  // sub_simples coroots.
  std::vector<SubsetJ> theta_tilde_r_of(const std::vector<int>& sub_roots,
                                        const std::vector<int>& sub_simples, int r) const {
    std::vector<int> theta = theta_tilde_of(sub_roots, sub_simples);
    int m = static_cast<int>(sub_simples.size());
    IntMat D(rank_, m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < rank_; ++i) D.at(i, j) = coroots_[sub_simples[j]][i];
    std::map<int, std::vector<long long>> coords;
    for (int b : theta) {
      std::vector<long long> v(coroots_[b].begin(), coroots_[b].end());
      coords[b] = integer_coords_in_basis(D, v);
    }
    std::vector<SubsetJ> out;
    std::vector<int> comb;
    enumerate_combinations(theta, m, 0, comb, [&](const std::vector<int>& J) {
      IntMat mat(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat.at(i, j) = coords.at(J[i])[j];
      BigInt d = det(mat);
      if (d < 0) d = -d;
      if (d <= 1) return;  // dependent (0) or index 1 (k must be positive)
      BigInt v = d;
      while (v % r == 0) v /= r;
      if (v != 1) return;
      SubsetJ s;
      s.roots = J;
      s.index = d;
      s.sub = recognize(J);
      out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end(),
              [](const SubsetJ& a, const SubsetJ& b) { return a.roots < b.roots; });
    return out;
  }

  std::vector<int> all_root_indices() const {
    std::vector<int> v(num_roots());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  std::vector<int> simple_indices() const {
    std::vector<int> v(rank_);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  // Identify the reflection subsystem generated by roots J: compute the full
  // subsystem, a simple system for it, split into irreducible components and
  // match each component's Cartan data to a type.
  Subsystem recognize(const std::vector<int>& J) const;

  // All roots gamma whose reflection lies in the group generated by the
  // reflections at J (the subsystem R_J), as ambient indices.
  std::vector<int> subsystem_roots(const std::vector<int>& J) const;

  // Standard Levi subsets: find the subset of simple roots whose recognized
  // type string matches `name` as a multiset of factors ("B3", "A~2xA1", ...).
  std::vector<int> levi_by_name(const std::string& name) const;

 private:
  CartanType type_;
  int rank_ = 0;
  int npos_ = 0;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, int> index_;
  IntMat cartan_;  // cartan_(i,j) = <alpha_j, alpha_i^vee>
  IntMat gram_;    // (alpha_i, alpha_j), integral by the chosen normalizations
  std::vector<int> factor_of_col_;
  std::vector<std::vector<int>> factor_cols_;
  std::vector<long long> factor_max_norm_;
  std::vector<bool> factor_two_lengths_;

  template <class F>
  static void enumerate_combinations(const std::vector<int>& pool, int k, size_t start,
                                     std::vector<int>& cur, F&& f) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      enumerate_combinations(pool, k, i + 1, cur, f);
      cur.pop_back();
    }
  }

  static void factor_cartan_and_norms(const CartanFactor& f, IntMat& cartan,
                                      std::vector<long long>& norms) {
    int n = f.rank;
    cartan = IntMat(n, n);
    norms.assign(n, 2);
    for (int i = 0; i < n; ++i) cartan.at(i, i) = 2;
    auto edge = [&](int i, int j) { cartan.at(i, j) = -1; cartan.at(j, i) = -1; };
    switch (f.letter) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        break;
      case 'B':
        // long ... long short; <alpha_{n-2}, alpha_{n-1}^vee> = -2
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        cartan.at(n - 1, n - 2) = -2;
        norms.assign(n, 2);
        norms[n - 1] = 1;
        break;
      case 'C':
        // short ... short long; <alpha_{n-1}, alpha_{n-2}^vee> = -2
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        cartan.at(n - 2, n - 1) = -2;
        norms.assign(n, 2);
        norms[n - 1] = 4;
        break;
      case 'D':
        // node 1 is the branch point: edges (0,1), (1,2), (1,3)
        edge(0, 1);
        edge(1, 2);
        edge(1, 3);
        break;
      case 'G':
        // alpha short, beta long: <beta, alpha^vee> = -3
        cartan.at(0, 1) = -3;
        cartan.at(1, 0) = -1;
        norms = {2, 6};
        break;
      case 'F':
        // p, q long; r, s short; double bond between q and r
        edge(0, 1);
        edge(2, 3);
        cartan.at(1, 2) = -1;
        cartan.at(2, 1) = -2;
        norms = {4, 4, 2, 2};
        break;
      default:
        throw std::invalid_argument("bad factor");
    }
  }

  void build() {
    rank_ = type_.rank();
    cartan_ = IntMat(rank_, rank_);
    gram_ = IntMat(rank_, rank_);
    int off = 0;
    for (const auto& f : type_.factors) {
      IntMat c;
      std::vector<long long> norms;
      factor_cartan_and_norms(f, c, norms);
      int fidx = static_cast<int>(factor_cols_.size());
      std::vector<int> cols;
      for (int i = 0; i < f.rank; ++i) {
        cols.push_back(off + i);
        factor_of_col_.push_back(fidx);
        for (int j = 0; j < f.rank; ++j) cartan_.at(off + i, off + j) = c.at(i, j);
      }
      factor_cols_.push_back(cols);
      // gram(i,j) = cartan(i,j) * (alpha_i, alpha_i) / 2
      for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < f.rank; ++j) {
          long long v = c.at(i, j) * norms[i];
          if (v % 2 != 0) throw std::logic_error("non-integral Gram entry");
          gram_.at(off + i, off + j) = v / 2;
        }
      long long mx = *std::max_element(norms.begin(), norms.end());
      long long mn = *std::min_element(norms.begin(), norms.end());
      factor_max_norm_.push_back(mx);
      factor_two_lengths_.push_back(mx != mn);
      off += f.rank;
    }
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (gram_.at(i, j) != gram_.at(j, i)) throw std::logic_error("asymmetric Gram matrix");

    // Close the simple roots under all simple reflections.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> e(rank_, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    auto pairing_vec = [&](const std::vector<int>& v, int simple_i) {
      long long two_ba = 0;
      for (int j = 0; j < rank_; ++j) two_ba += 2LL * v[j] * gram_.at(j, simple_i);
      long long aa = gram_.at(simple_i, simple_i);
      if (two_ba % aa != 0) throw std::logic_error("non-integral pairing during closure");
      return static_cast<int>(two_ba / aa);
    };
    while (!queue.empty()) {
      std::vector<int> v = queue.back();
      queue.pop_back();
      for (int i = 0; i < rank_; ++i) {
        std::vector<int> w = v;
        int c = pairing_vec(v, i);
        w[i] -= c;
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::vector<std::vector<int>> pos;
    for (const auto& v : seen) {
      bool nonneg = true, nonpos = true;
      for (int x : v) {
        if (x < 0) nonneg = false;
        if (x > 0) nonpos = false;
      }
      if (!nonneg && !nonpos) throw std::logic_error("mixed-sign root");
      if (nonneg) pos.push_back(v);
    }
    std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      int ha = std::accumulate(a.begin(), a.end(), 0);
      int hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a > b;  // descending lex puts alpha_0 before alpha_1
    });
    npos_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const auto& v : pos) {
      std::vector<int> neg(v.size());
      for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      roots_.push_back(neg);
    }
    for (int i = 0; i < num_roots(); ++i) index_[roots_[i]] = i;
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> e(rank_, 0);
      e[i] = 1;
      if (index_[e] != i) throw std::logic_error("simple root order violated");
    }
    // Coroots: beta^vee = sum_j b_j (alpha_j,alpha_j)/(beta,beta) alpha_j^vee.
    coroots_.resize(num_roots());
    for (int i = 0; i < num_roots(); ++i) {
      long long bb = 0;
      const auto& v = roots_[i];
      for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) bb += static_cast<long long>(v[a]) * gram_.at(a, b) * v[b];
      std::vector<int> cv(rank_);
      for (int j = 0; j < rank_; ++j) {
        long long num = static_cast<long long>(v[j]) * gram_.at(j, j);
        if (num % bb != 0) throw std::logic_error("non-integral coroot coordinate");
        cv[j] = static_cast<int>(num / bb);
      }
      coroots_[i] = cv;
    }
  }
};

// Classifies one connected simple system inside an ambient root system and
// orders its members canonically for the recognized type.
inline SubsystemFactor classify_component(const RootSystem& R, std::vector<int> cs);

inline std::vector<int> RootSystem::subsystem_roots(const std::vector<int>& J) const {
  // Orbit closure: R_J is the smallest set containing J that is stable under
  // the reflections of its own members. For finite Weyl groups this equals
  // {gamma : s_gamma in W_J}.
  std::set<int> cur(J.begin(), J.end());
  for (int g : J) cur.insert(negate(g));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> elems(cur.begin(), cur.end());
    for (int a : elems)
      for (int b : elems) {
        int r = reflect(a, b);
        if (cur.insert(r).second) changed = true;
      }
  }
  return std::vector<int>(cur.begin(), cur.end());
}

inline Subsystem RootSystem::recognize(const std::vector<int>& J) const {
  std::vector<int> all = subsystem_roots(J);
  std::vector<int> pos;
  std::set<int> posset;
  for (int r : all)
    if (is_positive(r)) {
      pos.push_back(r);
      posset.insert(r);
    }
  // J-simple roots: positive members not a sum of two positive members.
  std::vector<int> simples;
  for (int r : pos) {
    bool decomposable = false;
    for (int a : pos) {
      if (a == r) continue;
      std::vector<int> d = roots_[r];
      for (int i = 0; i < rank_; ++i) d[i] -= roots_[a][i];
      int idx = index_of(d);
      if (idx >= 0 && posset.count(idx)) { decomposable = true; break; }
    }
    if (!decomposable) simples.push_back(r);
  }
  // Split into connected components under non-orthogonality.
  int m = static_cast<int>(simples.size());
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m; ++y)
        if (comp[y] < 0 && inner(simples[x], simples[y]) != 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  Subsystem out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> cs;
    for (int i = 0; i < m; ++i)
      if (comp[i] == c) cs.push_back(simples[i]);
    SubsystemFactor f = classify_component(*this, cs);
    out.factors.push_back(std::move(f));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const SubsystemFactor& a, const SubsystemFactor& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              if (a.letter != b.letter) return a.letter < b.letter;
              if (a.tilde != b.tilde) return !a.tilde;
              return a.simples < b.simples;
            });
  return out;
}

inline SubsystemFactor classify_component(const RootSystem& R, std::vector<int> cs) {
  std::sort(cs.begin(), cs.end());
  int n = static_cast<int>(cs.size());
  SubsystemFactor f;
  f.rank = n;
  int ambient_factor = R.factor_of_root(cs[0]);
  bool ambient_two = R.factor_two_lengths(ambient_factor);
  bool all_short = true;
  for (int r : cs)
    if (R.is_long(r)) all_short = false;
  f.tilde = ambient_two && all_short;

  auto bond = [&](int a, int b) {  // <a,b^vee> * <b,a^vee>: 0,1,2,3
    return R.cartan_pairing(cs[a], cs[b]) * R.cartan_pairing(cs[b], cs[a]);
  };
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  int max_bond = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = bond(i, j);
      if (m > 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++deg[i];
        ++deg[j];
        max_bond = std::max(max_bond, m);
      }
    }

  if (n == 1) {
    f.letter = 'A';
    f.simples = {cs[0]};
    return f;
  }

  bool has_branch = false;
  for (int i = 0; i < n; ++i)
    if (deg[i] >= 3) has_branch = true;

  if (has_branch) {
    // D4 is the only branched diagram within rank 4.
    if (n != 4 || max_bond != 1) throw std::logic_error("unrecognized branched diagram");
    f.letter = 'D';
    int center = -1;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 3) center = i;
    std::vector<int> legs;
    for (int i = 0; i < n; ++i)
      if (i != center) legs.push_back(cs[i]);
    std::sort(legs.begin(), legs.end());
    f.simples = {legs[0], cs[center], legs[1], legs[2]};
    return f;
  }

  // A path. Find its two endpoints and walk it; orient deterministically.
  std::vector<int> ends;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) ends.push_back(i);
  if (ends.size() != 2) throw std::logic_error("simple system is not a path");
  auto walk = [&](int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
      int nxt = -1;
      for (int y : adj[cur])
        if (y != prev) nxt = y;
      if (nxt < 0) throw std::logic_error("broken path");
      order.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return order;
  };

  if (max_bond == 1) {
    f.letter = 'A';
    // Orient by smaller ambient index at the head.
    std::vector<int> o = walk(cs[ends[0]] < cs[ends[1]] ? ends[0] : ends[1]);
    for (int i : o) f.simples.push_back(cs[i]);
    return f;
  }

  if (max_bond == 3) {
    if (n != 2) throw std::logic_error("triple bond outside rank 2");
    f.letter = 'G';
    // Canonical order: short then long (matches the standalone G2 layout).
    int a = cs[0], b = cs[1];
    if (R.norm(a) > R.norm(b)) std::swap(a, b);
    f.simples = {a, b};
    f.tilde = false;
    return f;
  }

  // One double bond. Locate it and read off long/short multiplicities.
  std::vector<int> o = walk(ends[0]);
  long long maxnorm = 0, minnorm = 0;
  {
    std::vector<long long> norms;
    for (int i : o) norms.push_back(R.norm(cs[i]));
    maxnorm = *std::max_element(norms.begin(), norms.end());
    minnorm = *std::min_element(norms.begin(), norms.end());
  }
  if (maxnorm == minnorm) throw std::logic_error("double bond with equal lengths");
  auto is_long_at = [&](int i) { return R.norm(cs[i]) == maxnorm; };
  int nlong = 0;
  for (int i : o)
    if (is_long_at(i)) ++nlong;
  int nshort = n - nlong;

  if (n == 2) {
    // Rank-2 double bond is always reported as B2, ordered [long, short].
    f.letter = 'B';
    int a = cs[o[0]], b = cs[o[1]];
    if (R.norm(a) < R.norm(b)) std::swap(a, b);
    f.simples = {a, b};
    f.tilde = false;
    return f;
  }
  if (nlong >= 2 && nshort >= 2) {
    if (n != 4) throw std::logic_error("unrecognized two-length path");
    f.letter = 'F';
    // Orient long end first: p q r s.
    if (!is_long_at(o[0])) std::reverse(o.begin(), o.end());
    if (!(is_long_at(o[0]) && is_long_at(o[1]) && !is_long_at(o[2]) && !is_long_at(o[3])))
      throw std::logic_error("unrecognized two-length path");
    for (int i : o) f.simples.push_back(cs[i]);
    f.tilde = false;
    return f;
  }
  if (nshort == 1) {
    f.letter = 'B';  // long ... long short
    if (is_long_at(o[0]) == false) std::reverse(o.begin(), o.end());
    if (!is_long_at(o[0]) || is_long_at(o[n - 1]))
      throw std::logic_error("B-type path misoriented");
    for (int i : o) f.simples.push_back(cs[i]);
    f.tilde = false;
    return f;
  }
  if (nlong == 1) {
    f.letter = 'C';  // short ... short long
    if (is_long_at(o[0])) std::reverse(o.begin(), o.end());
    if (is_long_at(o[0]) || !is_long_at(o[n - 1]))
      throw std::logic_error("C-type path misoriented");
    for (int i : o) f.simples.push_back(cs[i]);
    f.tilde = false;
    return f;
  }
  throw std::logic_error("unrecognized diagram");
}

inline std::vector<int> RootSystem::levi_by_name(const std::string& name) const {
  // Parse the requested type into a multiset of (letter, rank, tilde).
  std::multiset<std::tuple<char, int, bool>> want;
  size_t i = 0;
  while (i < name.size()) {
    char c = name[i];
    if (c == 'x' || c == '*' || c == '+') { ++i; continue; }
    if (c < 'A' || c > 'G') throw std::invalid_argument("bad Levi type: " + name);
    ++i;
    bool tilde = false;
    if (i < name.size() && name[i] == '~') { tilde = true; ++i; }
    if (i >= name.size() || name[i] < '0' || name[i] > '9')
      throw std::invalid_argument("bad Levi type: " + name);
    int rk = name[i] - '0';
    ++i;
    want.insert({c, rk, tilde});
  }
  if (want.empty()) throw std::invalid_argument("empty Levi type");

  // Several subsets may match (e.g. the two long A1's inside F4); scan masks in
  // increasing order and keep the first hit so the choice is deterministic.
  for (unsigned mask = 1; mask < (1u << rank_); ++mask) {
    std::vector<int> J;
    for (int b = 0; b < rank_; ++b)
      if (mask & (1u << b)) J.push_back(simple(b));
    Subsystem s = recognize(J);
    std::multiset<std::tuple<char, int, bool>> got;
    for (const auto& fac : s.factors) got.insert({fac.letter, fac.rank, fac.tilde});
    if (got == want) return J;
  }
  throw std::invalid_argument("no standard Levi of type " + name);
}

}  // namespace exlie
