// Finite Weyl groups realized as permutations of the roots, with reduced
// words, lengths, inversion sets, conjugacy classes and integer matrix
// realizations in a chosen simple-system basis. Works both for the full group
// of a root system and for reflection subgroups generated by arbitrary roots.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "exlie/exact.hpp"
#include "exlie/rootsys.hpp"

namespace exlie {

class WeylGroup {
 public:
  // gen_roots: ambient root indices whose reflections generate the group.
  // basis: the simple system used for lengths, words and matrices. For the
  // full group pass the simple roots; for subgroups pass the canonical simple
  // system found by RootSystem::recognize.
  WeylGroup(const RootSystem& R, std::vector<int> basis) : R_(&R), basis_(std::move(basis)) {
    build();
  }

  static WeylGroup full(const RootSystem& R) {
    std::vector<int> simples(R.rank());
    for (int i = 0; i < R.rank(); ++i) simples[i] = R.simple(i);
    return WeylGroup(R, simples);
  }

  const RootSystem& roots() const { return *R_; }
  int size() const { return static_cast<int>(perm_.size()); }
  int identity() const { return 0; }
  int num_gens() const { return static_cast<int>(basis_.size()); }
  const std::vector<int>& basis() const { return basis_; }
  int generator(int i) const { return gen_elem_[i]; }

  int apply(int e, int root) const { return perm_[e][root]; }

  // Elements are permutations of the ambient roots; two groups over the same
  // root system can exchange elements through these.
  const std::vector<int16_t>& perm(int e) const { return perm_[e]; }
  int id_of_perm(const std::vector<int16_t>& p) const {
    auto it = elem_id_.find(p);
    if (it == elem_id_.end()) throw std::invalid_argument("permutation not in group");
    return it->second;
  }

  int mult(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<size_t>(a) * size() + b];
    return compose_lookup(a, b);
  }

  int inv(int e) const { return inv_[e]; }
  int length(int e) const { return length_[e]; }

  // Reduced word as generator indices, leftmost factor first.
  std::vector<int> word(int e) const {
    std::vector<int> w;
    while (e != 0) {
      w.push_back(via_gen_[e]);
      e = parent_[e];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  // Element id of s_gamma for an ambient root, or -1 if not in this group.
  int reflection_of_root(int root_idx) const { return refl_elem_[root_idx]; }

  // Positive ambient roots gamma in the span of this group with
  // w^{-1}(gamma) negative. For the full group this is Inv(w^{-1}).
  std::vector<int> inversions_inv(int e) const {
    std::vector<int> out;
    int wi = inv_[e];
    for (int g = 0; g < R_->num_pos(); ++g)
      if (!R_->is_positive(perm_[wi][g]) ) out.push_back(g);
    return out;
  }

  // --- conjugacy classes ---
  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int e) const { return class_of_[e]; }
  int class_rep(int c) const { return class_reps_[c]; }
  long long class_size(int c) const { return class_sizes_[c]; }

  // --- matrix realization in the basis coordinates ---
  // Column j holds the basis-coordinates of w(basis_j).
  IntMat matrix(int e) const {
    int k = num_gens();
    IntMat m(k, k);
    for (int j = 0; j < k; ++j) {
      const auto& c = basis_coords_.at(perm_[e][basis_[j]]);
      for (int i = 0; i < k; ++i) m.at(i, j) = c[i];
    }
    return m;
  }

  // Basis-coordinates of an ambient root lying in this group's subsystem.
  const std::vector<int>& basis_coords(int root_idx) const {
    auto it = basis_coords_.find(root_idx);
    if (it == basis_coords_.end()) throw std::invalid_argument("root outside subsystem");
    return it->second;
  }

 private:
  const RootSystem* R_;
  std::vector<int> basis_;
  std::vector<int> gen_elem_;
  std::vector<std::vector<int16_t>> perm_;
  std::map<std::vector<int16_t>, int> elem_id_;
  std::vector<int> inv_, parent_, via_gen_;
  std::vector<int> length_;
  std::vector<int> refl_elem_;
  std::vector<uint16_t> table_;
  std::vector<int> class_of_, class_reps_;
  std::vector<long long> class_sizes_;
  std::map<int, std::vector<int>> basis_coords_;

  std::vector<int16_t> compose(const std::vector<int16_t>& a, const std::vector<int16_t>& b) const {
    std::vector<int16_t> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  }

  int compose_lookup(int a, int b) const {
    auto it = elem_id_.find(compose(perm_[a], perm_[b]));
    if (it == elem_id_.end()) throw std::logic_error("product escaped group");
    return it->second;
  }

  void build() {
    int nr = R_->num_roots();
    // Generator permutations.
    std::vector<std::vector<int16_t>> gens;
    for (int g : basis_) {
      std::vector<int16_t> p(nr);
      for (int r = 0; r < nr; ++r) p[r] = static_cast<int16_t>(R_->reflect(r, g));
      gens.push_back(std::move(p));
    }
    std::vector<int16_t> id(nr);
    for (int r = 0; r < nr; ++r) id[r] = static_cast<int16_t>(r);
    perm_.push_back(id);
    elem_id_[id] = 0;
    parent_.push_back(-1);
    via_gen_.push_back(-1);
    length_.push_back(0);
    // BFS by right multiplication; depth is the Coxeter length w.r.t. basis_.
    for (size_t head = 0; head < perm_.size(); ++head) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<int16_t> q = compose(perm_[head], gens[gi]);
        auto [it, fresh] = elem_id_.emplace(std::move(q), static_cast<int>(perm_.size()));
        if (fresh) {
          perm_.push_back(it->first);
          parent_.push_back(static_cast<int>(head));
          via_gen_.push_back(static_cast<int>(gi));
          length_.push_back(length_[head] + 1);
        }
      }
      if (perm_.size() > 200000) throw std::logic_error("group too large");
    }
    int n = size();
    gen_elem_.resize(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) gen_elem_[gi] = elem_id_.at(gens[gi]);
    inv_.resize(n);
    for (int e = 0; e < n; ++e) {
      std::vector<int16_t> p(nr);
      for (int r = 0; r < nr; ++r) p[perm_[e][r]] = static_cast<int16_t>(r);
      inv_[e] = elem_id_.at(p);
    }
    // Reflection membership per ambient root.
    refl_elem_.assign(nr, -1);
    for (int r = 0; r < nr; ++r) {
      std::vector<int16_t> p(nr);
      for (int x = 0; x < nr; ++x) p[x] = static_cast<int16_t>(R_->reflect(x, r));
      auto it = elem_id_.find(p);
      if (it != elem_id_.end()) refl_elem_[r] = it->second;
    }
    // Multiplication table (all groups here have at most 1152 elements).
    // Seed a * gen_i by permutation lookup, then fill a * b along BFS words:
    // b = parent(b) * gen means a*b = (a*parent(b)) * gen, and BFS order
    // guarantees parent(b) < b.
    if (n <= 4096) {
      std::vector<int> gen_table(static_cast<size_t>(n) * gens.size());
      for (int a = 0; a < n; ++a)
        for (size_t gi = 0; gi < gens.size(); ++gi)
          gen_table[a * gens.size() + gi] = elem_id_.at(compose(perm_[a], gens[gi]));
      table_.resize(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a) {
        table_[static_cast<size_t>(a) * n] = static_cast<uint16_t>(a);
        for (int b = 1; b < n; ++b) {
          int ap = table_[static_cast<size_t>(a) * n + parent_[b]];
          table_[static_cast<size_t>(a) * n + b] =
              static_cast<uint16_t>(gen_table[ap * gens.size() + via_gen_[b]]);
        }
      }
    }
    // Conjugacy classes by orbit closure under generator conjugation.
    class_of_.assign(n, -1);
    for (int e = 0; e < n; ++e) {
      if (class_of_[e] >= 0) continue;
      int c = static_cast<int>(class_reps_.size());
      class_reps_.push_back(e);
      class_of_[e] = c;
      std::vector<int> stack{e};
      long long sz = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int g : gen_elem_) {
          int y = mult(g, mult(x, g));  // generators are involutions
          if (class_of_[y] < 0) {
            class_of_[y] = c;
            ++sz;
            stack.push_back(y);
          }
        }
      }
      class_sizes_.push_back(sz);
    }
    // Basis coordinates of every root moved by the group (the subsystem).
    build_basis_coords();
  }

  void build_basis_coords() {
    int k = num_gens();
    int n = R_->rank();
    // Solve D c = v by Cramer on the k x k system (D^T D) c = D^T v.
    IntMat D(n, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) D.at(i, j) = R_->root(basis_[j])[i];
    IntMat DtD(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        long long s = 0;
        for (int t = 0; t < n; ++t) s += static_cast<long long>(D.at(t, i)) * D.at(t, j);
        DtD.at(i, j) = s;
      }
    BigInt d0 = det(DtD);
    if (d0 == 0) throw std::logic_error("basis not linearly independent");
    for (int r = 0; r < R_->num_roots(); ++r) {
      if (refl_elem_[r] < 0) continue;
      std::vector<long long> rhs(k, 0);
      for (int i = 0; i < k; ++i) {
        long long s = 0;
        for (int t = 0; t < n; ++t) s += static_cast<long long>(D.at(t, i)) * R_->root(r)[t];
        rhs[i] = s;
      }
      std::vector<int> coords(k);
      for (int j = 0; j < k; ++j) {
        IntMat m = DtD;
        for (int i = 0; i < k; ++i) m.at(i, j) = rhs[i];
        BigInt dj = det(m);
        if (dj % d0 != 0) throw std::logic_error("root has non-integral basis coordinates");
        BigInt c = dj / d0;
        coords[j] = static_cast<int>(static_cast<long long>(c));
      }
      basis_coords_[r] = coords;
    }
  }
};

}  // namespace exlie
