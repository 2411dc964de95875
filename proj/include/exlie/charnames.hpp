// Canonical names for Weyl group characters and conjugacy classes:
// partitions for symmetric groups (type A), bipartitions for hyperoctahedral
// groups (types B and C), tensor-product names for reducible subsystems, and
// fingerprint-driven names chi_{d,i} for G2 and F4 following the numbering of
// Carter, Finite Groups of Lie Type, ch. 13.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exlie/chartable.hpp"
#include "exlie/exact.hpp"
#include "exlie/rootsys.hpp"
#include "exlie/weyl.hpp"

namespace exlie {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // decreasing parts, largest first
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// Accepts "(2,1)", "2,1", "21", "1^3", "(1^2,1)" and the like; parts are
// single digits unless comma-separated.
inline Partition parse_partition_body(const std::string& body) {
  Partition p;
  size_t i = 0;
  bool has_comma = body.find(',') != std::string::npos;
  while (i < body.size()) {
    char c = body[i];
    if (c == ',' || c == ' ') { ++i; continue; }
    if (c < '0' || c > '9') throw std::invalid_argument("bad partition: " + body);
    long long v = 0;
    if (has_comma) {
      while (i < body.size() && body[i] >= '0' && body[i] <= '9') v = v * 10 + (body[i++] - '0');
    } else {
      v = c - '0';
      ++i;
    }
    int rep = 1;
    if (i < body.size() && body[i] == '^') {
      ++i;
      rep = 0;
      while (i < body.size() && body[i] >= '0' && body[i] <= '9') rep = rep * 10 + (body[i++] - '0');
    }
    for (int r = 0; r < rep; ++r) p.push_back(static_cast<int>(v));
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

inline Partition parse_partition(std::string s) {
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s == "-" || s.empty()) return {};
  return parse_partition_body(s);
}

struct Bipartition {
  Partition first, second;
  bool operator==(const Bipartition& o) const { return first == o.first && second == o.second; }
};

inline std::string format_bipartition(const Bipartition& b) {
  auto side = [](const Partition& p) {
    if (p.empty()) return std::string("-");
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[i]);
    }
    return s;
  };
  return "[" + side(b.first) + ":" + side(b.second) + "]";
}

inline Bipartition parse_bipartition(std::string s) {
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bipartition needs ':': " + s);
  auto side = [](std::string t) -> Partition {
    if (t == "-" || t.empty()) return {};
    return parse_partition_body(t);
  };
  return {side(s.substr(0, colon)), side(s.substr(colon + 1))};
}

inline std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& l : partitions_of(k))
      for (const auto& m : partitions_of(n - k)) out.push_back({l, m});
  return out;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via beta-numbers: all removals of a border strip of
// size l, with the sign (-1)^{height}.
inline std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int l) {
  std::vector<std::pair<Partition, int>> out;
  int m = static_cast<int>(lam.size());
  if (m == 0) return out;
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lam[i] + (m - 1 - i);
  std::set<int> bs(beta.begin(), beta.end());
  for (int i = 0; i < m; ++i) {
    int b = beta[i] - l;
    if (b < 0 || bs.count(b)) continue;
    int ht = 0;
    for (int j = 0; j < m; ++j)
      if (beta[j] > b && beta[j] < beta[i]) ++ht;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    Partition np;
    for (int j = 0; j < m; ++j) {
      int part = nb[j] - (m - 1 - j);
      if (part > 0) np.push_back(part);
    }
    out.push_back({np, (ht % 2) ? -1 : 1});
  }
  return out;
}

// chi^lambda on the class of cycle type mu in the symmetric group.
inline long long sn_char_value(const Partition& lam, const Partition& mu) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  Partition rest(mu.begin() + 1, mu.end());
  long long total = 0;
  for (const auto& [np, sign] : strip_removals(lam, mu[0]))
    total += sign * sn_char_value(np, rest);
  return total;
}

// Signed cycle type: partitions of positive- and negative-cycle lengths.
struct SignedType {
  Partition pos, neg;
  bool operator==(const SignedType& o) const { return pos == o.pos && neg == o.neg; }
  bool operator<(const SignedType& o) const {
    return std::tie(pos, neg) < std::tie(o.pos, o.neg);
  }
};

// chi^{(lambda,mu)} of the hyperoctahedral group on a signed cycle type.
// Strips peeled from lambda carry coefficient 1; strips peeled from mu carry
// the sign of the cycle.
inline long long bn_char_value(const Bipartition& x, std::vector<std::pair<int, int>> cycles) {
  if (cycles.empty()) return (x.first.empty() && x.second.empty()) ? 1 : 0;
  auto [l, eps] = cycles.back();
  cycles.pop_back();
  long long total = 0;
  for (const auto& [np, sign] : strip_removals(x.first, l))
    total += sign * bn_char_value({np, x.second}, cycles);
  for (const auto& [np, sign] : strip_removals(x.second, l))
    total += eps * sign * bn_char_value({x.first, np}, cycles);
  return total;
}

inline long long bn_char_value(const Bipartition& x, const SignedType& t) {
  std::vector<std::pair<int, int>> cycles;
  for (int l : t.pos) cycles.push_back({l, 1});
  for (int l : t.neg) cycles.push_back({l, -1});
  return bn_char_value(x, cycles);
}

// ---------------------------------------------------------------------------
// Class recognition from realization matrices.
namespace detail {

// X = A^{-1} B over the rationals (A square invertible).
inline std::vector<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> a,
                                               std::vector<std::vector<Rat>> b) {
  int n = static_cast<int>(a.size());
  int m = static_cast<int>(b[0].size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != Rat(0)) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular change of basis");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rat inv = Rat(1) / a[col][col];
    for (int c = 0; c < n; ++c) a[col][c] *= inv;
    for (int c = 0; c < m; ++c) b[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col];
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      for (int c = 0; c < m; ++c) b[r][c] -= f * b[col][c];
    }
  }
  return b;
}

}  // namespace detail

// Cycle type of a type-A_{n-1} element from the characteristic polynomial of
// its reflection representation: prod (x^l - 1) / (x - 1) over parts of the
// unique matching partition of n.
inline Partition cycle_type_from_matrix(const IntMat& m, int n) {
  std::vector<Rat> cp = char_poly(m);
  Partition found;
  bool have = false;
  for (const auto& lam : partitions_of(n)) {
    // build prod (x^l - 1), divide by (x - 1)
    std::vector<long long> poly{1};
    for (int l : lam) {
      std::vector<long long> np(poly.size() + l, 0);
      for (size_t i = 0; i < poly.size(); ++i) {
        np[i + l] += poly[i];
        np[i] -= poly[i];
      }
      poly = std::move(np);
    }
    // synthetic division by (x - 1)
    std::vector<long long> q(poly.size() - 1, 0);
    long long carry = poly.back();
    for (int i = static_cast<int>(poly.size()) - 2; i >= 0; --i) {
      q[i] = carry;
      carry = poly[i] + carry;
    }
    if (carry != 0) throw std::logic_error("cycle polynomial not divisible by x-1");
    if (q.size() != cp.size()) continue;
    bool eq = true;
    for (size_t i = 0; i < q.size(); ++i)
      if (Rat(q[i]) != cp[i]) eq = false;
    if (eq) {
      if (have) throw std::logic_error("ambiguous cycle type");
      found = lam;
      have = true;
    }
  }
  if (!have) throw std::logic_error("unrecognized type-A class");
  return found;
}

// Signed cycle type of a type-B/C element: conjugate the realization into the
// standard coordinate basis, where it must be a signed permutation matrix.
inline SignedType signed_type_from_matrix(const IntMat& m, char letter) {
  int n = m.rows;
  // Columns of T are the simple roots in e-coordinates.
  std::vector<std::vector<Rat>> T(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j + 1 < n; ++j) {
    T[j][j] = Rat(1);
    T[j + 1][j] = Rat(-1);
  }
  T[n - 1][n - 1] = letter == 'C' ? Rat(2) : Rat(1);
  // X = T M T^{-1}: solve (X T = T M) as X^T from T^T X^T = (T M)^T.
  std::vector<std::vector<Rat>> TM(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s(0);
      for (int l = 0; l < n; ++l) s += T[i][l] * Rat(m.at(l, j));
      TM[i][j] = s;
    }
  std::vector<std::vector<Rat>> Tt(n, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> TMt(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tt[i][j] = T[j][i];
      TMt[i][j] = TM[j][i];
    }
  auto Xt = detail::rat_solve(Tt, TMt);
  // Extract the signed permutation.
  std::vector<int> sigma(n, -1), sign(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Rat v = Xt[j][i];  // X[i][j]
      if (v == Rat(0)) continue;
      if (sigma[j] != -1 || (v != Rat(1) && v != Rat(-1)))
        throw std::logic_error("not a signed permutation");
      sigma[j] = i;
      sign[j] = v == Rat(1) ? 1 : -1;
    }
    if (sigma[j] < 0) throw std::logic_error("not a signed permutation");
  }
  SignedType t;
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    int len = 0, s = 1, x = j;
    while (!used[x]) {
      used[x] = true;
      s *= sign[x];
      x = sigma[x];
      ++len;
    }
    (s > 0 ? t.pos : t.neg).push_back(len);
  }
  std::sort(t.pos.rbegin(), t.pos.rend());
  std::sort(t.neg.rbegin(), t.neg.rend());
  return t;
}

// ---------------------------------------------------------------------------
// A reflection subgroup together with its character table and canonical
// character labels.
struct LabeledGroup {
  Subsystem sub;
  std::unique_ptr<WeylGroup> W;
  std::unique_ptr<CharTable> T;
  std::vector<std::string> labels;       // per character, index-aligned with T
  std::vector<std::string> class_names;  // per class, may be positional

  int index_of_label(const std::string& l) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    throw std::invalid_argument("no character labeled " + l);
  }
};

namespace detail {

// Per-factor labels and class names for one irreducible factor group.
inline void label_factor(const SubsystemFactor& f, const WeylGroup& W, const CharTable& T,
                         std::vector<std::string>& labels, std::vector<std::string>& classes) {
  int k = W.num_classes();
  labels.assign(T.num_chars(), "");
  classes.assign(k, "");
  if (f.letter == 'A') {
    int n = f.rank + 1;
    std::vector<Partition> type(k);
    for (int c = 0; c < k; ++c) {
      type[c] = cycle_type_from_matrix(W.matrix(W.class_rep(c)), n);
      classes[c] = format_partition(type[c]);
    }
    for (const auto& lam : partitions_of(n)) {
      std::vector<long long> vals(k);
      for (int c = 0; c < k; ++c) vals[c] = sn_char_value(lam, type[c]);
      int idx = T.find(vals);
      if (idx < 0) throw std::logic_error("symmetric group character not found");
      if (!labels[idx].empty()) throw std::logic_error("duplicate character label");
      labels[idx] = format_partition(lam);
    }
  } else if (f.letter == 'B' || f.letter == 'C') {
    int n = f.rank;
    std::vector<SignedType> type(k);
    for (int c = 0; c < k; ++c) {
      type[c] = signed_type_from_matrix(W.matrix(W.class_rep(c)), f.letter);
      classes[c] = format_bipartition({type[c].pos, type[c].neg});
    }
    for (const auto& bp : bipartitions_of(n)) {
      std::vector<long long> vals(k);
      for (int c = 0; c < k; ++c) vals[c] = bn_char_value(bp, type[c]);
      int idx = T.find(vals);
      if (idx < 0) throw std::logic_error("hyperoctahedral character not found");
      if (!labels[idx].empty()) throw std::logic_error("duplicate character label");
      labels[idx] = format_bipartition(bp);
    }
  } else if (f.letter == 'D') {
    // Positional names; never used for fixture lookups (those take all of Irr).
    for (int i = 0; i < T.num_chars(); ++i) labels[i] = "d" + std::to_string(i);
    for (int c = 0; c < k; ++c) classes[c] = "c" + std::to_string(c);
  } else {
    throw std::logic_error("exceptional factor inside a proper subsystem");
  }
  for (const auto& l : labels)
    if (l.empty()) throw std::logic_error("incomplete character labeling");
}

}  // namespace detail

// Build the labeled character theory of the reflection subgroup attached to a
// recognized subsystem (possibly reducible; labels are x-joined per factor).
inline LabeledGroup make_labeled_subgroup(const RootSystem& R, const Subsystem& sub) {
  LabeledGroup g;
  g.sub = sub;
  g.W = std::make_unique<WeylGroup>(R, sub.all_simples());
  g.T = std::make_unique<CharTable>(*g.W);
  int nf = static_cast<int>(sub.factors.size());

  // Factor groups with their own labels.
  std::vector<std::unique_ptr<WeylGroup>> FW(nf);
  std::vector<std::unique_ptr<CharTable>> FT(nf);
  std::vector<std::vector<std::string>> flabels(nf), fclasses(nf);
  for (int i = 0; i < nf; ++i) {
    FW[i] = std::make_unique<WeylGroup>(R, sub.factors[i].simples);
    FT[i] = std::make_unique<CharTable>(*FW[i]);
    detail::label_factor(sub.factors[i], *FW[i], *FT[i], flabels[i], fclasses[i]);
  }

  // Project each class representative of the whole group onto each factor by
  // matching the restricted action on the factor's own roots.
  std::vector<std::vector<int>> proj(g.W->num_classes(), std::vector<int>(nf));
  std::vector<std::vector<int>> froots(nf);
  std::vector<std::map<std::vector<int16_t>, int>> fmap(nf);
  for (int i = 0; i < nf; ++i) {
    for (int r = 0; r < R.num_roots(); ++r)
      if (FW[i]->reflection_of_root(r) >= 0) froots[i].push_back(r);
    for (int e = 0; e < FW[i]->size(); ++e) {
      std::vector<int16_t> key;
      for (int r : froots[i]) key.push_back(static_cast<int16_t>(FW[i]->apply(e, r)));
      fmap[i][key] = e;
    }
  }
  for (int c = 0; c < g.W->num_classes(); ++c) {
    int e = g.W->class_rep(c);
    for (int i = 0; i < nf; ++i) {
      std::vector<int16_t> key;
      for (int r : froots[i]) key.push_back(static_cast<int16_t>(g.W->apply(e, r)));
      auto it = fmap[i].find(key);
      if (it == fmap[i].end()) throw std::logic_error("element does not factor");
      proj[c][i] = it->second;
    }
  }

  // Tensor labels and class names.
  g.labels.assign(g.T->num_chars(), "");
  g.class_names.assign(g.W->num_classes(), "");
  for (int c = 0; c < g.W->num_classes(); ++c) {
    std::string name;
    for (int i = 0; i < nf; ++i) {
      if (i) name += "x";
      name += fclasses[i][FW[i]->class_of(proj[c][i])];
    }
    g.class_names[c] = name;
  }
  std::vector<int> combo(nf, 0);
  while (true) {
    std::vector<long long> vals(g.W->num_classes());
    for (int c = 0; c < g.W->num_classes(); ++c) {
      long long v = 1;
      for (int i = 0; i < nf; ++i)
        v *= FT[i]->values(combo[i])[FW[i]->class_of(proj[c][i])];
      vals[c] = v;
    }
    int idx = g.T->find(vals);
    if (idx < 0) throw std::logic_error("tensor character not found");
    if (!g.labels[idx].empty()) throw std::logic_error("duplicate tensor label");
    std::string lab;
    for (int i = 0; i < nf; ++i) {
      if (i) lab += "x";
      lab += flabels[i][combo[i]];
    }
    g.labels[idx] = lab;
    int pos = nf - 1;
    while (pos >= 0 && combo[pos] + 1 == FT[pos]->num_chars()) {
      combo[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++combo[pos];
  }
  for (const auto& l : g.labels)
    if (l.empty()) throw std::logic_error("incomplete tensor labeling");
  return g;
}

// ---------------------------------------------------------------------------
// Fingerprint rules identifying the chi_{d,i} of G2 and F4.
struct AlvisRule {
  std::string label;
  long long degree = 0;
  int b = 0;
  std::string mode;  // "unique", "values", "jind", "ind1", "other"
  long long value_long = 0, value_short = 0;  // for mode "values"
  std::string from;                           // Levi name for "jind"/"ind1"
  std::string rho;                            // Levi character label for "jind"
};

inline LabeledGroup make_labeled_ambient(const RootSystem& R, const std::vector<AlvisRule>& rules) {
  LabeledGroup g;
  std::vector<int> simples;
  for (int i = 0; i < R.rank(); ++i) simples.push_back(R.simple(i));
  g.sub = R.recognize(simples);
  g.W = std::make_unique<WeylGroup>(R, simples);
  g.T = std::make_unique<CharTable>(*g.W);
  int n = g.T->num_chars();
  g.labels.assign(n, "");
  g.class_names.assign(g.W->num_classes(), "");
  for (int c = 0; c < g.W->num_classes(); ++c)
    g.class_names[c] = "c" + std::to_string(c) + "_o" + std::to_string(g.T->class_order(c)) +
                       "_s" + std::to_string(g.W->class_size(c));

  // Reflection classes of each length.
  int long_class = -1, short_class = -1;
  for (int r = 0; r < R.num_pos(); ++r) {
    int e = g.W->reflection_of_root(r);
    if (R.is_long(r) && long_class < 0) long_class = g.W->class_of(e);
    if (R.is_short(r) && short_class < 0) short_class = g.W->class_of(e);
  }

  auto bucket_of = [&](long long deg, int b) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (g.T->degree(i) == deg && g.T->b_invariant(i) == b) v.push_back(i);
    if (v.empty()) throw std::logic_error("no character with required degree and b");
    return v;
  };
  auto assign = [&](int idx, const std::string& label) {
    if (!g.labels[idx].empty()) throw std::logic_error("conflicting labels for one character");
    g.labels[idx] = label;
  };

  for (const auto& rule : rules) {
    if (rule.mode == "other") continue;
    std::vector<int> bucket = bucket_of(rule.degree, rule.b);
    if (rule.mode == "unique") {
      if (bucket.size() != 1) throw std::logic_error("fingerprint bucket not unique: " + rule.label);
      assign(bucket[0], rule.label);
    } else if (rule.mode == "values") {
      int found = -1;
      for (int i : bucket) {
        if (g.T->values(i)[long_class] == rule.value_long &&
            g.T->values(i)[short_class] == rule.value_short) {
          if (found >= 0) throw std::logic_error("value fingerprint ambiguous: " + rule.label);
          found = i;
        }
      }
      if (found < 0) throw std::logic_error("value fingerprint missing: " + rule.label);
      assign(found, rule.label);
    } else if (rule.mode == "jind") {
      std::vector<int> J = R.levi_by_name(rule.from);
      LabeledGroup L = make_labeled_subgroup(R, R.recognize(J));
      int chi = L.index_of_label(rule.rho);
      int idx = j_induce(*L.W, *L.T, chi, *g.W, *g.T);
      assign(idx, rule.label);
    } else if (rule.mode == "ind1") {
      std::vector<int> J = R.levi_by_name(rule.from);
      WeylGroup WL(R, J);
      std::vector<long long> one(WL.num_classes(), 1);
      std::vector<long long> ind = induce_values(WL, one, *g.W);
      std::vector<long long> mult = g.T->decompose(ind);
      int found = -1;
      for (int i : bucket)
        if (mult[i] > 0) {
          if (found >= 0) throw std::logic_error("induction fingerprint ambiguous: " + rule.label);
          found = i;
        }
      if (found < 0) throw std::logic_error("induction fingerprint missing: " + rule.label);
      assign(found, rule.label);
    } else {
      throw std::invalid_argument("unknown fingerprint mode " + rule.mode);
    }
  }
  // "other": the remaining unlabeled character of the bucket.
  for (const auto& rule : rules) {
    if (rule.mode != "other") continue;
    std::vector<int> bucket = bucket_of(rule.degree, rule.b);
    int found = -1;
    for (int i : bucket)
      if (g.labels[i].empty()) {
        if (found >= 0) throw std::logic_error("residual fingerprint ambiguous: " + rule.label);
        found = i;
      }
    if (found < 0) throw std::logic_error("residual fingerprint missing: " + rule.label);
    assign(found, rule.label);
  }
  for (const auto& l : g.labels)
    if (l.empty()) throw std::logic_error("incomplete fingerprint labeling");
  // Whatever mode resolved a label, the recorded fingerprint must agree with
  // the character it ended up naming; this catches a stale rule set.
  for (const auto& rule : rules) {
    int idx = g.index_of_label(rule.label);
    if (g.T->degree(idx) != rule.degree || g.T->b_invariant(idx) != rule.b ||
        g.T->values(idx)[long_class] != rule.value_long ||
        g.T->values(idx)[short_class] != rule.value_short)
      throw std::logic_error("fingerprint mismatch for " + rule.label);
  }
  return g;
}

}  // namespace exlie
