// Chevalley group points over small finite fields, in the adjoint
// representation: generator words, Bruhat-cell enumeration of the flag
// variety, Springer-fiber point counts, full-group centralizer orders, and
// verification of component-group generator presentations.
//
// Elements are Ad matrices tagged with the generator word that produced
// them; the adjoint representation is faithful for the centerless types
// handled here, and the tag lets property tests detect any divergence.
// Cosets of B\G are enumerated in the normal form B n_w u_w, with u_w a
// product of root elements over the inversion set of w in a fixed order,
// one coset per coordinate tuple (Carter, Simple Groups of Lie Type, ch. 8).

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "exlie/chevalley.hpp"
#include "exlie/exact.hpp"
#include "exlie/weyl.hpp"

namespace exlie {

// ---------------------------------------------------------------------------
// Generator words.

// One generator of the group: kind 'x' is the root element x_root(t), kind
// 'h' the torus element h_root(t), kind 'n' the Weyl representative
// n_root(t) = h_root(t) n_root(1). The parameter t is a field element in
// the GF encoding of the field the word is evaluated in (note GF::one() is
// the Zech log 0, not the integer 1).
struct Atom {
  char kind;
  int root;
  int t;
};

inline Atom ax(int root, int t) { return {'x', root, t}; }
inline Atom ah(int root, int t) { return {'h', root, t}; }
inline Atom an(int root, int t) { return {'n', root, t}; }
inline Atom an(int root) { return {'n', root, 0}; }  // t = GF::one()

// A group element: the generator word together with its adjoint and
// coadjoint matrices (the latter kept so functionals can be acted on
// without inverting anything).
struct GroupElt {
  std::vector<Atom> word;
  Mat<GFRing> ad;
  Mat<GFRing> coad;
};

inline GroupElt make_element(const Chevalley& C, const GF& F, const std::vector<Atom>& word) {
  GFRing ring(F);
  GroupElt g{word, Mat<GFRing>::identity(ring, C.dim()), Mat<GFRing>::identity(ring, C.dim())};
  for (const Atom& a : word) {
    Mat<GFRing> ad(ring, C.dim()), co(ring, C.dim());
    switch (a.kind) {
      case 'x':
        ad = adjoint_x(C, ring, a.root, a.t);
        co = coadjoint_x(C, ring, a.root, a.t);
        break;
      case 'h': {
        if (F.is_zero(a.t)) throw std::invalid_argument("make_element: h_gamma(0)");
        int ti = F.inv(a.t);
        ad = adjoint_h(C, ring, a.root, a.t, ti);
        co = coadjoint_h(C, ring, a.root, a.t, ti);
        break;
      }
      case 'n': {
        if (F.is_zero(a.t)) throw std::invalid_argument("make_element: n_gamma(0)");
        ad = adjoint_n(C, ring, a.root);
        co = coadjoint_n(C, ring, a.root);
        if (a.t != F.one()) {
          int ti = F.inv(a.t);
          ad = adjoint_h(C, ring, a.root, a.t, ti).mul(ad);
          co = coadjoint_h(C, ring, a.root, a.t, ti).mul(co);
        }
        break;
      }
      default:
        throw std::invalid_argument("make_element: unknown generator kind");
    }
    g.ad = g.ad.mul(ad);
    g.coad = g.coad.mul(co);
  }
  return g;
}

inline GroupElt mul(const GroupElt& a, const GroupElt& b) {
  GroupElt r{a.word, a.ad.mul(b.ad), a.coad.mul(b.coad)};
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

// Word for the representative n_w = n_{s_{i_1}} ... n_{s_{i_l}} of a Weyl
// element from its reduced word.
inline std::vector<Atom> weyl_word_atoms(const WeylGroup& W, int w) {
  std::vector<Atom> out;
  for (int s : W.word(w)) out.push_back(an(s));
  return out;
}

// ---------------------------------------------------------------------------
// Representatives as formal sums of root vectors.

// (root index, integer coefficient). Materializes to coordinates on the
// e_gamma rows (adjoint side) or e'_gamma rows (dual side); the row
// indexing is shared between the two.
using FormalSum = std::vector<std::pair<int, int>>;

inline std::vector<int> materialize(const Chevalley& C, const GF& F, const FormalSum& s) {
  std::vector<int> v(C.dim(), GF::ZERO);
  for (auto [r, c] : s) {
    if (r < 0 || r >= C.roots().num_roots())
      throw std::invalid_argument("materialize: not a root index");
    v[r] = F.add(v[r], F.from_int(c));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Bruhat cells.

// {gamma > 0 : w(gamma) < 0}, ascending.
inline std::vector<int> inversion_set(const WeylGroup& W, const RootSystem& R, int w) {
  std::vector<int> inv;
  for (int g = 0; g < R.num_pos(); ++g)
    if (!R.is_positive(W.apply(w, g))) inv.push_back(g);
  return inv;
}

// Sigma_w q^{l(w)}, the number of flags over F_q.
inline BigInt flag_point_count(const WeylGroup& W, int q) {
  BigInt total = 0;
  for (int w = 0; w < W.size(); ++w) {
    BigInt c = 1;
    for (int i = 0; i < W.length(w); ++i) c *= q;
    total += c;
  }
  return total;
}

// The same count through the classical degree sets: Prod_i (q^{d_i}-1)/(q-1).
inline BigInt flag_count_formula(const CartanType& t, int q) {
  std::vector<int> degs;
  if (t.str() == "G2")
    degs = {2, 6};
  else if (t.str() == "F4")
    degs = {2, 6, 8, 12};
  else
    throw std::invalid_argument("flag_count_formula: degrees tabulated for G2 and F4 only");
  BigInt r = 1;
  for (int d : degs) {
    BigInt n = 1;
    for (int i = 0; i < d; ++i) n *= q;
    r *= (n - 1) / (q - 1);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration options and reports.

struct EnumOptions {
  long long coset_budget = 500000000;  // cap on Sigma_w q^{l(w)} for fiber counts
  long long group_budget = 100000000;  // cap on |G(F_q)| for centralizer counts
  int threads = 0;                     // 0: $EXLIE_THREADS, else hardware count
  char engine = 'a';                   // 'a'uto, 'g'eneric, 'b'itpacked (for tests)
};

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EXLIE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

struct FiberCount {
  BigInt count;
  BigInt cosets;                      // flags enumerated = Sigma_w q^{l(w)}
  std::map<int, long long> per_cell;  // Weyl element -> fiber points in its cell
  std::uint64_t checksum = 0;         // FNV-1a over per-chunk counts in chunk order
  int chunks = 0;
  int threads_used = 0;
  double seconds = 0;
};

namespace detail {

// Field arithmetic on values 0..q-1 (value 0 is the field zero), tabulated
// flat so the enumeration loops touch nothing but two byte tables.
struct VTables {
  int q = 0;
  std::vector<std::uint8_t> add, mul;
};

inline VTables build_vtables(const GF& F) {
  VTables t;
  t.q = F.q();
  t.add.assign(static_cast<size_t>(t.q) * t.q, 0);
  t.mul.assign(static_cast<size_t>(t.q) * t.q, 0);
  for (int a = 0; a < t.q; ++a)
    for (int b = 0; b < t.q; ++b) {
      int ea = F.from_value(a), eb = F.from_value(b);
      t.add[a * t.q + b] = static_cast<std::uint8_t>(F.value(F.add(ea, eb)));
      t.mul[a * t.q + b] = static_cast<std::uint8_t>(F.value(F.mul(ea, eb)));
    }
  return t;
}

constexpr int kMaxDim = 56;
using Vec = std::array<std::uint8_t, kMaxDim>;

struct Trip {
  std::uint8_t row, col, val;
};

// (m - 1) as value triplets. block > 0 restricts to columns inside the
// leading block of that size and asserts the block is invariant (no entry
// leaves it); entries read from columns outside the block are dropped,
// which is sound for vectors supported inside it.
inline std::vector<Trip> delta_triplets(const GF& F, const Mat<GFRing>& m, int block) {
  std::vector<Trip> out;
  int cols = block > 0 ? block : m.size();
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < cols; ++c) {
      int v = m.at(r, c);
      if (r == c) v = F.sub(v, F.one());
      if (F.is_zero(v)) continue;
      if (block > 0 && r >= block)
        throw std::logic_error("delta_triplets: entry escapes the invariant block");
      out.push_back({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(c),
                     static_cast<std::uint8_t>(F.value(v))});
    }
  return out;
}

struct Cell {
  int w = 0;
  std::vector<int> apply_order;  // inversion roots, innermost factor first
  std::vector<int> mask_rows;    // rows that must vanish at a member leaf
  std::uint64_t mask_bits = 0;
  int prefix_len = 0;        // leading apply_order coordinates fixed per chunk
  long long num_prefix = 1;  // q^prefix_len
};

struct Chunk {
  int cell;
  long long prefix;
};

struct Plan {
  std::vector<Cell> cells;
  std::vector<Chunk> chunks;
  BigInt cosets = 0;
};

// Chunks are (cell, coordinate prefix) with at most 2^leaves_log2 leaves
// below each prefix; results are summed in chunk order, so counts and
// checksums do not depend on the thread count.
inline Plan make_plan(const WeylGroup& W, const RootSystem& R, int q, int leaves_log2) {
  int free_levels = 0;
  long long acc = 1;
  while (acc * q <= (1LL << leaves_log2)) {
    acc *= q;
    ++free_levels;
  }
  Plan p;
  for (int w = 0; w < W.size(); ++w) {
    Cell c;
    c.w = w;
    c.mask_rows = inversion_set(W, R, w);
    for (int g : c.mask_rows) c.mask_bits |= 1ULL << g;
    c.apply_order.assign(c.mask_rows.rbegin(), c.mask_rows.rend());
    int l = static_cast<int>(c.mask_rows.size());
    c.prefix_len = std::max(0, l - free_levels);
    for (int i = 0; i < c.prefix_len; ++i) c.num_prefix *= q;
    BigInt tot = 1;
    for (int i = 0; i < l; ++i) tot *= q;
    p.cosets += tot;
    int ci = static_cast<int>(p.cells.size());
    for (long long pr = 0; pr < c.num_prefix; ++pr) p.chunks.push_back({ci, pr});
    p.cells.push_back(std::move(c));
  }
  return p;
}

template <class Body>
inline void run_chunks(const Plan& plan, int threads, std::vector<long long>& counts,
                       const Body& body) {
  counts.assign(plan.chunks.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= plan.chunks.size()) return;
      counts[i] = body(plan.cells[plan.chunks[i].cell], plan.chunks[i].prefix);
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Byte-vector engine for any q <= 27. The coordinate DFS applies, per
// level, the triplets of coad(x_gamma(t)) - 1 (adjoint ones on the adjoint
// side): children with t = 0 reuse the parent vector unchanged.
struct GenericFiber {
  const VTables* vt = nullptr;
  int q = 0;
  std::vector<std::vector<std::vector<Trip>>> trips;  // [root][t value - 1]
  Vec xi{};

  void step(int root, int tv, const Vec& in, Vec& out) const {
    out = in;
    if (tv == 0) return;
    const std::uint8_t* ad = vt->add.data();
    const std::uint8_t* mu = vt->mul.data();
    for (const Trip& t : trips[root][tv - 1]) {
      std::uint8_t prod = mu[t.val * q + in[t.col]];
      out[t.row] = ad[out[t.row] * q + prod];
    }
  }

  long long run_chunk(const Cell& cell, long long prefix) const {
    int l = static_cast<int>(cell.apply_order.size());
    std::array<Vec, 32> stk;
    stk[0] = xi;
    long long pr = prefix;
    for (int k = 0; k < cell.prefix_len; ++k) {
      step(cell.apply_order[k], static_cast<int>(pr % q), stk[k], stk[k + 1]);
      pr /= q;
    }
    long long cnt = 0;
    rec(cell, cell.prefix_len, l, stk, cnt);
    return cnt;
  }

  void rec(const Cell& cell, int k, int l, std::array<Vec, 32>& stk, long long& cnt) const {
    if (k == l) {
      for (int r : cell.mask_rows)
        if (stk[k][r]) return;
      ++cnt;
      return;
    }
    for (int tv = 0; tv < q; ++tv) {
      step(cell.apply_order[k], tv, stk[k], stk[k + 1]);
      rec(cell, k + 1, l, stk, cnt);
    }
  }
};

// Bit-packed engine for q = 2: vectors are 64-bit masks, a generator is the
// list of (column, row mask) pairs of its delta, one application is an XOR
// accumulation, and membership is a single mask test.
struct BitFiber {
  std::vector<std::vector<std::pair<std::uint8_t, std::uint64_t>>> cols;  // [root]
  std::uint64_t xi = 0;

  std::uint64_t step(int root, int tv, std::uint64_t v) const {
    if (tv == 0) return v;
    std::uint64_t acc = 0;
    for (auto [c, m] : cols[root]) acc ^= m & (0ULL - ((v >> c) & 1));
    return v ^ acc;
  }

  long long run_chunk(const Cell& cell, long long prefix) const {
    int l = static_cast<int>(cell.apply_order.size());
    std::array<std::uint64_t, 32> stk;
    stk[0] = xi;
    long long pr = prefix;
    for (int k = 0; k < cell.prefix_len; ++k) {
      stk[k + 1] = step(cell.apply_order[k], static_cast<int>(pr & 1), stk[k]);
      pr >>= 1;
    }
    long long cnt = 0;
    rec(cell, cell.prefix_len, l, stk, cnt);
    return cnt;
  }

  void rec(const Cell& cell, int k, int l, std::array<std::uint64_t, 32>& stk,
           long long& cnt) const {
    if (k == l) {
      if ((stk[k] & cell.mask_bits) == 0) ++cnt;
      return;
    }
    stk[k + 1] = stk[k];
    rec(cell, k + 1, l, stk, cnt);
    stk[k + 1] = step(cell.apply_order[k], 1, stk[k]);
    rec(cell, k + 1, l, stk, cnt);
  }
};

inline std::uint64_t fnv1a(const std::vector<long long>& counts) {
  std::uint64_t h = 1469598103934665603ULL;
  for (long long c : counts) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Springer-fiber point counts.
//
// For a functional xi supported on positive root covectors (and likewise an
// element x supported on positive root vectors), the coset B n_w u_w lies
// in the fiber iff coad(u_w) xi vanishes on the inversion set of w: the
// vector stays supported on positive covectors under coad(u_w), and
// coad(n_w) carries the e'_delta line to the e'_{w(delta)} line, so the
// only coordinates sent below zero are exactly the inversions.

inline FiberCount fiber_point_count(const Chevalley& C, const GF& F, const FormalSum& rep,
                                    bool dual, const EnumOptions& opt = {}) {
  const RootSystem& R = C.roots();
  for (auto [r, c] : rep) {
    (void)c;
    if (r < 0 || r >= R.num_pos())
      throw std::invalid_argument(
          "fiber_point_count: representative must be supported on positive roots");
  }
  WeylGroup W = WeylGroup::full(R);
  BigInt cosets = flag_point_count(W, F.q());
  if (cosets > opt.coset_budget)
    throw std::runtime_error("fiber_point_count: needs a coset budget of at least " +
                             cosets.str() + " (current budget " +
                             std::to_string(opt.coset_budget) + ")");
  if (opt.engine == 'b' && F.q() != 2)
    throw std::invalid_argument("fiber_point_count: bitpacked engine requires q = 2");
  detail::Plan plan = detail::make_plan(W, R, F.q(), 18);

  GFRing ring(F);
  int npos = R.num_pos();
  std::vector<int> xi = materialize(C, F, rep);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> counts;
  int threads = std::min<long long>(resolve_threads(opt.threads),
                                    std::max<size_t>(1, plan.chunks.size()));

  bool bitpack = (F.q() == 2 && opt.engine != 'g');
  if (bitpack) {
    detail::BitFiber eng;
    eng.cols.resize(npos);
    for (int g = 0; g < npos; ++g) {
      Mat<GFRing> m = dual ? coadjoint_x(C, ring, g, F.one()) : adjoint_x(C, ring, g, F.one());
      std::map<int, std::uint64_t> bycol;
      for (const detail::Trip& t : detail::delta_triplets(F, m, npos))
        bycol[t.col] |= 1ULL << t.row;
      for (auto [c, mask] : bycol) eng.cols[g].push_back({static_cast<std::uint8_t>(c), mask});
    }
    for (int i = 0; i < npos; ++i)
      if (!F.is_zero(xi[i])) eng.xi |= 1ULL << i;
    detail::run_chunks(plan, threads, counts,
                       [&](const detail::Cell& c, long long p) { return eng.run_chunk(c, p); });
  } else {
    detail::VTables vt = detail::build_vtables(F);
    detail::GenericFiber eng;
    eng.vt = &vt;
    eng.q = F.q();
    eng.trips.resize(npos);
    for (int g = 0; g < npos; ++g) {
      eng.trips[g].resize(F.q() - 1);
      for (int tv = 1; tv < F.q(); ++tv) {
        int t = F.from_value(tv);
        Mat<GFRing> m = dual ? coadjoint_x(C, ring, g, t) : adjoint_x(C, ring, g, t);
        eng.trips[g][tv - 1] = detail::delta_triplets(F, m, npos);
      }
    }
    eng.xi.fill(0);
    for (int i = 0; i < npos; ++i) eng.xi[i] = static_cast<std::uint8_t>(F.value(xi[i]));
    detail::run_chunks(plan, threads, counts,
                       [&](const detail::Cell& c, long long p) { return eng.run_chunk(c, p); });
  }

  FiberCount out;
  out.cosets = plan.cosets;
  out.chunks = static_cast<int>(plan.chunks.size());
  out.threads_used = threads;
  out.checksum = detail::fnv1a(counts);
  for (int w = 0; w < W.size(); ++w) out.per_cell[w] = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    out.count += counts[i];
    out.per_cell[plan.cells[plan.chunks[i].cell].w] += counts[i];
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

struct DimEstimate {
  int dim = 0;
  BigInt count_lo, count_hi;
  int q_lo = 0, q_hi = 0;
  bool rationality_caveat = false;  // q_lo is not an even power of the characteristic
};

// dim = round(log(count(q') / count(q)) / log(q' / q)). Irreducible
// components of the fiber can be permuted by Frobenius unless the smaller
// field is already large enough to split them, hence the caveat flag when
// q is an odd power of p; both raw counts are reported for auditing.
inline DimEstimate fiber_dim_estimate(const Chevalley& C, const GF& Flo, const GF& Fhi,
                                      const FormalSum& rep, bool dual,
                                      const EnumOptions& opt = {}) {
  if (Flo.p() != Fhi.p() || Fhi.q() <= Flo.q())
    throw std::invalid_argument("fiber_dim_estimate: fields must share p and satisfy q' > q");
  FiberCount lo = fiber_point_count(C, Flo, rep, dual, opt);
  FiberCount hi = fiber_point_count(C, Fhi, rep, dual, opt);
  if (lo.count == 0 || hi.count == 0)
    throw std::logic_error(
        "fiber_dim_estimate: zero point count, impossible for a nilpotent representative");
  DimEstimate e;
  e.count_lo = lo.count;
  e.count_hi = hi.count;
  e.q_lo = Flo.q();
  e.q_hi = Fhi.q();
  double ratio = e.count_hi.convert_to<double>() / e.count_lo.convert_to<double>();
  e.dim = static_cast<int>(
      std::llround(std::log(ratio) / std::log(double(e.q_hi) / double(e.q_lo))));
  int k = 0;
  for (int v = Flo.q(); v > 1; v /= Flo.p()) ++k;
  e.rationality_caveat = (k % 2) != 0;
  return e;
}

// ---------------------------------------------------------------------------
// Centralizer orders by full group enumeration (G2 only: |G2(F_3)| is a few
// million elements, F4 would need ~10^24).
//
// Every element factors uniquely as u h n_w u_w over (U, T, w, inversion
// coordinates), so the sweep shares coad(u_w) xi per flag coset, then the
// signed permutation of n_w, the torus diagonal, and a DFS over U.

struct CentralizerCount {
  BigInt order, group_order;
  std::uint64_t checksum = 0;
  int threads_used = 0;
  double seconds = 0;
};

inline CentralizerCount centralizer_order(const Chevalley& C, const GF& F, const FormalSum& rep,
                                          bool dual, const EnumOptions& opt = {}) {
  const RootSystem& R = C.roots();
  if (R.type().str() != "G2")
    throw std::invalid_argument("centralizer_order: full enumeration is sized for G2 only");
  int q = F.q(), npos = R.num_pos(), rank = R.rank(), dim = C.dim();
  WeylGroup W = WeylGroup::full(R);

  BigInt group = flag_point_count(W, q);
  for (int i = 0; i < npos; ++i) group *= q;
  for (int i = 0; i < rank; ++i) group *= q - 1;
  if (group > opt.group_budget)
    throw std::runtime_error("centralizer_order: needs a group budget of at least " +
                             group.str() + " (current budget " +
                             std::to_string(opt.group_budget) + ")");

  GFRing ring(F);
  detail::VTables vt = detail::build_vtables(F);

  // Triplets of the positive root elements on the full space; applied to a
  // vector supported on the positive block they reduce to the block case.
  std::vector<std::vector<std::vector<detail::Trip>>> trips(npos);
  for (int g = 0; g < npos; ++g) {
    trips[g].resize(q - 1);
    for (int tv = 1; tv < q; ++tv) {
      int t = F.from_value(tv);
      Mat<GFRing> m = dual ? coadjoint_x(C, ring, g, t) : adjoint_x(C, ring, g, t);
      trips[g][tv - 1] = detail::delta_triplets(F, m, 0);
    }
  }

  // n_w as a signed permutation of the root lines: column gamma carries to
  // row w(gamma) with a unit coefficient.
  struct NW {
    std::array<std::int16_t, detail::kMaxDim> row;
    std::array<std::uint8_t, detail::kMaxDim> val;
  };
  std::vector<NW> nws(W.size());
  for (int w = 0; w < W.size(); ++w) {
    Mat<GFRing> m = Mat<GFRing>::identity(ring, dim);
    for (int s : W.word(w))
      m = m.mul(dual ? coadjoint_n(C, ring, s) : adjoint_n(C, ring, s));
    for (int col = 0; col < 2 * npos; ++col) {
      int hit = -1;
      for (int row = 0; row < dim; ++row) {
        if (F.is_zero(m.at(row, col))) continue;
        if (hit >= 0 || row >= 2 * npos)
          throw std::logic_error("centralizer_order: n_w is not a signed root permutation");
        hit = row;
      }
      if (hit != W.apply(w, col))
        throw std::logic_error("centralizer_order: n_w disagrees with the Weyl action");
      nws[w].row[col] = static_cast<std::int16_t>(hit);
      nws[w].val[col] = static_cast<std::uint8_t>(F.value(m.at(hit, col)));
    }
  }

  // Torus diagonals per (t_1, t_2, ...) in (F_q^*)^rank, as value
  // multipliers on the root lines.
  std::vector<detail::Vec> diags;
  {
    long long combos = 1;
    for (int i = 0; i < rank; ++i) combos *= q - 1;
    for (long long id = 0; id < combos; ++id) {
      Mat<GFRing> m = Mat<GFRing>::identity(ring, dim);
      long long v = id;
      for (int i = 0; i < rank; ++i) {
        int t = F.from_value(1 + static_cast<int>(v % (q - 1)));
        v /= (q - 1);
        m = m.mul(dual ? coadjoint_h(C, ring, i, t, F.inv(t))
                       : adjoint_h(C, ring, i, t, F.inv(t)));
      }
      detail::Vec d{};
      for (int r = 0; r < dim; ++r) d[r] = static_cast<std::uint8_t>(F.value(m.at(r, r)));
      diags.push_back(d);
    }
  }

  std::vector<int> xi = materialize(C, F, rep);
  detail::Vec xi_full{};
  for (int i = 0; i < dim; ++i) xi_full[i] = static_cast<std::uint8_t>(F.value(xi[i]));
  detail::Vec xi_pos = xi_full;  // flag stage keeps positive support
  for (int i = npos; i < dim; ++i)
    if (xi_pos[i]) throw std::invalid_argument("centralizer_order: representative not in n*");

  // Inner work per flag leaf is (q-1)^rank q^npos, so chunks target fewer
  // flag leaves than the fiber plan.
  long long inner = diags.size();
  for (int i = 0; i < npos; ++i) inner *= q;
  int leaves_log2 = 18;
  while (leaves_log2 > 0 && (1LL << leaves_log2) * inner > (1LL << 20)) --leaves_log2;
  detail::Plan plan = detail::make_plan(W, R, q, leaves_log2);

  const std::uint8_t* AD = vt.add.data();
  const std::uint8_t* MU = vt.mul.data();
  auto apply_full = [&](int root, int tv, const detail::Vec& in, detail::Vec& out) {
    out = in;
    if (tv == 0) return;
    for (const detail::Trip& t : trips[root][tv - 1])
      out[t.row] = AD[out[t.row] * q + MU[t.val * q + in[t.col]]];
  };

  auto run_chunk = [&](const detail::Cell& cell, long long prefix) -> long long {
    int l = static_cast<int>(cell.apply_order.size());
    std::array<detail::Vec, 32> stk;
    stk[0] = xi_pos;
    long long pr = prefix;
    for (int k = 0; k < cell.prefix_len; ++k) {
      apply_full(cell.apply_order[k], static_cast<int>(pr % q), stk[k], stk[k + 1]);
      pr /= q;
    }
    const NW& nw = nws[cell.w];
    long long cnt = 0;
    std::array<detail::Vec, 32> ustk;
    // DFS over the u_B coordinates, innermost (highest) root first.
    std::function<void(int)> urec = [&](int k) {
      if (k == npos) {
        if (ustk[k] == xi_full) ++cnt;
        return;
      }
      int root = npos - 1 - k;
      for (int tv = 0; tv < q; ++tv) {
        apply_full(root, tv, ustk[k], ustk[k + 1]);
        urec(k + 1);
      }
    };
    std::function<void(int)> frec = [&](int k) {
      if (k == l) {
        detail::Vec v2{};
        for (int j = 0; j < npos; ++j)
          if (stk[k][j]) v2[nw.row[j]] = MU[nw.val[j] * q + stk[k][j]];
        for (const detail::Vec& d : diags) {
          detail::Vec v3{};
          for (int r = 0; r < 2 * npos; ++r) v3[r] = MU[d[r] * q + v2[r]];
          ustk[0] = v3;
          urec(0);
        }
        return;
      }
      for (int tv = 0; tv < q; ++tv) {
        apply_full(cell.apply_order[k], tv, stk[k], stk[k + 1]);
        frec(k + 1);
      }
    };
    frec(cell.prefix_len);
    return cnt;
  };

  auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> counts;
  int threads = std::min<long long>(resolve_threads(opt.threads),
                                    std::max<size_t>(1, plan.chunks.size()));
  detail::run_chunks(plan, threads, counts, run_chunk);

  CentralizerCount out;
  out.group_order = group;
  out.threads_used = threads;
  out.checksum = detail::fnv1a(counts);
  for (long long c : counts) out.order += c;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.order == 0 || out.group_order % out.order != 0)
    throw std::logic_error("centralizer_order: count does not divide the group order");
  return out;
}

// ---------------------------------------------------------------------------
// Unipotent radical membership.

inline bool is_unipotent(const GF& F, const Mat<GFRing>& m) {
  Mat<GFRing> s = m;
  for (int i = 0; i < s.size(); ++i) s.at(i, i) = F.sub(s.at(i, i), F.one());
  int steps = 1;
  while ((1 << steps) < s.size()) ++steps;
  for (int i = 0; i < steps; ++i) s = s.mul(s);
  for (int r = 0; r < s.size(); ++r)
    for (int c = 0; c < s.size(); ++c)
      if (!F.is_zero(s.at(r, c))) return false;
  return true;
}

// g lies in the unipotent radical U_P of the standard parabolic P_J iff g
// is unipotent and (Ad(g) - 1) maps p = l + n_P into n_P: such a g
// normalizes p (hence lies in P) and projects trivially to the Levi.
inline bool in_unipotent_radical(const Chevalley& C, const GF& F, const Mat<GFRing>& m,
                                 const std::vector<int>& J) {
  const RootSystem& R = C.roots();
  if (!is_unipotent(F, m)) return false;
  std::vector<bool> levi(R.num_roots(), false);
  for (int r : R.subsystem_roots(J)) levi[r] = true;
  auto in_np = [&](int i) { return i < R.num_pos() && !levi[i]; };
  auto in_p = [&](int i) { return i >= R.num_roots() || levi[i] || in_np(i); };
  for (int col = 0; col < C.dim(); ++col) {
    if (!in_p(col)) continue;
    for (int row = 0; row < C.dim(); ++row) {
      int v = m.at(row, col);
      if (row == col) v = F.sub(v, F.one());
      if (!F.is_zero(v) && !in_np(row)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Component group presentations.
//
// A case records generator words for A_G(xi) = Z_G(xi)/Z_G(xi)^0 together
// with relations and their intended images in a symmetric group. Checking
// verifies that every generator centralizes the representative, that every
// relation evaluates to the identity matrix or to an element of the
// identity-component witness set Z_{U_P}(xi), and that the images satisfy
// the same relations in S_n.

struct ComponentRelation {
  std::string name;
  std::vector<int> gammas;  // indices into the generator list
};

struct ComponentCase {
  std::string label;
  std::string type;  // "G2" or "F4"
  GF field{2, 1};
  bool dual = true;
  FormalSum rep;
  std::vector<int> levi;  // J of the witness parabolic P_J; empty means the Borel
  std::vector<std::vector<Atom>> generators;
  std::vector<ComponentRelation> relations;
  int sn = 0;                             // target symmetric group S_n
  std::vector<std::vector<int>> images;   // generator -> permutation of {0..sn-1}
};

struct ComponentReport {
  std::string label;
  std::vector<std::string> relation_outcomes;  // "identity" or "z0-witness"
  bool homomorphism_ok = false;
};

inline ComponentReport component_group_check(const Chevalley& C, const ComponentCase& cs) {
  const RootSystem& R = C.roots();
  if (R.type().str() != cs.type)
    throw std::invalid_argument("component_group_check: case built for type " + cs.type);
  const GF& F = cs.field;
  std::vector<int> xi = materialize(C, F, cs.rep);

  auto centralizes = [&](const GroupElt& g) {
    const Mat<GFRing>& m = cs.dual ? g.coad : g.ad;
    return m.apply(xi) == xi;
  };

  std::vector<GroupElt> gam;
  for (size_t i = 0; i < cs.generators.size(); ++i) {
    gam.push_back(make_element(C, F, cs.generators[i]));
    if (!centralizes(gam.back()))
      throw std::runtime_error("component_group_check: generator gamma_" + std::to_string(i + 1) +
                               " of " + cs.label + " does not centralize the representative");
  }

  ComponentReport rep;
  rep.label = cs.label;
  for (const ComponentRelation& rel : cs.relations) {
    GroupElt e = make_element(C, F, {});
    for (int gi : rel.gammas) e = mul(e, gam.at(gi));
    if (e.ad.is_identity()) {
      rep.relation_outcomes.push_back("identity");
    } else if (in_unipotent_radical(C, F, e.ad, cs.levi) && centralizes(e)) {
      rep.relation_outcomes.push_back("z0-witness");
    } else {
      throw std::runtime_error("component_group_check: relation " + rel.name + " of " + cs.label +
                               " is neither the identity nor a radical centralizer witness");
    }
  }

  // The listed relations must hold in S_n for the intended images, so the
  // assignment extends to a homomorphism from the presented group.
  for (const auto& img : cs.images) {
    std::vector<bool> seen(cs.sn, false);
    if (static_cast<int>(img.size()) != cs.sn)
      throw std::invalid_argument("component_group_check: image is not a permutation");
    for (int v : img) {
      if (v < 0 || v >= cs.sn || seen[v])
        throw std::invalid_argument("component_group_check: image is not a permutation");
      seen[v] = true;
    }
  }
  for (const ComponentRelation& rel : cs.relations) {
    std::vector<int> acc(cs.sn);
    for (int i = 0; i < cs.sn; ++i) acc[i] = i;
    for (int gi : rel.gammas) {
      std::vector<int> nxt(cs.sn);
      for (int i = 0; i < cs.sn; ++i) nxt[i] = acc[cs.images.at(gi)[i]];
      acc = nxt;
    }
    for (int i = 0; i < cs.sn; ++i)
      if (acc[i] != i)
        throw std::runtime_error("component_group_check: images violate relation " + rel.name +
                                 " of " + cs.label);
  }
  rep.homomorphism_ok = true;
  return rep;
}

// The three presentations with nontrivial component groups among the bad
// characteristic orbit tables: both are Coxeter presentations, S3 on two
// involutions and S4 on three.
inline std::vector<ComponentCase> builtin_component_cases() {
  std::vector<ComponentCase> out;

  {
    // Subregular functional in type G2, char 3: A = S3. The second
    // generator needs eta with eta^2 = -1, which lives in F_9.
    RootSystem R("G2");
    GF F(3, 2);
    int a = R.index_of({1, 0}), b = R.index_of({0, 1});
    int a2b = R.index_of({2, 1});
    int m1 = F.from_int(-1);
    int eta = F.pow(F.generator(), 2);
    if (F.mul(eta, eta) != m1) throw std::logic_error("builtin_component_cases: eta^2 != -1");
    ComponentCase cs;
    cs.label = "G2 dual char 3, subregular";
    cs.type = "G2";
    cs.field = F;
    cs.dual = true;
    cs.rep = {{b, 1}, {a2b, 1}};
    cs.levi = {};
    cs.generators = {{ah(b, m1)}, {ah(b, m1), ax(a, eta)}};
    cs.relations = {{"g1^2", {0, 0}},
                    {"g2^2", {1, 1}},
                    {"(g1 g2)^3", {0, 1, 0, 1, 0, 1}}};
    cs.sn = 3;
    cs.images = {{1, 0, 2}, {2, 1, 0}};
    out.push_back(std::move(cs));
  }

  {
    // F4, char 2, the dual orbit with A = S4. All signs vanish in char 2.
    RootSystem R("F4");
    GF F(2, 1);
    int p = 0, r = 2, s = 3;
    int pqr = R.index_of({1, 1, 1, 0}), qrs = R.index_of({0, 1, 1, 1});
    int pq2r = R.index_of({1, 1, 2, 0}), q2r2s = R.index_of({0, 1, 2, 2});
    int one = F.one();
    ComponentCase cs;
    cs.label = "F4 dual char 2, A = S4";
    cs.type = "F4";
    cs.field = F;
    cs.dual = true;
    cs.rep = {{pqr, 1}, {qrs, 1}, {pq2r, 1}, {q2r2s, 1}};
    cs.levi = {p, r, s};
    cs.generators = {{ax(p, one), ax(s, one)},
                     {an(p), an(s)},
                     {ax(p, one), ax(s, one), ax(r, one), an(r), ax(r, one)}};
    cs.relations = {{"g1^2", {0, 0}},
                    {"g2^2", {1, 1}},
                    {"g3^2", {2, 2}},
                    {"(g1 g2)^3", {0, 1, 0, 1, 0, 1}},
                    {"(g2 g3)^3", {1, 2, 1, 2, 1, 2}},
                    {"(g1 g3)^2", {0, 2, 0, 2}}};
    cs.sn = 4;
    cs.images = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
    out.push_back(std::move(cs));
  }

  {
    // F4, char 3, the adjoint orbit with A = S4.
    RootSystem R("F4");
    GF F(3, 1);
    int p = 0, qq = 1, r = 2, s = 3;
    int rs = R.index_of({0, 0, 1, 1});
    int pqr = R.index_of({1, 1, 1, 0}), qrs = R.index_of({0, 1, 1, 1});
    int pq2r = R.index_of({1, 1, 2, 0}), q2r2s = R.index_of({0, 1, 2, 2});
    int one = F.one(), m1 = F.from_int(-1);
    ComponentCase cs;
    cs.label = "F4 adjoint char 3, A = S4";
    cs.type = "F4";
    cs.field = F;
    cs.dual = false;
    cs.rep = {{pqr, 1}, {qrs, 1}, {pq2r, 1}, {q2r2s, 1}};
    cs.levi = {p, r, s};
    cs.generators = {
        {ah(p, m1), ah(qq, m1), ah(r, m1), ah(s, m1), ax(p, one), ax(s, one), ax(rs, one)},
        {ah(p, m1), ah(qq, m1), ah(r, m1), ah(s, m1), an(p, m1), an(s, m1)},
        {ah(p, m1), ah(qq, m1), ax(p, one), ax(s, m1), ax(rs, one), ax(r, one), an(r, m1),
         ax(r, one)}};
    cs.relations = {{"g1^2", {0, 0}},
                    {"g2^2", {1, 1}},
                    {"g3^2", {2, 2}},
                    {"(g1 g2)^3", {0, 1, 0, 1, 0, 1}},
                    {"(g2 g3)^3", {1, 2, 1, 2, 1, 2}},
                    {"(g1 g3)^2", {0, 2, 0, 2}}};
    cs.sn = 4;
    cs.images = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
    out.push_back(std::move(cs));
  }

  return out;
}

}  // namespace exlie
