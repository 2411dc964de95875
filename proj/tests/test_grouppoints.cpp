// Group points over small fields: generator words and their relations,
// Bruhat-cell enumeration against the degree product formula, fiber point
// counts against brute-force coset enumeration and frozen values, dimension
// estimates, centralizer orders with an orbit-stabilizer cross-check, and
// component-group presentation verification.
#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "exlie/chevalley.hpp"
#include "exlie/gf.hpp"
#include "exlie/grouppoints.hpp"
#include "exlie/rootsys.hpp"
#include "exlie/weyl.hpp"

using namespace exlie;

namespace {

struct G2Setup {
  RootSystem R{"G2"};
  Chevalley C{R};
  int a = 0, b = 1;
  int a2b = R.index_of({2, 1});
  FormalSum zero = {};
  FormalSum regular = {{a, 1}, {b, 1}};
  FormalSum subreg = {{b, 1}, {a2b, 1}};
  FormalSum short_root = {{a, 1}};
  FormalSum long_root = {{b, 1}};
};

struct F4Setup {
  RootSystem R{"F4"};
  Chevalley C{R};
  int p = 0, q = 1, r = 2, s = 3;
  int pqr = R.index_of({1, 1, 1, 0});
  int qrs = R.index_of({0, 1, 1, 1});
  int pq2r = R.index_of({1, 1, 2, 0});
  int q2r2s = R.index_of({0, 1, 2, 2});
  FormalSum xi5 = {{pqr, 1}, {qrs, 1}, {pq2r, 1}, {q2r2s, 1}};
};

// Weyl element with the given reduced word (leftmost first), for pinning
// per-cell counts to named cells.
int weyl_of_word(const WeylGroup& W, const std::vector<int>& word) {
  int w = W.identity();
  for (int s : word) w = W.mult(w, W.reflection_of_root(s));
  return w;
}

// Membership of the coset B g in the fiber over a dual functional: the
// image must vanish on the negative-root covector lines.
bool coset_in_fiber(const Chevalley& C, const GF& F, const GroupElt& g,
                    const std::vector<int>& xi) {
  int npos = C.roots().num_pos();
  std::vector<int> img = g.coad.apply(xi);
  for (int r = npos; r < 2 * npos; ++r)
    if (!F.is_zero(img[r])) return false;
  return true;
}

// Fiber count by explicit coset representatives through make_element; the
// production engine never builds n_w, so this exercises the whole
// reduction independently.
long long brute_fiber_count(const Chevalley& C, const GF& F, const FormalSum& rep) {
  const RootSystem& R = C.roots();
  WeylGroup W = WeylGroup::full(R);
  std::vector<int> xi = materialize(C, F, rep);
  long long total = 0;
  for (int w = 0; w < W.size(); ++w) {
    std::vector<int> inv = inversion_set(W, R, w);
    long long tuples = 1;
    for (size_t i = 0; i < inv.size(); ++i) tuples *= F.q();
    for (long long id = 0; id < tuples; ++id) {
      std::vector<Atom> word = weyl_word_atoms(W, w);
      long long v = id;
      for (int g : inv) {
        int tv = static_cast<int>(v % F.q());
        v /= F.q();
        if (tv) word.push_back(ax(g, F.from_value(tv)));
      }
      if (coset_in_fiber(C, F, make_element(C, F, word), xi)) ++total;
    }
  }
  return total;
}

TEST(GroupPoints, MakeElementBasics) {
  G2Setup g;
  GF F(3, 1);
  int one = F.one(), two = F.from_int(2);

  GroupElt e = make_element(g.C, F, {});
  EXPECT_TRUE(e.ad.is_identity());
  EXPECT_TRUE(e.coad.is_identity());

  // Parameter additivity and the word/matrix product property.
  GroupElt x1 = make_element(g.C, F, {ax(g.a, one)});
  GroupElt x2 = make_element(g.C, F, {ax(g.a, two)});
  EXPECT_TRUE(mul(x1, x2).ad.is_identity());  // 1 + 2 = 0 in F_3
  EXPECT_EQ(mul(x1, x2).word.size(), 2u);
  GroupElt both = make_element(g.C, F, {ax(g.a, one), ax(g.b, one)});
  EXPECT_EQ(both.ad,
            make_element(g.C, F, {ax(g.a, one)}).ad.mul(make_element(g.C, F, {ax(g.b, one)}).ad));

  // n_gamma(1)^2 = h_gamma(-1); in characteristic 2 that is the identity.
  GroupElt nn = make_element(g.C, F, {an(g.a), an(g.a)});
  EXPECT_EQ(nn.ad, make_element(g.C, F, {ah(g.a, two)}).ad);
  GF F2(2, 1);
  EXPECT_TRUE(make_element(g.C, F2, {an(g.b), an(g.b)}).ad.is_identity());

  // Ad(n_a) carries each root line to the s_a-reflected root line.
  WeylGroup W = WeylGroup::full(g.R);
  int sa = W.reflection_of_root(g.a);
  GroupElt na = make_element(g.C, F, {an(g.a)});
  for (int root = 0; root < g.R.num_roots(); ++root) {
    int image = W.apply(sa, root);
    for (int row = 0; row < g.R.num_roots(); ++row)
      EXPECT_EQ(F.is_zero(na.ad.at(row, root)), row != image) << root << "," << row;
  }

  EXPECT_THROW(make_element(g.C, F, {ah(g.a, GF::ZERO)}), std::invalid_argument);
  EXPECT_THROW(make_element(g.C, F, {an(g.a, GF::ZERO)}), std::invalid_argument);
}

// The defining relation set in the adjoint representation: parameter
// additivity, the commutator formula, and torus conjugation, exhaustively
// over root pairs with sampled field values, for both types over F_4 and
// F_9 (the two smallest fields where squares and a generator differ).
TEST(GroupPoints, GroupRelationsExhaustive) {
  for (const char* type : {"G2", "F4"}) {
    RootSystem R(type);
    Chevalley C(R);
    for (int pk : {22, 32}) {
      GF F(pk / 10, pk % 10);
      GFRing ring(F);
      int gen = F.generator();
      int gsq = F.mul(gen, gen);

      // x_g(t) x_g(u) = x_g(t + u) over every root line.
      for (int root = 0; root < R.num_roots(); ++root) {
        Mat<GFRing> lhs = adjoint_x(C, ring, root, gen).mul(adjoint_x(C, ring, root, gsq));
        EXPECT_EQ(lhs, adjoint_x(C, ring, root, F.add(gen, gsq))) << type << " root " << root;
      }

      // h_g(t) x_d(u) h_g(t)^{-1} = x_d(t^{<d,g\/>} u) over every ordered pair.
      for (int gr = 0; gr < R.num_roots(); ++gr) {
        Mat<GFRing> h = adjoint_h(C, ring, gr, gen, F.inv(gen));
        Mat<GFRing> hi = adjoint_h(C, ring, gr, F.inv(gen), gen);
        for (int d = 0; d < R.num_roots(); ++d) {
          long long pair = R.cartan_pairing(d, gr);
          long long e = ((pair % (F.q() - 1)) + F.q() - 1) % (F.q() - 1);
          int scaled = F.mul(F.pow(gen, e), gsq);
          EXPECT_EQ(h.mul(adjoint_x(C, ring, d, gsq)).mul(hi), adjoint_x(C, ring, d, scaled))
              << type << " pair " << gr << "," << d;
        }
      }

      // Chevalley commutator formula over every pair of distinct positive
      // roots: [x_a(s), x_b(t)] equals the ordered product of
      // x_{ib+ja}(c (-t)^i s^j).
      int s = gen, t = gsq;
      for (int a = 0; a < R.num_pos(); ++a)
        for (int b = 0; b < R.num_pos(); ++b) {
          if (a == b) continue;
          Mat<GFRing> lhs = adjoint_x(C, ring, a, F.neg(s))
                                .mul(adjoint_x(C, ring, b, F.neg(t)))
                                .mul(adjoint_x(C, ring, a, s))
                                .mul(adjoint_x(C, ring, b, t));
          Mat<GFRing> rhs = Mat<GFRing>::identity(ring, C.dim());
          for (const CommutatorTerm& term : commutator_constants(C, a, b)) {
            int arg = F.mul(F.from_int(term.c),
                            F.mul(F.pow(F.neg(t), term.i), F.pow(s, term.j)));
            rhs = rhs.mul(adjoint_x(C, ring, term.root, arg));
          }
          EXPECT_EQ(lhs, rhs) << type << " q=" << F.q() << " pair " << a << "," << b;
        }
    }
  }
}

TEST(GroupPoints, BruhatCountMatchesDegrees) {
  for (const char* type : {"G2", "F4"}) {
    RootSystem R(type);
    WeylGroup W = WeylGroup::full(R);
    for (int q : {2, 3, 4})
      EXPECT_EQ(flag_point_count(W, q), flag_count_formula(R.type(), q)) << type << " q=" << q;
  }
  RootSystem A1("A1");
  EXPECT_THROW(flag_count_formula(A1.type(), 2), std::invalid_argument);
}

// The zero functional is annihilated by everything, so its fiber is the
// full flag variety and the enumerator must reproduce the degree product.
TEST(GroupPoints, FiberCountZeroFunctional) {
  G2Setup g;
  const std::pair<GF, long long> cases[] = {
      {GF(2, 1), 189},   {GF(3, 1), 1456},       {GF(2, 2), 6825},
      {GF(3, 2), 664300}, {GF(2, 4), 19014177}};
  for (const auto& [F, expect] : cases) {
    FiberCount fc = fiber_point_count(g.C, F, g.zero, true);
    EXPECT_EQ(fc.count, expect) << "q=" << F.q();
    EXPECT_EQ(fc.count, fc.cosets);
    EXPECT_EQ(fc.cosets, flag_count_formula(g.R.type(), F.q()));
  }

  F4Setup f;
  GF F2(2, 1);
  FiberCount fc = fiber_point_count(f.C, F2, {}, true);
  EXPECT_EQ(fc.count, 197358525);
  EXPECT_EQ(fc.cosets, flag_count_formula(f.R.type(), 2));
}

// Engine counts equal the make_element brute force on every G2 orbit
// representative over F_2 and F_3, in both representations.
TEST(GroupPoints, FiberCountMatchesBruteForce) {
  G2Setup g;
  for (int q : {2, 3}) {
    GF F(q, 1);
    for (const FormalSum& rep : {g.zero, g.regular, g.subreg, g.short_root, g.long_root}) {
      EXPECT_EQ(fiber_point_count(g.C, F, rep, true).count, brute_fiber_count(g.C, F, rep))
          << "q=" << q;
    }
  }
}

// Frozen fiber point counts for the coadjoint orbit representatives of G2
// in characteristic 3.
TEST(GroupPoints, FiberCountsG2DualOrbits) {
  G2Setup g;
  GF F3(3, 1), F9(3, 2);
  const struct {
    const FormalSum& rep;
    long long n3, n9;
  } rows[] = {
      {g.regular, 1, 1},
      {g.subreg, 7, 37},
      {g.short_root, 28, 190},
      {g.long_root, 52, 910},
  };
  for (const auto& row : rows) {
    EXPECT_EQ(fiber_point_count(g.C, F3, row.rep, true).count, row.n3);
    EXPECT_EQ(fiber_point_count(g.C, F9, row.rep, true).count, row.n9);
  }

  // The subregular fiber has four irreducible components, all of dimension
  // one and all rational once the field contains the cube roots of -1, so
  // over F_9 the count has leading term 4q.
  EXPECT_EQ(fiber_point_count(g.C, F9, g.subreg, true).count, 4 * 9 + 1);

  // Adjoint-side counts for comparison: the regular element is its own
  // single flag, the subregular matches the dual side.
  EXPECT_EQ(fiber_point_count(g.C, F3, g.regular, false).count, 1);
  EXPECT_EQ(fiber_point_count(g.C, F3, g.subreg, false).count, 7);
}

// The nonzero cells of the subregular fiber are exactly B, B s_a, and
// B s_b s_a, with 1, q, and kq points, where k counts the solutions of
// x^3 + x = 0 in F_q.
TEST(GroupPoints, PerCellBreakdown) {
  G2Setup g;
  WeylGroup W = WeylGroup::full(g.R);
  int w_e = W.identity();
  int w_sa = weyl_of_word(W, {g.a});
  int w_sba = weyl_of_word(W, {g.b, g.a});

  for (int ext : {1, 2}) {
    GF F(3, ext);
    int q = F.q(), k = q == 3 ? 1 : 3;
    FiberCount fc = fiber_point_count(g.C, F, g.subreg, true);
    for (const auto& [w, c] : fc.per_cell) {
      long long expect = w == w_e ? 1 : w == w_sa ? q : w == w_sba ? k * q : 0;
      EXPECT_EQ(c, expect) << "q=" << q << " cell " << w;
    }
  }
}

TEST(GroupPoints, FiberDimEstimates) {
  G2Setup g;
  GF F3(3, 1), F9(3, 2), F4f(2, 2), F16(2, 4);

  DimEstimate reg = fiber_dim_estimate(g.C, F3, F9, g.regular, true);
  EXPECT_EQ(reg.dim, 0);

  // Short-root representative: counts 28 and 190 give dimension 2.
  DimEstimate sr = fiber_dim_estimate(g.C, F3, F9, g.short_root, true);
  EXPECT_EQ(sr.dim, 2);
  EXPECT_TRUE(sr.rationality_caveat);
  EXPECT_EQ(sr.count_lo, 28);
  EXPECT_EQ(sr.count_hi, 190);

  DimEstimate lr = fiber_dim_estimate(g.C, F3, F9, g.long_root, true);
  EXPECT_EQ(lr.dim, 3);

  // The subregular estimate over (3, 9) comes out 2 although the fiber has
  // dimension 1: three of its four components are permuted by Frobenius
  // over F_3, which is exactly what the caveat flag warns about. Over
  // (9, 81) the estimate would be 1, but that enumeration is out of budget.
  DimEstimate sub = fiber_dim_estimate(g.C, F3, F9, g.subreg, true);
  EXPECT_EQ(sub.dim, 2);
  EXPECT_TRUE(sub.rationality_caveat);

  // Even-power base field: no caveat.
  DimEstimate z = fiber_dim_estimate(g.C, F4f, F16, g.zero, true);
  EXPECT_EQ(z.dim, 6);
  EXPECT_FALSE(z.rationality_caveat);
  EXPECT_EQ(z.count_lo, 6825);
  EXPECT_EQ(z.count_hi, 19014177);

  // (9, 81) exceeds the default coset budget; the rejection names the
  // budget a caller would need.
  GF F81(3, 4);
  try {
    fiber_dim_estimate(g.C, F9, F81, g.short_root, true);
    FAIL() << "expected budget rejection";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("289490274892"), std::string::npos) << e.what();
  }

  EXPECT_THROW(fiber_dim_estimate(g.C, F9, F3, g.zero, true), std::invalid_argument);
  EXPECT_THROW(fiber_dim_estimate(g.C, F3, F4f, g.zero, true), std::invalid_argument);
}

// Fiber membership is a property of the coset: multiplying the
// representative on the left by a random element of B never changes it.
TEST(GroupPoints, FiberCellIndependence) {
  std::srand(20260817);
  G2Setup g;
  GF F9(3, 2);
  WeylGroup W = WeylGroup::full(g.R);
  std::vector<int> xi = materialize(g.C, F9, g.subreg);
  for (int trial = 0; trial < 40; ++trial) {
    int w = std::rand() % W.size();
    std::vector<Atom> word = weyl_word_atoms(W, w);
    for (int gr : inversion_set(W, g.R, w)) {
      int tv = std::rand() % F9.q();
      if (tv) word.push_back(ax(gr, F9.from_value(tv)));
    }
    GroupElt h = make_element(g.C, F9, word);

    std::vector<Atom> bw;
    for (int i = 0; i < g.R.rank(); ++i)
      bw.push_back(ah(i, F9.from_value(1 + std::rand() % (F9.q() - 1))));
    for (int gr = 0; gr < g.R.num_pos(); ++gr) {
      int tv = std::rand() % F9.q();
      if (tv) bw.push_back(ax(gr, F9.from_value(tv)));
    }
    GroupElt bh = mul(make_element(g.C, F9, bw), h);
    EXPECT_EQ(coset_in_fiber(g.C, F9, h, xi), coset_in_fiber(g.C, F9, bh, xi)) << trial;
  }

  F4Setup f;
  GF F2(2, 1);
  WeylGroup WF = WeylGroup::full(f.R);
  std::vector<int> xi5 = materialize(f.C, F2, f.xi5);
  for (int trial = 0; trial < 10; ++trial) {
    int w = std::rand() % WF.size();
    std::vector<Atom> word = weyl_word_atoms(WF, w);
    for (int gr : inversion_set(WF, f.R, w))
      if (std::rand() % 2) word.push_back(ax(gr, F2.one()));
    GroupElt h = make_element(f.C, F2, word);
    std::vector<Atom> bw;
    for (int gr = 0; gr < f.R.num_pos(); ++gr)
      if (std::rand() % 2) bw.push_back(ax(gr, F2.one()));
    GroupElt bh = mul(make_element(f.C, F2, bw), h);
    EXPECT_EQ(coset_in_fiber(f.C, F2, h, xi5), coset_in_fiber(f.C, F2, bh, xi5)) << trial;
  }
}

TEST(GroupPoints, CentralizerOrders) {
  G2Setup g;
  GF F2(2, 1), F3(3, 1);

  // The zero functional is centralized by everything.
  EXPECT_EQ(centralizer_order(g.C, F2, g.zero, true).order, 12096);
  CentralizerCount whole = centralizer_order(g.C, F3, g.zero, true);
  EXPECT_EQ(whole.order, 4245696);
  EXPECT_EQ(whole.order, whole.group_order);

  // Frozen orders for the orbit representatives over F_3. The regular one
  // is q^2, matching a two-dimensional connected unipotent stabilizer.
  EXPECT_EQ(centralizer_order(g.C, F3, g.regular, true).order, 9);
  EXPECT_EQ(centralizer_order(g.C, F3, g.subreg, true).order, 162);
  EXPECT_EQ(centralizer_order(g.C, F3, g.short_root, true).order, 648);
  EXPECT_EQ(centralizer_order(g.C, F3, g.long_root, true).order, 5832);
  EXPECT_EQ(centralizer_order(g.C, F3, g.regular, false).order, 9);

  // |G2(F_4)| = 251596800 exceeds the default group budget.
  GF F4f(2, 2);
  try {
    centralizer_order(g.C, F4f, g.zero, true);
    FAIL() << "expected budget rejection";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("251596800"), std::string::npos) << e.what();
  }

  F4Setup f;
  EXPECT_THROW(centralizer_order(f.C, F2, {}, true), std::invalid_argument);
}

// Orbit-stabilizer over F_3: the coadjoint orbit of the regular
// representative, enumerated by breadth-first search over all of g^* with
// the simple root subgroups of both signs as generators, has size
// |G| / |Z|.
TEST(GroupPoints, OrbitStabilizerRegular) {
  G2Setup g;
  GF F(3, 1);
  GFRing ring(F);
  int dim = g.C.dim();

  std::vector<std::vector<detail::Trip>> gens;
  for (int root : {g.a, g.b, g.R.negate(g.a), g.R.negate(g.b)})
    for (int tv = 1; tv < 3; ++tv)
      gens.push_back(
          detail::delta_triplets(F, coadjoint_x(g.C, ring, root, F.from_value(tv)), 0));

  detail::VTables vt = detail::build_vtables(F);
  auto encode = [&](const std::vector<std::uint8_t>& v) {
    long long idx = 0;
    for (int i = dim - 1; i >= 0; --i) idx = idx * 3 + v[i];
    return idx;
  };

  std::vector<int> xi = materialize(g.C, F, g.regular);
  std::vector<std::uint8_t> start(dim);
  for (int i = 0; i < dim; ++i) start[i] = static_cast<std::uint8_t>(F.value(xi[i]));

  long long space = 1;
  for (int i = 0; i < dim; ++i) space *= 3;
  std::vector<bool> seen(space, false);
  std::queue<std::vector<std::uint8_t>> bfs;
  seen[encode(start)] = true;
  bfs.push(start);
  long long orbit = 0;
  while (!bfs.empty()) {
    std::vector<std::uint8_t> v = bfs.front();
    bfs.pop();
    ++orbit;
    for (const auto& gen : gens) {
      std::vector<std::uint8_t> w = v;
      for (const detail::Trip& t : gen)
        w[t.row] = vt.add[w[t.row] * 3 + vt.mul[t.val * 3 + v[t.col]]];
      long long id = encode(w);
      if (!seen[id]) {
        seen[id] = true;
        bfs.push(w);
      }
    }
  }
  EXPECT_EQ(orbit, 471744);
  EXPECT_EQ(BigInt(orbit) * 9, BigInt(4245696));
}

// The packaged component-group cases: every generator centralizes the
// representative, every relation evaluates to the identity on the nose
// (no identity-component witness is ever needed), and the generator images
// satisfy the same relations in the symmetric group.
TEST(GroupPoints, ComponentGroupPresentations) {
  std::vector<ComponentCase> cases = builtin_component_cases();
  ASSERT_EQ(cases.size(), 3u);
  EXPECT_EQ(cases[0].sn, 3);
  EXPECT_EQ(cases[1].sn, 4);
  EXPECT_EQ(cases[2].sn, 4);

  for (const ComponentCase& cs : cases) {
    RootSystem R(cs.type);
    Chevalley C(R);
    ComponentReport rep = component_group_check(C, cs);
    EXPECT_TRUE(rep.homomorphism_ok) << cs.label;
    ASSERT_EQ(rep.relation_outcomes.size(), cs.relations.size()) << cs.label;
    for (const std::string& oc : rep.relation_outcomes) EXPECT_EQ(oc, "identity") << cs.label;
  }

  // A generator that fails to centralize is a hard error naming it.
  ComponentCase broken = cases[0];
  broken.generators[1] = {ax(0, broken.field.one())};
  RootSystem R("G2");
  Chevalley C(R);
  try {
    component_group_check(C, broken);
    FAIL() << "expected centralizer failure";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("gamma_2"), std::string::npos) << e.what();
  }

  // Images that do not satisfy the relations are rejected, naming the
  // relation: a 3-cycle is not an involution.
  ComponentCase badimg = cases[0];
  badimg.images[0] = {1, 2, 0};
  try {
    component_group_check(C, badimg);
    FAIL() << "expected image relation failure";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("g1^2"), std::string::npos) << e.what();
  }

  ComponentCase notperm = cases[0];
  notperm.images[0] = {0, 0, 2};
  EXPECT_THROW(component_group_check(C, notperm), std::invalid_argument);

  ComponentCase wrongtype = cases[0];
  F4Setup f;
  EXPECT_THROW(component_group_check(f.C, wrongtype), std::invalid_argument);
}

TEST(GroupPoints, UnipotentRadicalMembership) {
  F4Setup f;
  GF F2(2, 1);
  GFRing ring2(F2);
  std::vector<int> J = {f.p, f.r, f.s};

  EXPECT_TRUE(is_unipotent(F2, adjoint_x(f.C, ring2, f.pqr, F2.one())));
  EXPECT_TRUE(
      in_unipotent_radical(f.C, F2, adjoint_x(f.C, ring2, f.pq2r, F2.one()), J));
  EXPECT_TRUE(in_unipotent_radical(
      f.C, F2,
      make_element(f.C, F2, {ax(f.pqr, F2.one()), ax(f.q2r2s, F2.one())}).ad, J));

  // Levi root subgroups are unipotent but not in the radical.
  EXPECT_FALSE(in_unipotent_radical(f.C, F2, adjoint_x(f.C, ring2, f.p, F2.one()), J));
  // Opposite-radical elements are unipotent but not in the radical.
  EXPECT_FALSE(in_unipotent_radical(
      f.C, F2, adjoint_x(f.C, ring2, f.R.negate(f.pqr), F2.one()), J));
  // In characteristic 2 the Weyl representative n_q is an involution,
  // hence unipotent, but it inverts the q root line.
  Mat<GFRing> nq = adjoint_n(f.C, ring2, f.q);
  EXPECT_TRUE(is_unipotent(F2, nq));
  EXPECT_FALSE(in_unipotent_radical(f.C, F2, nq, J));

  // In characteristic 3 torus and Weyl representatives are not unipotent.
  G2Setup g;
  GF F3(3, 1);
  GFRing ring3(F3);
  EXPECT_FALSE(is_unipotent(F3, adjoint_n(g.C, ring3, g.a)));
  EXPECT_FALSE(
      is_unipotent(F3, adjoint_h(g.C, ring3, g.a, F3.from_int(2), F3.from_int(2))));
  EXPECT_TRUE(in_unipotent_radical(g.C, F3, adjoint_x(g.C, ring3, g.a2b, F3.one()), {}));
}

// Chunked enumeration is deterministic: identical counts, per-cell tables,
// and chunk checksums at any thread count.
TEST(GroupPoints, Determinism) {
  G2Setup g;
  GF F9(3, 2);
  EnumOptions o1, o4;
  o1.threads = 1;
  o4.threads = 4;
  FiberCount c1 = fiber_point_count(g.C, F9, g.subreg, true, o1);
  FiberCount c4 = fiber_point_count(g.C, F9, g.subreg, true, o4);
  EXPECT_EQ(c1.count, c4.count);
  EXPECT_EQ(c1.checksum, c4.checksum);
  EXPECT_EQ(c1.per_cell, c4.per_cell);
  EXPECT_EQ(c1.threads_used, 1);
  EXPECT_GE(c4.threads_used, 1);

  GF F3(3, 1);
  CentralizerCount z1 = centralizer_order(g.C, F3, g.subreg, true, o1);
  CentralizerCount z4 = centralizer_order(g.C, F3, g.subreg, true, o4);
  EXPECT_EQ(z1.order, z4.order);
  EXPECT_EQ(z1.checksum, z4.checksum);

  // Thread-count resolution: explicit request wins, then the environment.
  setenv("EXLIE_THREADS", "3", 1);
  EXPECT_EQ(resolve_threads(2), 2);
  EXPECT_EQ(resolve_threads(0), 3);
  unsetenv("EXLIE_THREADS");
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(GroupPoints, BitpackAgreesWithGeneric) {
  G2Setup g;
  GF F2(2, 1);
  EnumOptions og, ob;
  og.engine = 'g';
  ob.engine = 'b';
  for (const FormalSum& rep : {g.zero, g.subreg, g.long_root}) {
    FiberCount a = fiber_point_count(g.C, F2, rep, true, og);
    FiberCount b = fiber_point_count(g.C, F2, rep, true, ob);
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.per_cell, b.per_cell);
  }

  F4Setup f;
  FiberCount a = fiber_point_count(f.C, F2, f.xi5, true, og);
  FiberCount b = fiber_point_count(f.C, F2, f.xi5, true, ob);
  EXPECT_EQ(a.count, 1317);
  EXPECT_EQ(b.count, 1317);
  EXPECT_EQ(a.per_cell, b.per_cell);

  GF F3(3, 1);
  EXPECT_THROW(fiber_point_count(g.C, F3, g.zero, true, ob), std::invalid_argument);
}

TEST(GroupPoints, RepresentativeValidation) {
  G2Setup g;
  GF F3(3, 1);
  FormalSum neg = {{g.R.negate(g.a), 1}};
  EXPECT_THROW(fiber_point_count(g.C, F3, neg, true), std::invalid_argument);
  EXPECT_THROW(materialize(g.C, F3, FormalSum{{g.R.num_roots() + g.R.rank(), 1}}),
               std::invalid_argument);
}

}  // namespace
