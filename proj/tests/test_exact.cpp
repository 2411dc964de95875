// Oracle tests for the exact-arithmetic utilities: integer matrices, Smith
// normal form, characteristic polynomials, modular linear algebra, Zech-log
// finite fields and sparse multivariate polynomials.
#include <gtest/gtest.h>

#include "exlie/exact.hpp"
#include "exlie/gf.hpp"
#include "exlie/poly.hpp"

using namespace exlie;

namespace {

IntMat make(int rows, int cols, std::initializer_list<long long> vals) {
  IntMat m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = *it++;
  return m;
}

}  // namespace

TEST(IntMatTest, DeterminantKnownValues) {
  EXPECT_EQ(det(IntMat::identity(4)), BigInt(1));
  EXPECT_EQ(det(make(2, 2, {2, 1, 0, 3})), BigInt(6));
  EXPECT_EQ(det(make(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})), BigInt(-1));
  // Vandermonde on 1,2,3: product of differences = 2
  EXPECT_EQ(det(make(3, 3, {1, 1, 1, 1, 2, 3, 1, 4, 9})), BigInt(2));
  // Singular
  EXPECT_EQ(det(make(2, 2, {1, 2, 2, 4})), BigInt(0));
}

TEST(IntMatTest, DeterminantMatchesCofactorExpansion) {
  // Pseudo-random small matrices, cross-checked against naive expansion.
  auto cofactor = [](auto&& self, const IntMat& m) -> BigInt {
    if (m.rows == 1) return BigInt(m.at(0, 0));
    BigInt s = 0;
    for (int c = 0; c < m.cols; ++c) {
      IntMat sub(m.rows - 1, m.cols - 1);
      for (int r = 1; r < m.rows; ++r) {
        int cc = 0;
        for (int c2 = 0; c2 < m.cols; ++c2) {
          if (c2 == c) continue;
          sub.at(r - 1, cc++) = m.at(r, c2);
        }
      }
      BigInt t = BigInt(m.at(0, c)) * self(self, sub);
      s += (c % 2 == 0) ? t : -t;
    }
    return s;
  };
  unsigned long long state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 33) % 19) - 9;
  };
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 4;
    IntMat m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = next();
    EXPECT_EQ(det(m), cofactor(cofactor, m)) << "trial " << trial;
  }
}

TEST(IntMatTest, SmithNormalForm) {
  auto d1 = smith_diagonal(make(2, 2, {2, 0, 0, 3}));
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_EQ(d1[0], BigInt(1));
  EXPECT_EQ(d1[1], BigInt(6));

  auto d2 = smith_diagonal(make(2, 2, {2, 4, 4, 8}));
  EXPECT_EQ(d2[0], BigInt(2));
  EXPECT_EQ(d2[1], BigInt(0));

  auto d3 = smith_diagonal(make(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 4}));
  EXPECT_EQ(d3[0], BigInt(1));
  EXPECT_EQ(d3[1], BigInt(2));
  EXPECT_EQ(d3[2], BigInt(4));
  // divisibility chain d1 | d2 | d3 on a full lattice
  auto d4 = smith_diagonal(make(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}));
  EXPECT_EQ(d4[0], BigInt(1));
  EXPECT_EQ(d4[1], BigInt(1));
  EXPECT_EQ(d4[2], BigInt(30));
}

TEST(IntMatTest, CharPoly) {
  // rotation: x^2 + 1
  auto cp = char_poly(make(2, 2, {0, -1, 1, 0}));
  ASSERT_EQ(cp.size(), 3u);
  EXPECT_EQ(cp[0], Rat(1));
  EXPECT_EQ(cp[1], Rat(0));
  EXPECT_EQ(cp[2], Rat(1));
  // identity 3x3: (x-1)^3
  auto cp2 = char_poly(IntMat::identity(3));
  ASSERT_EQ(cp2.size(), 4u);
  EXPECT_EQ(cp2[0], Rat(-1));
  EXPECT_EQ(cp2[1], Rat(3));
  EXPECT_EQ(cp2[2], Rat(-3));
  EXPECT_EQ(cp2[3], Rat(1));
  // companion matrix of x^3 - 2x - 5
  auto cp3 = char_poly(make(3, 3, {0, 0, 5, 1, 0, 2, 0, 1, 0}));
  EXPECT_EQ(cp3[0], Rat(-5));
  EXPECT_EQ(cp3[1], Rat(-2));
  EXPECT_EQ(cp3[2], Rat(0));
  EXPECT_EQ(cp3[3], Rat(1));
}

TEST(ModularTest, RowReduceAndKernel) {
  ModMat m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  ModMat copy = m;
  std::vector<int> piv;
  int rank = row_reduce_mod_p(copy, 7, &piv);
  EXPECT_EQ(rank, 2);
  ASSERT_EQ(piv.size(), 2u);

  ModMat k = kernel_mod_p(m, 7);
  ASSERT_EQ(k.size(), 1u);
  // check m * v = 0 mod 7
  for (const auto& row : m) {
    long long s = 0;
    for (size_t i = 0; i < row.size(); ++i) s += row[i] * k[0][i];
    EXPECT_EQ(mod_norm(s, 7), 0);
  }
  EXPECT_EQ(rank_mod_p(IntMat::identity(3), 5), 3);
  // 2x2 with determinant divisible by p drops rank mod p
  IntMat dm = make(2, 2, {1, 2, 3, 11});  // det 5
  EXPECT_EQ(rank_mod_p(dm, 5), 1);
  EXPECT_EQ(rank_mod_p(dm, 3), 2);
}

TEST(ModularTest, Scalars) {
  EXPECT_EQ(mod_norm(-1, 7), 6);
  EXPECT_EQ(mod_pow(3, 6, 7), 1);
  EXPECT_EQ(mod_inv(3, 7), 5);
  for (long long a = 1; a < 11; ++a) EXPECT_EQ(a * mod_inv(a, 11) % 11, 1);
}

class GFAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(GFAxioms, FieldLaws) {
  auto [p, k] = GetParam();
  GF F(p, k);
  long long q = F.q();
  auto elems = F.elements();
  ASSERT_EQ(elems.size(), static_cast<size_t>(q));
  // add/mul commute, inverses work, Frobenius is additive
  for (int a : elems) {
    EXPECT_EQ(F.add(a, F.zero()), a);
    EXPECT_EQ(F.mul(a, F.one()), a);
    EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
    if (!F.is_zero(a)) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
    for (int b : elems) {
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      EXPECT_EQ(F.mul(a, b), F.mul(b, a));
      EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
    }
  }
  // associativity and distributivity on a sample grid
  int step = q <= 16 ? 1 : 3;
  for (int ia = 0; ia < q; ia += step)
    for (int ib = 0; ib < q; ib += step)
      for (int ic = 0; ic < q; ic += step) {
        int a = elems[ia], b = elems[ib], c = elems[ic];
        EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
        EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
  // generator has multiplicative order q-1
  int g = F.generator();
  int x = g;
  for (long long i = 1; i < q - 1; ++i) {
    EXPECT_NE(x, F.one());
    x = F.mul(x, g);
  }
  EXPECT_EQ(x, F.one());
  // value/from_value round trip
  for (int a : elems) EXPECT_EQ(F.from_value(F.value(a)), a);
  // prime subfield embedding is a ring map
  for (long long i = 0; i < p; ++i)
    for (long long j = 0; j < p; ++j) {
      EXPECT_EQ(F.add(F.from_int(i), F.from_int(j)), F.from_int((i + j) % p));
      EXPECT_EQ(F.mul(F.from_int(i), F.from_int(j)), F.from_int((i * j) % p));
    }
}

INSTANTIATE_TEST_SUITE_P(AllFields, GFAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3},
                                           std::pair{2, 4}, std::pair{3, 1}, std::pair{3, 2},
                                           std::pair{3, 3}));

TEST(GFTest, FrobeniusFixesPrimeField) {
  GF F(3, 2);
  for (long long i = 0; i < 3; ++i) EXPECT_EQ(F.frobenius(F.from_int(i)), F.from_int(i));
  // x^9 = x for all of F_9
  for (int a : F.elements()) EXPECT_EQ(F.frobenius(F.frobenius(a)), a);
}

TEST(PolyTest, IntegerPolynomials) {
  using P = Poly<ZRing>;
  ZRing R;
  P x = P::variable(R, 0, 1);
  P y = P::variable(R, 1, 1);
  P f = (x + y) * (x + y);
  Mono xy{};
  xy[0] = 1;
  xy[1] = 1;
  EXPECT_EQ(f.coeff(xy), 2);
  Mono x2{};
  x2[0] = 2;
  EXPECT_EQ(f.coeff(x2), 1);
  EXPECT_EQ(f.evaluate({3, 4}), 49);
  P zero = f - f;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(f.degree_in(0), 2);
}

TEST(PolyTest, FieldPolynomialsAndMatrices) {
  GF F(3, 1);
  GFRing R(F);
  using P = Poly<GFRing>;
  P x = P::variable(R, 0, F.one());
  P c2 = P::constant(R, F.from_int(2));
  P f = x * x * x + c2 * x;  // x^3 + 2x = x^3 - x, zero as a function on F_3
  for (int a : F.elements()) EXPECT_TRUE(F.is_zero(f.evaluate({a})));
  EXPECT_FALSE(f.is_zero());  // but not the zero polynomial

  Mat<GFRing> m(R, 2);
  m.at(0, 0) = F.one();
  m.at(0, 1) = F.from_int(2);
  m.at(1, 0) = F.zero();
  m.at(1, 1) = F.one();
  auto mi = field_inverse(m);
  EXPECT_TRUE(m.mul(mi).is_identity());
}
