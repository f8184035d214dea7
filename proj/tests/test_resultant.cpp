#include <gtest/gtest.h>

#include "support.hpp"

using namespace chow;
using namespace chow::testing;

namespace {

SymbolicForm generic_form(const RingPtr& r, char block, int d) {
  std::vector<MPoly> c;
  for (int j = 0; j <= d; ++j) c.push_back(MPoly::variable(r, std::string(1, block) + std::to_string(j)));
  return SymbolicForm(std::move(c));
}

}  // namespace

TEST(Sylvester, Layout) {
  RingPtr r = uv_ring(2);
  auto s1 = sylvester(generic_form(r, 'u', 1), generic_form(r, 'v', 1));
  EXPECT_EQ(s1.entries(0, 0), var(r, "u0"));
  EXPECT_EQ(s1.entries(0, 1), var(r, "u1"));
  EXPECT_EQ(s1.entries(1, 0), var(r, "v0"));
  EXPECT_EQ(s1.entries(1, 1), var(r, "v1"));

  auto s2 = sylvester(generic_form(r, 'u', 2), generic_form(r, 'v', 2));
  const char* expect[4][4] = {
      {"u0", "u1", "u2", ""}, {"", "u0", "u1", "u2"}, {"v0", "v1", "v2", ""}, {"", "v0", "v1", "v2"}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (*expect[i][j]) {
        EXPECT_EQ(s2.entries(i, j), var(r, expect[i][j]));
      } else {
        EXPECT_TRUE(s2.entries(i, j).is_zero());
      }
    }

  auto same = sylvester(make_form({1, 2, 3}), make_form({1, 2, 3}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(same.entries(i, j), same.entries(i + 2, j));

  EXPECT_THROW(sylvester(make_form({1, 2}), make_form({1, 2, 3})), Error);
  EXPECT_THROW(sylvester(make_form({1}), make_form({2})), Error);
}

TEST(DetBareiss, Examples) {
  Matrix<Scalar> id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(det_bareiss(id), 1);

  RingPtr r = uv_ring(2);
  Matrix<MPoly> m(2, 2);
  m(0, 0) = var(r, "u0");
  m(0, 1) = var(r, "u1");
  m(1, 0) = var(r, "v0");
  m(1, 1) = var(r, "v1");
  EXPECT_EQ(det_bareiss(m), pl(r, 0, 1));
}

TEST(DetBareiss, ConicSylvesterAgainstLeibniz) {
  RingPtr r = uv_ring(2);
  auto s = sylvester(generic_form(r, 'u', 2), generic_form(r, 'v', 2));
  MPoly expected = pl(r, 0, 2) * pl(r, 0, 2) - pl(r, 0, 1) * pl(r, 1, 2);
  EXPECT_EQ(leibniz_det(s.entries), expected);
  EXPECT_EQ(det_bareiss(s.entries), expected);
  EXPECT_EQ(det_laplace_split(s.entries), expected);
}

TEST(DetBareiss, PivotsPastZerosAndDetectsSingular) {
  Matrix<Scalar> m(3, 3);
  // [[0,1,2],[3,0,1],[1,1,0]] has determinant 7.
  Scalar vals[3][3] = {{0, 1, 2}, {3, 0, 1}, {1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  EXPECT_EQ(det_bareiss(m), leibniz_det(m));
  EXPECT_EQ(det_bareiss(m), 7);
  for (int j = 0; j < 3; ++j) m(2, j) = m(0, j) + m(1, j);
  EXPECT_EQ(det_bareiss(m), 0);
}

TEST(Resultant, Examples) {
  RingPtr r = uv_ring(1);
  SymbolicForm h1({var(r, "u0"), var(r, "u1")}), h2({var(r, "v0"), var(r, "v1")});
  EXPECT_EQ(resultant(h1, h2), pl(r, 0, 1));
  EXPECT_EQ(resultant(h1, h1), MPoly(0));

  // Res(z0^2 - z1^2, z0^2 + z1^2): h1 is monic in z0 with roots (1:1), (-1:1),
  // so Res = h2(1,1) * h2(-1,1).
  NumericForm a = make_form({1, 0, -1}), b = make_form({1, 0, 1});
  Scalar brute = b.evaluate(1, 1) * b.evaluate(-1, 1);
  EXPECT_EQ(brute, 4);
  EXPECT_EQ(resultant(a, b), brute);
}

TEST(Resultant, VanishesExactlyOnCommonRoots) {
  Rng rng(77);
  std::uniform_int_distribution<int> deg(1, 4);
  int common = 0;
  for (int i = 0; i < 100; ++i) {
    const int d = deg(rng);
    NumericForm a, b;
    if (i % 3 == 0 && d >= 2) {
      // Build a shared linear factor.
      NumericForm shared = random_nonzero_form(rng, 1);
      a = shared * random_nonzero_form(rng, d - 1);
      b = shared * random_nonzero_form(rng, d - 1);
    } else {
      a = random_form(rng, d);
      b = random_form(rng, d);
    }
    if (a.is_zero() && b.is_zero()) continue;
    Scalar res = resultant(a, b);
    bool share = a.is_zero() || b.is_zero() || bf_gcd(a, b).degree() >= 1;
    // A zero form makes every row of its block vanish.
    EXPECT_EQ(is_zero(res), share) << to_string(a) << " , " << to_string(b);
    common += share;
  }
  EXPECT_GT(common, 20);
}

TEST(Resultant, SwapSign) {
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const int d = 1 + i % 3;
    NumericForm a = random_form(rng, d), b = random_form(rng, d);
    Scalar sign = (d * d) % 2 ? Scalar(-1) : Scalar(1);
    EXPECT_EQ(resultant(b, a), resultant(a, b) * sign);
  }
}

TEST(Resultant, InvariantUnderAddingMultipleOfFirstForm) {
  Rng rng(9);
  RingPtr r = make_ring({{"lambda", Block::Aux}});
  MPoly lambda = MPoly::variable(r, 0);
  for (int i = 0; i < 10; ++i) {
    const int d = 1 + i % 3;
    SymbolicForm a = to_symbolic(random_form(rng, d), r), b = to_symbolic(random_form(rng, d), r);
    SymbolicForm shifted = b + a * lambda;
    EXPECT_EQ(resultant(a, shifted, DetBackend::Bareiss), resultant(a, b, DetBackend::Bareiss).promoted(r));
  }
}

TEST(Resultant, MultiplicativeThroughGcd) {
  // Multiplicativity kept to equal degrees: for linear factors
  // Res(ab, ce) = Res(a,c) Res(a,e) Res(b,c) Res(b,e).
  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    NumericForm a = random_nonzero_form(rng, 1), b = random_nonzero_form(rng, 1);
    NumericForm c = random_nonzero_form(rng, 1), e = random_nonzero_form(rng, 1);
    Scalar lhs = resultant(a * b, c * e);
    Scalar rhs = resultant(a, c) * resultant(a, e) * resultant(b, c) * resultant(b, e);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(is_zero(lhs), bf_gcd(a * b, c * e).degree() >= 1);
  }
}

TEST(Resultant, LaplaceMatchesBareissOnSymbolicInstances) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 3, d = 1 + (i / 3) % 3;
    CurveMap f = random_curve(rng, n, d);
    RingPtr r = chow_ring(n);
    SymbolicForm h1 = SymbolicForm::zero(d), h2 = SymbolicForm::zero(d);
    for (int k = 0; k <= n; ++k) {
      h1 += to_symbolic(f[k], r) * MPoly::variable(r, k);
      h2 += to_symbolic(f[k], r) * MPoly::variable(r, n + 1 + k);
    }
    EXPECT_EQ(resultant(h1, h2, DetBackend::Laplace), resultant(h1, h2, DetBackend::Bareiss));
  }
}
