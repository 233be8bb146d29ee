#include <gtest/gtest.h>

#include "nfold/factor.hpp"

using namespace nfold;

namespace {

const BaseField kQ = BaseField::rationals();
const BaseField kZ5 = BaseField::prime(5);

}  // namespace

TEST(BasePoly, DivisionIdentity) {
  BasePoly f(kZ5, {1, 2, 3, 4});
  BasePoly d(kZ5, {2, 0, 1});
  auto [q, r] = divmod(f, d);
  EXPECT_EQ(q * d + r, f);
  EXPECT_LT(r.degree(), d.degree());
}

TEST(BasePoly, GcdAndXgcd) {
  BasePoly a = BasePoly(kQ, {-1, 0, 1});  // x^2 - 1
  BasePoly b = BasePoly(kQ, {-1, 1});     // x - 1
  EXPECT_EQ(gcd(a, b), b);
  auto e = xgcd(a, BasePoly(kQ, {2, 1}));
  EXPECT_TRUE(e.g.is_one());
  EXPECT_EQ(e.s * a + e.t * BasePoly(kQ, {2, 1}), e.g);
}

TEST(BasePoly, RationalRoots) {
  // (2x - 1)(x + 3) = 2x^2 + 5x - 3
  auto rs = roots(BasePoly(kQ, {-3, 5, 2}));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0], BaseElem(kQ, -3));
  EXPECT_EQ(rs[1], BaseElem(kQ, mpq_class(1, 2)));
}

TEST(Factor, BerlekampOverZ2) {
  // x^5 + x^4 + 1 = (x^2 + x + 1)(x^3 + x + 1) over Z2
  BaseField z2 = BaseField::prime(2);
  auto fz = factor(BasePoly(z2, {1, 0, 0, 0, 1, 1}));
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.factors[0].factor, BasePoly(z2, {1, 1, 1}));
  EXPECT_EQ(fz.factors[1].factor, BasePoly(z2, {1, 1, 0, 1}));
  EXPECT_FALSE(fz.splits());
}

TEST(Factor, RepeatedFactorsOverZ3) {
  BaseField z3 = BaseField::prime(3);
  // (x-1)^3 (x^2+1) over Z3; x^2+1 is irreducible there.
  BasePoly f = pow(BasePoly(z3, {-1, 1}), 3) * BasePoly(z3, {1, 0, 1});
  auto fz = factor(f);
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.factors[0].factor, BasePoly(z3, {-1, 1}));
  EXPECT_EQ(fz.factors[0].multiplicity, 3u);
  EXPECT_EQ(fz.factors[1].multiplicity, 1u);
}

TEST(Factor, ProductReconstructsOverZ7) {
  BaseField z7 = BaseField::prime(7);
  for (int seed = 1; seed < 40; ++seed) {
    std::vector<BaseElem> c;
    for (int i = 0; i < 7; ++i) c.emplace_back(z7, (seed * 31 + i * i * 17 + i * seed) % 7);
    c.emplace_back(z7, 1);
    BasePoly f(z7, c);
    auto fz = factor(f);
    BasePoly prod = BasePoly::constant(fz.unit);
    for (const auto& pf : fz.factors) prod = prod * pow(pf.factor, pf.multiplicity);
    EXPECT_EQ(prod, f) << "seed " << seed;
  }
}

TEST(BaseMatrix, RrefRankNullspace) {
  BaseMatrix m(kQ, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero_vector(m * ns[0]));
}

TEST(BaseMatrix, InverseAndDet) {
  BaseMatrix m(kZ5, {{2, 1}, {1, 4}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, BaseMatrix::identity(kZ5, 2));
  EXPECT_EQ(det(m), BaseElem(kZ5, 7));
  EXPECT_FALSE(inverse(BaseMatrix(kZ5, {{1, 2}, {2, 4}})).has_value());
}

TEST(BaseMatrix, HessenbergCharpolyMatchesCayleyHamilton) {
  BaseMatrix m(kQ, {{0, 1, 2}, {3, 4, 5}, {6, 7, 9}});
  BasePoly cp = charpoly_hessenberg(m);
  EXPECT_EQ(cp.degree(), 3);
  EXPECT_TRUE(cp.is_monic());
  EXPECT_TRUE(eval(cp, m).is_zero());
  EXPECT_EQ(cp.coeff(0), -det(m));
  EXPECT_EQ(cp.coeff(2), BaseElem(kQ, -13));
}

TEST(BaseMatrix, MinpolyOfScalarMatrix) {
  BaseMatrix m = BaseMatrix::identity(kZ5, 3).scaled(BaseElem(kZ5, 2));
  EXPECT_EQ(minpoly(m), BasePoly(kZ5, {-2, 1}));
  BaseMatrix n(kZ5, {{0, 1}, {0, 0}});
  EXPECT_EQ(minpoly(n), BasePoly(kZ5, {0, 0, 1}));
  EXPECT_EQ(vector_annihilator(n, BaseVector{BaseElem(kZ5, 1), BaseElem(kZ5, 0)}), BasePoly(kZ5, {0, 1}));
}
