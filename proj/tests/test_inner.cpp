#include <gtest/gtest.h>

#include <random>

#include "nfold/inner.hpp"
#include "nfold/text.hpp"

using namespace nfold;

namespace {

const BaseField kQ = BaseField::rationals();
const FieldDescriptor kNQ = FieldDescriptor::full(kQ);

NVector T(const char* s, FieldDescriptor f = kNQ) { return parse_tuple(s, f); }
NFoldVector vec(NVector part) { return {{std::move(part)}}; }

InnerSpaceContext tuples(std::size_t n, FieldDescriptor f = kNQ) {
  return InnerSpaceContext::make(NFoldSpace::make(SpaceKind::TypeI, {{Shape::tuple(n), f, f}}));
}

std::string show(const NFoldVector& v) { return to_string(v.parts.at(0)); }

// Classical Gram-Schmidt on one slot image, used as the oracle.
std::vector<BaseVector> classical_gs(const std::vector<BaseVector>& bs) {
  std::vector<BaseVector> out;
  auto dotb = [](const BaseVector& x, const BaseVector& y) {
    BaseElem acc = BaseElem::zero(x[0].field());
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
  };
  for (const auto& b : bs) {
    BaseVector a = b;
    for (const auto& prev : out) {
      BaseElem k = dotb(b, prev) * dotb(prev, prev).inverse();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - k * prev[i];
    }
    out.push_back(a);
  }
  return out;
}

NVector random_tuple(std::mt19937_64& rng, std::size_t n) {
  NVector v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(NNum(kNQ, static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3));
  return v;
}

}  // namespace

TEST(Dot, WorkedValues) {
  auto ctx = tuples(2);
  EXPECT_EQ(to_string(dot(ctx, vec(T("(1,I)")), vec(T("(I,1)"))).at(0)), "2I");
  auto d = dot(ctx, vec(T("(1,I)")), vec(T("(1,-1)"))).at(0);
  EXPECT_EQ(to_string(d), "1-I");
  EXPECT_FALSE(d.at(Slot::At0).is_zero());
  EXPECT_FALSE(orthogonal(ctx, vec(T("(1,I)")), vec(T("(1,-1)"))));
  EXPECT_TRUE(dot(ctx, vec(T("(1,I)")), vec(T("(0,0)"))).at(0).is_zero());
}

TEST(Dot, MatrixComponentsUseEntrywiseSum) {
  Component c{Shape::matrix(2, 2), kNQ, kNQ};
  auto ctx = InnerSpaceContext::make(NFoldSpace::make(SpaceKind::TypeI, {c}));
  NFoldVector a{{to_part(parse_matrix_rows("[[1,I],[0,2]]", kNQ))}};
  NFoldVector b{{to_part(parse_matrix_rows("[[3,1],[5,I]]", kNQ))}};
  EXPECT_EQ(to_string(dot(ctx, a, b).at(0)), "3+3I");
}

TEST(Dot, RealScalarsAreRejected) {
  FieldDescriptor q = FieldDescriptor::real(kQ);
  EXPECT_THROW(InnerSpaceContext::make(NFoldSpace::make(SpaceKind::TypeI, {{Shape::tuple(2), q, q}})), Error);
}

TEST(Positivity, PureSelfProductFailsSlotZero) {
  auto ctx = tuples(1);
  EXPECT_FALSE(positivity(ctx, vec(T("(I)"))).at(0));
  EXPECT_TRUE(positivity(ctx, vec(T("(1+I)"))).at(0));
  auto zp = tuples(1, FieldDescriptor::full(BaseField::prime(5)));
  EXPECT_THROW(positivity(zp, vec(T("(1)", FieldDescriptor::full(BaseField::prime(5))))), Error);
}

TEST(GramSchmidt, TwoVectorExample) {
  auto ctx = tuples(2);
  auto out = gram_schmidt(ctx, {vec(T("(1,1)")), vec(T("(1+I,0)"))});
  EXPECT_EQ(show(out[0]), "(1,1)");
  EXPECT_EQ(show(out[1]), "(1/2+1/2I,-1/2-1/2I)");
  EXPECT_TRUE(orthogonal(ctx, out[0], out[1]));
}

TEST(GramSchmidt, StandardBasisIsFixed) {
  auto ctx = tuples(3);
  std::vector<NFoldVector> e{vec(T("(1,0,0)")), vec(T("(0,1,0)")), vec(T("(0,0,1)"))};
  EXPECT_EQ(gram_schmidt(ctx, e), e);
}

TEST(GramSchmidt, Errors) {
  // (1,2) is isotropic over Z5; over Q an independent set never hits a zero norm slot.
  FieldDescriptor nz5 = FieldDescriptor::full(BaseField::prime(5));
  try {
    gram_schmidt(tuples(2, nz5), {vec(T("(1,2)", nz5)), vec(T("(1,0)", nz5))});
    FAIL() << "expected NonInvertibleNorm";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonInvertibleNorm);
    EXPECT_EQ(e.index(), std::optional<std::size_t>(0));
  }
  auto ctx = tuples(2);
  try {
    gram_schmidt(ctx, {vec(T("(1,1)")), vec(T("(2,2)"))});
    FAIL() << "expected DependentInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DependentInput);
  }
  // (1-I)(I,0) = 0, so this pair is dependent over N(Q).
  EXPECT_THROW(gram_schmidt(ctx, {vec(T("(I,0)")), vec(T("(1,1)"))}), Error);
}

TEST(GramSchmidt, RandomSetsMatchSlotwiseOracle) {
  std::mt19937_64 rng(20261015);
  auto ctx = tuples(3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 1 + rng() % 3;
    std::vector<NFoldVector> bs;
    for (std::size_t j = 0; j < k; ++j) bs.push_back(vec(random_tuple(rng, 3)));
    if (!independent(ctx.space, bs).independent) continue;
    std::vector<NFoldVector> out;
    try {
      out = gram_schmidt(ctx, bs);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonInvertibleNorm);
      continue;
    }
    ++checked;
    for (Slot s : {Slot::At0, Slot::At1}) {
      std::vector<BaseVector> img;
      for (const auto& b : bs) img.push_back(slot_vector(b.parts[0], s));
      auto expect = classical_gs(img);
      for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(slot_vector(out[j].parts[0], s), expect[j]) << trial;
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < a; ++b) EXPECT_TRUE(orthogonal(ctx, out[a], out[b]));
  }
  EXPECT_GE(checked, 150);
}

TEST(BestApprox, ProjectionOntoLine) {
  auto ctx = tuples(3);
  NFoldVector a = best_approx(ctx, vec(T("(1,I,0)")), {vec(T("(1,1,0)"))});
  EXPECT_EQ(show(a), "(1/2+1/2I,1/2+1/2I,0)");
  auto two = tuples(2);
  EXPECT_EQ(show(best_approx(two, vec(T("(3,5I)")), {vec(T("(1,0)"))})), "(3,0)");
  EXPECT_EQ(show(best_approx(two, vec(T("(3,5I)")), {vec(T("(1,0)")), vec(T("(0,1)"))})), "(3,5I)");
}

TEST(BestApprox, RejectsNonOrthogonalBasis) {
  auto ctx = tuples(2);
  try {
    best_approx(ctx, vec(T("(1,1)")), {vec(T("(1,0)")), vec(T("(1,1)"))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrthogonal);
  }
}

TEST(BestApprox, ProjectionIsIdempotent) {
  std::mt19937_64 rng(77);
  auto ctx = tuples(3);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NFoldVector> bs{vec(random_tuple(rng, 3)), vec(random_tuple(rng, 3))};
    std::vector<NFoldVector> w;
    try {
      w = gram_schmidt(ctx, bs);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    NFoldVector beta = vec(random_tuple(rng, 3));
    NFoldVector e = best_approx(ctx, beta, w);
    EXPECT_EQ(best_approx(ctx, e, w), e);
    // beta - E beta lies in W-perp.
    NFoldVector r = beta;
    for (std::size_t i = 0; i < 3; ++i) r.parts[0][i] -= e.parts[0][i];
    for (const auto& x : w) EXPECT_TRUE(orthogonal(ctx, r, x));
    EXPECT_TRUE(is_zero_vector(best_approx(ctx, r, w).parts[0]));
  }
  EXPECT_GE(checked, 50);
}

TEST(Complement, CoordinateAxis) {
  auto ctx = tuples(2);
  auto perp = orth_complement(ctx, {vec(T("(1,0)"))});
  ASSERT_EQ(perp.at(0).size(), 1u);
  EXPECT_EQ(to_string(perp[0][0]), "(0,1)");
  EXPECT_TRUE(split_check(ctx, {vec(T("(1,0)"))}).holds);
  EXPECT_TRUE(orth_complement(ctx, {vec(T("(1,0)")), vec(T("(0,1)"))}).at(0).empty());
}

TEST(Complement, NeutrosophicLine) {
  auto ctx = tuples(2);
  auto perp = orth_complement(ctx, {vec(T("(1,I)"))});
  ASSERT_EQ(perp.at(0).size(), 1u);
  NVector g = perp[0][0], expect = T("(I,-1)");
  EXPECT_TRUE(dot(ctx, vec(T("(1,I)")), vec(expect)).at(0).is_zero());
  // Same line as (I,-1) in each slot.
  for (Slot s : {Slot::At0, Slot::At1}) {
    BaseVector a = slot_vector(g, s), b = slot_vector(expect, s);
    EXPECT_FALSE(is_zero_vector(a));
    EXPECT_EQ(rank(BaseMatrix::from_columns(kQ, 2, {a, b})), 1u);
  }
  SplitCheck sc = split_check(ctx, {vec(T("(1,I)"))});
  EXPECT_TRUE(sc.holds);
  EXPECT_EQ(to_string(sc.gram_det.at(0)), "1+I");
  EXPECT_TRUE(sc.gram_det[0].is_unit());
}

TEST(Complement, IsotropicLineDoesNotSplit) {
  FieldDescriptor nz5 = FieldDescriptor::full(BaseField::prime(5));
  auto ctx = tuples(2, nz5);
  SplitCheck sc = split_check(ctx, {vec(T("(1,2)", nz5))});
  EXPECT_FALSE(sc.holds);
  ASSERT_TRUE(sc.witness.has_value());
  EXPECT_FALSE(is_zero_vector(sc.witness->parts[0]));
  EXPECT_TRUE(orthogonal(ctx, *sc.witness, vec(T("(1,2)", nz5))));
  // Isotropic only after evaluating I at 1.
  SplitCheck half = split_check(ctx, {vec(T("(1,1+I)", nz5))});
  EXPECT_FALSE(half.holds);
  EXPECT_EQ(slot_vector(half.witness->parts[0], Slot::At0), slot_vector(T("(0,0)", nz5), Slot::At0));
}

TEST(Complement, NonFreeSubspaceStillSplits) {
  auto ctx = tuples(2);
  SplitCheck sc = split_check(ctx, {vec(T("(I,0)"))});
  EXPECT_TRUE(sc.holds);
  EXPECT_EQ(to_string(sc.gram_det.at(0)), "1");
}

TEST(Bessel, StrictInSlotOne) {
  auto ctx = tuples(2);
  BesselResult b = bessel_check(ctx, vec(T("(1,I)")), {vec(T("(1,0)"))});
  EXPECT_EQ(b.lhs.at(0).at(Slot::At0), BaseElem(kQ, 1L));
  EXPECT_EQ(b.lhs.at(0).at(Slot::At1), BaseElem(kQ, 1L));
  EXPECT_EQ(b.rhs.at(0).at(Slot::At0), BaseElem(kQ, 1L));
  EXPECT_EQ(b.rhs.at(0).at(Slot::At1), BaseElem(kQ, 2L));
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(b.equality);
}

TEST(Bessel, EqualityExactlyOnSpan) {
  auto ctx = tuples(2);
  BesselResult in = bessel_check(ctx, vec(T("(3,2I)")), {vec(T("(1,1)")), vec(T("(1,-1)"))});
  EXPECT_TRUE(in.holds);
  EXPECT_TRUE(in.equality);
  EXPECT_EQ(in.lhs, in.rhs);
  BesselResult orth = bessel_check(ctx, vec(T("(0,1+I)")), {vec(T("(1,0)"))});
  EXPECT_TRUE(orth.lhs.at(0).is_zero());
  EXPECT_TRUE(orth.holds);
}

TEST(Bessel, RandomInstancesHold) {
  std::mt19937_64 rng(4242);
  auto ctx = tuples(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NFoldVector> w;
    try {
      w = gram_schmidt(ctx, {vec(random_tuple(rng, 3)), vec(random_tuple(rng, 3))});
    } catch (const Error&) {
      continue;
    }
    NFoldVector beta = vec(random_tuple(rng, 3));
    BesselResult b = bessel_check(ctx, beta, w);
    EXPECT_TRUE(b.holds) << trial;
    EXPECT_EQ(b.equality, b.lhs == b.rhs) << trial;
  }
}

TEST(Bessel, UnorderedOverPrimeFields) {
  FieldDescriptor nz5 = FieldDescriptor::full(BaseField::prime(5));
  auto ctx = tuples(2, nz5);
  try {
    bessel_check(ctx, vec(T("(1,I)", nz5)), {vec(T("(1,0)", nz5))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnorderedField);
  }
  // Arithmetic still works.
  EXPECT_EQ(to_string(dot(ctx, vec(T("(1,I)", nz5)), vec(T("(I,1)", nz5))).at(0)), "2I");
}
