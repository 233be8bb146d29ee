#include <gtest/gtest.h>

#include <random>

#include "nfold/npoly.hpp"
#include "nfold/text.hpp"

using namespace nfold;

namespace {

const FieldDescriptor kNQ = FieldDescriptor::full(BaseField::rationals());
const FieldDescriptor kNZ2 = FieldDescriptor::full(BaseField::prime(2));
const FieldDescriptor kNZ3 = FieldDescriptor::full(BaseField::prime(3));

NPoly P(const char* s, FieldDescriptor f) { return parse_poly(s, f); }
NNum S(const char* s, FieldDescriptor f) { return parse_scalar(s, f); }

}  // namespace

TEST(NPoly, ZeroDivisorProductVanishes) {
  NPoly f = NPoly(kNQ, {kNQ.zero(), NNum::indeterminate(kNQ)});
  NPoly g = NPoly(kNQ, {kNQ.zero(), NNum(kNQ, 1, -1)});
  EXPECT_TRUE((f * g).is_zero());
}

TEST(NPoly, SlotImageOfProduct) {
  NPoly f = P("x - I", kNZ2) * P("x - 1", kNZ2);
  EXPECT_EQ(f.at(Slot::At1), BasePoly(BaseField::prime(2), {1, 0, 1}));
}

TEST(NPoly, RemainderEqualsValue) {
  auto [q, r] = divmod(P("x^2 + 1", kNQ), NPoly::linear(NNum::indeterminate(kNQ)));
  EXPECT_EQ(r, NPoly::constant(NNum(kNQ, 1, 1)));
  EXPECT_EQ(q * NPoly::linear(NNum::indeterminate(kNQ)) + r, P("x^2 + 1", kNQ));
}

TEST(NPoly, DivisionNeedsUnitLead) {
  try {
    divmod(P("x^2", kNQ), P("Ix + 1", kNQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnitLeadingCoefficient);
  }
  EXPECT_THROW(divmod(P("x", kNQ), NPoly(kNQ)), Error);
}

TEST(NPoly, EvaluateIdempotentRelation) {
  EXPECT_TRUE(P("x^2 - x", kNQ)(NNum::indeterminate(kNQ)).is_zero());
}

TEST(NPoly, TaylorAndMultiplicity) {
  NNum i = NNum::indeterminate(kNQ);
  NPoly f = pow(NPoly::linear(i), 2);
  auto t = taylor(f, i);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_TRUE(t[0].is_zero());
  EXPECT_TRUE(t[1].is_zero());
  EXPECT_EQ(t[2], kNQ.one());
  EXPECT_EQ(multiplicity(f, i), 2u);
  NNum c(kNQ, 3, 2);
  auto sq = taylor(P("x^2", kNQ), c);
  EXPECT_EQ(sq[0], c * c);
  EXPECT_EQ(sq[1], c + c);
  EXPECT_EQ(sq[2], kNQ.one());
  EXPECT_THROW(taylor(P("x", kNZ3), kNZ3.one()), Error);
}

TEST(NPoly, GcdSlotwise) {
  EXPECT_EQ(gcd(P("x^2 - 1", kNQ), P("x - 1", kNQ)), P("x - 1", kNQ));
  NPoly f = P("x - I", kNQ) * P("x - 1", kNQ);
  EXPECT_EQ(gcd(f, P("x - I", kNQ)), P("x - I", kNQ));
  EXPECT_EQ(gcd(P("2x + 2", kNQ), NPoly(kNQ)), P("x + 1", kNQ));
  // slot gcds x and 1 have different degrees
  try {
    gcd(P("x", kNQ), P("x + I", kNQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SplitDegenerate);
  }
  EXPECT_TRUE(coprime(P("x", kNQ), P("x + 1", kNQ)));
}

TEST(NPoly, RootsExceedDegreeOverZ3) {
  NPoly f = P("x^2 + (2I+1)x + 2I", kNZ3);
  auto rs = roots(f);
  std::vector<std::string> got;
  for (const auto& r : rs) got.push_back(to_string(r));
  EXPECT_EQ(got, (std::vector<std::string>{"2", "I", "2I", "2+2I"}));
  // brute force over all nine scalars
  std::size_t count = 0;
  for (long b = 0; b < 3; ++b)
    for (long a = 0; a < 3; ++a)
      if (f(NNum(kNZ3, a, b)).is_zero()) ++count;
  EXPECT_EQ(count, rs.size());
}

TEST(NPoly, RootsEdgeCases) {
  EXPECT_TRUE(roots(NPoly::constant(NNum(kNZ3, 2))).empty());
  auto r = roots(P("x - I", kNQ));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], NNum::indeterminate(kNQ));
  EXPECT_THROW(roots(NPoly(kNQ)), Error);
  // slot-0 image vanishes over Q
  try {
    roots(P("Ix", kNQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteRootSet);
  }
}

TEST(NPoly, ExhaustiveRootsMatchEnumeration) {
  std::mt19937_64 rng(7);
  for (std::int64_t p : {2, 3, 5}) {
    FieldDescriptor f = FieldDescriptor::full(BaseField::prime(p));
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<NNum> c;
      int deg = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k <= deg; ++k) c.emplace_back(f, static_cast<long>(rng() % p), static_cast<long>(rng() % p));
      NPoly g(f, c);
      if (g.is_zero()) continue;
      std::vector<NNum> brute;
      for (long b = 0; b < p; ++b)
        for (long a = 0; a < p; ++a)
          if (g(NNum(f, a, b)).is_zero()) brute.push_back(NNum(f, a, b));
      EXPECT_EQ(roots(g), brute) << to_string(g);
    }
  }
}

TEST(Text, ScalarGrammar) {
  EXPECT_EQ(to_string(S("1+1I", kNZ3)), "1+I");
  EXPECT_EQ(to_string(S("4-I", kNZ3)), "1+2I");
  EXPECT_EQ(to_string(S("-1/2+3/4I", kNQ)), "-1/2+3/4I");
  EXPECT_EQ(to_string(S("2-I", kNQ)), "2-I");
  EXPECT_EQ(to_string(S("0I", kNQ)), "0");
  EXPECT_EQ(parse_scalar_literal("2I@N(Z3)"), NNum(kNZ3, 0, 2));
  EXPECT_THROW(parse_scalar("1+", kNQ), Error);
  EXPECT_THROW(parse_scalar("I", FieldDescriptor::real(BaseField::rationals())), Error);
  EXPECT_THROW(parse_scalar("1/3", FieldDescriptor::real(BaseField::prime(3))), Error);
}

TEST(Text, FieldTags) {
  for (const char* t : {"Q", "Z7", "N(Q)", "N(Z11)", "QI", "Z5I"}) EXPECT_EQ(parse_field(t).tag(), t);
  EXPECT_THROW(parse_field("Z4"), Error);
  EXPECT_THROW(parse_field("N(Z3"), Error);
}

TEST(Text, PolynomialGrammar) {
  EXPECT_EQ(to_string(P("2I + x^2 + 1x + 2Ix", kNZ3)), "x^2 + (2I+1)x + 2I");
  EXPECT_EQ(to_string(P("-x^3 + 1/2x - I", kNQ)), "-x^3 + 1/2x - I");
  EXPECT_EQ(to_string(P("(-2I+1)x", kNQ)), "(-2I+1)x");
  EXPECT_EQ(to_string(P("(I-1)", kNQ)), "(I-1)");
  EXPECT_EQ(to_string(NPoly(kNQ)), "0");
  EXPECT_THROW(parse_poly("x^", kNQ), Error);
  EXPECT_THROW(parse_poly("x x", kNQ), Error);
}

TEST(Text, ParseErrorReportsPosition) {
  try {
    parse_matrix_literal("[[1,2],[3,]]@Q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("column 11"), std::string::npos) << e.what();
  }
}
