#include <gtest/gtest.h>

#include "nfold/group_scan.hpp"
#include "nfold/nnum.hpp"

using namespace nfold;

namespace {

const FieldDescriptor kNZ3 = FieldDescriptor::full(BaseField::prime(3));
const FieldDescriptor kNZ5 = FieldDescriptor::full(BaseField::prime(5));
const FieldDescriptor kNQ = FieldDescriptor::full(BaseField::rationals());

std::vector<NNum> all_of(FieldDescriptor f) {
  std::vector<NNum> out;
  for (long b = 0; b < f.base.modulus(); ++b)
    for (long a = 0; a < f.base.modulus(); ++a) out.emplace_back(f, a, b);
  return out;
}

}  // namespace

TEST(NNum, IndeterminateIsIdempotent) {
  NNum i = NNum::indeterminate(kNQ);
  EXPECT_EQ(i * i, i);
  EXPECT_TRUE((i * (kNQ.one() - i)).is_zero());
}

TEST(NNum, OnePlusIIsSelfInverseOverZ3) {
  NNum x(kNZ3, 1, 1);
  EXPECT_EQ(x * x, kNZ3.one());
  EXPECT_EQ(x.inverse(), x);
}

TEST(NNum, EvaluationAndRecombination) {
  EXPECT_TRUE(NNum(kNZ5, 3, 2).at(Slot::At1).is_zero());
  BaseField z3 = BaseField::prime(3);
  EXPECT_EQ(recombine(BaseElem(z3, 1), BaseElem(z3, 2)), NNum(kNZ3, 1, 1));
  EXPECT_EQ(recombine(BaseElem(z3, 0), BaseElem(z3, 1)), NNum::indeterminate(kNZ3));
}

TEST(NNum, InverseFailsOnZeroDivisor) {
  try {
    NNum::indeterminate(kNZ3).inverse();
    FAIL() << "expected NotInvertible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    EXPECT_EQ(e.slot(), 0);
  }
  EXPECT_EQ(NNum(kNZ5, 2, 0).inverse(), NNum(kNZ5, 3, 0));
}

TEST(NNum, UnitCriterionExhaustiveOverZ5) {
  for (const auto& x : all_of(kNZ5)) {
    bool unit = !x.at(Slot::At0).is_zero() && !x.at(Slot::At1).is_zero();
    EXPECT_EQ(x.is_unit(), unit);
    if (unit) EXPECT_EQ(x * x.inverse(), kNZ5.one());
    else EXPECT_THROW(x.inverse(), Error);
  }
}

TEST(NNum, RingAxiomsAndSplitExhaustiveOverZ3) {
  auto all = all_of(kNZ3);
  for (const auto& x : all)
    for (const auto& y : all) {
      for (Slot s : kSlots) {
        EXPECT_EQ((x * y).at(s), x.at(s) * y.at(s));
        EXPECT_EQ((x + y).at(s), x.at(s) + y.at(s));
      }
      EXPECT_EQ(x * y, y * x);
      for (const auto& z : all) {
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
}

TEST(NNum, PureSubringHasIdentityI) {
  FieldDescriptor qi = FieldDescriptor::pure(BaseField::rationals());
  NNum x(qi, 0, 7);
  EXPECT_EQ(x * qi.one(), x);
  EXPECT_EQ(x.inverse() * x, qi.one());
  EXPECT_THROW(NNum(qi, 1, 1), Error);
}

TEST(NNum, WideningAndMismatch) {
  FieldDescriptor r = FieldDescriptor::real(BaseField::prime(3));
  NNum s = NNum(r, 2) + NNum::indeterminate(kNZ3);
  EXPECT_EQ(s.field().flavor, Flavor::Full);
  EXPECT_THROW(NNum(kNZ3, 1) + NNum(kNZ5, 1), Error);
}

TEST(GroupScan, AdditiveOverZ4) {
  auto rep = group_scan(4, ScanOperation::AdditiveModN);
  EXPECT_EQ(rep.order, 16);
  EXPECT_TRUE(rep.is_group);
  auto find = [&](std::vector<ZnPair> elems) -> const LabeledSubgroup* {
    std::sort(elems.begin(), elems.end());
    for (const auto& g : rep.subgroups)
      if (g.elements == elems) return &g;
    return nullptr;
  };
  auto* a = find({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->label, SubgroupLabel::NeutrosophicSubgroup);
  auto* b = find({{0, 0}, {0, 2}});
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->label, SubgroupLabel::PseudoNeutrosophicSubgroup);
}

TEST(GroupScan, AdditiveOverZ2PseudoPair) {
  auto rep = group_scan(2, ScanOperation::AdditiveModN);
  int pseudo = 0;
  for (const auto& g : rep.subgroups) {
    if (g.elements == std::vector<ZnPair>{{0, 0}, {0, 1}} ||
        g.elements == std::vector<ZnPair>{{0, 0}, {1, 1}}) {
      EXPECT_EQ(g.label, SubgroupLabel::PseudoNeutrosophicSubgroup);
      ++pseudo;
    }
  }
  EXPECT_EQ(pseudo, 2);
}

TEST(GroupScan, MultiplicativeOverZ5IsNotAGroup) {
  auto rep = group_scan(5, ScanOperation::MultiplicativeNonzeroModN);
  EXPECT_FALSE(rep.is_group);
  ASSERT_TRUE(rep.failure_witness.has_value());
  EXPECT_EQ(rep.failure_witness->reason, "NoInverse");
  EXPECT_EQ(rep.failure_witness->first, (ZnPair{0, 1}));
}

TEST(GroupScan, Bounds) {
  EXPECT_THROW(group_scan(65, ScanOperation::AdditiveModN), Error);
  EXPECT_THROW(group_scan(6, ScanOperation::MultiplicativeNonzeroModN), Error);
}
