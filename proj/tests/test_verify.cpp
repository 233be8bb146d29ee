#include <gtest/gtest.h>

#include "nfold/verify.hpp"

using namespace nfold;

TEST(Suites, AllPassOnSmallRuns) {
  for (const auto& name : verify::suite_names()) {
    auto r = verify::run_suite(name, 1, 60);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(r.passed, 60u) << name;
  }
}

TEST(Suites, SameSeedSameReport) {
  auto a = verify::run_suite("split-commutation", 99, 40).text();
  auto b = verify::run_suite("split-commutation", 99, 40).text();
  EXPECT_EQ(a, b);
}

TEST(Suites, ParallelKeepsOutput) {
  for (const char* name : {"rank-nullity", "gram-schmidt"})
    EXPECT_EQ(verify::run_suite(name, 5, 50, {}, false).text(), verify::run_suite(name, 5, 50, {}, true).text());
}

TEST(Suites, PlantedDependencyCountsAsExpected) {
  auto r = verify::run_suite("gram-schmidt", 1, 20);
  EXPECT_EQ(r.expected_errors, 2u);
  EXPECT_TRUE(r.ok());
}

TEST(Suites, RingAxiomsExhaustOverSmallFields) {
  auto r = verify::run_suite("ring-axioms", 1, 1, {FieldDescriptor::full(BaseField::prime(2))});
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_EQ(r.notes[0], "exhaustive N(Z2): 4 elements, 64 triples, PASS");
}

TEST(Suites, UnknownName) {
  try {
    verify::run_suite("no-such-suite", 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
}
