#include <gtest/gtest.h>

#include "nfold/roundtrip.hpp"

using namespace nfold;

TEST(Documents, RandomRoundTrips) {
  rnd::Rng rng = rnd::trial_rng(7, 0);
  for (std::size_t i = 0; i < 600; ++i) {
    auto o = roundtrip::check(rng, i);
    ASSERT_TRUE(o.ok) << o.kind << ": " << o.text;
  }
}

TEST(Documents, SpaceRoundTrip) {
  auto j = parse_json(
      R"j({"kind":"TypeII","components":[{"shape":"tuple:4","scalars":"N(Z7)","entries":"Z7I"},)j"
      R"j({"shape":"poly:inf","scalars":"Q","entries":"N(Q)"}]})j");
  NFoldSpace v = doc::space_from_json(j);
  EXPECT_EQ(doc::to_json(v), j);
  EXPECT_TRUE(v.components[1].shape.unbounded);
}

TEST(Documents, VectorLiteralsPerComponent) {
  auto j = parse_json(
      R"j({"space":{"kind":"TypeII","components":[{"shape":"matrix:2x2","scalars":"N(Z3)","entries":"N(Z3)"},)j"
      R"j({"shape":"poly:2","scalars":"Z5","entries":"Z5"}]},"vectors":[["[[1,I],[0,2I]]","2x^2 + 1"]]})j");
  doc::VectorList l = doc::vectors_from_json(j);
  ASSERT_EQ(l.vectors.size(), 1u);
  EXPECT_EQ(l.vectors[0].parts[0].size(), 4u);
  EXPECT_EQ(l.vectors[0].parts[1].size(), 3u);
  EXPECT_EQ(doc::to_json(l), j);
}

TEST(Documents, MatrixShapeIsChecked) {
  Component c{Shape::matrix(2, 2), FieldDescriptor::full(BaseField::prime(3)), FieldDescriptor::full(BaseField::prime(3))};
  try {
    doc::parse_part(c, "[[1,0,0],[0,1,0]]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(Documents, MapAssignmentsAreOneBased) {
  auto j = parse_json(
      R"j({"domain":{"kind":"TypeII","components":[{"shape":"tuple:1","scalars":"N(Q)","entries":"N(Q)"},)j"
      R"j({"shape":"tuple:2","scalars":"N(Z3)","entries":"N(Z3)"}]},)j"
      R"j("codomain":{"kind":"TypeII","components":[{"shape":"tuple:2","scalars":"N(Z3)","entries":"N(Z3)"},)j"
      R"j({"shape":"tuple:1","scalars":"N(Q)","entries":"N(Q)"}]},)j"
      R"j("assign":[2,1],"mats":["[[I]]@N(Q)","[[1,0],[0,1]]@N(Z3)"]})j");
  NFoldMap t = doc::map_from_json(j);
  EXPECT_EQ(t.assign, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(doc::to_json(t), j);
}

TEST(Documents, MalformedDocumentsAreParseErrors) {
  for (const char* text : {R"j({"kind":"TypeIII","components":[]})j", R"j({"components":[]})j",
                           R"j({"kind":"TypeI","components":[{"shape":"tuple:0","scalars":"Q","entries":"Q"}]})j",
                           R"j({"kind":"TypeI","components":[{"shape":"cube:3","scalars":"Q","entries":"Q"}]})j"}) {
    try {
      doc::space_from_json(parse_json(text));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << text;
    }
  }
}
