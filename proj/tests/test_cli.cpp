#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nfold_app.hpp"

using namespace nfold;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string first_line() const { return out.substr(0, out.find('\n')); }
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::istringstream in(stdin_text);
  int code = app::run(args, out, in);
  return {code, out.str()};
}

const std::string kSpace = R"j({"kind":"TypeII","components":[{"shape":"tuple:2","scalars":"N(Q)","entries":"N(Q)"}]})j";

}  // namespace

TEST(Cli, CharpolyOfTwoByTwo) {
  CliRun r = run({"charpoly", "[[I,0],[2,2]]@N(Z3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2 + (2I+1)x + 2I\n");
}

TEST(Cli, MatrixFromJsonFileAndStdin) {
  std::string path = ::testing::TempDir() + "nfold_cli_matrix.json";
  std::ofstream(path) << R"j({"field":"N(Z3)","rows":[["I","0"],["2","2"]]})j";
  EXPECT_EQ(run({"charpoly", "@" + path}).out, "x^2 + (2I+1)x + 2I\n");
  EXPECT_EQ(run({"det", "-"}, "[[I,0],[2,2]]@N(Z3)").out, "2I\n");
}

TEST(Cli, GroupScanAdditiveOrderSixteen) {
  CliRun r = run({"groupscan", "4", "add"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.first_line(), "order 16");
  EXPECT_NE(r.out.find("{0,2,2I,2+2I} identity 0 Neutrosophic\n"), std::string::npos);
  EXPECT_NE(r.out.find("{0,2I} identity 0 PseudoNeutrosophic\n"), std::string::npos);
}

TEST(Cli, GroupScanMultiplicativeWitness) {
  CliRun r = run({"groupscan", "5", "mul"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("group no\nwitness NoInverse I "), std::string::npos) << r.out;
}

TEST(Cli, SingularInverseExitsOne) {
  CliRun r = run({"inverse", "[[1,0],[0,0]]@N(Z3)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.first_line(), "Singular slot=0");
}

TEST(Cli, ParseErrorsExitTwoWithoutPartialOutput) {
  CliRun r = run({"charpoly", "[[I,0],[2,"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.first_line(), "ParseError");
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "rank-nullity"}).code, 2);  // --seed is mandatory
  EXPECT_EQ(run({"decompose", "sideways", "[[1]]@N(Q)"}).code, 2);
  CliRun bad_doc = run({"gramschmidt", R"j({"space":)j" + kSpace + R"j(,"vectors":[["(1,0)"],["(1,"]]})j"});
  EXPECT_EQ(bad_doc.code, 2);
  EXPECT_EQ(bad_doc.first_line(), "ParseError");
}

TEST(Cli, MinpolyFlagsAreVerbatim) {
  // Slot minimal polynomials of different degree: x in slot 0, x^2 in slot 1.
  CliRun r = run({"minpoly", "[[0,I],[0,0]]@N(Q)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.first_line(), "NonPrincipalMinPoly");
}

TEST(Cli, GramSchmidtAndProjection) {
  CliRun g = run({"gramschmidt", R"j({"space":)j" + kSpace + R"j(,"vectors":[["(1,1)"],["(1,0)"]]})j"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "[\"(1,1)\"]\n[\"(1/2,-1/2)\"]\n");
  CliRun p = run({"project", R"j({"space":)j" + kSpace + R"j(,"vectors":[["(1,0)"]],"beta":["(2,I)"]})j"});
  EXPECT_EQ(p.out, "[\"(2,0)\"]\n");
}

TEST(Cli, NonInvertibleNormExitsOne) {
  std::string sp = R"j({"kind":"TypeII","components":[{"shape":"tuple:2","scalars":"N(Z5)","entries":"N(Z5)"}]})j";
  CliRun r = run({"gramschmidt", R"j({"space":)j" + sp + R"j(,"vectors":[["(1,2)"],["(0,1)"]]})j"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.first_line(), "NonInvertibleNorm slot=0 index=0");
}

TEST(Cli, RankNullityReport) {
  CliRun r = run({"ranknullity", R"j({"domain":)j" + kSpace + R"j(,"assign":[1],"mats":["[[1,I],[1,I]]@N(Q)"]})j"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "component 1 rank 1 nullity 1 dim 2\n");
}

TEST(Cli, VerifyIsDeterministic) {
  CliRun a = run({"verify", "cayley-hamilton", "--seed", "11", "--trials", "40"});
  CliRun b = run({"verify", "cayley-hamilton", "--seed", "11", "--trials", "40", "--parallel"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "no-such-suite", "--seed", "1"}).first_line(), "UnknownSuite");
}

TEST(Cli, CorpusPasses) {
  CliRun r = run({"corpus"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("corpus: 16/16 fixtures PASS"), std::string::npos);
  EXPECT_NE(r.out.find("  book x^3 + (I+1)x^2 + I\n"), std::string::npos);
  EXPECT_NE(r.out.find("KNOWN-DISCREPANCY book states x^3 + Ix + x^2 + I"), std::string::npos);
}

TEST(Cli, CorruptedFixtureIsNamed) {
  auto fs = corpus::fixtures();
  fs[2].charpoly = "x^2 + x + 1";
  std::ostringstream os;
  EXPECT_EQ(app::detail::corpus_output(corpus::run(fs), os), 1);
  std::string out = os.str();
  EXPECT_EQ(out.substr(0, out.find('\n')), "FixtureMismatch fixtures=" + fs[2].name);
  EXPECT_NE(out.find("FAIL " + fs[2].name), std::string::npos);
}

TEST(Cli, CorpusMatchesFrozenOracleFile) {
  std::ifstream in(NFOLD_ORACLE_JSON);
  ASSERT_TRUE(in);
  auto oracle = nlohmann::json::parse(in);
  const auto& fs = corpus::fixtures();
  ASSERT_EQ(oracle.size(), fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_EQ(oracle[i].at("name"), fs[i].name);
    EXPECT_EQ(oracle[i].at("charpoly"), fs[i].charpoly) << fs[i].name;
    EXPECT_EQ(corpus::sorted(oracle[i].at("roots").get<std::vector<std::string>>()), corpus::sorted(fs[i].roots))
        << fs[i].name;
  }
}
