#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nfold/spectral.hpp"
#include "nfold/text.hpp"

// Regression corpus of worked matrices from the source text. Expected values
// come from two places: strings printed in the text (Book), or values from
// the independent slot oracle in tests/oracles, frozen here (Oracle). Where
// the text prints a result that disagrees with its own matrix, the printed
// string is kept and reported as a known discrepancy.

namespace nfold::corpus {

enum class Provenance { Book, Oracle };

inline std::string to_string(Provenance p) { return p == Provenance::Book ? "book" : "oracle"; }

struct Fixture {
  std::string name;
  std::string field;
  std::string rows;
  Provenance provenance = Provenance::Oracle;
  std::string charpoly;             // canonical expected string
  std::vector<std::string> roots;   // expected characteristic values
  std::optional<std::string> book;  // string as printed in the text
};

inline const std::vector<Fixture>& fixtures() {
  using P = Provenance;
  static const std::vector<Fixture> all = {
      {"book-3x3-over-NZ2", "N(Z2)", "[[I,0,1],[0,1,0],[I,0,0]]", P::Book, "x^3 + (I+1)x^2 + I", {"1", "I"},
       "x^3 + (I+1)x^2 + I"},
      {"book-4x4-over-NZ3", "N(Z3)", "[[2,I,0,I],[I,I,0,0],[0,2,2I,1],[0,0,0,1]]", P::Book, "x^4 + (I+2)x^2 + 2I",
       {"1", "2", "I", "1+I", "2I", "2+2I"}, "x^4 + 2I + Ix^2 + 2x^2"},
      {"book-2x2-over-NZ3", "N(Z3)", "[[I,0],[2,2]]", P::Book, "x^2 + (2I+1)x + 2I", {"2", "I", "2I", "2+2I"},
       "x^2 + (2I+1)x + 2I"},
      {"book-upper-3x3-over-NZ2", "N(Z2)", "[[I,0,1],[0,1,I],[0,0,1]]", P::Oracle, "x^3 + Ix^2 + x + I", {"1", "I"},
       "x^3 + Ix + x^2 + I"},
      {"book-3x3-over-NZ5", "N(Z5)", "[[3,1,I],[2,2I,1],[2I,2,0]]", P::Oracle, "x^3 + (3I+2)x^2 + (4I+1)x + (3I+1)",
       {"1"}, "x^3 + (3I+1)x^2 + (4I+1)x + 3I+1"},
      {"book-symmetric-2x2-over-NZ2", "N(Z2)", "[[0,I],[I,1]]", P::Oracle, "x^2 + x + I", {}, std::nullopt},
      {"exercise-3x3-over-NZ5", "N(Z5)", "[[3I,0,1],[0,5I,4],[0,2I,2]]", P::Oracle, "x^3 + (2I+3)x^2 + 3Ix + 4I",
       {"2+I", "2+2I", "3I", "4I"}, std::nullopt},
      {"exercise-4x4-over-NZ3", "N(Z3)", "[[I,0,1,2],[0,2I,I,0],[0,1+I,0,2+I],[2I+1,0,0,I]]", P::Oracle,
       "x^4 + 2Ix^3 + (2I+1)x^2 + (I+1)x + I", {"1", "I"}, std::nullopt},
      {"exercise-3x3-over-NZ11", "N(Z11)", "[[I,0,3],[7I,6,2],[0,0,4I]]", P::Oracle, "x^3 + (6I+5)x^2 + Ix + 9I",
       {"6", "I", "4I", "6I", "6+6I", "6+9I"}, std::nullopt},
      {"exercise-4x4-over-NQ", "N(Q)", "[[4I,0,2,I],[3I,I,0,7],[0,I,0,0],[8,0,7I,4I]]", P::Oracle,
       "x^4 - 9Ix^3 + 16Ix^2 - 63Ix + 87I", {}, std::nullopt},
      {"bipolynomial-4x4-over-NZ11", "N(Z11)", "[[3I,0,4I,1],[0,7I,3,0],[2,1,4,3],[10I,0,9,I]]", P::Oracle,
       "x^4 + 7x^3 + (2I+3)x^2 + (4I+4)x + 3I", {"5+4I", "9I"}, std::nullopt},
      {"bipolynomial-3x3-over-NZ2", "N(Z2)", "[[I,0,1],[0,I,1],[0,1,I]]", P::Oracle, "x^3 + Ix^2 + (I+1)x",
       {"0", "1", "I", "1+I"}, std::nullopt},
      {"fourfold-2x2-over-NZ5", "N(Z5)", "[[I,0],[1,3I]]", P::Oracle, "x^2 + Ix + 3I", {"I", "3I"}, std::nullopt},
      {"fourfold-4x4-over-NZ7", "N(Z7)", "[[I,2I,1,0],[0,3I,I,6I],[6,0,3I,0],[2I,1,0,1]]", P::Oracle,
       "x^4 + 6x^3 + (2I+1)x^2 + (3I+6)x + 2I", {"1", "I"}, std::nullopt},
      {"fourfold-3x3-over-NZ2", "N(Z2)", "[[I,0,1],[0,1,I],[1,0,I]]", P::Oracle, "x^3 + x^2 + (I+1)x + (I+1)",
       {"1", "1+I"}, std::nullopt},
      {"fourfold-5x5-over-NZ3", "N(Z3)", "[[I,0,0,0,I],[2,0,I,1,0],[0,1,1,0,I],[0,0,I,2,0],[0,I,0,0,2I]]", P::Oracle,
       "x^5 + (I+2)x^3 + Ix^2 + Ix", {"0", "1", "I", "2+I", "1+2I", "2+2I"}, std::nullopt},
  };
  return all;
}

struct FixtureResult {
  std::string name;
  bool pass = true;
  std::string computed_charpoly;
  std::vector<std::string> computed_roots;
  std::vector<std::string> problems;
  std::vector<std::string> lines;
};

struct CorpusReport {
  std::vector<FixtureResult> fixtures;
  bool ok() const {
    return std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureResult& r) { return r.pass; });
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& r : fixtures)
      if (!r.pass) out.push_back(r.name);
    return out;
  }
  std::string text() const {
    std::ostringstream os;
    for (const auto& r : fixtures)
      for (const auto& l : r.lines) os << l << "\n";
    std::size_t passed = fixtures.size() - failing().size();
    os << "corpus: " << passed << "/" << fixtures.size() << " fixtures PASS\n";
    return os.str();
  }
};

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline FixtureResult run_fixture(const Fixture& fx) {
  FixtureResult r;
  r.name = fx.name;
  FieldDescriptor f = parse_field(fx.field);
  NMatrix a = parse_matrix_rows(fx.rows, f);
  NPoly cp = charpoly(a);
  r.computed_charpoly = nfold::to_string(cp);
  if (!(cp == charpoly_by_slots(a))) r.problems.push_back("cofactor and slot charpolys disagree");
  if (r.computed_charpoly != fx.charpoly)
    r.problems.push_back("charpoly expected " + fx.charpoly + " computed " + r.computed_charpoly);
  SpectrumReport sp = spectrum(a);
  for (const auto& x : sp.roots) r.computed_roots.push_back(nfold::to_string(x));
  if (sorted(r.computed_roots) != sorted(fx.roots)) {
    std::string e, c;
    for (const auto& x : fx.roots) e += " " + x;
    for (const auto& x : r.computed_roots) c += " " + x;
    r.problems.push_back("roots expected {" + e + " } computed {" + c + " }");
  }
  bool discrepancy = false;
  if (fx.book) {
    bool same = parse_poly(*fx.book, f) == cp;
    if (fx.provenance == Provenance::Book && !same) r.problems.push_back("book string " + *fx.book + " disagrees");
    discrepancy = fx.provenance == Provenance::Oracle && !same;
    if (fx.provenance == Provenance::Oracle && same)
      r.problems.push_back("book string now agrees; discrepancy note is stale");
  }
  r.pass = r.problems.empty();
  std::string roots;
  for (const auto& x : r.computed_roots) roots += (roots.empty() ? "" : ", ") + x;
  r.lines.push_back(std::string(r.pass ? "PASS " : "FAIL ") + fx.name + " [" + to_string(fx.provenance) + "] " +
                    fx.rows + "@" + fx.field);
  r.lines.push_back("  charpoly " + r.computed_charpoly);
  r.lines.push_back("  roots {" + roots + "}");
  if (fx.book && !discrepancy) r.lines.push_back("  book " + *fx.book);
  if (discrepancy) r.lines.push_back("  KNOWN-DISCREPANCY book states " + *fx.book);
  for (const auto& p : r.problems) r.lines.push_back("  FixtureMismatch " + p);
  return r;
}

inline CorpusReport run(const std::vector<Fixture>& fs = fixtures()) {
  CorpusReport rep;
  for (const auto& fx : fs) rep.fixtures.push_back(run_fixture(fx));
  return rep;
}

}  // namespace nfold::corpus
