#include <gtest/gtest.h>

#include <random>

#include "nfold/spectral.hpp"
#include "nfold/text.hpp"

using namespace nfold;

namespace {

const FieldDescriptor kNQ = FieldDescriptor::full(BaseField::rationals());
const FieldDescriptor kNZ3 = FieldDescriptor::full(BaseField::prime(3));

NMatrix M(const char* s) { return parse_matrix_literal(s); }
NNum S(const char* s, FieldDescriptor f) { return parse_scalar(s, f); }

std::vector<std::string> strings(const std::vector<NNum>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

NMatrix random_matrix(std::mt19937_64& rng, FieldDescriptor f, std::size_t n) {
  NMatrix m(f, n, n);
  long p = f.base.modulus();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = NNum(f, static_cast<long>(rng() % p), static_cast<long>(rng() % p));
  return m;
}

// Every scalar of N(Z_p) whose shifted determinant vanishes.
std::vector<NNum> brute_roots(const NMatrix& a) {
  std::vector<NNum> out;
  long p = a.field().base.modulus();
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      NNum c(a.field(), x, y);
      if (det(a - NMatrix::identity(a.field(), a.rows()).scaled(c)).is_zero()) out.push_back(c);
    }
  std::sort(out.begin(), out.end(), [](const NNum& u, const NNum& v) { return canonical_less(u, v); });
  return out;
}

}  // namespace

TEST(Spectrum, WorkedExamples) {
  EXPECT_EQ(strings(spectrum(NMatrix::identity(kNQ, 3)).roots), std::vector<std::string>{"1"});
  EXPECT_EQ(strings(spectrum(M("[[I,0],[2,2]]@N(Z3)")).roots), (std::vector<std::string>{"2", "I", "2I", "2+2I"}));
  SpectrumReport d = spectrum(M("[[I,0],[0,1]]@N(Z3)"));
  EXPECT_EQ(strings(d.roots), (std::vector<std::string>{"1", "I"}));
  EXPECT_EQ(d.slot_spectra[0].size(), 2u);
  EXPECT_EQ(d.slot_spectra[1].size(), 1u);
  EXPECT_TRUE(d.complete);
}

TEST(Spectrum, MatchesBruteForceOverSmallPrimes) {
  std::mt19937_64 rng(5);
  for (long p : {2, 3, 5}) {
    FieldDescriptor f = FieldDescriptor::full(BaseField::prime(p));
    for (int t = 0; t < 25; ++t) {
      NMatrix a = random_matrix(rng, f, 1 + rng() % 3);
      EXPECT_EQ(spectrum(a).roots, brute_roots(a)) << to_string(a);
    }
  }
}

TEST(Spectrum, RationalCandidatesOnly) {
  SpectrumReport r = spectrum(M("[[0,2],[1,0]]@N(Q)"));
  EXPECT_TRUE(r.roots.empty());
}

TEST(Eigvecs, IdentityGivesStandardBasis) {
  auto vs = eigvecs(NMatrix::identity(kNQ, 3), kNQ.one());
  ASSERT_EQ(vs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(vs[i][j], i == j ? kNQ.one() : kNQ.zero());
}

TEST(Eigvecs, IndeterminateCharacteristicValues) {
  NMatrix a = M("[[I,0],[2,2]]@N(Z3)");
  for (const char* c : {"I", "2I"}) {
    NNum cv = S(c, kNZ3);
    auto vs = eigvecs(a, cv);
    ASSERT_FALSE(vs.empty());
    for (const auto& v : vs) {
      EXPECT_FALSE(is_zero_vector(v));
      NVector scaled;
      for (const auto& x : v) scaled.push_back(x * cv);
      EXPECT_EQ(a * v, scaled);
    }
  }
  EXPECT_THROW(eigvecs(a, S("1", kNZ3)), Error);
}

TEST(Minpoly, WorkedExamples) {
  AnnihilatorResult id = minpoly(NMatrix::identity(kNQ, 3));
  EXPECT_EQ(to_string(id.polynomial), "x - 1");
  EXPECT_TRUE(id.principal);

  AnnihilatorResult ii = minpoly(NMatrix::identity(kNZ3, 2).scaled(NNum::indeterminate(kNZ3)));
  EXPECT_EQ(to_string(ii.polynomial), "x + 2I");  // x - I over Z3
  EXPECT_TRUE(ii.principal);

  AnnihilatorResult d = minpoly(M("[[I,0],[0,1]]@N(Z3)"));
  EXPECT_EQ(to_string(d.polynomial), "x^2 + 2x");  // x^2 - x over Z3
  EXPECT_FALSE(d.principal);
  EXPECT_EQ(d.slot_minpolys[0].degree(), 2);
  EXPECT_EQ(d.slot_minpolys[1].degree(), 1);
}

TEST(Minpoly, InvariantUnderUnitConjugation) {
  std::mt19937_64 rng(17);
  FieldDescriptor f = FieldDescriptor::full(BaseField::prime(5));
  int checked = 0;
  while (checked < 20) {
    NMatrix a = random_matrix(rng, f, 3), p = random_matrix(rng, f, 3);
    if (!det(p).is_unit()) continue;
    AnnihilatorResult m = minpoly(a);
    if (!m.principal) continue;
    EXPECT_EQ(minpoly(inverse(p) * a * p).polynomial, m.polynomial);
    ++checked;
  }
}

TEST(CayleyHamilton, FixturesAndRandom) {
  EXPECT_TRUE(cayley_hamilton_check(M("[[1,0],[0,I]]@N(Q)")));
  EXPECT_TRUE(cayley_hamilton_check(M("[[I,0,1],[0,1,0],[I,0,0]]@N(Z2)")));
  std::mt19937_64 rng(100);
  FieldDescriptor f = FieldDescriptor::full(BaseField::prime(5));
  for (int t = 0; t < 100; ++t) EXPECT_TRUE(cayley_hamilton_check(random_matrix(rng, f, 3)));
}

TEST(FormTests, Diagonalizable) {
  FormTest d = diagonalizable_test(M("[[1,0],[0,I]]@N(Q)"));
  EXPECT_TRUE(d.holds);
  ASSERT_TRUE(d.form.has_value());

  NMatrix nil = M("[[0,I],[0,0]]@N(Q)");
  EXPECT_FALSE(diagonalizable(nil));
  EXPECT_TRUE(triangularizable(nil));

  FormTest w = diagonalizable_test(M("[[I,0],[2,2]]@N(Z3)"));
  ASSERT_TRUE(w.holds);
  EXPECT_TRUE(similarity_check(M("[[I,0],[2,2]]@N(Z3)"), *w.form, *w.transform));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (i != j) EXPECT_TRUE(w.form->at(i, j).is_zero());
}

TEST(FormTests, IrreducibleSlotIsNotTriangularizable) {
  EXPECT_FALSE(triangularizable(M("[[0,2],[1,0]]@N(Z3)")));  // x^2 + 1 is irreducible mod 3
  EXPECT_FALSE(triangularizable(M("[[0,2],[1,0]]@N(Q)")));
}

TEST(DN, WorkedExamples) {
  NMatrix diag = M("[[1,0],[0,I]]@N(Q)");
  DecompositionReport r = dn_decompose(diag);
  EXPECT_EQ(r.parts[0], diag);
  EXPECT_TRUE(r.parts[1].is_zero());

  NMatrix nil = M("[[0,I],[0,0]]@N(Q)");
  r = dn_decompose(nil);
  EXPECT_TRUE(r.parts[0].is_zero());
  EXPECT_EQ(r.parts[1], nil);

  r = dn_decompose(M("[[I,1],[0,I]]@N(Q)"));
  EXPECT_EQ(r.parts[0], NMatrix::identity(kNQ, 2).scaled(NNum::indeterminate(kNQ)));
  EXPECT_EQ(r.parts[1], M("[[0,1],[0,0]]@N(Q)"));
  ASSERT_TRUE(r.polynomial.has_value());
  EXPECT_EQ(eval(*r.polynomial, M("[[I,1],[0,I]]@N(Q)")), r.parts[0]);

  EXPECT_THROW(dn_decompose(M("[[0,2],[1,0]]@N(Q)")), Error);
}

TEST(Primary, WorkedExamples) {
  DecompositionReport id = primary_decomposition(NMatrix::identity(kNZ3, 3));
  ASSERT_EQ(id.parts.size(), 1u);
  EXPECT_EQ(id.parts[0], NMatrix::identity(kNZ3, 3));

  DecompositionReport d = primary_decomposition(M("[[I,0],[0,1]]@N(Z3)"));
  EXPECT_TRUE(d.has(ReportFlag::SlotStructureMismatch));
  EXPECT_EQ(d.per_slot[0].parts.size(), 2u);
  EXPECT_EQ(d.per_slot[1].parts.size(), 1u);
  EXPECT_TRUE(d.parts.empty());

  // Distinct eigenvalues in each slot: spectral projectors.
  NMatrix a = M("[[I,0],[2,2]]@N(Z3)");
  DecompositionReport s = primary_decomposition(a);
  ASSERT_EQ(s.parts.size(), 2u);
  EXPECT_EQ(s.parts[0] + s.parts[1], NMatrix::identity(kNZ3, 2));
  EXPECT_TRUE((s.parts[0] * s.parts[1]).is_zero());
}

TEST(RationalForm, CompanionIsItsOwnForm) {
  NPoly p = parse_poly("x^2 + (2I+1)x + 2I", kNZ3);
  NMatrix c = companion(p);
  DecompositionReport r = rational_form(c);
  ASSERT_TRUE(r.form.has_value());
  EXPECT_EQ(*r.form, c);
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_EQ(r.factors[0], p);
}

TEST(RationalForm, InvariantFactorChain) {
  std::mt19937_64 rng(23);
  FieldDescriptor f = FieldDescriptor::full(BaseField::prime(3));
  for (int t = 0; t < 30; ++t) {
    NMatrix a = random_matrix(rng, f, 1 + rng() % 4);
    DecompositionReport r = rational_form(a);
    for (const auto& s : r.per_slot) {
      BasePoly prod = BasePoly::constant(BaseElem::one(f.base));
      for (const auto& q : s.polys) prod = prod * q;
      EXPECT_EQ(prod.degree(), static_cast<int>(a.rows()));
    }
    if (r.form) EXPECT_TRUE(similarity_check(a, *r.form, *r.transform));
  }
  // Scalar matrix: n blocks x - c.
  DecompositionReport s = rational_form(NMatrix::identity(f, 3).scaled(NNum(f, 2, 1)));
  EXPECT_EQ(s.factors.size(), 3u);
}

TEST(JordanForm, WorkedExamples) {
  NMatrix scalar = NMatrix::identity(kNQ, 3).scaled(NNum(kNQ, 2, 1));
  DecompositionReport s = jordan_form(scalar);
  ASSERT_TRUE(s.form.has_value());
  EXPECT_EQ(*s.form, scalar);
  EXPECT_EQ(s.per_slot[0].blocks.size(), 3u);

  DecompositionReport j = jordan_form(M("[[I,1],[0,I]]@N(Z3)"));
  ASSERT_TRUE(j.form.has_value());
  EXPECT_EQ(to_string(*j.form), "[[I,0],[1,I]]@N(Z3)");

  EXPECT_THROW(jordan_form(M("[[0,2],[1,0]]@N(Q)")), Error);
}

TEST(JordanForm, BlocksOrdered) {
  BaseField z5 = BaseField::prime(5);
  BaseMatrix a(z5, {{3, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto blocks = classical::jordan_structure(a);
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_EQ(blocks[0].eigenvalue, BaseElem(z5, 1L));
  EXPECT_EQ(blocks[0].size, 2u);
  EXPECT_EQ(blocks[1].size, 1u);
  EXPECT_EQ(blocks[2].eigenvalue, BaseElem(z5, 3L));
}

TEST(Annihilator, WorkedExamples) {
  NMatrix a = M("[[1,0],[0,I]]@N(Q)");
  NVector e1{kNQ.one(), kNQ.zero()};
  EXPECT_EQ(to_string(t_annihilator(a, e1).polynomial), "x - 1");

  NPoly p = parse_poly("x^2 + (2I+1)x + 2I", kNZ3);
  NMatrix c = companion(p);
  NVector v{kNZ3.one(), kNZ3.zero()};
  EXPECT_EQ(t_annihilator(c, v).polynomial, p);
  auto basis = cyclic_basis(c, v);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[1], c * v);

  EXPECT_THROW(t_annihilator(c, NVector{kNZ3.zero(), kNZ3.zero()}), Error);
}

TEST(Conductor, WorkedExamples) {
  NMatrix a = M("[[0,1],[0,0]]@N(Q)");
  NVector e1{kNQ.one(), kNQ.zero()}, e2{kNQ.zero(), kNQ.one()};
  EXPECT_EQ(to_string(t_conductor(a, e2, {e1}).polynomial), "x");
  EXPECT_EQ(to_string(t_conductor(a, e1, {e1}).polynomial), "1");
  EXPECT_EQ(t_conductor(a, e2, {}).polynomial, t_annihilator(a, e2).polynomial);
  try {
    t_conductor(a, e1, {e2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
}

TEST(DN, RandomIdentities) {
  std::mt19937_64 rng(41);
  FieldDescriptor f = FieldDescriptor::full(BaseField::prime(3));
  int done = 0;
  for (int t = 0; t < 200 && done < 30; ++t) {
    NMatrix a = random_matrix(rng, f, 1 + rng() % 3);
    if (!triangularizable(a)) continue;
    DecompositionReport r = dn_decompose(a);
    EXPECT_EQ(r.parts[0] + r.parts[1], a);
    EXPECT_EQ(r.parts[0] * r.parts[1], r.parts[1] * r.parts[0]);
    ++done;
  }
  EXPECT_GT(done, 10);
}
