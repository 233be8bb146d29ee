#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nfold/classical_forms.hpp"
#include "nfold/npoly.hpp"

// Operator theory over N(K). Everything runs on the slot images over K and
// is recombined afterwards; results are re-verified before they are returned.

namespace nfold {

using NVector = std::vector<NNum>;

inline BaseVector slot_vector(const NVector& v, Slot s) {
  BaseVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.at(s));
  return out;
}

inline NVector recombine(const BaseVector& u, const BaseVector& w, FieldDescriptor f) {
  NVector out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(recombine(u[i], w[i], f));
  return out;
}

inline bool is_zero_vector(const NVector& v) {
  return std::all_of(v.begin(), v.end(), [](const NNum& x) { return x.is_zero(); });
}

namespace detail {

inline void require_square(const NMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "operator must be square");
}

inline void verify(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::OracleMismatch, what + " failed re-verification");
}

/// Slot 1 of a real matrix repeats slot 0; slot 0 of a pure matrix is zero.
inline bool computed(const FieldDescriptor& f, Slot s) {
  return s == Slot::At0 ? f.flavor != Flavor::Pure : f.flavor != Flavor::Real;
}

inline NMatrix shifted(const NMatrix& a, const NNum& c) {
  return a - NMatrix::identity(a.field(), a.rows()).scaled(c);
}

/// (degree, coefficients low to high) order used to pair slot factors.
inline bool factor_less(const BasePoly& p, const BasePoly& q) {
  if (p.degree() != q.degree()) return p.degree() < q.degree();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!(p.coeff(i) == q.coeff(i))) return canonical_less(p.coeff(i), q.coeff(i));
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------- spectrum

struct SpectrumReport {
  NMatrix matrix;
  NPoly charpoly;
  std::vector<NNum> roots;
  std::array<std::vector<BaseElem>, 2> slot_spectra;
  bool complete = true;
};

inline SpectrumReport spectrum(const NMatrix& a) {
  detail::require_square(a);
  SpectrumReport rep{a, charpoly(a), {}, {}, true};
  const FieldDescriptor& f = a.field();
  for (Slot s : f.active_slots()) {
    bool ok = true;
    rep.slot_spectra[slot_index(s)] = roots(charpoly_hessenberg(a.at(s)), &ok);
    rep.complete = rep.complete && ok;
  }
  if (f.flavor == Flavor::Real) rep.slot_spectra[1] = rep.slot_spectra[0];
  auto cross = [&](const BaseElem& u, const BaseElem& v) {
    NNum c = recombine(u, v, f);
    detail::verify(det(detail::shifted(a, c)).is_zero(), "characteristic value");
    rep.roots.push_back(c);
  };
  switch (f.flavor) {
    case Flavor::Real:
      for (const auto& r : rep.slot_spectra[0]) cross(r, r);
      break;
    case Flavor::Pure:
      for (const auto& r : rep.slot_spectra[1]) cross(BaseElem::zero(f.base), r);
      break;
    case Flavor::Full:
      for (const auto& u : rep.slot_spectra[0])
        for (const auto& v : rep.slot_spectra[1]) cross(u, v);
      break;
  }
  std::sort(rep.roots.begin(), rep.roots.end(), [](const NNum& x, const NNum& y) { return canonical_less(x, y); });
  return rep;
}

/// Characteristic vectors for c. Slot null-space bases of equal size are
/// paired positionally; otherwise each basis vector is kept in its own slot.
inline std::vector<NVector> eigvecs(const NMatrix& a, const NNum& c) {
  detail::require_square(a);
  FieldDescriptor f = a.field().join(c.field());
  NMatrix m = detail::shifted(a.with_flavor(f.flavor), c.with_flavor(f.flavor));
  if (!det(m).is_zero()) fail(ErrorKind::NotACharacteristicValue, "det(A - cI) is not zero");
  std::array<std::vector<BaseVector>, 2> ns;
  for (Slot s : f.active_slots()) ns[slot_index(s)] = nullspace(m.at(s));
  BaseVector zero(a.rows(), BaseElem::zero(f.base));
  std::vector<NVector> out;
  switch (f.flavor) {
    case Flavor::Real:
      for (const auto& u : ns[0]) out.push_back(recombine(u, u, f));
      break;
    case Flavor::Pure:
      for (const auto& w : ns[1]) out.push_back(recombine(zero, w, f));
      break;
    case Flavor::Full:
      if (ns[0].size() == ns[1].size()) {
        for (std::size_t i = 0; i < ns[0].size(); ++i) out.push_back(recombine(ns[0][i], ns[1][i], f));
      } else {
        for (const auto& u : ns[0]) out.push_back(recombine(u, zero, f));
        for (const auto& w : ns[1]) out.push_back(recombine(zero, w, f));
      }
      break;
  }
  NMatrix af = a.with_flavor(f.flavor);
  for (const auto& v : out) {
    NVector cv;
    for (const auto& x : v) cv.push_back(x * c.with_flavor(f.flavor));
    detail::verify(af * v == cv, "A v = c v");
  }
  return out;
}

// ------------------------------------------------------------ annihilators

struct AnnihilatorResult {
  NPoly polynomial;
  bool principal = true;
  std::array<BasePoly, 2> slot_minpolys;
};

namespace detail {

/// Recombine two monic slot annihilators, padding the shorter by x^delta.
inline AnnihilatorResult combine_annihilators(std::array<BasePoly, 2> m, const FieldDescriptor& f) {
  AnnihilatorResult r{NPoly(f), true, m};
  if (f.flavor == Flavor::Real) {
    r.slot_minpolys[1] = m[0];
    r.polynomial = recombine(m[0], m[0], f);
    return r;
  }
  if (f.flavor == Flavor::Pure) {
    r.slot_minpolys[0] = BasePoly(f.base);
    r.polynomial = recombine(BasePoly(f.base), m[1], f);
    return r;
  }
  int d0 = m[0].degree(), d1 = m[1].degree();
  if (d0 != d1) {
    r.principal = false;
    std::size_t lo = d0 < d1 ? 0 : 1;
    int delta = std::abs(d0 - d1);
    m[lo] = m[lo] * BasePoly::monomial(f.base, static_cast<std::size_t>(delta));
  }
  r.polynomial = recombine(m[0], m[1], f);
  return r;
}

}  // namespace detail

inline AnnihilatorResult minpoly(const NMatrix& a) {
  detail::require_square(a);
  const FieldDescriptor& f = a.field();
  std::array<BasePoly, 2> m{BasePoly(f.base), BasePoly(f.base)};
  for (Slot s : f.active_slots()) m[slot_index(s)] = minpoly(a.at(s));
  AnnihilatorResult r = detail::combine_annihilators(m, f);
  detail::verify(eval(r.polynomial, a).is_zero(), "minimal polynomial annihilation");
  return r;
}

inline bool cayley_hamilton_check(const NMatrix& a) {
  detail::require_square(a);
  if (!eval(charpoly(a), a).is_zero()) return false;
  for (Slot s : a.field().active_slots())
    if (!divides(minpoly(a.at(s)), charpoly_hessenberg(a.at(s)))) return false;
  return true;
}

inline AnnihilatorResult t_annihilator(const NMatrix& a, const NVector& v) {
  detail::require_square(a);
  if (v.size() != a.cols()) fail(ErrorKind::ShapeMismatch, "vector length differs from the matrix size");
  if (is_zero_vector(v)) fail(ErrorKind::ZeroVector, "annihilator of the zero vector");
  FieldDescriptor f = a.field();
  for (const auto& x : v) f = f.join(x.field());
  NMatrix af = a.with_flavor(f.flavor);
  std::array<BasePoly, 2> m{BasePoly(f.base), BasePoly(f.base)};
  for (Slot s : f.active_slots()) {
    BaseVector vs = slot_vector(v, s);
    m[slot_index(s)] = is_zero_vector(vs) ? BasePoly::constant(BaseElem::one(f.base))
                                          : vector_annihilator(af.at(s), vs);
  }
  AnnihilatorResult r = detail::combine_annihilators(m, f);
  detail::verify(is_zero_vector(eval(r.polynomial, af) * v), "vector annihilation");
  return r;
}

/// v, Av, ..., A^{k-1} v with k the larger slot annihilator degree.
inline std::vector<NVector> cyclic_basis(const NMatrix& a, const NVector& v) {
  AnnihilatorResult ann = t_annihilator(a, v);
  int k = 0;
  for (Slot s : a.field().active_slots()) {
    int ks = ann.slot_minpolys[slot_index(s)].degree();
    k = std::max(k, ks);
    // dim Z(v; A) = deg p_v in this slot
    std::vector<BaseVector> kry;
    BaseVector cur = slot_vector(v, s);
    for (int i = 0; i < ks; ++i) {
      kry.push_back(cur);
      cur = a.at(s) * cur;
    }
    BaseField b = a.field().base;
    detail::verify(kry.empty() || rank(BaseMatrix::from_columns(b, v.size(), kry)) == static_cast<std::size_t>(ks),
                   "cyclic subspace dimension");
  }
  std::vector<NVector> out;
  NVector cur = v;
  for (int i = 0; i < k; ++i) {
    out.push_back(cur);
    cur = a * cur;
  }
  return out;
}

/// Slotwise least monic g with g(A) v in W, where W is spanned by `w`.
inline AnnihilatorResult t_conductor(const NMatrix& a, const NVector& v, const std::vector<NVector>& w) {
  detail::require_square(a);
  FieldDescriptor f = a.field();
  for (const auto& x : v) f = f.join(x.field());
  std::array<BasePoly, 2> m{BasePoly(f.base), BasePoly(f.base)};
  for (Slot s : f.active_slots()) {
    BaseMatrix as = a.at(s);
    std::vector<BaseVector> ws;
    for (const auto& g : w) ws.push_back(slot_vector(g, s));
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (!in_span(f.base, ws, as * ws[i]))
        fail(ErrorKind::NotInvariant, "A w leaves W", slot_index(s), i);
    BasePoly g = classical::conductor(as, slot_vector(v, s), ws);
    detail::verify(divides(g, minpoly(as)), "conductor divides the minimal polynomial");
    m[slot_index(s)] = g;
  }
  return detail::combine_annihilators(m, f);
}

// ------------------------------------------------------------------- forms

enum class DecompositionKind { DN, Primary, Rational, Jordan, Cyclic };
enum class ReportFlag { NonPrincipalMinPoly, SlotStructureMismatch, DoesNotSplit };

inline const char* to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::DN: return "DN";
    case DecompositionKind::Primary: return "Primary";
    case DecompositionKind::Rational: return "Rational";
    case DecompositionKind::Jordan: return "Jordan";
    case DecompositionKind::Cyclic: return "Cyclic";
  }
  return "?";
}

inline const char* to_string(ReportFlag f) {
  switch (f) {
    case ReportFlag::NonPrincipalMinPoly: return "NonPrincipalMinPoly";
    case ReportFlag::SlotStructureMismatch: return "SlotStructureMismatch";
    case ReportFlag::DoesNotSplit: return "DoesNotSplit";
  }
  return "?";
}

/// Classical data for one slot image.
struct SlotDecomposition {
  bool computed = false;
  std::vector<BaseMatrix> parts;  // D, N or the projections E_i
  std::vector<BasePoly> polys;    // interpolating polynomial, primary or invariant factors
  std::vector<std::size_t> multiplicities;
  std::vector<classical::JordanBlock> blocks;
  std::optional<BaseMatrix> form;
  std::optional<BaseMatrix> transform;
};

struct DecompositionReport {
  DecompositionKind kind = DecompositionKind::DN;
  std::vector<NMatrix> parts;  // D and N, or projections
  std::optional<NMatrix> form;
  std::optional<NMatrix> transform;  // P with P^{-1} A P = form
  std::optional<NPoly> polynomial;   // D = polynomial(A)
  std::vector<NPoly> factors;        // recombined invariant or primary factors
  std::array<SlotDecomposition, 2> per_slot;
  std::set<ReportFlag> flags;

  bool has(ReportFlag f) const { return flags.count(f) > 0; }
  bool recombined() const { return !parts.empty() || form.has_value(); }
};

namespace detail {

/// Runs `fn` on each computed slot; a real matrix copies slot 0 into slot 1
/// and a pure matrix gets an all-zero slot 0 of the same shape.
template <typename Fn>
std::array<SlotDecomposition, 2> per_slot(const NMatrix& a, Fn fn) {
  std::array<SlotDecomposition, 2> out;
  const FieldDescriptor& f = a.field();
  for (Slot s : f.active_slots()) {
    out[slot_index(s)] = fn(a.at(s));
    out[slot_index(s)].computed = true;
  }
  if (f.flavor == Flavor::Real) out[1] = out[0];
  return out;
}

inline BaseMatrix slot_part(const std::array<SlotDecomposition, 2>& d, std::size_t slot, std::size_t i,
                            const NMatrix& a) {
  if (d[slot].computed) return d[slot].parts[i];
  return BaseMatrix(a.field().base, a.rows(), a.cols());
}

inline BaseMatrix slot_or_zero(const std::optional<BaseMatrix>& m, const NMatrix& a) {
  return m ? *m : BaseMatrix(a.field().base, a.rows(), a.cols());
}

inline BasePoly slot_poly(const SlotDecomposition& d, std::size_t i, BaseField b) {
  return d.computed ? d.polys[i] : BasePoly(b);
}

/// Both computed slots agree on `key`; an uncomputed slot matches anything.
template <typename Key>
bool slots_match(const std::array<SlotDecomposition, 2>& d, Key key) {
  if (!d[0].computed || !d[1].computed) return true;
  return key(d[0]) == key(d[1]);
}

inline void require_split(const BaseMatrix& m) {
  Factorization fz = factor(minpoly(m));
  if (!fz.complete) fail(ErrorKind::UndecidableOverQ, "root search bound reached");
  if (!fz.splits()) fail(ErrorKind::DoesNotSplit, "minimal polynomial has a nonlinear factor");
}

inline void verify_similarity(const NMatrix& a, const NMatrix& form, const NMatrix& p) {
  verify(similarity_check(a, form, p), "similarity");
}

}  // namespace detail

inline DecompositionReport primary_decomposition(const NMatrix& a) {
  detail::require_square(a);
  DecompositionReport rep;
  rep.kind = DecompositionKind::Primary;
  rep.per_slot = detail::per_slot(a, [](const BaseMatrix& m) {
    auto comps = classical::primary_decomposition(m);
    std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
      return detail::factor_less(x.factor, y.factor);
    });
    SlotDecomposition d;
    BaseMatrix sum(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& e = comps[i].projection;
      detail::verify(e * e == e, "idempotent projection");
      for (std::size_t j = 0; j < i; ++j) detail::verify((e * comps[j].projection).is_zero(), "orthogonal projections");
      sum = sum + e;
      d.parts.push_back(e);
      d.polys.push_back(comps[i].factor);
      d.multiplicities.push_back(comps[i].multiplicity);
    }
    detail::verify(sum == BaseMatrix::identity(m.field(), m.rows()), "projections sum to the identity");
    return d;
  });
  auto count = [](const SlotDecomposition& d) { return d.parts.size(); };
  if (!detail::slots_match(rep.per_slot, count)) {
    rep.flags.insert(ReportFlag::SlotStructureMismatch);
    return rep;
  }
  std::size_t k = rep.per_slot[0].computed ? rep.per_slot[0].parts.size() : rep.per_slot[1].parts.size();
  NMatrix sum = NMatrix::zero(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    NMatrix e = recombine(detail::slot_part(rep.per_slot, 0, i, a), detail::slot_part(rep.per_slot, 1, i, a), a.field());
    detail::verify(e * e == e && e * a == a * e, "recombined projection");
    sum = sum + e;
    rep.parts.push_back(e);
  }
  detail::verify(sum == NMatrix::identity(a.field(), a.rows()), "recombined projections sum to the identity");
  return rep;
}

/// A = D + N with D slot-diagonalizable, N nilpotent, DN = ND, and D a
/// polynomial in A.
inline DecompositionReport dn_decompose(const NMatrix& a) {
  detail::require_square(a);
  DecompositionReport rep;
  rep.kind = DecompositionKind::DN;
  rep.per_slot = detail::per_slot(a, [](const BaseMatrix& m) {
    detail::require_split(m);
    BaseField b = m.field();
    BasePoly mp = minpoly(m);
    BasePoly h(b);
    for (const auto& c : classical::primary_decomposition(m))
      h = h + c.projector.scaled(-c.factor.coeff(0));
    h = h % mp;
    SlotDecomposition d;
    BaseMatrix dm = eval(h, m);
    d.parts = {dm, m - dm};
    d.polys = {h};
    return d;
  });
  const FieldDescriptor& f = a.field();
  NPoly h = recombine(detail::slot_poly(rep.per_slot[0], 0, f.base), detail::slot_poly(rep.per_slot[1], 0, f.base), f);
  NMatrix dm = eval(h, a);
  NMatrix nm = a - dm;
  detail::verify(dm == recombine(detail::slot_part(rep.per_slot, 0, 0, a), detail::slot_part(rep.per_slot, 1, 0, a), f),
                 "D from the interpolating polynomial");
  detail::verify(dm * nm == nm * dm, "DN = ND");
  detail::verify(power(nm, a.rows()).is_zero(), "N nilpotent");
  for (Slot s : f.active_slots()) {
    Factorization fz = factor(minpoly(dm.at(s)));
    bool squarefree = std::all_of(fz.factors.begin(), fz.factors.end(),
                                  [](const PolyFactor& p) { return p.multiplicity == 1; });
    detail::verify(fz.splits() && squarefree, "D diagonalizable");
  }
  rep.parts = {dm, nm};
  rep.polynomial = h;
  return rep;
}

inline DecompositionReport rational_form(const NMatrix& a) {
  detail::require_square(a);
  DecompositionReport rep;
  rep.kind = DecompositionKind::Rational;
  rep.per_slot = detail::per_slot(a, [](const BaseMatrix& m) {
    SlotDecomposition d;
    d.polys = classical::invariant_factors(m);
    for (std::size_t i = 1; i < d.polys.size(); ++i)
      detail::verify(divides(d.polys[i], d.polys[i - 1]), "invariant factor chain");
    auto cf = classical::verified_form(m, classical::rational_form(d.polys, m.field()));
    d.form = cf.form;
    d.transform = cf.transform;
    return d;
  });
  auto degrees = [](const SlotDecomposition& d) {
    std::vector<int> out;
    for (const auto& p : d.polys) out.push_back(p.degree());
    return out;
  };
  if (!detail::slots_match(rep.per_slot, degrees)) {
    rep.flags.insert(ReportFlag::SlotStructureMismatch);
    return rep;
  }
  const FieldDescriptor& f = a.field();
  const auto& ref = rep.per_slot[0].computed ? rep.per_slot[0] : rep.per_slot[1];
  for (std::size_t i = 0; i < ref.polys.size(); ++i)
    rep.factors.push_back(recombine(detail::slot_poly(rep.per_slot[0], i, f.base),
                                    detail::slot_poly(rep.per_slot[1], i, f.base), f));
  rep.form = recombine(detail::slot_or_zero(rep.per_slot[0].form, a), detail::slot_or_zero(rep.per_slot[1].form, a), f);
  rep.transform =
      recombine(detail::slot_or_zero(rep.per_slot[0].transform, a), detail::slot_or_zero(rep.per_slot[1].transform, a), f);
  detail::verify_similarity(a, *rep.form, *rep.transform);
  return rep;
}

inline DecompositionReport jordan_form(const NMatrix& a) {
  detail::require_square(a);
  DecompositionReport rep;
  rep.kind = DecompositionKind::Jordan;
  rep.per_slot = detail::per_slot(a, [](const BaseMatrix& m) {
    SlotDecomposition d;
    d.blocks = classical::jordan_structure(m);
    auto cf = classical::verified_form(m, classical::jordan_matrix(m.field(), d.blocks));
    d.form = cf.form;
    d.transform = cf.transform;
    return d;
  });
  auto sizes = [](const SlotDecomposition& d) {
    std::vector<std::size_t> out;
    for (const auto& b : d.blocks) out.push_back(b.size);
    return out;
  };
  if (!detail::slots_match(rep.per_slot, sizes)) {
    rep.flags.insert(ReportFlag::SlotStructureMismatch);
    return rep;
  }
  const FieldDescriptor& f = a.field();
  rep.form = recombine(detail::slot_or_zero(rep.per_slot[0].form, a), detail::slot_or_zero(rep.per_slot[1].form, a), f);
  rep.transform =
      recombine(detail::slot_or_zero(rep.per_slot[0].transform, a), detail::slot_or_zero(rep.per_slot[1].transform, a), f);
  detail::verify_similarity(a, *rep.form, *rep.transform);
  return rep;
}

// ------------------------------------------------- diagonal / triangular

/// Verdict with a witness P and form when it holds.
struct FormTest {
  bool holds = false;
  std::optional<NMatrix> transform;
  std::optional<NMatrix> form;
};

namespace detail {

inline FormTest form_test(const NMatrix& a, bool need_squarefree) {
  require_square(a);
  for (Slot s : a.field().active_slots()) {
    Factorization fz = factor(minpoly(a.at(s)));
    if (!fz.complete) fail(ErrorKind::UndecidableOverQ, "root search bound reached");
    if (!fz.splits()) return {};
    if (need_squarefree)
      for (const auto& p : fz.factors)
        if (p.multiplicity > 1) return {};
  }
  // Slot Jordan forms are lower triangular (diagonal when squarefree); their
  // recombination is a witness even when block structures differ.
  std::array<std::optional<BaseMatrix>, 2> form, tr;
  for (Slot s : a.field().active_slots()) {
    BaseMatrix m = a.at(s);
    auto cf = classical::verified_form(m, classical::jordan_matrix(m.field(), classical::jordan_structure(m)));
    form[slot_index(s)] = cf.form;
    tr[slot_index(s)] = cf.transform;
  }
  if (a.field().flavor == Flavor::Real) {
    form[1] = form[0];
    tr[1] = tr[0];
  }
  const FieldDescriptor& f = a.field();
  FormTest out{true, recombine(slot_or_zero(tr[0], a), slot_or_zero(tr[1], a), f),
               recombine(slot_or_zero(form[0], a), slot_or_zero(form[1], a), f)};
  verify_similarity(a, *out.form, *out.transform);
  return out;
}

}  // namespace detail

inline FormTest diagonalizable_test(const NMatrix& a) { return detail::form_test(a, true); }
inline FormTest triangularizable_test(const NMatrix& a) { return detail::form_test(a, false); }
inline bool diagonalizable(const NMatrix& a) { return diagonalizable_test(a).holds; }
inline bool triangularizable(const NMatrix& a) { return triangularizable_test(a).holds; }

}  // namespace nfold
