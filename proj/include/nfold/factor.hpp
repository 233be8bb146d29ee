#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nfold/base_matrix.hpp"
#include "nfold/base_poly.hpp"

namespace nfold {

/// A monic irreducible factor with its multiplicity.
struct PolyFactor {
  BasePoly factor;
  std::size_t multiplicity = 0;
};

/// Factorization of a nonzero polynomial into monic factors. Over Z_p this
/// is the full irreducible factorization; over Q only rational linear factors
/// are split off and whatever is left is reported in `remainder`.
struct Factorization {
  BaseElem unit;
  std::vector<PolyFactor> factors;  // sorted by canonical order of the factor
  BasePoly remainder;               // monic, constant 1 when fully split
  bool complete = true;             // false if a search bound was hit
  bool splits() const {
    if (!remainder.is_one() || !complete) return false;
    return std::all_of(factors.begin(), factors.end(),
                       [](const PolyFactor& f) { return f.factor.degree() == 1; });
  }
};

namespace detail {

/// p-th root of a polynomial in x^p over Z_p.
inline BasePoly pth_root(const BasePoly& f) {
  std::int64_t p = f.field().modulus();
  std::vector<BaseElem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p))
    c.push_back(f.coeffs()[i]);
  return BasePoly(f.field(), std::move(c));
}

/// Square-free decomposition over Z_p: pairs (square-free part, multiplicity).
inline std::vector<PolyFactor> squarefree_fp(const BasePoly& f) {
  std::vector<PolyFactor> out;
  BasePoly c = gcd(f, f.derivative());
  BasePoly w = f / c;
  std::size_t i = 1;
  while (w.degree() > 0) {
    BasePoly y = gcd(w, c);
    BasePoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    std::size_t p = static_cast<std::size_t>(f.field().modulus());
    for (auto& pf : squarefree_fp(pth_root(c).monic())) out.push_back({pf.factor, pf.multiplicity * p});
  }
  return out;
}

/// Berlekamp splitting of a monic square-free polynomial over Z_p.
inline std::vector<BasePoly> berlekamp(const BasePoly& f) {
  BaseField fld = f.field();
  int n = f.degree();
  if (n <= 1) return {f};
  std::int64_t p = fld.modulus();
  // Row i holds x^(i p) mod f.
  BaseMatrix q(fld, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  BasePoly xp = BasePoly::constant(BaseElem::one(fld));
  BasePoly step = BasePoly::monomial(fld, static_cast<std::size_t>(p)) % f;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = xp.coeff(static_cast<std::size_t>(j));
    xp = (xp * step) % f;
  }
  BaseMatrix m = q.transposed() - BaseMatrix::identity(fld, static_cast<std::size_t>(n));
  auto basis = nullspace(m);
  std::size_t k = basis.size();
  std::vector<BasePoly> parts{f};
  for (const auto& v : basis) {
    if (parts.size() == k) break;
    BasePoly g(fld, v);
    if (g.degree() <= 0) continue;
    for (std::int64_t s = 0; s < p && parts.size() < k; ++s) {
      BasePoly gs = g - BasePoly::constant(BaseElem(fld, static_cast<long>(s)));
      std::vector<BasePoly> next;
      for (const auto& h : parts) {
        if (h.degree() <= 1) {
          next.push_back(h);
          continue;
        }
        BasePoly d = gcd(h, gs);
        if (d.degree() > 0 && d.degree() < h.degree()) {
          next.push_back(d);
          next.push_back((h / d).monic());
        } else {
          next.push_back(h);
        }
      }
      parts = std::move(next);
    }
  }
  for (auto& h : parts) h = h.monic();
  return parts;
}

}  // namespace detail

inline Factorization factor(const BasePoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of the zero polynomial");
  BaseField fld = f.field();
  Factorization out;
  out.unit = f.lead();
  BasePoly g = f.monic();
  if (fld.is_prime()) {
    if (fld.modulus() > detail::kEnumerablePrime)
      fail(ErrorKind::UnsupportedField, "factorization over " + fld.tag());
    std::map<std::vector<std::int64_t>, PolyFactor> acc;
    for (const auto& sf : detail::squarefree_fp(g)) {
      for (auto& irr : detail::berlekamp(sf.factor)) {
        std::vector<std::int64_t> key;
        for (const auto& c : irr.coeffs()) key.push_back(c.residue());
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, PolyFactor{irr, sf.multiplicity});
        else it->second.multiplicity += sf.multiplicity;
      }
    }
    for (auto& [k, v] : acc) out.factors.push_back(v);
    out.remainder = BasePoly::constant(BaseElem::one(fld));
  } else {
    bool complete = true;
    auto rs = roots(g, &complete);
    out.complete = complete;
    for (const auto& r : rs) {
      std::size_t m = root_multiplicity(g, r);
      BasePoly lin = BasePoly::linear(r);
      g = g / pow(lin, m);
      out.factors.push_back({lin, m});
    }
    out.remainder = g.monic();
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return canonical_less(a.factor, b.factor);
  });
  return out;
}


}  // namespace nfold
