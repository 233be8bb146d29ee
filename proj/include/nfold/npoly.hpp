#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

#include "nfold/base_poly.hpp"
#include "nfold/nnum.hpp"

namespace nfold {

/// Multiply a scalar by a base-field element (keeps the flavor).
inline NNum scale(const NNum& x, const BaseElem& k) {
  return NNum(x.field(), x.real() * k, x.indet() * k);
}

/// Degrees of the two slot images; they differ when the leading coefficient
/// is a zero divisor.
struct EvalDegreeProfile {
  int deg_at0 = kNegInfDegree;
  int deg_at1 = kNegInfDegree;
  bool split_degenerate = false;
};

/// Polynomial with N(K) coefficients, ascending, no trailing zeros.
class NPoly {
 public:
  NPoly() = default;
  explicit NPoly(FieldDescriptor f) : f_(f) {}
  NPoly(FieldDescriptor f, std::vector<NNum> c) : f_(f), c_(std::move(c)) {
    for (auto& e : c_) {
      if (!(e.base() == f_.base)) fail(ErrorKind::FieldMismatch, "coefficient outside " + f_.tag());
      e = e.with_flavor(f_.flavor);
    }
    trim();
  }

  static NPoly constant(const NNum& c) { return NPoly(c.field(), {c}); }
  static NPoly one(FieldDescriptor f) { return constant(f.one()); }
  /// The variable x, i.e. one() * x.
  static NPoly x(FieldDescriptor f) { return NPoly(f, {f.zero(), f.one()}); }
  /// x - c
  static NPoly linear(const NNum& c) { return NPoly(c.field(), {-c, c.field().one()}); }

  const FieldDescriptor& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  const std::vector<NNum>& coeffs() const { return c_; }
  NNum coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  NNum lead() const { return c_.empty() ? f_.zero() : c_.back(); }
  /// Leading coefficient equals the ring's identity (I for KI).
  bool is_monic() const { return !c_.empty() && c_.back() == f_.one(); }

  BasePoly at(Slot s) const {
    std::vector<BaseElem> c;
    c.reserve(c_.size());
    for (const auto& e : c_) c.push_back(e.at(s));
    return BasePoly(f_.base, std::move(c));
  }

  EvalDegreeProfile profile() const {
    EvalDegreeProfile p{at(Slot::At0).degree(), at(Slot::At1).degree(), false};
    p.split_degenerate = p.deg_at0 != p.deg_at1;
    return p;
  }

  NPoly scaled(const NNum& k) const {
    std::vector<NNum> c;
    for (const auto& e : c_) c.push_back(e * k);
    return NPoly(f_.join(k.field()), std::move(c));
  }

  NNum operator()(const NNum& x) const {
    FieldDescriptor f = f_.join(x.field());
    NNum r = f.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  NPoly derivative() const {
    std::vector<NNum> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
      c.push_back(scale(c_[i], BaseElem(f_.base, static_cast<long>(i))));
    return NPoly(f_, std::move(c));
  }

  NPoly operator-() const {
    std::vector<NNum> c;
    for (const auto& e : c_) c.push_back(-e);
    return NPoly(f_, std::move(c));
  }
  friend NPoly operator+(const NPoly& p, const NPoly& q) {
    FieldDescriptor f = p.f_.join(q.f_);
    std::vector<NNum> c(std::max(p.c_.size(), q.c_.size()), f.zero());
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return NPoly(f, std::move(c));
  }
  friend NPoly operator-(const NPoly& p, const NPoly& q) { return p + (-q); }
  friend NPoly operator*(const NPoly& p, const NPoly& q) {
    FieldDescriptor f = p.f_.join(q.f_);
    if (p.is_zero() || q.is_zero()) return NPoly(f);
    std::vector<NNum> c(p.c_.size() + q.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return NPoly(f, std::move(c));
  }
  NPoly& operator+=(const NPoly& o) { return *this = *this + o; }
  NPoly& operator-=(const NPoly& o) { return *this = *this - o; }
  NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

  /// Value equality of the coefficient lists.
  friend bool operator==(const NPoly& p, const NPoly& q) {
    return p.f_.base == q.f_.base && p.c_ == q.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FieldDescriptor f_{};
  std::vector<NNum> c_;
};

inline NPoly pow(const NPoly& p, std::size_t k) {
  NPoly r = NPoly::one(p.field());
  for (std::size_t i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Coefficientwise recombination of two slot images. For KI the slot-0 image
/// must vanish; for K the images must agree.
inline NPoly recombine(const BasePoly& p0, const BasePoly& p1, FieldDescriptor f) {
  std::size_t n = std::max(p0.coeffs().size(), p1.coeffs().size());
  std::vector<NNum> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(recombine(p0.coeff(i), p1.coeff(i), f));
  return NPoly(f, std::move(c));
}

/// Division with remainder; the divisor's leading coefficient must be a unit.
inline std::pair<NPoly, NPoly> divmod(const NPoly& f, const NPoly& d) {
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (!d.lead().is_unit()) fail(ErrorKind::NonUnitLeadingCoefficient, "leading coefficient is a zero divisor");
  FieldDescriptor fld = f.field().join(d.field());
  std::vector<NNum> r = f.coeffs();
  for (auto& e : r) e = e.with_flavor(fld.flavor);
  int dd = d.degree();
  if (f.degree() < dd) return {NPoly(fld), NPoly(fld, r)};
  std::vector<NNum> q(static_cast<std::size_t>(f.degree() - dd + 1), fld.zero());
  NNum li = d.lead().with_flavor(fld.flavor).inverse();
  for (int k = f.degree() - dd; k >= 0; --k) {
    NNum t = r[static_cast<std::size_t>(k + dd)] * li;
    q[static_cast<std::size_t>(k)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(k + j)] -= t * d.coeffs()[static_cast<std::size_t>(j)];
  }
  return {NPoly(fld, std::move(q)), NPoly(fld, std::move(r))};
}

/// Slotwise gcd recombined into a monic polynomial. Raises SplitDegenerate
/// when the slot gcds have different degrees.
inline NPoly gcd(const NPoly& f, const NPoly& g) {
  FieldDescriptor fld = f.field().join(g.field());
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
  std::array<BasePoly, 2> s{BasePoly(fld.base), BasePoly(fld.base)};
  for (Slot sl : fld.active_slots()) s[slot_index(sl)] = gcd(f.at(sl), g.at(sl));
  if (fld.flavor == Flavor::Pure) return recombine(BasePoly(fld.base), s[1], fld);
  if (s[0].degree() != s[1].degree())
    fail(ErrorKind::SplitDegenerate, "slot gcd degrees " + std::to_string(s[0].degree()) + " and " +
                                         std::to_string(s[1].degree()));
  return recombine(s[0], s[1], fld);
}

inline bool coprime(const NPoly& f, const NPoly& g) {
  FieldDescriptor fld = f.field().join(g.field());
  for (Slot sl : fld.active_slots())
    if (!gcd(f.at(sl), g.at(sl)).is_one()) return false;
  return true;
}

/// Taylor coefficients t_k = D^k f(c) / k! about c. Needs characteristic 0.
inline std::vector<NNum> taylor(const NPoly& f, const NNum& c) {
  if (!f.field().base.is_rational())
    fail(ErrorKind::CharacteristicNotZero, "Taylor expansion over " + f.field().tag());
  std::vector<NNum> out;
  NPoly d = f;
  mpq_class fact = 1;
  for (int k = 0; k <= std::max(f.degree(), 0); ++k) {
    if (k > 0) fact *= k;
    out.push_back(scale(d(c), BaseElem(f.field().base, mpq_class(1) / fact)));
    d = d.derivative();
  }
  if (f.is_zero()) out.clear();
  return out;
}

/// Least k with D^k f(c) != 0. Needs characteristic 0.
inline std::size_t multiplicity(const NPoly& f, const NNum& c) {
  if (!f.field().base.is_rational())
    fail(ErrorKind::CharacteristicNotZero, "multiplicity over " + f.field().tag());
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
  NPoly d = f;
  std::size_t k = 0;
  while (d(c).is_zero()) {
    d = d.derivative();
    ++k;
  }
  return k;
}

namespace detail {

/// All roots of a slot image; the zero polynomial has every element of Z_p.
inline std::vector<BaseElem> slot_roots(const BasePoly& p, bool* complete) {
  if (!p.is_zero()) return roots(p, complete);
  BaseField f = p.field();
  if (f.is_rational()) fail(ErrorKind::InfiniteRootSet, "a slot image vanishes over Q");
  if (f.modulus() > kEnumerablePrime) fail(ErrorKind::UnsupportedField, "root enumeration over " + f.tag());
  std::vector<BaseElem> all;
  for (std::int64_t v = 0; v < f.modulus(); ++v) all.emplace_back(f, static_cast<long>(v));
  return all;
}

}  // namespace detail

/// Roots in the polynomial's own ring, by crossing the slot root sets and
/// verifying each recombination. Exhaustive over Z_p.
inline std::vector<NNum> roots(const NPoly& f, bool* complete = nullptr) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const FieldDescriptor& fld = f.field();
  bool ok0 = true, ok1 = true;
  std::vector<NNum> cand;
  switch (fld.flavor) {
    case Flavor::Real:
      for (const auto& r : detail::slot_roots(f.at(Slot::At0), &ok0)) cand.push_back(recombine(r, r, fld));
      break;
    case Flavor::Pure:
      for (const auto& r : detail::slot_roots(f.at(Slot::At1), &ok1))
        cand.push_back(recombine(BaseElem::zero(fld.base), r, fld));
      break;
    case Flavor::Full: {
      auto r0 = detail::slot_roots(f.at(Slot::At0), &ok0);
      auto r1 = detail::slot_roots(f.at(Slot::At1), &ok1);
      for (const auto& u : r0)
        for (const auto& v : r1) cand.push_back(recombine(u, v, fld));
      break;
    }
  }
  if (complete) *complete = ok0 && ok1;
  std::vector<NNum> out;
  for (const auto& c : cand)
    if (f(c).is_zero()) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const NNum& a, const NNum& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace nfold
