#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfold/base_field.hpp"

namespace nfold {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

/// Univariate polynomial over a base field; coefficients ascending, trimmed.
class BasePoly {
 public:
  BasePoly() = default;
  explicit BasePoly(BaseField f) : f_(f) {}
  BasePoly(BaseField f, std::vector<BaseElem> c) : f_(f), c_(std::move(c)) { trim(); }
  BasePoly(BaseField f, std::initializer_list<long> c) : f_(f) {
    for (long v : c) c_.emplace_back(f, v);
    trim();
  }

  static BasePoly constant(const BaseElem& e) { return BasePoly(e.field(), {e}); }
  static BasePoly x(BaseField f) { return BasePoly(f, {0L, 1L}); }
  /// x - c
  static BasePoly linear(const BaseElem& c) {
    return BasePoly(c.field(), {-c, BaseElem::one(c.field())});
  }
  static BasePoly monomial(BaseField f, std::size_t k) {
    std::vector<BaseElem> c(k + 1, BaseElem::zero(f));
    c[k] = BaseElem::one(f);
    return BasePoly(f, std::move(c));
  }

  BaseField field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  const std::vector<BaseElem>& coeffs() const { return c_; }
  BaseElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BaseElem::zero(f_); }
  BaseElem lead() const { return c_.empty() ? BaseElem::zero(f_) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  BasePoly monic() const {
    if (c_.empty()) return *this;
    return scaled(c_.back().inverse());
  }
  BasePoly scaled(const BaseElem& k) const {
    std::vector<BaseElem> c;
    c.reserve(c_.size());
    for (const auto& e : c_) c.push_back(e * k);
    return BasePoly(f_, std::move(c));
  }

  BaseElem operator()(const BaseElem& x) const {
    BaseElem r = BaseElem::zero(f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  BasePoly derivative() const {
    std::vector<BaseElem> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
      c.push_back(c_[i] * BaseElem(f_, static_cast<long>(i)));
    return BasePoly(f_, std::move(c));
  }

  BasePoly operator-() const { return scaled(-BaseElem::one(f_)); }
  friend BasePoly operator+(const BasePoly& p, const BasePoly& q) {
    BaseField f = same(p, q);
    std::vector<BaseElem> c(std::max(p.c_.size(), q.c_.size()), BaseElem::zero(f));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return BasePoly(f, std::move(c));
  }
  friend BasePoly operator-(const BasePoly& p, const BasePoly& q) { return p + (-q); }
  friend BasePoly operator*(const BasePoly& p, const BasePoly& q) {
    BaseField f = same(p, q);
    if (p.is_zero() || q.is_zero()) return BasePoly(f);
    std::vector<BaseElem> c(p.c_.size() + q.c_.size() - 1, BaseElem::zero(f));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    }
    return BasePoly(f, std::move(c));
  }
  friend bool operator==(const BasePoly& p, const BasePoly& q) {
    return p.f_ == q.f_ && p.c_ == q.c_;
  }

  /// Lexicographic on (degree, coefficients from the top), for deterministic sorting.
  friend bool canonical_less(const BasePoly& p, const BasePoly& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      if (!(p.c_[i] == q.c_[i])) return canonical_less(p.c_[i], q.c_[i]);
    }
    return false;
  }

 private:
  static BaseField same(const BasePoly& p, const BasePoly& q) {
    if (!(p.f_ == q.f_)) fail(ErrorKind::FieldMismatch, p.f_.tag() + " vs " + q.f_.tag());
    return p.f_;
  }
  void trim() {
    for (auto& e : c_)
      if (!(e.field() == f_)) fail(ErrorKind::FieldMismatch, "coefficient outside " + f_.tag());
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  BaseField f_{};
  std::vector<BaseElem> c_;
};

inline BasePoly pow(const BasePoly& p, std::size_t k) {
  BasePoly r = BasePoly::constant(BaseElem::one(p.field()));
  for (std::size_t i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Euclidean division over the field.
inline std::pair<BasePoly, BasePoly> divmod(const BasePoly& f, const BasePoly& d) {
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  BaseField fld = f.field();
  if (!(fld == d.field())) fail(ErrorKind::FieldMismatch, "divmod");
  std::vector<BaseElem> r = f.coeffs();
  int dd = d.degree();
  if (f.degree() < dd) return {BasePoly(fld), f};
  std::vector<BaseElem> q(static_cast<std::size_t>(f.degree() - dd + 1), BaseElem::zero(fld));
  BaseElem li = d.lead().inverse();
  for (int k = f.degree() - dd; k >= 0; --k) {
    BaseElem t = r[static_cast<std::size_t>(k + dd)] * li;
    q[static_cast<std::size_t>(k)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(k + j)] -= t * d.coeffs()[static_cast<std::size_t>(j)];
  }
  return {BasePoly(fld, std::move(q)), BasePoly(fld, std::move(r))};
}

inline BasePoly operator%(const BasePoly& f, const BasePoly& d) { return divmod(f, d).second; }
inline BasePoly operator/(const BasePoly& f, const BasePoly& d) { return divmod(f, d).first; }

inline bool divides(const BasePoly& d, const BasePoly& f) {
  if (d.is_zero()) return f.is_zero();
  return (f % d).is_zero();
}

/// Monic gcd; gcd(0, 0) = 0.
inline BasePoly gcd(BasePoly a, BasePoly b) {
  while (!b.is_zero()) {
    BasePoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtendedGcd {
  BasePoly g, s, t;  // g = s a + t b, g monic
};

inline ExtendedGcd xgcd(const BasePoly& a, const BasePoly& b) {
  BaseField f = a.field();
  BasePoly r0 = a, r1 = b;
  BasePoly s0 = BasePoly::constant(BaseElem::one(f)), s1(f);
  BasePoly t0(f), t1 = BasePoly::constant(BaseElem::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    BasePoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BaseElem li = r0.lead().inverse();
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

namespace detail {

/// Largest prime for which roots and factors are found by enumerating Z_p.
inline constexpr std::int64_t kEnumerablePrime = std::int64_t{1} << 20;
/// Largest |integer| that rational-root candidate enumeration will factor.
inline const mpz_class kRationalRootBound("10000000000");

inline std::vector<mpz_class> positive_divisors(const mpz_class& n, bool& complete) {
  std::vector<mpz_class> small, large;
  mpz_class a = abs(n);
  if (a == 0) return {};
  if (a > kRationalRootBound) {
    complete = false;
    return {mpz_class(1)};
  }
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Distinct roots in canonical order. Over Z_p by enumeration; over Q by the
/// rational root theorem (exhaustive unless the size bound is hit).
inline std::vector<BaseElem> roots(const BasePoly& f, bool* complete = nullptr) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  BaseField fld = f.field();
  std::vector<BaseElem> out;
  if (complete) *complete = true;
  if (fld.is_prime()) {
    if (fld.modulus() > detail::kEnumerablePrime)
      fail(ErrorKind::UnsupportedField, "root enumeration over " + fld.tag());
    for (std::int64_t v = 0; v < fld.modulus(); ++v) {
      BaseElem x(fld, static_cast<long>(v));
      if (f(x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // Clear denominators and content.
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.rational().get_den());
  std::vector<mpz_class> z;
  for (const auto& c : f.coeffs()) z.push_back(mpz_class(c.rational() * l));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) out.push_back(BaseElem::zero(fld));
  if (z.size() - low > 1) {
    bool ok = true;
    auto ps = detail::positive_divisors(z[low], ok);
    auto qs = detail::positive_divisors(z.back(), ok);
    if (!ok && complete) *complete = false;
    std::vector<mpq_class> cand;
    for (const auto& p : ps)
      for (const auto& q : qs) {
        mpq_class c(p, q);
        c.canonicalize();
        cand.push_back(c);
        cand.push_back(-c);
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const auto& c : cand) {
      BaseElem x(fld, c);
      if (f(x).is_zero()) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [](const BaseElem& a, const BaseElem& b) { return canonical_less(a, b); });
  return out;
}

/// Multiplicity of c as a root of f (0 when f(c) != 0).
inline std::size_t root_multiplicity(BasePoly f, const BaseElem& c) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
  std::size_t m = 0;
  BasePoly lin = BasePoly::linear(c);
  while (true) {
    auto [q, r] = divmod(f, lin);
    if (!r.is_zero()) return m;
    f = std::move(q);
    ++m;
  }
}

}  // namespace nfold
