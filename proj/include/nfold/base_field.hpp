#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "nfold/error.hpp"

namespace nfold {

inline bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The base field K under every neutrosophic structure: Q (modulus 0) or Z_p.
class BaseField {
 public:
  constexpr BaseField() = default;

  static constexpr BaseField rationals() { return BaseField(); }
  static BaseField prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31))
      fail(ErrorKind::InvalidField, "modulus too large: " + std::to_string(p));
    if (!is_prime_number(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return BaseField(p);
  }

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr bool is_prime() const { return p_ != 0; }
  constexpr std::int64_t modulus() const { return p_; }
  constexpr std::int64_t characteristic() const { return p_; }

  /// "Q" or "Z<p>".
  std::string tag() const { return p_ == 0 ? "Q" : "Z" + std::to_string(p_); }

  friend constexpr bool operator==(BaseField, BaseField) = default;

 private:
  explicit constexpr BaseField(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

/// An element of a BaseField. Residues mod p are kept in [0, p); rationals are
/// GMP values in lowest terms.
class BaseElem {
 public:
  BaseElem() = default;
  BaseElem(BaseField f, long v) : f_(f) {
    if (f.is_prime()) {
      m_ = mod(v, f.modulus());
    } else {
      q_ = v;
    }
  }
  BaseElem(BaseField f, const mpq_class& v) : f_(f) {
    if (f.is_prime()) {
      mpz_class p(static_cast<long>(f.modulus()));
      mpz_class num = v.get_num() % p;
      mpz_class den = v.get_den() % p;
      if (num < 0) num += p;
      if (den < 0) den += p;
      if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes mod " + f.tag());
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class r = (num * inv) % p;
      m_ = r.get_si();
    } else {
      q_ = v;
      q_.canonicalize();
    }
  }

  static BaseElem zero(BaseField f) { return BaseElem(f, 0L); }
  static BaseElem one(BaseField f) { return BaseElem(f, 1L); }

  BaseField field() const { return f_; }
  bool is_zero() const { return f_.is_prime() ? m_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return f_.is_prime() ? m_ == 1 : q_ == 1; }

  /// Residue in [0, p); prime fields only.
  std::int64_t residue() const { return m_; }
  /// Exact rational value (the residue itself for prime fields).
  mpq_class value() const { return f_.is_prime() ? mpq_class(static_cast<long>(m_)) : q_; }
  const mpq_class& rational() const { return q_; }

  BaseElem operator-() const {
    BaseElem r = *this;
    if (f_.is_prime()) {
      r.m_ = m_ == 0 ? 0 : f_.modulus() - m_;
    } else {
      r.q_ = -q_;
    }
    return r;
  }
  friend BaseElem operator+(const BaseElem& x, const BaseElem& y) {
    BaseField f = same(x, y);
    BaseElem r;
    r.f_ = f;
    if (f.is_prime()) {
      std::int64_t s = x.m_ + y.m_;
      r.m_ = s >= f.modulus() ? s - f.modulus() : s;
    } else {
      r.q_ = x.q_ + y.q_;
    }
    return r;
  }
  friend BaseElem operator-(const BaseElem& x, const BaseElem& y) { return x + (-y); }
  friend BaseElem operator*(const BaseElem& x, const BaseElem& y) {
    BaseField f = same(x, y);
    BaseElem r;
    r.f_ = f;
    if (f.is_prime()) {
      r.m_ = (x.m_ * y.m_) % f.modulus();
    } else {
      r.q_ = x.q_ * y.q_;
    }
    return r;
  }
  BaseElem inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + f_.tag());
    BaseElem r;
    r.f_ = f_;
    if (f_.is_prime()) {
      r.m_ = pow_mod(m_, f_.modulus() - 2, f_.modulus());
    } else {
      r.q_ = 1 / q_;
    }
    return r;
  }
  friend BaseElem operator/(const BaseElem& x, const BaseElem& y) { return x * y.inverse(); }

  BaseElem& operator+=(const BaseElem& o) { return *this = *this + o; }
  BaseElem& operator-=(const BaseElem& o) { return *this = *this - o; }
  BaseElem& operator*=(const BaseElem& o) { return *this = *this * o; }

  friend bool operator==(const BaseElem& x, const BaseElem& y) {
    if (!(x.f_ == y.f_)) return false;
    return x.f_.is_prime() ? x.m_ == y.m_ : x.q_ == y.q_;
  }

  /// Sign of a rational; UnorderedField over Z_p.
  int sign() const {
    if (f_.is_prime()) fail(ErrorKind::UnorderedField, f_.tag() + " has no order");
    return sgn(q_);
  }

  /// Deterministic total order used for sorting (residue order over Z_p).
  friend bool canonical_less(const BaseElem& x, const BaseElem& y) {
    return x.f_.is_prime() ? x.m_ < y.m_ : x.q_ < y.q_;
  }

  /// "3", "-1/2"; residues print as their representative in [0, p).
  std::string to_string() const {
    return f_.is_prime() ? std::to_string(m_) : q_.get_str();
  }

 private:
  static std::int64_t mod(long v, std::int64_t p) {
    std::int64_t r = static_cast<std::int64_t>(v) % p;
    return r < 0 ? r + p : r;
  }
  static std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = (r * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
    return r;
  }
  static BaseField same(const BaseElem& x, const BaseElem& y) {
    if (!(x.f_ == y.f_))
      fail(ErrorKind::FieldMismatch, x.f_.tag() + " vs " + y.f_.tag());
    return x.f_;
  }

  BaseField f_{};
  std::int64_t m_ = 0;
  mpq_class q_;
};

}  // namespace nfold
