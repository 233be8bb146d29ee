#pragma once

#include <array>
#include <string>
#include <vector>

#include "nfold/base_field.hpp"

namespace nfold {

/// Which part of N(K) a descriptor admits: K itself, all of N(K), or KI.
enum class Flavor { Real, Full, Pure };

/// The two evaluation homomorphisms N(K) -> K: I |-> 0 and I |-> 1.
enum class Slot { At0 = 0, At1 = 1 };
inline constexpr std::array<Slot, 2> kSlots{Slot::At0, Slot::At1};
inline int slot_index(Slot s) { return static_cast<int>(s); }

class NNum;

/// Base field plus flavor: Q, Z<p>, N(Q), N(Z<p>), QI or Z<p>I.
struct FieldDescriptor {
  BaseField base{};
  Flavor flavor = Flavor::Full;

  static FieldDescriptor real(BaseField b) { return {b, Flavor::Real}; }
  static FieldDescriptor full(BaseField b) { return {b, Flavor::Full}; }
  static FieldDescriptor pure(BaseField b) { return {b, Flavor::Pure}; }

  /// Implicit widening: equal flavors are kept, anything mixed becomes Full.
  FieldDescriptor join(const FieldDescriptor& o) const {
    if (!(base == o.base))
      fail(ErrorKind::FieldMismatch, base.tag() + " vs " + o.base.tag());
    return {base, flavor == o.flavor ? flavor : Flavor::Full};
  }

  /// Evaluation slots that carry information for this flavor: K and N(K) use
  /// both, KI only slot 1 (slot 0 kills every bI).
  std::vector<Slot> active_slots() const {
    if (flavor == Flavor::Pure) return {Slot::At1};
    return {Slot::At0, Slot::At1};
  }

  std::string tag() const {
    switch (flavor) {
      case Flavor::Real: return base.tag();
      case Flavor::Full: return "N(" + base.tag() + ")";
      case Flavor::Pure: return base.tag() + "I";
    }
    return {};
  }

  inline NNum zero() const;
  /// Multiplicative identity of the ring: 1, except I for KI.
  inline NNum one() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// A neutrosophic scalar a + bI with I^2 = I.
class NNum {
 public:
  NNum() = default;
  NNum(FieldDescriptor f, BaseElem a, BaseElem b) : f_(f), a_(std::move(a)), b_(std::move(b)) {
    if (!(a_.field() == f.base) || !(b_.field() == f.base))
      fail(ErrorKind::FieldMismatch, "component outside " + f.tag());
    check_flavor();
  }
  NNum(FieldDescriptor f, long a, long b = 0)
      : NNum(f, BaseElem(f.base, a), BaseElem(f.base, b)) {}

  static NNum indeterminate(FieldDescriptor f) { return NNum(f, 0L, 1L); }

  const FieldDescriptor& field() const { return f_; }
  BaseField base() const { return f_.base; }
  const BaseElem& real() const { return a_; }
  const BaseElem& indet() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  BaseElem at(Slot s) const { return s == Slot::At0 ? a_ : a_ + b_; }

  /// Unit test in the ring named by the flavor (KI has unit I).
  bool is_unit() const {
    switch (f_.flavor) {
      case Flavor::Real: return !a_.is_zero();
      case Flavor::Pure: return !b_.is_zero();
      case Flavor::Full: return !at(Slot::At0).is_zero() && !at(Slot::At1).is_zero();
    }
    return false;
  }

  /// Inverse in K, N(K) or KI according to the flavor. Over N(K) a value is a
  /// unit iff both evaluations are nonzero; NotInvertible names the zero slot.
  NNum inverse() const {
    switch (f_.flavor) {
      case Flavor::Real:
        if (a_.is_zero()) fail(ErrorKind::NotInvertible, "zero", 0);
        return NNum(f_, a_.inverse(), BaseElem::zero(f_.base));
      case Flavor::Pure:
        if (b_.is_zero()) fail(ErrorKind::NotInvertible, "zero in " + f_.tag(), 1);
        return NNum(f_, BaseElem::zero(f_.base), b_.inverse());
      case Flavor::Full:
        break;
    }
    BaseElem u = at(Slot::At0), v = at(Slot::At1);
    if (u.is_zero()) fail(ErrorKind::NotInvertible, "evaluation at I=0 vanishes", 0);
    if (v.is_zero()) fail(ErrorKind::NotInvertible, "evaluation at I=1 vanishes", 1);
    BaseElem ui = u.inverse(), vi = v.inverse();
    return NNum(f_, ui, vi - ui);
  }

  /// Re-tags the value; narrowing checks the flavor constraint.
  NNum with_flavor(Flavor fl) const { return NNum({f_.base, fl}, a_, b_); }

  NNum operator-() const { return NNum(f_, -a_, -b_); }
  friend NNum operator+(const NNum& x, const NNum& y) {
    return NNum(x.f_.join(y.f_), x.a_ + y.a_, x.b_ + y.b_);
  }
  friend NNum operator-(const NNum& x, const NNum& y) { return x + (-y); }
  // (a+bI)(c+dI) = ac + (ad + bc + bd)I
  friend NNum operator*(const NNum& x, const NNum& y) {
    FieldDescriptor f = x.f_.join(y.f_);
    return NNum(f, x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_);
  }
  NNum& operator+=(const NNum& o) { return *this = *this + o; }
  NNum& operator-=(const NNum& o) { return *this = *this - o; }
  NNum& operator*=(const NNum& o) { return *this = *this * o; }

  /// Value equality; flavor tags do not take part.
  friend bool operator==(const NNum& x, const NNum& y) {
    return x.f_.base == y.f_.base && x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend bool canonical_less(const NNum& x, const NNum& y) {
    if (!(x.b_ == y.b_)) return canonical_less(x.b_, y.b_);
    return canonical_less(x.a_, y.a_);
  }

 private:
  void check_flavor() const {
    if (f_.flavor == Flavor::Real && !b_.is_zero())
      fail(ErrorKind::FlavorViolation, "nonzero I-part in real field " + f_.tag());
    if (f_.flavor == Flavor::Pure && !a_.is_zero())
      fail(ErrorKind::FlavorViolation, "nonzero real part in " + f_.tag());
  }

  FieldDescriptor f_{};
  BaseElem a_{};
  BaseElem b_{};
};

inline NNum FieldDescriptor::zero() const { return NNum(*this, 0L, 0L); }
inline NNum FieldDescriptor::one() const {
  return flavor == Flavor::Pure ? NNum(*this, 0L, 1L) : NNum(*this, 1L, 0L);
}

inline BaseElem eval(const NNum& x, Slot s) { return x.at(s); }

/// Inverse of the evaluation split: the unique u + (v-u)I with slots (u, v).
inline NNum recombine(const BaseElem& u, const BaseElem& v, FieldDescriptor f) {
  if (f.flavor == Flavor::Real && !(u == v))
    fail(ErrorKind::FlavorViolation, "slots differ for a real field");
  if (f.flavor == Flavor::Pure && !u.is_zero())
    fail(ErrorKind::FlavorViolation, "slot 0 must vanish in " + f.tag());
  return NNum(f, u, v - u);
}

inline NNum recombine(const BaseElem& u, const BaseElem& v) {
  return recombine(u, v, FieldDescriptor::full(u.field()));
}

}  // namespace nfold
