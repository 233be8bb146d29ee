#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfold/base_matrix.hpp"
#include "nfold/npoly.hpp"

namespace nfold {

/// Dense matrix of neutrosophic scalars sharing one FieldDescriptor.
class NMatrix {
 public:
  NMatrix() = default;
  NMatrix(FieldDescriptor f, std::size_t rows, std::size_t cols)
      : f_(f), r_(rows), c_(cols), a_(rows * cols, f.zero()) {}
  /// Rows of (a, b) pairs meaning a + bI.
  NMatrix(FieldDescriptor f, const std::vector<std::vector<std::pair<long, long>>>& rows) : f_(f) {
    r_ = rows.size();
    c_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows) {
      if (row.size() != c_) fail(ErrorKind::ShapeMismatch, "ragged rows");
      for (auto [a, b] : row) a_.emplace_back(f, a, b);
    }
  }
  NMatrix(FieldDescriptor f, std::size_t rows, std::size_t cols, std::vector<NNum> entries)
      : f_(f), r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != r_ * c_) fail(ErrorKind::ShapeMismatch, "entry count");
    for (auto& e : a_) {
      if (!(e.base() == f_.base)) fail(ErrorKind::FieldMismatch, "entry outside " + f_.tag());
      e = e.with_flavor(f_.flavor);
    }
  }

  /// Identity of the ring's matrices: diagonal of one() (I for KI).
  static NMatrix identity(FieldDescriptor f, std::size_t n) {
    NMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  static NMatrix zero(FieldDescriptor f, std::size_t rows, std::size_t cols) { return NMatrix(f, rows, cols); }

  const FieldDescriptor& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  NNum& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const NNum& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<NNum>& entries() const { return a_; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Entrywise evaluation at a slot.
  BaseMatrix at(Slot s) const {
    BaseMatrix m(f_.base, r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m.at(i, j) = at(i, j).at(s);
    return m;
  }

  NMatrix transposed() const {
    NMatrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }
  NMatrix scaled(const NNum& k) const {
    FieldDescriptor f = f_.join(k.field());
    std::vector<NNum> e;
    for (const auto& x : a_) e.push_back(x * k);
    return NMatrix(f, r_, c_, std::move(e));
  }
  NMatrix with_flavor(Flavor fl) const { return NMatrix({f_.base, fl}, r_, c_, a_); }

  NMatrix operator-() const { return scaled(-f_.one()); }
  friend NMatrix operator+(const NMatrix& x, const NMatrix& y) {
    FieldDescriptor f = check_same_shape(x, y);
    std::vector<NNum> e;
    for (std::size_t k = 0; k < x.a_.size(); ++k) e.push_back(x.a_[k] + y.a_[k]);
    return NMatrix(f, x.r_, x.c_, std::move(e));
  }
  friend NMatrix operator-(const NMatrix& x, const NMatrix& y) {
    FieldDescriptor f = check_same_shape(x, y);
    std::vector<NNum> e;
    for (std::size_t k = 0; k < x.a_.size(); ++k) e.push_back(x.a_[k] - y.a_[k]);
    return NMatrix(f, x.r_, x.c_, std::move(e));
  }
  friend NMatrix operator*(const NMatrix& x, const NMatrix& y) {
    if (x.c_ != y.r_) fail(ErrorKind::ShapeMismatch, "product of incompatible shapes");
    FieldDescriptor f = x.f_.join(y.f_);
    NMatrix m(f, x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.c_; ++j) m.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return m;
  }
  friend std::vector<NNum> operator*(const NMatrix& x, const std::vector<NNum>& v) {
    if (x.c_ != v.size()) fail(ErrorKind::ShapeMismatch, "matrix-vector product");
    std::vector<NNum> out(x.r_, x.f_.zero());
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) out[i] = out[i] + x.at(i, k) * v[k];
    return out;
  }
  friend bool operator==(const NMatrix& x, const NMatrix& y) {
    return x.f_.base == y.f_.base && x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

 private:
  static FieldDescriptor check_same_shape(const NMatrix& x, const NMatrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) fail(ErrorKind::ShapeMismatch, "shapes differ");
    return x.f_.join(y.f_);
  }

  FieldDescriptor f_{};
  std::size_t r_ = 0, c_ = 0;
  std::vector<NNum> a_;
};

/// Entrywise recombination of two slot images.
inline NMatrix recombine(const BaseMatrix& m0, const BaseMatrix& m1, FieldDescriptor f) {
  if (m0.rows() != m1.rows() || m0.cols() != m1.cols()) fail(ErrorKind::ShapeMismatch, "slot images differ in shape");
  if (!(m0.field() == m1.field())) fail(ErrorKind::FieldMismatch, "slot images over different fields");
  NMatrix m(f, m0.rows(), m0.cols());
  for (std::size_t i = 0; i < m0.rows(); ++i)
    for (std::size_t j = 0; j < m0.cols(); ++j) m.at(i, j) = recombine(m0.at(i, j), m1.at(i, j), f);
  return m;
}

inline std::pair<BaseMatrix, BaseMatrix> split(const NMatrix& a) { return {a.at(Slot::At0), a.at(Slot::At1)}; }

/// Real matrix viewed inside a descriptor.
inline NMatrix lift(const BaseMatrix& m, FieldDescriptor f) {
  NMatrix out(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = NNum(f, m.at(i, j), BaseElem::zero(f.base));
  return out;
}

namespace detail {

/// Laplace expansion along rows with memoized column subsets: O(2^n n) ring
/// operations and no division, so it is valid over any commutative ring.
template <typename T, typename Entry>
T subset_determinant(std::size_t n, const T& zero, const T& one, Entry entry) {
  if (n == 0) return one;
  if (n > 20) fail(ErrorKind::InvalidArgument, "cofactor expansion limited to 20x20");
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  memo[0] = one;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcount(s));
    std::size_t row = k - 1;
    T acc = zero;
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const T& sub = *memo[s & ~(1u << j)];
      T term = entry(row, j) * sub;
      if ((row + static_cast<std::size_t>(pos)) % 2 == 0) acc = acc + term;
      else acc = acc - term;
      ++pos;
    }
    memo[s] = std::move(acc);
  }
  return *memo[(std::size_t{1} << n) - 1];
}

}  // namespace detail

inline NNum det(const NMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const FieldDescriptor& f = a.field();
  return detail::subset_determinant<NNum>(a.rows(), f.zero(), f.one(),
                                          [&](std::size_t i, std::size_t j) { return a.at(i, j); });
}

namespace detail {

/// Slot charpolys of the computed slots, by Hessenberg reduction.
inline std::array<BasePoly, 2> slot_charpolys(const NMatrix& a) {
  std::array<BasePoly, 2> out{BasePoly(a.field().base), BasePoly(a.field().base)};
  for (Slot s : a.field().active_slots()) out[slot_index(s)] = charpoly_hessenberg(a.at(s));
  return out;
}

}  // namespace detail

/// det(x*1 - A) by symbolic cofactor expansion, cross-checked against the
/// classical charpolys of both slot images.
inline NPoly charpoly(const NMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "charpoly of a non-square matrix");
  const FieldDescriptor& f = a.field();
  NPoly x = NPoly::x(f);
  NPoly cp = detail::subset_determinant<NPoly>(
      a.rows(), NPoly(f), NPoly::one(f), [&](std::size_t i, std::size_t j) {
        NPoly e = NPoly::constant(-a.at(i, j));
        return i == j ? x + e : e;
      });
  auto slots = detail::slot_charpolys(a);
  for (Slot s : f.active_slots())
    if (!(cp.at(s) == slots[slot_index(s)]))
      fail(ErrorKind::OracleMismatch, "charpoly disagrees with slot oracle", slot_index(s));
  return cp;
}

/// The charpoly computed only from slot images and recombined.
inline NPoly charpoly_by_slots(const NMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "charpoly of a non-square matrix");
  auto s = detail::slot_charpolys(a);
  if (a.field().flavor == Flavor::Real) s[1] = s[0];
  return recombine(s[0], s[1], a.field());
}

/// Inverse via slot inversion; Singular names the first slot that fails.
inline NMatrix inverse(const NMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const FieldDescriptor& f = a.field();
  std::size_t n = a.rows();
  std::array<BaseMatrix, 2> inv{BaseMatrix(f.base, n, n), BaseMatrix(f.base, n, n)};
  for (Slot s : f.active_slots()) {
    auto r = inverse(a.at(s));
    if (!r) fail(ErrorKind::Singular, "slot image is not invertible", slot_index(s));
    inv[slot_index(s)] = std::move(*r);
  }
  return recombine(inv[0], inv[1], f);
}

inline NMatrix eval(const NPoly& p, const NMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "polynomial of a non-square matrix");
  FieldDescriptor f = p.field().join(a.field());
  NMatrix r(f, a.rows(), a.cols());
  NMatrix id = NMatrix::identity(f, a.rows());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * a + id.scaled(*it);
  return r;
}

inline NMatrix power(const NMatrix& a, std::size_t k) {
  NMatrix r = NMatrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

/// True iff B = P^{-1} A P. When it holds the charpolys must agree too.
inline bool similarity_check(const NMatrix& a, const NMatrix& b, const NMatrix& p) {
  if (!a.is_square() || !b.is_square() || !p.is_square() || a.rows() != b.rows() || a.rows() != p.rows())
    fail(ErrorKind::ShapeMismatch, "similarity needs square matrices of one size");
  NMatrix pi = inverse(p);
  if (!(pi * a * p == b)) return false;
  if (!(charpoly(a) == charpoly(b))) fail(ErrorKind::OracleMismatch, "similar matrices with different charpolys");
  return true;
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal and
/// -c_0 ... -c_{k-1} in the last column.
inline NMatrix companion(const NPoly& p) {
  if (!p.is_monic() || p.degree() < 1) fail(ErrorKind::InvalidArgument, "companion needs a monic polynomial of degree >= 1");
  const FieldDescriptor& f = p.field();
  std::size_t k = static_cast<std::size_t>(p.degree());
  NMatrix m(f, k, k);
  for (std::size_t i = 1; i < k; ++i) m.at(i, i - 1) = f.one();
  for (std::size_t i = 0; i < k; ++i) m.at(i, k - 1) = -p.coeff(i);
  return m;
}

inline BaseMatrix companion(const BasePoly& p) {
  if (!p.is_monic() || p.degree() < 1) fail(ErrorKind::InvalidArgument, "companion needs a monic polynomial of degree >= 1");
  std::size_t k = static_cast<std::size_t>(p.degree());
  BaseMatrix m(p.field(), k, k);
  for (std::size_t i = 1; i < k; ++i) m.at(i, i - 1) = BaseElem::one(p.field());
  for (std::size_t i = 0; i < k; ++i) m.at(i, k - 1) = -p.coeff(i);
  return m;
}

}  // namespace nfold
