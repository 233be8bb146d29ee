#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfold/base_poly.hpp"

namespace nfold {

using BaseVector = std::vector<BaseElem>;

/// Dense matrix over a base field. Everything here is classical linear
/// algebra; the neutrosophic layer reduces to it slot by slot.
class BaseMatrix {
 public:
  BaseMatrix() = default;
  BaseMatrix(BaseField f, std::size_t rows, std::size_t cols)
      : f_(f), r_(rows), c_(cols), a_(rows * cols, BaseElem::zero(f)) {}
  BaseMatrix(BaseField f, const std::vector<std::vector<long>>& rows) : f_(f) {
    r_ = rows.size();
    c_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows) {
      if (row.size() != c_) fail(ErrorKind::ShapeMismatch, "ragged rows");
      for (long v : row) a_.emplace_back(f, v);
    }
  }

  static BaseMatrix identity(BaseField f, std::size_t n) {
    BaseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BaseElem::one(f);
    return m;
  }
  /// Columns given as vectors.
  static BaseMatrix from_columns(BaseField f, std::size_t rows, const std::vector<BaseVector>& cols) {
    BaseMatrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(ErrorKind::ShapeMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }
  static BaseMatrix from_rows(BaseField f, std::size_t cols, const std::vector<BaseVector>& rows) {
    BaseMatrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorKind::ShapeMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  BaseField field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  BaseElem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const BaseElem& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  BaseVector column(std::size_t j) const {
    BaseVector v;
    for (std::size_t i = 0; i < r_; ++i) v.push_back(at(i, j));
    return v;
  }
  BaseVector row(std::size_t i) const {
    return BaseVector(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
  }
  /// Row-major flattening.
  const std::vector<BaseElem>& entries() const { return a_; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  BaseMatrix transposed() const {
    BaseMatrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }
  BaseMatrix scaled(const BaseElem& k) const {
    BaseMatrix m = *this;
    for (auto& e : m.a_) e = e * k;
    return m;
  }

  friend BaseMatrix operator+(const BaseMatrix& x, const BaseMatrix& y) {
    check_same_shape(x, y);
    BaseMatrix m = x;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += y.a_[k];
    return m;
  }
  friend BaseMatrix operator-(const BaseMatrix& x, const BaseMatrix& y) {
    check_same_shape(x, y);
    BaseMatrix m = x;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= y.a_[k];
    return m;
  }
  friend BaseMatrix operator*(const BaseMatrix& x, const BaseMatrix& y) {
    if (x.c_ != y.r_) fail(ErrorKind::ShapeMismatch, "product of incompatible shapes");
    if (!(x.f_ == y.f_)) fail(ErrorKind::FieldMismatch, "matrix product");
    BaseMatrix m(x.f_, x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const BaseElem& a = x.at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < y.c_; ++j) m.at(i, j) += a * y.at(k, j);
      }
    return m;
  }
  friend BaseVector operator*(const BaseMatrix& x, const BaseVector& v) {
    if (x.c_ != v.size()) fail(ErrorKind::ShapeMismatch, "matrix-vector product");
    BaseVector out(x.r_, BaseElem::zero(x.f_));
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) out[i] += x.at(i, k) * v[k];
    return out;
  }
  friend bool operator==(const BaseMatrix& x, const BaseMatrix& y) {
    return x.f_ == y.f_ && x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

 private:
  static void check_same_shape(const BaseMatrix& x, const BaseMatrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) fail(ErrorKind::ShapeMismatch, "shapes differ");
    if (!(x.f_ == y.f_)) fail(ErrorKind::FieldMismatch, "matrix fields differ");
  }

  BaseField f_{};
  std::size_t r_ = 0, c_ = 0;
  std::vector<BaseElem> a_;
};

inline bool is_zero_vector(const BaseVector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

struct RowEchelon {
  BaseMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with leftmost pivots.
inline RowEchelon rref(BaseMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    BaseElem inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      BaseElem t = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= t * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const BaseMatrix& m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}: one vector per free column (ascending), with that
/// coordinate set to 1.
inline std::vector<BaseVector> nullspace(const BaseMatrix& m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<BaseVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BaseVector v(m.cols(), BaseElem::zero(m.field()));
    v[free] = BaseElem::one(m.field());
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

/// Some x with m x = b, if one exists.
inline std::optional<BaseVector> solve(const BaseMatrix& m, const BaseVector& b) {
  BaseMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [r, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  BaseVector x(m.cols(), BaseElem::zero(m.field()));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at(k, m.cols());
  return x;
}

inline std::optional<BaseMatrix> inverse(const BaseMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquare, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  BaseMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = BaseElem::one(m.field());
  }
  auto [r, piv] = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  BaseMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

/// Determinant by Gaussian elimination.
inline BaseElem det(BaseMatrix m) {
  if (!m.is_square()) fail(ErrorKind::NonSquare, "determinant of a non-square matrix");
  BaseField f = m.field();
  std::size_t n = m.rows();
  BaseElem d = BaseElem::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m.at(sel, col).is_zero()) ++sel;
    if (sel == n) return BaseElem::zero(f);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    BaseElem inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      BaseElem t = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= t * m.at(col, j);
    }
  }
  return d;
}

/// Characteristic polynomial det(xI - A) via reduction to Hessenberg form.
inline BasePoly charpoly_hessenberg(BaseMatrix h) {
  if (!h.is_square()) fail(ErrorKind::NonSquare, "charpoly of a non-square matrix");
  BaseField f = h.field();
  std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(i, j), h.at(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(j, i), h.at(j, m));
    }
    BaseElem t = h.at(m, m - 1).inverse();
    for (std::size_t r = m + 1; r < n; ++r) {
      BaseElem u = h.at(r, m - 1) * t;
      if (u.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) -= u * h.at(m, j);
      for (std::size_t j = 0; j < n; ++j) h.at(j, m) += u * h.at(j, r);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{i,k} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<BasePoly> p;
  p.push_back(BasePoly::constant(BaseElem::one(f)));
  for (std::size_t k = 0; k < n; ++k) {
    BasePoly next = (BasePoly::x(f) - BasePoly::constant(h.at(k, k))) * p[k];
    BaseElem prod = BaseElem::one(f);
    for (std::size_t i = k; i-- > 0;) {
      prod = prod * h.at(i + 1, i);
      if (prod.is_zero()) break;
      next = next - (p[i]).scaled(prod * h.at(i, k));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

/// f(A) by Horner's rule.
inline BaseMatrix eval(const BasePoly& f, const BaseMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "polynomial of a non-square matrix");
  BaseMatrix r(a.field(), a.rows(), a.cols());
  BaseMatrix id = BaseMatrix::identity(a.field(), a.rows());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) r = r * a + id.scaled(*it);
  return r;
}

inline BaseMatrix power(const BaseMatrix& a, std::size_t k) {
  BaseMatrix r = BaseMatrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

namespace detail {

/// First linear dependency in the sequence v_0, v_1, ... produced by `next`;
/// returns the monic c with sum c_i v_i = 0 of least degree.
template <typename Next>
BasePoly krylov_relation(BaseField f, BaseVector start, std::size_t max_len, Next next) {
  std::vector<BaseVector> seq{std::move(start)};
  std::size_t dim = seq[0].size();
  for (std::size_t k = 0; k <= max_len; ++k) {
    BaseMatrix m = BaseMatrix::from_columns(f, dim, seq);
    auto ns = nullspace(m);
    if (!ns.empty()) {
      BaseVector c = ns.front();
      // The dependency is unique up to scale and involves the last vector.
      BaseElem li = c.back().inverse();
      for (auto& e : c) e = e * li;
      return BasePoly(f, c);
    }
    seq.push_back(next(seq.back()));
  }
  fail(ErrorKind::InvalidArgument, "no Krylov relation within the expected length");
}

}  // namespace detail

/// Minimal polynomial: first dependency among I, A, A^2, ... as vectors.
inline BasePoly minpoly(const BaseMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "minimal polynomial of a non-square matrix");
  BaseField f = a.field();
  std::size_t n = a.rows();
  BaseMatrix cur = BaseMatrix::identity(f, n);
  auto as_vec = [](const BaseMatrix& m) { return m.entries(); };
  auto unflatten = [f, n](const BaseVector& v) {
    BaseMatrix m(f, n, n);
    for (std::size_t k = 0; k < v.size(); ++k) m.at(k / n, k % n) = v[k];
    return m;
  };
  return detail::krylov_relation(f, as_vec(cur), n,
                                 [&](const BaseVector& v) { return (unflatten(v) * a).entries(); });
}

/// Monic generator of {g : g(A) v = 0}.
inline BasePoly vector_annihilator(const BaseMatrix& a, const BaseVector& v) {
  if (is_zero_vector(v)) fail(ErrorKind::ZeroVector, "annihilator of the zero vector");
  return detail::krylov_relation(a.field(), v, a.rows(), [&](const BaseVector& w) { return a * w; });
}

/// Column space membership of v in span(cols).
inline bool in_span(BaseField f, const std::vector<BaseVector>& cols, const BaseVector& v) {
  if (cols.empty()) return is_zero_vector(v);
  return solve(BaseMatrix::from_columns(f, v.size(), cols), v).has_value();
}

}  // namespace nfold
