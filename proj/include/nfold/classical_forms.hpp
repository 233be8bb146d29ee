#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nfold/factor.hpp"
#include "nfold/nmatrix.hpp"

// Canonical forms over a genuine field. The neutrosophic layer runs these on
// each slot image and recombines.

namespace nfold::classical {

/// Invariant factors of A (non-constant, monic), largest first, so that each
/// factor divides the one before it. Computed from the Smith form of xI - A.
inline std::vector<BasePoly> invariant_factors(const BaseMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "invariant factors of a non-square matrix");
  BaseField f = a.field();
  std::size_t n = a.rows();
  std::vector<std::vector<BasePoly>> m(n, std::vector<BasePoly>(n, BasePoly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? BasePoly::x(f) : BasePoly(f)) - BasePoly::constant(a.at(i, j));
  std::vector<BasePoly> diag;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].is_zero() && (bi == n || m[i][j].degree() < m[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;  // remaining block is zero; cannot happen for xI - A
      std::swap(m[k], m[bi]);
      for (auto& row : m) std::swap(row[k], row[bj]);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        auto [q, r] = divmod(m[i][k], m[k][k]);
        if (q.is_zero()) continue;
        for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - q * m[k][j];
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [q, r] = divmod(m[k][j], m[k][k]);
        if (q.is_zero()) continue;
        for (std::size_t i = k; i < n; ++i) m[i][j] = m[i][j] - q * m[i][k];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      bool row_clear = true;
      for (std::size_t i = k + 1; i < n && row_clear; ++i) row_clear = m[i][k].is_zero();
      for (std::size_t j = k + 1; j < n && row_clear; ++j) row_clear = m[k][j].is_zero();
      if (!row_clear) continue;
      // Pivot must divide the rest of the block.
      std::optional<std::size_t> bad;
      for (std::size_t i = k + 1; i < n && !bad; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divides(m[k][k], m[i][j])) {
            bad = i;
            break;
          }
      if (!bad) break;
      for (std::size_t j = k; j < n; ++j) m[k][j] = m[k][j] + m[*bad][j];
    }
    diag.push_back(m[k][k].monic());
  }
  std::vector<BasePoly> out;
  for (auto it = diag.rbegin(); it != diag.rend(); ++it)
    if (it->degree() > 0) out.push_back(*it);
  std::sort(out.begin(), out.end(), [](const BasePoly& x, const BasePoly& y) { return x.degree() > y.degree(); });
  return out;
}

inline BaseMatrix block_diagonal(BaseField f, const std::vector<BaseMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  BaseMatrix m(f, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return m;
}

inline BaseMatrix rational_form(const std::vector<BasePoly>& factors, BaseField f) {
  std::vector<BaseMatrix> blocks;
  for (const auto& p : factors) blocks.push_back(companion(p));
  return block_diagonal(f, blocks);
}

/// Some invertible P with A P = P R, if A and R are similar. Solves the
/// linear system for X and searches the solution space for a unit:
/// exhaustively when it has at most 4096 elements, else by seeded sampling.
inline std::optional<BaseMatrix> similarity_transform(const BaseMatrix& a, const BaseMatrix& r) {
  BaseField f = a.field();
  std::size_t n = a.rows();
  std::size_t nn = n * n;
  // vec(X) column-major: X(k, l) -> k + l n.  Equation (i, j): (AX - XR)_ij.
  BaseMatrix sys(f, nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t eq = i + j * n;
      for (std::size_t k = 0; k < n; ++k) {
        sys.at(eq, k + j * n) += a.at(i, k);
        sys.at(eq, i + k * n) -= r.at(k, j);
      }
    }
  auto basis = nullspace(sys);
  if (basis.empty()) return std::nullopt;
  auto to_matrix = [&](const std::vector<BaseElem>& coef) {
    BaseMatrix x(f, n, n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coef[b].is_zero()) continue;
      for (std::size_t v = 0; v < nn; ++v) x.at(v % n, v / n) += coef[b] * basis[b][v];
    }
    return x;
  };
  std::size_t d = basis.size();
  std::vector<BaseElem> coef(d, BaseElem::one(f));
  BaseMatrix x = to_matrix(coef);
  if (!det(x).is_zero()) return x;
  if (f.is_prime()) {
    double space = 1;
    for (std::size_t k = 0; k < d && space <= 4096; ++k) space *= static_cast<double>(f.modulus());
    if (space <= 4096) {
      std::vector<std::int64_t> digits(d, 0);
      while (true) {
        std::size_t k = 0;
        while (k < d && ++digits[k] == f.modulus()) digits[k++] = 0;
        if (k == d) break;
        for (std::size_t t = 0; t < d; ++t) coef[t] = BaseElem(f, static_cast<long>(digits[t]));
        x = to_matrix(coef);
        if (!det(x).is_zero()) return x;
      }
      return std::nullopt;
    }
  }
  std::mt19937_64 rng(0x5eedULL + n);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    for (auto& c : coef) {
      long v = f.is_prime() ? static_cast<long>(rng() % static_cast<std::uint64_t>(f.modulus()))
                            : static_cast<long>(rng() % 11) - 5;
      c = BaseElem(f, v);
    }
    x = to_matrix(coef);
    if (!det(x).is_zero()) return x;
  }
  return std::nullopt;
}

struct ClassicalForm {
  BaseMatrix form;
  BaseMatrix transform;  // P with P^{-1} A P = form
};

inline ClassicalForm verified_form(const BaseMatrix& a, BaseMatrix form) {
  auto p = similarity_transform(a, form);
  if (!p) fail(ErrorKind::OracleMismatch, "no similarity transform found");
  auto pi = inverse(*p);
  if (!pi || !(*pi * a * *p == form)) fail(ErrorKind::OracleMismatch, "similarity check failed");
  return {std::move(form), std::move(*p)};
}

struct JordanBlock {
  BaseElem eigenvalue;
  std::size_t size = 0;
};

/// Elementary block with the eigenvalue on the diagonal and ones just below.
inline BaseMatrix jordan_block(const BaseElem& lambda, std::size_t size) {
  BaseMatrix m(lambda.field(), size, size);
  for (std::size_t i = 0; i < size; ++i) {
    m.at(i, i) = lambda;
    if (i > 0) m.at(i, i - 1) = BaseElem::one(lambda.field());
  }
  return m;
}

/// Jordan structure: eigenvalues ascending, block sizes decreasing per
/// eigenvalue. DoesNotSplit if the charpoly has a nonlinear factor.
inline std::vector<JordanBlock> jordan_structure(const BaseMatrix& a) {
  BasePoly cp = charpoly_hessenberg(a);
  Factorization fz = factor(cp);
  if (!fz.splits()) {
    if (!fz.complete) fail(ErrorKind::UndecidableOverQ, "root search bound reached");
    fail(ErrorKind::DoesNotSplit, "characteristic polynomial has a nonlinear factor");
  }
  std::size_t n = a.rows();
  std::vector<PolyFactor> linear = fz.factors;
  std::sort(linear.begin(), linear.end(), [](const PolyFactor& x, const PolyFactor& y) {
    return canonical_less(-x.factor.coeff(0), -y.factor.coeff(0));
  });
  std::vector<JordanBlock> out;
  for (const auto& pf : linear) {
    BaseElem lambda = -pf.factor.coeff(0);
    BaseMatrix shifted = a - BaseMatrix::identity(a.field(), n).scaled(lambda);
    std::vector<std::size_t> ranks{n};
    BaseMatrix pw = BaseMatrix::identity(a.field(), n);
    for (std::size_t k = 1; k <= pf.multiplicity; ++k) {
      pw = pw * shifted;
      ranks.push_back(rank(pw));
    }
    // Blocks of size >= k: ranks[k-1] - ranks[k].
    std::vector<std::size_t> at_least(pf.multiplicity + 2, 0);
    for (std::size_t k = 1; k <= pf.multiplicity; ++k) at_least[k] = ranks[k - 1] - ranks[k];
    for (std::size_t k = pf.multiplicity; k >= 1; --k) {
      std::size_t exact = at_least[k] - at_least[k + 1];
      for (std::size_t t = 0; t < exact; ++t) out.push_back({lambda, k});
    }
  }
  return out;
}

inline BaseMatrix jordan_matrix(BaseField f, const std::vector<JordanBlock>& blocks) {
  std::vector<BaseMatrix> ms;
  for (const auto& b : blocks) ms.push_back(jordan_block(b.eigenvalue, b.size));
  return block_diagonal(f, ms);
}

struct PrimaryComponent {
  BasePoly factor;  // monic irreducible
  std::size_t multiplicity = 0;
  BaseMatrix projection;
  BasePoly projector;  // projection = projector(A)
};

/// Primary decomposition from the factored minimal polynomial. Over Q the
/// minimal polynomial must split into rational linear factors.
inline std::vector<PrimaryComponent> primary_decomposition(const BaseMatrix& a) {
  BasePoly m = minpoly(a);
  Factorization fz = factor(m);
  if (!fz.remainder.is_one() || !fz.complete)
    fail(ErrorKind::UnsupportedField, "minimal polynomial has factors without rational roots over Q");
  std::vector<PrimaryComponent> out;
  for (const auto& pf : fz.factors) {
    BasePoly q = pow(pf.factor, pf.multiplicity);
    BasePoly rest = m / q;
    ExtendedGcd e = xgcd(rest, q);  // s rest + t q = 1
    BasePoly h = (e.s * rest) % m;
    out.push_back({pf.factor, pf.multiplicity, eval(h, a), h});
  }
  return out;
}

/// Monic g of least degree with g(A) v in span(w).
inline BasePoly conductor(const BaseMatrix& a, const BaseVector& v, const std::vector<BaseVector>& w) {
  BaseField f = a.field();
  std::vector<BaseVector> cols = w;
  std::size_t base = cols.size();
  BaseVector cur = v;
  for (std::size_t k = 0; k <= a.rows(); ++k) {
    if (cols.empty() ? is_zero_vector(cur) : in_span(f, cols, cur)) {
      if (k == 0) return BasePoly::constant(BaseElem::one(f));
      auto sol = solve(BaseMatrix::from_columns(f, v.size(), cols), cur);
      std::vector<BaseElem> c(k + 1, BaseElem::zero(f));
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*sol)[base + i];
      c[k] = BaseElem::one(f);
      return BasePoly(f, std::move(c));
    }
    cols.push_back(cur);
    cur = a * cur;
  }
  fail(ErrorKind::OracleMismatch, "conductor search exceeded the dimension");
}

}  // namespace nfold::classical
