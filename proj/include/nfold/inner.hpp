#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "nfold/nspace.hpp"

// Standard n-inner product on strong spaces: per component, the sum of
// entrywise products (tuples, matrices and coefficient lists alike).

namespace nfold {

struct InnerSpaceContext {
  NFoldSpace space;
  bool orderable = true;  // every component over Q

  static InnerSpaceContext make(NFoldSpace v) {
    bool ord = true;
    for (const auto& c : v.components) {
      if (c.regime() != Regime::R2)
        fail(ErrorKind::UnsupportedRegime, "inner products need neutrosophic scalars, not " + c.scalars.tag());
      ord = ord && c.scalars.base.is_rational();
    }
    return {std::move(v), ord};
  }
};

/// Evaluation order: x >= 0 iff both slot values are >= 0. Q only.
inline bool nonnegative(const NNum& x) {
  if (!x.base().is_rational()) fail(ErrorKind::UnorderedField, x.field().tag() + " has no order");
  return x.at(Slot::At0).sign() >= 0 && x.at(Slot::At1).sign() >= 0;
}

inline bool positive(const NNum& x) {
  if (!x.base().is_rational()) fail(ErrorKind::UnorderedField, x.field().tag() + " has no order");
  return x.at(Slot::At0).sign() > 0 && x.at(Slot::At1).sign() > 0;
}

namespace detail {

inline NNum part_dot(const Component& c, const NVector& u, const NVector& v) {
  FieldDescriptor ring = c.coordinate_ring();
  NVector x = coordinates(c, u), y = coordinates(c, v);
  NNum acc = ring.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

inline NVector part_axpy(const NNum& k, const NVector& x, const NVector& y) {
  NVector out = y;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += k.with_flavor(Flavor::Full) * x[i].with_flavor(Flavor::Full);
  return out;
}

/// Coefficient (b/a)/|a|^2, raising NonInvertibleNorm for a non-unit norm.
inline NNum fourier(const Component& c, const NVector& b, const NVector& a, std::size_t index) {
  NNum n = part_dot(c, a, a);
  if (!n.is_unit()) {
    int slot = n.at(Slot::At0).is_zero() && c.coordinate_ring().flavor != Flavor::Pure ? 0 : 1;
    fail(ErrorKind::NonInvertibleNorm, "norm squared " + n.real().to_string() + "," + n.indet().to_string() +
                                           " is not a unit", slot, index);
  }
  return part_dot(c, b, a) * n.inverse();
}

inline NVector fix_flavor(const Component& c, NVector x) {
  for (auto& e : x) e = e.with_flavor(c.entries.flavor);
  return x;
}

inline bool same_span(const FieldDescriptor& ring, std::size_t len, const std::vector<NVector>& a,
                      const std::vector<NVector>& b) {
  for (Slot s : ring.active_slots()) {
    std::vector<BaseVector> as, bs;
    for (const auto& x : a) as.push_back(slot_vector(x, s));
    for (const auto& x : b) bs.push_back(slot_vector(x, s));
    auto rk = [&](const std::vector<BaseVector>& vs) {
      return vs.empty() ? std::size_t{0} : rank(BaseMatrix::from_columns(ring.base, len, vs));
    };
    std::vector<BaseVector> both = as;
    both.insert(both.end(), bs.begin(), bs.end());
    if (rk(as) != rk(both) || rk(bs) != rk(both)) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<NNum> dot(const InnerSpaceContext& ctx, const NFoldVector& u, const NFoldVector& v) {
  check_vector(ctx.space, u);
  check_vector(ctx.space, v);
  std::vector<NNum> out;
  for (std::size_t i = 0; i < ctx.space.size(); ++i)
    out.push_back(detail::part_dot(ctx.space.components[i], u.parts[i], v.parts[i]));
  return out;
}

inline std::vector<NNum> norm_sq(const InnerSpaceContext& ctx, const NFoldVector& v) { return dot(ctx, v, v); }

inline bool orthogonal(const InnerSpaceContext& ctx, const NFoldVector& u, const NFoldVector& v) {
  auto d = dot(ctx, u, v);
  return std::all_of(d.begin(), d.end(), [](const NNum& x) { return x.is_zero(); });
}

/// Per component: does (v/v) > 0 hold under the evaluation order?
inline std::vector<bool> positivity(const InnerSpaceContext& ctx, const NFoldVector& v) {
  if (!ctx.orderable) fail(ErrorKind::UnorderedField, "positivity needs an ordered base field");
  std::vector<bool> out;
  for (const auto& n : norm_sq(ctx, v)) out.push_back(positive(n));
  return out;
}

inline std::vector<NFoldVector> gram_schmidt(const InnerSpaceContext& ctx, const std::vector<NFoldVector>& betas) {
  NFoldIndependence ind = independent(ctx.space, betas);
  if (!ind.independent) {
    std::size_t comp = 0;
    while (comp < ind.components.size() && ind.components[comp].independent) ++comp;
    fail(ErrorKind::DependentInput, "input vectors are dependent in component " + std::to_string(comp + 1), {}, comp);
  }
  std::vector<NFoldVector> alphas;
  for (std::size_t m = 0; m < betas.size(); ++m) {
    NFoldVector a = betas[m];
    for (std::size_t i = 0; i < ctx.space.size(); ++i) {
      const Component& c = ctx.space.components[i];
      NVector x = a.parts[i];
      for (std::size_t k = 0; k < alphas.size(); ++k)
        x = detail::part_axpy(-detail::fourier(c, betas[m].parts[i], alphas[k].parts[i], k), alphas[k].parts[i], x);
      a.parts[i] = detail::fix_flavor(c, x);
    }
    alphas.push_back(a);
  }
  for (std::size_t i = 0; i < ctx.space.size(); ++i) {
    const Component& c = ctx.space.components[i];
    std::vector<NVector> pa, pb;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j)
        detail::verify(detail::part_dot(c, alphas[k].parts[i], alphas[j].parts[i]).is_zero(), "pairwise orthogonality");
      pa.push_back(coordinates(c, alphas[k].parts[i]));
      pb.push_back(coordinates(c, betas[k].parts[i]));
      detail::verify(detail::same_span(c.coordinate_ring(), c.coordinates(), pa, pb), "prefix spans");
    }
  }
  return alphas;
}

/// Sum of (b/a_k)/|a_k|^2 a_k over an orthogonal set.
inline NFoldVector best_approx(const InnerSpaceContext& ctx, const NFoldVector& beta,
                               const std::vector<NFoldVector>& basis) {
  check_vector(ctx.space, beta);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (!orthogonal(ctx, basis[k], basis[j]))
        fail(ErrorKind::NotOrthogonal, "vectors " + std::to_string(j + 1) + " and " + std::to_string(k + 1), {}, k);
  auto project = [&](const std::vector<std::size_t>& order) {
    NFoldVector a = zero_vector(ctx.space);
    for (std::size_t i = 0; i < ctx.space.size(); ++i) {
      const Component& c = ctx.space.components[i];
      NVector x = a.parts[i];
      for (std::size_t k : order)
        x = detail::part_axpy(detail::fourier(c, beta.parts[i], basis[k].parts[i], k), basis[k].parts[i], x);
      a.parts[i] = detail::fix_flavor(c, x);
    }
    return a;
  };
  std::vector<std::size_t> order(basis.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  NFoldVector alpha = project(order);
  std::reverse(order.begin(), order.end());
  detail::verify(project(order) == alpha, "order independence");
  NFoldVector residual = beta;
  for (std::size_t i = 0; i < ctx.space.size(); ++i)
    residual.parts[i] = detail::fix_flavor(ctx.space.components[i],
                                           detail::part_axpy(-ctx.space.components[i].coordinate_ring().one(),
                                                             alpha.parts[i], beta.parts[i]));
  for (const auto& b : basis) detail::verify(orthogonal(ctx, residual, b), "residual orthogonality");
  return alpha;
}

/// Generators of S-perp in each component, solved per slot.
inline std::vector<std::vector<NVector>> orth_complement(const InnerSpaceContext& ctx, const std::vector<NFoldVector>& s) {
  for (const auto& x : s) check_vector(ctx.space, x);
  std::vector<std::vector<NVector>> out;
  for (std::size_t i = 0; i < ctx.space.size(); ++i) {
    const Component& c = ctx.space.components[i];
    FieldDescriptor ring = c.coordinate_ring();
    std::size_t n = c.coordinates();
    std::vector<NVector> gens;
    if (s.empty()) {
      for (std::size_t k = 0; k < n; ++k) {
        NVector e(n, ring.zero());
        e[k] = ring.one();
        gens.push_back(from_coordinates(c, e));
      }
    } else {
      NMatrix rows(ring, s.size(), n);
      for (std::size_t r = 0; r < s.size(); ++r) {
        NVector x = coordinates(c, s[r].parts[i]);
        for (std::size_t k = 0; k < n; ++k) rows.at(r, k) = x[k];
      }
      for (const auto& k : ring_kernel(rows).generators) {
        NVector g = from_coordinates(c, k);
        for (const auto& x : s) detail::verify(detail::part_dot(c, x.parts[i], g).is_zero(), "complement orthogonality");
        gens.push_back(g);
      }
    }
    out.push_back(std::move(gens));
  }
  return out;
}

struct SplitCheck {
  bool holds = true;
  std::vector<NNum> gram_det;            // per component, recombined from the slot Gram determinants
  std::optional<std::size_t> component;  // first failing component
  std::optional<NFoldVector> witness;    // nonzero, in W and orthogonal to W in the failing slot
};

/// V = W + W-perp as a direct sum. In each slot the Gram matrix of a basis of
/// W's slot image must be nonsingular; an empty slot image counts as 1.
inline SplitCheck split_check(const InnerSpaceContext& ctx, const std::vector<NFoldVector>& w) {
  for (const auto& x : w) check_vector(ctx.space, x);
  SplitCheck out;
  for (std::size_t i = 0; i < ctx.space.size(); ++i) {
    const Component& c = ctx.space.components[i];
    FieldDescriptor ring = c.coordinate_ring();
    std::size_t n = c.coordinates();
    std::array<BaseElem, 2> dets{BaseElem::one(ring.base), BaseElem::one(ring.base)};
    for (Slot sl : ring.active_slots()) {
      std::vector<BaseVector> img;
      for (const auto& x : w) img.push_back(slot_vector(coordinates(c, x.parts[i]), sl));
      std::vector<BaseVector> basis;
      for (const auto& v : img)
        if (!is_zero_vector(v) && (basis.empty() || !in_span(ring.base, basis, v))) basis.push_back(v);
      std::size_t k = basis.size();
      if (k == 0) continue;
      BaseMatrix g(ring.base, k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t t = 0; t < n; ++t) g.at(r, s) += basis[r][t] * basis[s][t];
      dets[slot_index(sl)] = det(g);
      if (!dets[slot_index(sl)].is_zero() || !out.holds) continue;
      out.holds = false;
      out.component = i;
      // Kernel of the Gram matrix: a nonzero vector of W orthogonal to W.
      BaseVector comb(n, BaseElem::zero(ring.base)), zero = comb;
      BaseVector cvec = nullspace(g).front();
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t t = 0; t < n; ++t) comb[t] += cvec[r] * basis[r][t];
      NVector x = ring.flavor == Flavor::Real ? recombine(comb, comb, ring)
                  : sl == Slot::At0          ? recombine(comb, zero, ring)
                                             : recombine(zero, comb, ring);
      NFoldVector wv = zero_vector(ctx.space);
      wv.parts[i] = from_coordinates(c, x);
      out.witness = wv;
    }
    if (ring.flavor == Flavor::Real) dets[1] = dets[0];
    if (ring.flavor == Flavor::Pure) dets[0] = BaseElem::zero(ring.base);
    out.gram_det.push_back(recombine(dets[0], dets[1], ring));
  }
  SubspaceDesc ws{{}, {}}, perp{orth_complement(ctx, w), {}};
  for (std::size_t i = 0; i < ctx.space.size(); ++i) {
    std::vector<NVector> gi;
    for (const auto& x : w) gi.push_back(x.parts[i]);
    ws.gens.push_back(gi);
  }
  DirectSumResult ds = direct_sum_check(ctx.space, {ws, perp});
  detail::verify(ds.direct == out.holds, "Gram criterion against the direct sum check");
  if (out.holds) detail::verify(!ds.projections.empty(), "W + W-perp spans V");
  return out;
}

struct BesselResult {
  std::vector<NNum> lhs;
  std::vector<NNum> rhs;
  bool holds = true;
  bool equality = false;
};

inline BesselResult bessel_check(const InnerSpaceContext& ctx, const NFoldVector& beta,
                                 const std::vector<NFoldVector>& set) {
  if (!ctx.orderable) fail(ErrorKind::UnorderedField, "Bessel's inequality needs an ordered base field");
  check_vector(ctx.space, beta);
  BesselResult out;
  for (std::size_t i = 0; i < ctx.space.size(); ++i) {
    const Component& c = ctx.space.components[i];
    NNum lhs = c.coordinate_ring().zero();
    for (std::size_t k = 0; k < set.size(); ++k) {
      NNum f = detail::fourier(c, beta.parts[i], set[k].parts[i], k);
      lhs += f * detail::part_dot(c, beta.parts[i], set[k].parts[i]);  // (b/a)^2 / |a|^2
    }
    NNum rhs = detail::part_dot(c, beta.parts[i], beta.parts[i]);
    out.holds = out.holds && nonnegative(rhs - lhs);
    out.lhs.push_back(lhs);
    out.rhs.push_back(rhs);
  }
  out.equality = best_approx(ctx, beta, set) == beta;
  return out;
}

}  // namespace nfold
