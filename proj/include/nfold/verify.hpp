#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nfold/inner.hpp"
#include "nfold/random.hpp"
#include "nfold/text.hpp"

// Seeded property suites. Trial t draws from its own stream seeded by
// (seed, t), so results do not depend on scheduling.

namespace nfold::verify {

struct TrialOutcome {
  bool pass = true;
  bool expected_error = false;  // planted failure reported as designed
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::string property;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<std::string> fields;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t expected_errors = 0;
  std::vector<std::string> notes;  // exhaustive sweeps and the like
  std::optional<std::string> first_counterexample;

  bool ok() const { return failed == 0; }

  std::string text() const {
    std::ostringstream os;
    os << "suite " << suite << " seed=" << seed << " trials=" << trials << "\n";
    os << "property: " << property << "\n";
    os << "fields:";
    for (const auto& f : fields) os << " " << f;
    os << "\n";
    for (const auto& n : notes) os << n << "\n";
    os << "pass=" << passed << " fail=" << failed << " expected-errors=" << expected_errors << "\n";
    if (first_counterexample) os << "counterexample: " << *first_counterexample << "\n";
    os << (ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

namespace detail {

/// Collects the first failed check of a trial.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.counterexample = what;
    }
  }
  void expected() { out_.expected_error = true; }
  TrialOutcome done() { return out_; }

 private:
  TrialOutcome out_;
};

using Trial = std::function<TrialOutcome(rnd::Rng&, std::size_t, FieldDescriptor)>;

inline std::vector<std::string> tags(const std::vector<FieldDescriptor>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.tag());
  return out;
}

inline std::string show(const std::vector<NNum>& v) { return to_string(v); }

// ------------------------------------------------------------------ suites

inline TrialOutcome ring_axioms(rnd::Rng& rng, std::size_t, FieldDescriptor f) {
  Checker c;
  NNum x = rnd::scalar(rng, f), y = rnd::scalar(rng, f), z = rnd::scalar(rng, f);
  std::string ctx = " at x=" + scalar_literal(x) + " y=" + scalar_literal(y) + " z=" + scalar_literal(z);
  c.check((x + y) + z == x + (y + z), "additive associativity" + ctx);
  c.check((x * y) * z == x * (y * z), "multiplicative associativity" + ctx);
  c.check(x + y == y + x && x * y == y * x, "commutativity" + ctx);
  c.check(x * (y + z) == x * y + x * z, "distributivity" + ctx);
  c.check(x + f.zero() == x && x * f.one() == x && x + (-x) == f.zero(), "identities" + ctx);
  NNum i = NNum::indeterminate(f);
  c.check(i * i == i, "I*I = I");
  if (x.is_unit()) c.check(x * x.inverse() == f.one(), "inverse" + ctx);
  return c.done();
}

/// All triples of a small N(Z_p); a summary line for the report.
inline std::string ring_axioms_exhaustive(FieldDescriptor f) {
  std::vector<NNum> all;
  long p = f.base.modulus();
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) all.push_back(NNum(f, a, b));
  std::size_t bad = 0, triples = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) {
        ++triples;
        bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * y == y * x &&
                  x * (y + z) == x * y + x * z;
        if (!ok) ++bad;
      }
  return "exhaustive " + f.tag() + ": " + std::to_string(all.size()) + " elements, " + std::to_string(triples) +
         " triples, " + (bad == 0 ? std::string("PASS") : std::to_string(bad) + " FAIL");
}

inline TrialOutcome split_commutation(rnd::Rng& rng, std::size_t, FieldDescriptor f) {
  Checker c;
  NNum x = rnd::scalar(rng, f), y = rnd::scalar(rng, f);
  for (Slot s : kSlots) {
    std::string at = " slot=" + std::to_string(slot_index(s));
    c.check((x + y).at(s) == x.at(s) + y.at(s), "scalar sum" + at);
    c.check((x * y).at(s) == x.at(s) * y.at(s), "scalar product" + at);
    if (x.is_unit()) c.check(x.inverse().at(s) == x.at(s).inverse(), "scalar inverse" + at);
  }
  NPoly p = rnd::poly(rng, f, rnd::below(rng, 4)), q = rnd::monic(rng, f, 1 + rnd::below(rng, 2));
  auto [quo, rem] = divmod(p, q);
  for (Slot s : kSlots) {
    std::string at = " slot=" + std::to_string(slot_index(s)) + " p=" + to_string(p) + " q=" + to_string(q);
    c.check((p * q).at(s) == p.at(s) * q.at(s), "poly product" + at);
    c.check((p + q).at(s) == p.at(s) + q.at(s), "poly sum" + at);
    auto [q0, r0] = divmod(p.at(s), q.at(s));
    c.check(quo.at(s) == q0 && rem.at(s) == r0, "poly division" + at);
  }
  std::size_t n = 1 + rnd::below(rng, 3);
  NMatrix a = rnd::matrix(rng, f, n, n);
  NNum d = det(a);
  NPoly cp = charpoly(a);
  AnnihilatorResult mp = minpoly(a);
  for (Slot s : kSlots) {
    std::string at = " slot=" + std::to_string(slot_index(s)) + " A=" + to_string(a);
    BaseMatrix as = a.at(s);
    c.check(d.at(s) == det(as), "det" + at);
    c.check(cp.at(s) == charpoly_hessenberg(as), "charpoly" + at);
    c.check(mp.slot_minpolys[slot_index(s)] == minpoly(as), "minpoly" + at);
    if (mp.principal) c.check(mp.polynomial.at(s) == minpoly(as), "principal minpoly" + at);
    if (d.is_unit()) c.check(inverse(a).at(s) == *inverse(as), "inverse" + at);
  }
  return c.done();
}

inline TrialOutcome cayley_hamilton(rnd::Rng& rng, std::size_t, FieldDescriptor f) {
  Checker c;
  std::size_t n = 2 + rnd::below(rng, 3);
  NMatrix a = rnd::matrix(rng, f, n, n);
  std::string at = " A=" + to_string(a);
  c.check(eval(charpoly(a), a).is_zero(), "f(A) = 0" + at);
  c.check(cayley_hamilton_check(a), "Cayley-Hamilton check" + at);
  AnnihilatorResult mp = minpoly(a);
  NPoly cp = charpoly(a);
  for (Slot s : f.active_slots())
    c.check(divides(mp.slot_minpolys[slot_index(s)], cp.at(s)), "minpoly divides charpoly" + at);
  c.check(eval(mp.polynomial, a).is_zero(), "m(A) = 0" + at);
  return c.done();
}

/// Random shape and entries for a fixed scalar ring.
inline Component random_component(rnd::Rng& rng, FieldDescriptor scalars) {
  Shape shape = rnd::below(rng, 2) == 0 ? Shape::tuple(1 + rnd::below(rng, 3))
                                        : Shape::matrix(1 + rnd::below(rng, 2), 1 + rnd::below(rng, 2));
  const Flavor flavors[3] = {Flavor::Real, Flavor::Full, Flavor::Pure};
  BaseField b = scalars.base;
  switch (scalars.flavor) {
    case Flavor::Real: return {shape, scalars, {b, flavors[rnd::below(rng, 3)]}};
    case Flavor::Full: return {shape, scalars, {b, flavors[1 + rnd::below(rng, 2)]}};
    case Flavor::Pure: break;
  }
  return {shape, scalars, scalars};
}

inline TrialOutcome rank_nullity_trial(rnd::Rng& rng, std::size_t trial, FieldDescriptor f) {
  Checker c;
  // Alternate R1 and R2; R2 draws N(K) or KI scalars.
  FieldDescriptor scalars = trial % 2 == 0          ? FieldDescriptor::real(f.base)
                            : rnd::below(rng, 3) == 0 ? FieldDescriptor::pure(f.base)
                                                      : FieldDescriptor::full(f.base);
  std::size_t k = 1 + rnd::below(rng, 3);
  std::vector<Component> dom, cod;
  for (std::size_t i = 0; i < k; ++i) {
    dom.push_back(random_component(rng, scalars));
    cod.push_back(random_component(rng, scalars));
  }
  NFoldSpace v = NFoldSpace::make(SpaceKind::TypeI, dom), w = NFoldSpace::make(SpaceKind::TypeI, cod);
  std::vector<std::size_t> assign(k);
  for (std::size_t i = 0; i < k; ++i) assign[i] = i;
  std::shuffle(assign.begin(), assign.end(), rng);
  std::vector<NMatrix> mats;
  for (std::size_t i = 0; i < k; ++i) {
    const Component& src = v.components[i];
    const Component& dst = w.components[assign[i]];
    // Pure scalars act on coordinates in KI; keep the coordinate ring.
    mats.push_back(rnd::matrix(rng, src.coordinate_ring(), dst.coordinates(), src.coordinates()));
  }
  NFoldMap t = make_map(v, w, assign, mats);
  RankNullity rn = rank_nullity(t);
  auto kernel = kernel_basis(t);
  for (std::size_t i = 0; i < k; ++i) {
    std::string at = " component=" + std::to_string(i + 1) + " T=" + to_string(t.mats[i]);
    for (int s = 0; s < 2; ++s)
      c.check(rn.rank[i].slot[s] + rn.nullity[i].slot[s] == rn.dim[i].count.slot[s], "rank + nullity" + at);
    for (const auto& g : kernel[i]) {
      NFoldVector x = zero_vector(v);
      x.parts[i] = g;
      c.check(map_apply(t, x) == zero_vector(w), "kernel vector maps to zero" + at);
    }
  }
  return c.done();
}

inline TrialOutcome dual_reconstruction(rnd::Rng& rng, std::size_t, FieldDescriptor f) {
  Checker c;
  std::size_t n = 2 + rnd::below(rng, 2);
  Component comp{Shape::tuple(n), f, f};
  NMatrix b;
  do b = rnd::matrix(rng, f, n, n);
  while (!det(b).is_unit());
  std::vector<NVector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    NVector col;
    for (std::size_t i = 0; i < n; ++i) col.push_back(b.at(i, j));
    basis.push_back(col);
  }
  std::string at = " basis=" + to_string(b);
  auto fs = dual_basis(comp, basis);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.check(functional_apply(comp, fs[i], basis[j]) == (i == j ? f.one() : f.zero()), "f_i(a_j) = delta" + at);
  // alpha = sum f_i(alpha) a_i
  NVector alpha = rnd::vector(rng, f, n), sum(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    NNum k = functional_apply(comp, fs[i], alpha);
    for (std::size_t r = 0; r < n; ++r) sum[r] += k * basis[i][r];
  }
  c.check(sum == alpha, "vector reconstruction" + at);
  // g = sum g(a_i) f_i
  Functional g{rnd::vector(rng, f, n)};
  NVector rec(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    NNum k = functional_apply(comp, g, basis[i]);
    for (std::size_t r = 0; r < n; ++r) rec[r] += k * fs[i].row[r];
  }
  c.check(rec == g.row, "functional reconstruction" + at);
  std::vector<NVector> w;
  for (std::size_t j = 0, m = 1 + rnd::below(rng, n); j < m; ++j) w.push_back(rnd::vector(rng, f, n));
  AnnihilatorSpace ann = annihilator(comp, w);
  for (int s = 0; s < 2; ++s)
    c.check(ann.dim_w.slot[s] + ann.dim_annihilator.slot[s] == n, "dim W + dim W0 = dim V" + at);
  for (const auto& h : ann.generators)
    for (const auto& x : w) c.check(functional_apply(comp, h, x).is_zero(), "annihilator vanishes on W" + at);
  NFoldSpace v = NFoldSpace::make(SpaceKind::TypeI, {comp, comp});
  NFoldMap t = make_map(v, v, {1, 0}, {rnd::matrix(rng, f, n, n), rnd::matrix(rng, f, n, n)});
  NFoldMap tt = transpose_map(t);
  for (std::size_t j = 0; j < 2; ++j)
    c.check(ring_rank(tt.mats[j]).slot == ring_rank(t.mats[tt.assign[j]]).slot, "rank of the transpose" + at);
  c.check(transpose_map(tt).mats == t.mats, "transpose involution" + at);
  return c.done();
}

inline NFoldVector sum_parts(const NFoldVector& a, const NFoldVector& b, const NNum& k) {
  NFoldVector out = a;
  for (std::size_t i = 0; i < out.parts.size(); ++i)
    for (std::size_t r = 0; r < out.parts[i].size(); ++r) out.parts[i][r] += k * b.parts[i][r];
  return out;
}

inline bool slot_spans_equal(const std::vector<NFoldVector>& a, const std::vector<NFoldVector>& b, std::size_t n,
                             BaseField f) {
  for (Slot s : kSlots) {
    std::vector<BaseVector> as, bs, both;
    for (const auto& x : a) as.push_back(slot_vector(x.parts[0], s));
    for (const auto& x : b) bs.push_back(slot_vector(x.parts[0], s));
    both = as;
    both.insert(both.end(), bs.begin(), bs.end());
    std::size_t r = rank(BaseMatrix::from_columns(f, n, both));
    if (rank(BaseMatrix::from_columns(f, n, as)) != r || rank(BaseMatrix::from_columns(f, n, bs)) != r) return false;
  }
  return true;
}

inline std::vector<NFoldVector> random_independent(rnd::Rng& rng, const InnerSpaceContext& ctx, FieldDescriptor f,
                                                   std::size_t n, std::size_t k) {
  while (true) {
    std::vector<NFoldVector> bs;
    for (std::size_t j = 0; j < k; ++j) bs.push_back({{rnd::vector(rng, f, n)}});
    if (independent(ctx.space, bs).independent) return bs;
  }
}

inline TrialOutcome gram_schmidt_trial(rnd::Rng& rng, std::size_t trial, FieldDescriptor f) {
  Checker c;
  const std::size_t n = 3;
  auto ctx = InnerSpaceContext::make(NFoldSpace::make(SpaceKind::TypeI, {{Shape::tuple(n), f, f}}));
  if (trial % 10 == 9) {
    // Planted dependency: the second vector is a unit multiple of the first.
    NFoldVector b1{{rnd::vector(rng, f, n)}};
    NFoldVector b2 = sum_parts(zero_vector(ctx.space), b1, rnd::unit(rng, f));
    try {
      gram_schmidt(ctx, {b1, b2});
      c.check(false, "planted dependent set accepted: " + show(b1.parts[0]));
    } catch (const Error& e) {
      c.check(e.kind() == ErrorKind::DependentInput, std::string("planted dependent set raised ") + e.what());
      c.expected();
    }
    return c.done();
  }
  std::size_t k = 1 + rnd::below(rng, n);
  auto bs = random_independent(rng, ctx, f, n, k);
  std::string at = " first=" + show(bs[0].parts[0]);
  std::vector<NFoldVector> as;
  try {
    as = gram_schmidt(ctx, bs);
  } catch (const Error& e) {
    c.check(false, std::string(e.what()) + at);
    return c.done();
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) c.check(orthogonal(ctx, as[i], as[j]), "pairwise orthogonality" + at);
    std::vector<NFoldVector> pa(as.begin(), as.begin() + static_cast<long>(i) + 1);
    std::vector<NFoldVector> pb(bs.begin(), bs.begin() + static_cast<long>(i) + 1);
    c.check(slot_spans_equal(pa, pb, n, f.base), "prefix span" + at);
  }
  NFoldVector beta{{rnd::vector(rng, f, n)}};
  NFoldVector e = best_approx(ctx, beta, as);
  NFoldVector r = sum_parts(beta, e, -f.one());
  for (const auto& a : as) c.check(orthogonal(ctx, r, a), "residual orthogonality" + at);
  std::vector<NFoldVector> rev(as.rbegin(), as.rend());
  c.check(best_approx(ctx, beta, rev) == e, "order independence" + at);
  c.check(best_approx(ctx, e, as) == e, "E^2 = E" + at);
  c.check(is_zero_vector(best_approx(ctx, r, as).parts[0]), "(1-E) lands in W-perp" + at);
  return c.done();
}

inline TrialOutcome bessel_trial(rnd::Rng& rng, std::size_t trial, FieldDescriptor f) {
  Checker c;
  const std::size_t n = 3;
  auto ctx = InnerSpaceContext::make(NFoldSpace::make(SpaceKind::TypeI, {{Shape::tuple(n), f, f}}));
  std::size_t k = 1 + rnd::below(rng, 2);
  auto as = gram_schmidt(ctx, random_independent(rng, ctx, f, n, k));
  NFoldVector beta = zero_vector(ctx.space);
  bool planted = trial % 3 == 0;
  if (planted)
    for (const auto& a : as) beta = sum_parts(beta, a, rnd::scalar(rng, f));
  else
    beta = {{rnd::vector(rng, f, n)}};
  std::vector<NFoldVector> with = as;
  with.push_back(beta);
  bool in_span = slot_spans_equal(as, with, n, f.base);
  BesselResult b = bessel_check(ctx, beta, as);
  std::string at = " beta=" + show(beta.parts[0]);
  c.check(b.holds, "lhs <= rhs slotwise" + at);
  c.check(b.equality == in_span, "equality exactly on span" + at);
  c.check(b.equality == (b.lhs == b.rhs), "equality matches lhs = rhs" + at);
  return c.done();
}

inline TrialOutcome taxonomy_trial(rnd::Rng& rng, std::size_t, FieldDescriptor f) {
  Checker c;
  std::size_t n = 2 + rnd::below(rng, 2);
  FieldDescriptor entries = FieldDescriptor::full(f.base);
  bool strong = rnd::below(rng, 2) == 1;
  FieldDescriptor scalars = strong ? entries : FieldDescriptor::real(f.base);
  NFoldSpace v = NFoldSpace::make(SpaceKind::TypeI, {{Shape::tuple(n), scalars, entries}});
  bool neutro = rnd::below(rng, 2) == 1;
  FieldDescriptor draw = neutro ? entries : FieldDescriptor::real(f.base);
  std::vector<NVector> gens;
  for (std::size_t j = 0, m = 1 + rnd::below(rng, 2); j < m; ++j) {
    NVector g = rnd::vector(rng, draw, n);
    for (auto& x : g) x = x.with_flavor(Flavor::Full);
    gens.push_back(g);
  }
  bool has_i = false;
  for (const auto& g : gens)
    for (const auto& x : g) has_i = has_i || !x.indet().is_zero();
  ClassificationLabel lab = subspace_classify({{gens}, {}}, v);
  std::string expect = strong ? (has_i ? "StrongNeutrosophic" : "PseudoStrong") : (has_i ? "Neutrosophic" : "PseudoReal");
  std::string at = " gens[0]=" + show(gens[0]);
  c.check(lab.overall == expect, "label " + lab.overall + " expected " + expect + at);
  std::vector<NVector> perm(gens.rbegin(), gens.rend());
  for (auto& g : perm) {
    BaseElem k = rnd::base_elem(rng, f.base);
    if (k.is_zero()) k = BaseElem::one(f.base);
    for (auto& x : g) x = x * NNum(entries, k, BaseElem::zero(f.base));
  }
  c.check(subspace_classify({{perm}, {}}, v).overall == lab.overall, "label invariant under reorder and scaling" + at);
  // Mixing with a real component in a second field gives the quasi label.
  if (has_i && !strong) {
    BaseField other = f.base.is_rational() ? BaseField::prime(2) : BaseField::rationals();
    FieldDescriptor oq = FieldDescriptor::real(other);
    NFoldSpace v2 = NFoldSpace::make(SpaceKind::TypeII, {v.components[0], {Shape::tuple(1), oq, oq}});
    c.check(subspace_classify({{gens, {NVector{oq.one()}}}, {}}, v2).overall == "QuasiPseudo", "mixed label" + at);
  }
  return c.done();
}

struct SuiteDef {
  std::string name;
  std::string property;
  Trial trial;
  std::vector<FieldDescriptor> default_fields;
};

inline std::vector<FieldDescriptor> standard_fields() {
  return {FieldDescriptor::full(BaseField::prime(2)), FieldDescriptor::full(BaseField::prime(3)),
          FieldDescriptor::full(BaseField::prime(5)), FieldDescriptor::full(BaseField::rationals())};
}

inline const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> all = {
      {"ring-axioms", "N(K) is a commutative unital ring with I*I = I", ring_axioms, standard_fields()},
      {"split-commutation", "each evaluation map commutes with scalar, polynomial and matrix operations",
       split_commutation, standard_fields()},
      {"rank-nullity", "rank T + nullity T = dim V per component and slot", rank_nullity_trial, standard_fields()},
      {"cayley-hamilton", "f(A) = 0 for the characteristic polynomial f; the minimal polynomial divides f",
       cayley_hamilton, standard_fields()},
      {"dual-reconstruction",
       "f_i(a_j) = delta_ij, both reconstruction sums, dim W + dim W0 = dim V, rank of transpose = rank",
       dual_reconstruction, standard_fields()},
      {"gram-schmidt", "Gram-Schmidt outputs are orthogonal with equal prefix spans; best approximation is unique",
       gram_schmidt_trial, {FieldDescriptor::full(BaseField::rationals())}},
      {"bessel", "sum (b/a_k)^2/|a_k|^2 <= |b|^2 slotwise, with equality exactly on the span", bessel_trial,
       {FieldDescriptor::full(BaseField::rationals())}},
      {"taxonomy", "subspace labels follow the generators' indeterminacy and the scalar regime", taxonomy_trial,
       standard_fields()},
  };
  return all;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : detail::suites()) out.push_back(s.name);
  return out;
}

/// Runs `trials` trials; trial t uses fields[t mod |fields|]. Output is
/// identical with and without `parallel`.
inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t trials,
                             std::vector<FieldDescriptor> fields = {}, bool parallel = false) {
  const auto& all = detail::suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const detail::SuiteDef& s) { return s.name == name; });
  if (it == all.end()) fail(ErrorKind::UnknownSuite, "no suite named " + name);
  if (fields.empty()) fields = it->default_fields;
  for (const auto& f : fields)
    if (f.flavor != Flavor::Full) fail(ErrorKind::InvalidArgument, "suites run over N(K) fields, not " + f.tag());
  SuiteReport rep{name, it->property, seed, trials, detail::tags(fields), 0, 0, 0, {}, {}};
  if (name == "ring-axioms")
    for (const auto& f : fields)
      if (f.base.is_prime() && f.base.modulus() <= 5) rep.notes.push_back(detail::ring_axioms_exhaustive(f));
  std::vector<TrialOutcome> results(trials);
  auto run_one = [&](std::size_t t) {
    rnd::Rng rng = rnd::trial_rng(seed, t);
    try {
      results[t] = it->trial(rng, t, fields[t % fields.size()]);
    } catch (const Error& e) {
      results[t] = {false, false, std::string("unexpected ") + e.what()};
    }
  };
  if (parallel && trials > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next++) < trials;) run_one(t);
      });
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t t = 0; t < trials; ++t) run_one(t);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& r = results[t];
    if (r.pass) {
      ++rep.passed;
      if (r.expected_error) ++rep.expected_errors;
    } else {
      ++rep.failed;
      if (!rep.first_counterexample)
        rep.first_counterexample = "trial " + std::to_string(t) + " over " + rep.fields[t % fields.size()] + ": " +
                                   r.counterexample;
    }
  }
  for (const auto& n : rep.notes)
    if (n.find("FAIL") != std::string::npos) {
      ++rep.failed;
      if (!rep.first_counterexample) rep.first_counterexample = n;
    }
  return rep;
}

}  // namespace nfold::verify
