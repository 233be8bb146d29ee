#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nfold/nmatrix.hpp"
#include "nfold/npoly.hpp"

// Seeded generators for randomized checks. Values over Q stay small (with an
// occasional half or third) so exact arithmetic remains cheap.

namespace nfold::rnd {

using Rng = std::mt19937_64;

/// Independent stream per (seed, trial).
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

inline BaseElem base_elem(Rng& rng, BaseField f) {
  if (f.is_prime()) return BaseElem(f, static_cast<long>(below(rng, static_cast<std::uint64_t>(f.modulus()))));
  long num = static_cast<long>(below(rng, 9)) - 4;
  long den = below(rng, 5) == 0 ? 2 + static_cast<long>(below(rng, 2)) : 1;
  return BaseElem(f, mpq_class(num, den));
}

inline NNum scalar(Rng& rng, FieldDescriptor f) {
  BaseElem a = f.flavor == Flavor::Pure ? BaseElem::zero(f.base) : base_elem(rng, f.base);
  BaseElem b = f.flavor == Flavor::Real ? BaseElem::zero(f.base) : base_elem(rng, f.base);
  return NNum(f, a, b);
}

inline NNum unit(Rng& rng, FieldDescriptor f) {
  while (true) {
    NNum x = scalar(rng, f);
    if (x.is_unit()) return x;
  }
}

inline NMatrix matrix(Rng& rng, FieldDescriptor f, std::size_t r, std::size_t c) {
  NMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar(rng, f);
  return m;
}

inline std::vector<NNum> vector(Rng& rng, FieldDescriptor f, std::size_t n) {
  std::vector<NNum> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(rng, f));
  return v;
}

/// Polynomial of exact degree `deg` (leading coefficient a unit).
inline NPoly poly(Rng& rng, FieldDescriptor f, std::size_t deg) {
  std::vector<NNum> c;
  for (std::size_t i = 0; i < deg; ++i) c.push_back(scalar(rng, f));
  c.push_back(unit(rng, f));
  return NPoly(f, std::move(c));
}

inline NPoly monic(Rng& rng, FieldDescriptor f, std::size_t deg) {
  NPoly p = poly(rng, f, deg);
  return p.scaled(p.lead().inverse());
}

/// Matrix whose charpoly splits in both slots: P diag-plus-nilpotent P^{-1}.
inline NMatrix splitting_matrix(Rng& rng, FieldDescriptor f, std::size_t n) {
  NMatrix t(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) t.at(i, j) = scalar(rng, f);
  while (true) {
    NMatrix p = matrix(rng, f, n, n);
    if (det(p).is_unit()) return p * t * inverse(p);
  }
}

}  // namespace nfold::rnd
