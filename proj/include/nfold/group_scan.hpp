#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nfold/base_field.hpp"
#include "nfold/error.hpp"

namespace nfold {

/// Largest modulus accepted by group_scan.
inline constexpr std::int64_t kMaxScanModulus = 64;

enum class ScanOperation { AdditiveModN, MultiplicativeNonzeroModN };

enum class SubgroupLabel { NeutrosophicSubgroup, PseudoNeutrosophicSubgroup, RealSubgroup };

inline std::string to_string(SubgroupLabel l) {
  switch (l) {
    case SubgroupLabel::NeutrosophicSubgroup: return "Neutrosophic";
    case SubgroupLabel::PseudoNeutrosophicSubgroup: return "PseudoNeutrosophic";
    case SubgroupLabel::RealSubgroup: return "Real";
  }
  return {};
}

/// a + bI with a, b in Z_n; n need not be prime here.
struct ZnPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const ZnPair&, const ZnPair&) = default;
  friend bool operator<(const ZnPair& x, const ZnPair& y) {
    return x.b != y.b ? x.b < y.b : x.a < y.a;
  }
  std::string to_string() const {
    if (a == 0 && b == 0) return "0";
    std::string s;
    if (a != 0) s += std::to_string(a);
    if (b != 0) {
      if (!s.empty()) s += "+";
      if (b != 1) s += std::to_string(b);
      s += "I";
    }
    return s;
  }
};

struct ScanWitness {
  std::string reason;  // "NoInverse", "NotClosed", ...
  ZnPair first;
  ZnPair second;
};

struct LabeledSubgroup {
  std::vector<ZnPair> elements;  // sorted
  ZnPair identity;
  SubgroupLabel label;
};

struct GroupScanReport {
  std::int64_t modulus = 0;
  ScanOperation operation = ScanOperation::AdditiveModN;
  std::int64_t order = 0;
  bool is_group = false;
  std::optional<ScanWitness> failure_witness;
  std::vector<LabeledSubgroup> subgroups;
};

namespace detail {

inline SubgroupLabel label_for(const std::vector<ZnPair>& elems, ZnPair real_identity) {
  bool has_indet = std::any_of(elems.begin(), elems.end(), [](const ZnPair& e) { return e.b != 0; });
  if (!has_indet) return SubgroupLabel::RealSubgroup;
  // Neutrosophic iff a nontrivial subgroup of the real group sits inside.
  std::size_t real_count = std::count_if(elems.begin(), elems.end(), [](const ZnPair& e) { return e.b == 0; });
  bool contains_identity =
      std::find(elems.begin(), elems.end(), real_identity) != elems.end();
  if (contains_identity && real_count > 1) return SubgroupLabel::NeutrosophicSubgroup;
  return SubgroupLabel::PseudoNeutrosophicSubgroup;
}

template <typename Op>
bool closed_under(const std::vector<ZnPair>& elems, Op op) {
  std::set<ZnPair> s(elems.begin(), elems.end());
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (!s.count(op(x, y))) return false;
  return true;
}

}  // namespace detail

/// Exhaustive scan of <Z_n u I> under addition, or of {g, gI : g in Z_p*}
/// under multiplication, listing every proper nontrivial subgroup found.
inline GroupScanReport group_scan(std::int64_t n, ScanOperation op) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "modulus must be at least 2");
  if (n > kMaxScanModulus)
    fail(ErrorKind::ScanTooLarge, "modulus " + std::to_string(n) + " exceeds " +
                                      std::to_string(kMaxScanModulus));
  GroupScanReport rep;
  rep.modulus = n;
  rep.operation = op;

  if (op == ScanOperation::AdditiveModN) {
    auto add = [n](ZnPair x, ZnPair y) { return ZnPair{(x.a + y.a) % n, (x.b + y.b) % n}; };
    std::vector<ZnPair> all;
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t a = 0; a < n; ++a) all.push_back({a, b});
    rep.order = static_cast<std::int64_t>(all.size());
    // Axioms checked by brute force over all n^2 elements.
    rep.is_group = detail::closed_under(all, add);
    for (const auto& x : all) {
      if (!(add(x, ZnPair{}) == x)) rep.is_group = false;
      ZnPair neg{(n - x.a) % n, (n - x.b) % n};
      if (!(add(x, neg) == ZnPair{})) rep.is_group = false;
    }
    // Full associativity sweep for small moduli; larger ones check against the
    // two generators, which determines associativity of a Z-module action.
    std::vector<ZnPair> third = n <= 8 ? all : std::vector<ZnPair>{{1, 0}, {0, 1}};
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : third)
          if (!(add(add(x, y), z) == add(x, add(y, z)))) rep.is_group = false;

    // Subgroups of Z_n^2 are the lattices L with nZ^2 <= L <= Z^2; in Hermite
    // normal form L is generated by (a, b) and (0, d) with a | n, d | n,
    // 0 <= b < d and d | (n/a) b.
    std::set<std::vector<ZnPair>> seen;
    for (std::int64_t a = 1; a <= n; ++a) {
      if (n % a) continue;
      for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        for (std::int64_t b = 0; b < d; ++b) {
          if (((n / a) * b) % d) continue;
          std::set<ZnPair> s;
          for (std::int64_t i = 0; i < n / a; ++i)
            for (std::int64_t j = 0; j < n / d; ++j)
              s.insert({(i * a) % n, (i * b + j * d) % n});
          std::vector<ZnPair> elems(s.begin(), s.end());
          if (elems.size() <= 1 || static_cast<std::int64_t>(elems.size()) == rep.order) continue;
          seen.insert(std::move(elems));
        }
      }
    }
    for (const auto& elems : seen) {
      LabeledSubgroup g{elems, ZnPair{}, detail::label_for(elems, ZnPair{})};
      rep.subgroups.push_back(std::move(g));
    }
  } else {
    if (!is_prime_number(n))
      fail(ErrorKind::NotPrime, "multiplicative scan needs a prime modulus, got " + std::to_string(n));
    auto mul = [n](ZnPair x, ZnPair y) {
      // (a+bI)(c+dI) = ac + (ad+bc+bd)I
      return ZnPair{(x.a * y.a) % n, (x.a * y.b + x.b * y.a + x.b * y.b) % n};
    };
    std::vector<ZnPair> gen;
    for (std::int64_t g = 1; g < n; ++g) gen.push_back({g, 0});
    for (std::int64_t g = 1; g < n; ++g) gen.push_back({0, g});
    std::sort(gen.begin(), gen.end());
    rep.order = static_cast<std::int64_t>(gen.size());
    ZnPair one{1, 0};
    rep.is_group = true;
    if (!detail::closed_under(gen, mul)) {
      rep.is_group = false;
      rep.failure_witness = ScanWitness{"NotClosed", {}, {}};
    }
    for (const auto& x : gen) {
      bool has_inverse = std::any_of(gen.begin(), gen.end(),
                                     [&](const ZnPair& y) { return mul(x, y) == one; });
      if (!has_inverse) {
        rep.is_group = false;
        if (!rep.failure_witness) rep.failure_witness = ScanWitness{"NoInverse", x, one};
      }
    }
    // Cyclic subgroups <g> of Z_p* (all of its subgroups) and the sets <gI>,
    // which are groups with identity I.
    std::set<std::vector<ZnPair>> seen;
    for (const auto& x : gen) {
      std::set<ZnPair> s;
      ZnPair y = x;
      while (s.insert(y).second) y = mul(y, x);
      std::vector<ZnPair> elems(s.begin(), s.end());
      if (elems.size() <= 1 || static_cast<std::int64_t>(elems.size()) == rep.order) continue;
      seen.insert(std::move(elems));
    }
    for (const auto& elems : seen) {
      ZnPair id = elems.front().b == 0 ? one : ZnPair{0, 1};
      rep.subgroups.push_back({elems, id, detail::label_for(elems, one)});
    }
  }
  std::stable_sort(rep.subgroups.begin(), rep.subgroups.end(),
                   [](const LabeledSubgroup& x, const LabeledSubgroup& y) {
                     if (x.elements.size() != y.elements.size())
                       return x.elements.size() < y.elements.size();
                     return x.elements < y.elements;
                   });
  return rep;
}

}  // namespace nfold
