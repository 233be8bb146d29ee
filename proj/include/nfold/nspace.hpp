#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nfold/spectral.hpp"

// n-fold spaces V = V_1 u ... u V_n. Each component is an ambient of tuples,
// matrices or bounded polynomials with entries in some flavor of N(K) and a
// scalar field or ring acting on it. Parts are stored as flat entry lists.

namespace nfold {

enum class SpaceKind { TypeI, TypeII };

/// How the component's scalars act. R1: a real field K with coordinates
/// expanded a+bI -> (a, b). R2: the neutrosophic ring itself, computed in
/// both evaluation slots.
enum class Regime { R1, R2 };

struct NFoldField {
  SpaceKind kind = SpaceKind::TypeI;
  std::vector<FieldDescriptor> components;

  static NFoldField type_i(FieldDescriptor f, std::size_t n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "an n-fold field needs a component");
    return {SpaceKind::TypeI, std::vector<FieldDescriptor>(n, f)};
  }

  /// Per-component fields, none contained in another: the base fields must
  /// be pairwise distinct.
  static NFoldField type_ii(std::vector<FieldDescriptor> fs) {
    if (fs.empty()) fail(ErrorKind::InvalidArgument, "an n-fold field needs a component");
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (fs[i].base == fs[j].base)
          fail(ErrorKind::InvalidField, "components " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                            " share the base field " + fs[i].base.tag());
    return {SpaceKind::TypeII, std::move(fs)};
  }
};

struct Shape {
  enum class Kind { Tuple, Matrix, Poly };
  Kind kind = Kind::Tuple;
  std::size_t rows = 0;  // tuple length, matrix rows, or polynomial degree bound
  std::size_t cols = 1;
  bool unbounded = false;  // polynomials of any degree

  static Shape tuple(std::size_t n) { return {Kind::Tuple, n, 1, false}; }
  static Shape matrix(std::size_t r, std::size_t c) { return {Kind::Matrix, r, c, false}; }
  static Shape poly(std::size_t degree) { return {Kind::Poly, degree, 1, false}; }
  static Shape poly_unbounded() { return {Kind::Poly, 0, 1, true}; }

  /// Number of entries; InfiniteDimension for unbounded polynomials.
  std::size_t entries() const {
    if (unbounded) fail(ErrorKind::InfiniteDimension, "polynomials of unbounded degree");
    switch (kind) {
      case Kind::Tuple: return rows;
      case Kind::Matrix: return rows * cols;
      case Kind::Poly: return rows + 1;
    }
    return 0;
  }

  std::string tag() const {
    switch (kind) {
      case Kind::Tuple: return "tuple:" + std::to_string(rows);
      case Kind::Matrix: return "matrix:" + std::to_string(rows) + "x" + std::to_string(cols);
      case Kind::Poly: return unbounded ? std::string("poly:inf") : "poly:" + std::to_string(rows);
    }
    return "?";
  }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.kind == b.kind && a.rows == b.rows && a.cols == b.cols && a.unbounded == b.unbounded;
  }
};

struct Component {
  Shape shape;
  FieldDescriptor scalars;
  FieldDescriptor entries;

  Regime regime() const { return scalars.flavor == Flavor::Real ? Regime::R1 : Regime::R2; }

  /// Ring the coordinates live in: K for R1, the scalar ring for R2.
  FieldDescriptor coordinate_ring() const {
    return regime() == Regime::R1 ? FieldDescriptor::real(scalars.base) : scalars;
  }

  /// Coordinates per entry under R1.
  std::size_t expansion() const { return entries.flavor == Flavor::Full ? 2 : 1; }

  std::size_t coordinates() const {
    return regime() == Regime::R1 ? shape.entries() * expansion() : shape.entries();
  }

  friend bool operator==(const Component& a, const Component& b) {
    return a.shape == b.shape && a.scalars == b.scalars && a.entries == b.entries;
  }
};

inline void validate(const Component& c) {
  if (!(c.scalars.base == c.entries.base))
    fail(ErrorKind::FieldMismatch, "entries over " + c.entries.tag() + " with scalars " + c.scalars.tag());
  if (c.regime() == Regime::R2) {
    // N(K) acts on N(K) and KI; KI (identity I) only acts unitally on KI.
    bool ok = c.scalars.flavor == Flavor::Full ? c.entries.flavor != Flavor::Real : c.entries.flavor == Flavor::Pure;
    if (!ok) fail(ErrorKind::RegimeMismatch, c.entries.tag() + " entries are not a module over " + c.scalars.tag());
  }
}

struct NFoldSpace {
  NFoldField field;
  std::vector<Component> components;

  NFoldSpace() = default;
  NFoldSpace(NFoldField f, std::vector<Component> cs) : field(std::move(f)), components(std::move(cs)) {
    if (components.size() != field.components.size())
      fail(ErrorKind::SpaceMismatch, "component count differs from the field's");
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (!(components[i].scalars == field.components[i]))
        fail(ErrorKind::FieldMismatch, "component " + std::to_string(i + 1) + " scalars differ from the field");
      validate(components[i]);
    }
  }

  /// Build the field from the components' scalars.
  static NFoldSpace make(SpaceKind kind, std::vector<Component> cs) {
    std::vector<FieldDescriptor> fs;
    for (const auto& c : cs) fs.push_back(c.scalars);
    NFoldField f;
    if (kind == SpaceKind::TypeI) {
      for (const auto& d : fs)
        if (!(d == fs.at(0))) fail(ErrorKind::InvalidField, "type I spaces share one scalar field");
      f = NFoldField::type_i(fs.at(0), fs.size());
    } else {
      f = NFoldField::type_ii(fs);
    }
    return NFoldSpace(std::move(f), std::move(cs));
  }

  std::size_t size() const { return components.size(); }

  friend bool operator==(const NFoldSpace& a, const NFoldSpace& b) {
    return a.field.kind == b.field.kind && a.components == b.components;
  }
};

/// One element per component, each a flat entry list (tuples in order,
/// matrices row-major, polynomials by ascending degree).
struct NFoldVector {
  std::vector<NVector> parts;
  friend bool operator==(const NFoldVector& a, const NFoldVector& b) { return a.parts == b.parts; }
};

inline NVector to_part(const NMatrix& m) { return m.entries(); }

inline NVector to_part(const NPoly& p, std::size_t degree) {
  if (p.degree() > static_cast<int>(degree))
    fail(ErrorKind::ShapeMismatch, "polynomial degree exceeds " + std::to_string(degree));
  NVector out;
  for (std::size_t i = 0; i <= degree; ++i) out.push_back(p.coeff(i));
  return out;
}

inline NMatrix part_matrix(const Component& c, const NVector& part) {
  return NMatrix(c.entries, c.shape.rows, c.shape.cols, part);
}

inline NPoly part_poly(const Component& c, const NVector& part) { return NPoly(c.entries, part); }

inline void check_part(const Component& c, const NVector& part) {
  if (part.size() != c.shape.entries())
    fail(ErrorKind::ShapeMismatch, "part has " + std::to_string(part.size()) + " entries, " + c.shape.tag() +
                                       " needs " + std::to_string(c.shape.entries()));
  for (const auto& x : part) {
    if (!(x.base() == c.entries.base)) fail(ErrorKind::FieldMismatch, "entry outside " + c.entries.tag());
    x.with_flavor(c.entries.flavor);  // FlavorViolation if it does not fit
  }
}

inline void check_vector(const NFoldSpace& v, const NFoldVector& x) {
  if (x.parts.size() != v.size()) fail(ErrorKind::SpaceMismatch, "vector has the wrong number of components");
  for (std::size_t i = 0; i < v.size(); ++i) check_part(v.components[i], x.parts[i]);
}

// ----------------------------------------------------------- coordinates

/// Coordinates of a part in the component's standard basis.
inline NVector coordinates(const Component& c, const NVector& part) {
  check_part(c, part);
  FieldDescriptor ring = c.coordinate_ring();
  NVector out;
  for (const auto& x : part) {
    if (c.regime() == Regime::R2) {
      out.push_back(x.with_flavor(ring.flavor));
      continue;
    }
    BaseElem zero = BaseElem::zero(ring.base);
    switch (c.entries.flavor) {
      case Flavor::Real: out.emplace_back(ring, x.real(), zero); break;
      case Flavor::Pure: out.emplace_back(ring, x.indet(), zero); break;
      case Flavor::Full:
        out.emplace_back(ring, x.real(), zero);
        out.emplace_back(ring, x.indet(), zero);
        break;
    }
  }
  return out;
}

inline NVector from_coordinates(const Component& c, const NVector& coords) {
  if (coords.size() != c.coordinates()) fail(ErrorKind::ShapeMismatch, "coordinate count");
  NVector out;
  if (c.regime() == Regime::R2) {
    for (const auto& x : coords) out.push_back(x.with_flavor(c.entries.flavor));
    return out;
  }
  BaseElem zero = BaseElem::zero(c.entries.base);
  for (std::size_t i = 0; i < c.shape.entries(); ++i) {
    switch (c.entries.flavor) {
      case Flavor::Real: out.emplace_back(c.entries, coords[i].real(), zero); break;
      case Flavor::Pure: out.emplace_back(c.entries, zero, coords[i].real()); break;
      case Flavor::Full: out.emplace_back(c.entries, coords[2 * i].real(), coords[2 * i + 1].real()); break;
    }
  }
  return out;
}

// ------------------------------------------------ module algebra over a ring

/// A count that may differ between the two slots. For K both slots repeat
/// slot 0; for KI both repeat slot 1.
struct SlotCount {
  std::array<std::size_t, 2> slot{0, 0};
  bool uniform() const { return slot[0] == slot[1]; }
  std::optional<std::size_t> value() const {
    if (!uniform()) return std::nullopt;
    return slot[0];
  }
};

namespace detail {

inline SlotCount mirror(const FieldDescriptor& f, std::array<std::size_t, 2> c) {
  if (f.flavor == Flavor::Real) c[1] = c[0];
  if (f.flavor == Flavor::Pure) c[0] = c[1];
  return {c};
}

inline NMatrix columns(const FieldDescriptor& f, std::size_t rows, const std::vector<NVector>& cols) {
  NMatrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i].with_flavor(f.flavor);
  return m;
}

/// Recombine per-slot vector lists: pair positionally when the counts agree,
/// otherwise keep each vector in its own slot.
inline std::vector<NVector> pair_slots(const FieldDescriptor& f, std::size_t len,
                                       const std::array<std::vector<BaseVector>, 2>& s) {
  BaseVector zero(len, BaseElem::zero(f.base));
  std::vector<NVector> out;
  switch (f.flavor) {
    case Flavor::Real:
      for (const auto& u : s[0]) out.push_back(recombine(u, u, f));
      break;
    case Flavor::Pure:
      for (const auto& w : s[1]) out.push_back(recombine(zero, w, f));
      break;
    case Flavor::Full:
      if (s[0].size() == s[1].size()) {
        for (std::size_t i = 0; i < s[0].size(); ++i) out.push_back(recombine(s[0][i], s[1][i], f));
      } else {
        for (const auto& u : s[0]) out.push_back(recombine(u, zero, f));
        for (const auto& w : s[1]) out.push_back(recombine(zero, w, f));
      }
      break;
  }
  return out;
}

}  // namespace detail

inline SlotCount ring_rank(const NMatrix& m) {
  std::array<std::size_t, 2> c{0, 0};
  for (Slot s : m.field().active_slots()) c[slot_index(s)] = rank(m.at(s));
  return detail::mirror(m.field(), c);
}

struct RingKernel {
  std::vector<NVector> generators;
  SlotCount nullity;
};

inline RingKernel ring_kernel(const NMatrix& m) {
  std::array<std::vector<BaseVector>, 2> ns;
  std::array<std::size_t, 2> c{0, 0};
  for (Slot s : m.field().active_slots()) {
    ns[slot_index(s)] = nullspace(m.at(s));
    c[slot_index(s)] = ns[slot_index(s)].size();
  }
  return {detail::pair_slots(m.field(), m.cols(), ns), detail::mirror(m.field(), c)};
}

/// Leftmost-pivot selection. Returns a basis when the slot selections have
/// equal size, otherwise a generating set (flagged by `free == false`).
struct RingBasis {
  std::vector<NVector> vectors;
  SlotCount rank;
  bool free = true;
};

inline RingBasis ring_basis(const FieldDescriptor& f, std::size_t len, const std::vector<NVector>& vs) {
  std::array<std::vector<BaseVector>, 2> chosen;
  std::array<std::size_t, 2> c{0, 0};
  for (Slot s : f.active_slots()) {
    auto& pick = chosen[slot_index(s)];
    for (const auto& v : vs) {
      BaseVector b = slot_vector(v, s);
      if (is_zero_vector(b) || (!pick.empty() && in_span(f.base, pick, b))) continue;
      pick.push_back(b);
    }
    c[slot_index(s)] = pick.size();
  }
  SlotCount r = detail::mirror(f, c);
  return {detail::pair_slots(f, len, chosen), r, r.uniform()};
}

struct Independence {
  bool independent = true;
  std::optional<NVector> witness;  // coefficients of a vanishing combination
};

inline Independence ring_independent(const FieldDescriptor& f, std::size_t len, const std::vector<NVector>& vs) {
  if (vs.empty()) return {};
  NMatrix m = detail::columns(f, len, vs);
  std::array<std::optional<BaseVector>, 2> k;
  for (Slot s : f.active_slots()) {
    auto ns = nullspace(m.at(s));
    if (!ns.empty()) k[slot_index(s)] = ns.front();
  }
  if (!k[0] && !k[1]) return {};
  // Witness from the first dependent slot alone; K repeats it in slot 1.
  BaseVector zero(vs.size(), BaseElem::zero(f.base));
  NVector w = f.flavor == Flavor::Real ? recombine(*k[0], *k[0], f)
              : k[0]                   ? recombine(*k[0], zero, f)
                                       : recombine(zero, *k[1], f);
  detail::verify(is_zero_vector(m * w), "dependency witness");
  return {false, w};
}

// ------------------------------------------------------------- dimensions

struct ComponentDim {
  SlotCount count;
  std::optional<std::size_t> value() const { return count.value(); }
};

inline ComponentDim component_dim(const Component& c) {
  std::size_t n = c.coordinates();
  if (c.regime() == Regime::R1) return {{{n, n}}};
  // R2: the standard generators; KI entries over N(K) vanish in slot 0.
  std::vector<NVector> gens;
  FieldDescriptor ring = c.coordinate_ring();
  for (std::size_t i = 0; i < n; ++i) {
    NVector e(n, ring.zero());
    e[i] = c.entries.one().with_flavor(ring.flavor);
    gens.push_back(e);
  }
  return {ring_rank(detail::columns(ring, n, gens))};
}

struct SpaceDim {
  std::vector<ComponentDim> components;
  std::optional<std::size_t> total;  // type I only: m + n + ...
  bool slot_rank_mismatch = false;
};

inline SpaceDim space_dim(const NFoldSpace& v) {
  SpaceDim d;
  std::size_t sum = 0;
  for (const auto& c : v.components) {
    d.components.push_back(component_dim(c));
    if (auto x = d.components.back().value()) sum += *x;
    else d.slot_rank_mismatch = true;
  }
  if (v.field.kind == SpaceKind::TypeI && !d.slot_rank_mismatch) d.total = sum;
  return d;
}

// ----------------------------------------------------- independence, bases

struct NFoldIndependence {
  bool independent = true;
  std::vector<Independence> components;
};

inline NFoldIndependence independent(const NFoldSpace& v, const std::vector<NFoldVector>& xs) {
  NFoldIndependence out;
  for (const auto& x : xs) check_vector(v, x);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Component& c = v.components[i];
    std::vector<NVector> coords;
    for (const auto& x : xs) coords.push_back(coordinates(c, x.parts[i]));
    out.components.push_back(ring_independent(c.coordinate_ring(), c.coordinates(), coords));
    out.independent = out.independent && out.components.back().independent;
  }
  return out;
}

/// Per-component bases, one list of parts per component.
struct NBasis {
  std::vector<std::vector<NVector>> components;
  std::vector<ComponentDim> dims;
  std::optional<std::size_t> total;
  bool slot_rank_mismatch = false;
};

/// `spanning[i]` lists parts in component i.
inline NBasis nbasis(const NFoldSpace& v, const std::vector<std::vector<NVector>>& spanning) {
  if (spanning.size() != v.size()) fail(ErrorKind::SpaceMismatch, "one spanning list per component");
  NBasis out;
  std::size_t sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Component& c = v.components[i];
    std::vector<NVector> coords;
    for (const auto& p : spanning[i]) coords.push_back(coordinates(c, p));
    RingBasis b = ring_basis(c.coordinate_ring(), c.coordinates(), coords);
    std::vector<NVector> parts;
    for (const auto& x : b.vectors) parts.push_back(from_coordinates(c, x));
    out.components.push_back(std::move(parts));
    out.dims.push_back({b.rank});
    if (b.rank.value()) sum += *b.rank.value();
    else out.slot_rank_mismatch = true;
  }
  if (v.field.kind == SpaceKind::TypeI && !out.slot_rank_mismatch) out.total = sum;
  return out;
}

// ------------------------------------------------------------------- maps

/// Linear n-map. Domain component i goes to codomain component assign[i]
/// through mats[i], which acts on coordinates.
struct NFoldMap {
  NFoldSpace domain;
  NFoldSpace codomain;
  std::vector<std::size_t> assign;
  std::vector<NMatrix> mats;
};

inline void validate(const NFoldMap& t) {
  if (t.assign.size() != t.domain.size() || t.mats.size() != t.domain.size())
    fail(ErrorKind::AssignmentMismatch, "one assignment and matrix per domain component");
  std::vector<bool> used(t.codomain.size(), false);
  for (std::size_t i = 0; i < t.assign.size(); ++i) {
    std::size_t j = t.assign[i];
    if (j >= t.codomain.size()) fail(ErrorKind::AssignmentMismatch, "assignment target out of range", {}, i);
    if (used[j]) fail(ErrorKind::AssignmentMismatch, "two components share a target", {}, i);
    used[j] = true;
    const Component& src = t.domain.components[i];
    const Component& dst = t.codomain.components[j];
    if (src.regime() != dst.regime() || !(src.coordinate_ring().base == dst.coordinate_ring().base))
      fail(ErrorKind::RegimeMismatch, "components " + std::to_string(i + 1) + " -> " + std::to_string(j + 1));
    const NMatrix& m = t.mats[i];
    if (m.rows() != dst.coordinates() || m.cols() != src.coordinates())
      fail(ErrorKind::ShapeMismatch, "matrix for component " + std::to_string(i + 1) + " is " +
                                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()), {}, i);
    if (!(m.field().base == src.coordinate_ring().base))
      fail(ErrorKind::FieldMismatch, "matrix field for component " + std::to_string(i + 1));
  }
}

inline NFoldMap make_map(NFoldSpace domain, NFoldSpace codomain, std::vector<std::size_t> assign,
                         std::vector<NMatrix> mats) {
  NFoldMap t{std::move(domain), std::move(codomain), std::move(assign), std::move(mats)};
  for (std::size_t i = 0; i < t.mats.size() && i < t.domain.size(); ++i) {
    FieldDescriptor ring = t.domain.components[i].coordinate_ring();
    if (t.mats[i].field().base == ring.base && ring.flavor == Flavor::Full)
      t.mats[i] = t.mats[i].with_flavor(Flavor::Full);
  }
  validate(t);
  return t;
}

inline NFoldMap identity_map(const NFoldSpace& v) {
  std::vector<std::size_t> assign;
  std::vector<NMatrix> mats;
  for (std::size_t i = 0; i < v.size(); ++i) {
    assign.push_back(i);
    mats.push_back(NMatrix::identity(v.components[i].coordinate_ring(), v.components[i].coordinates()));
  }
  return make_map(v, v, assign, mats);
}

inline NFoldVector zero_vector(const NFoldSpace& v) {
  NFoldVector out;
  for (const auto& c : v.components) out.parts.emplace_back(c.shape.entries(), c.entries.zero());
  return out;
}

inline NFoldVector map_apply(const NFoldMap& t, const NFoldVector& x) {
  check_vector(t.domain, x);
  NFoldVector out = zero_vector(t.codomain);
  for (std::size_t i = 0; i < t.domain.size(); ++i) {
    NVector y = t.mats[i] * coordinates(t.domain.components[i], x.parts[i]);
    out.parts[t.assign[i]] = from_coordinates(t.codomain.components[t.assign[i]], y);
  }
  return out;
}

/// s after t.
inline NFoldMap map_compose(const NFoldMap& s, const NFoldMap& t) {
  if (!(s.domain == t.codomain)) fail(ErrorKind::SpaceMismatch, "composition needs matching spaces");
  std::vector<std::size_t> assign;
  std::vector<NMatrix> mats;
  for (std::size_t i = 0; i < t.domain.size(); ++i) {
    assign.push_back(s.assign[t.assign[i]]);
    mats.push_back(s.mats[t.assign[i]] * t.mats[i]);
  }
  return make_map(t.domain, s.codomain, assign, mats);
}

inline NFoldMap map_add(const NFoldMap& s, const NFoldMap& t) {
  if (s.assign != t.assign) fail(ErrorKind::AssignmentMismatch, "sum needs identical assignments");
  if (!(s.domain == t.domain) || !(s.codomain == t.codomain)) fail(ErrorKind::SpaceMismatch, "sum of maps");
  std::vector<NMatrix> mats;
  for (std::size_t i = 0; i < s.mats.size(); ++i) mats.push_back(s.mats[i] + t.mats[i]);
  return make_map(s.domain, s.codomain, s.assign, mats);
}

/// Scale component i by k[i].
inline NFoldMap map_scale(const NFoldMap& t, const std::vector<NNum>& k) {
  if (k.size() != t.mats.size()) fail(ErrorKind::SpaceMismatch, "one scalar per component");
  std::vector<NMatrix> mats;
  for (std::size_t i = 0; i < k.size(); ++i) {
    FieldDescriptor ring = t.domain.components[i].coordinate_ring();
    mats.push_back(t.mats[i].scaled(k[i].with_flavor(ring.flavor)));
  }
  return make_map(t.domain, t.codomain, t.assign, mats);
}

// -------------------------------------------------------- kernel and rank

namespace detail {

/// KI entries under N(K) scalars have no slot-0 image, so only the slot-1
/// part of the operator acts. Reported over KI in that case.
inline bool slot_zero_trivial(const Component& c) {
  return c.regime() == Regime::R2 && c.scalars.flavor == Flavor::Full && c.entries.flavor == Flavor::Pure;
}

inline NMatrix acting_matrix(const Component& c, const NMatrix& m) {
  FieldDescriptor ring = c.coordinate_ring();
  if (!slot_zero_trivial(c)) return m.with_flavor(ring.flavor);
  FieldDescriptor pure = FieldDescriptor::pure(ring.base);
  return recombine(BaseMatrix(ring.base, m.rows(), m.cols()), m.at(Slot::At1), pure);
}

}  // namespace detail

inline std::vector<std::vector<NVector>> kernel_basis(const NFoldMap& t) {
  std::vector<std::vector<NVector>> out;
  for (std::size_t i = 0; i < t.domain.size(); ++i) {
    const Component& c = t.domain.components[i];
    std::vector<NVector> parts;
    for (const auto& k : ring_kernel(detail::acting_matrix(c, t.mats[i])).generators)
      parts.push_back(from_coordinates(c, k));
    out.push_back(std::move(parts));
  }
  return out;
}

struct RankNullity {
  std::vector<SlotCount> rank;
  std::vector<SlotCount> nullity;
  std::vector<ComponentDim> dim;
};

inline RankNullity rank_nullity(const NFoldMap& t) {
  RankNullity out;
  for (std::size_t i = 0; i < t.domain.size(); ++i) {
    const Component& c = t.domain.components[i];
    NMatrix m = detail::acting_matrix(c, t.mats[i]);
    SlotCount r = ring_rank(m);
    SlotCount n = ring_kernel(m).nullity;
    if (detail::slot_zero_trivial(c)) r.slot[0] = n.slot[0] = 0;
    ComponentDim d = component_dim(c);
    for (int s = 0; s < 2; ++s) detail::verify(r.slot[s] + n.slot[s] == d.count.slot[s], "rank + nullity = dim");
    out.rank.push_back(r);
    out.nullity.push_back(n);
    out.dim.push_back(d);
  }
  return out;
}

// ------------------------------------------------------------------- duals

/// Linear functional on a component: f(x) = sum_k row[k] * coord_k(x).
struct Functional {
  NVector row;
};

inline void require_dual_regime(const Component& c) {
  if (c.regime() != Regime::R2)
    fail(ErrorKind::UnsupportedRegime, "functionals need neutrosophic scalars, not " + c.scalars.tag());
}

inline NNum functional_apply(const Component& c, const Functional& f, const NVector& part) {
  NVector x = coordinates(c, part);
  if (f.row.size() != x.size()) fail(ErrorKind::ShapeMismatch, "functional length");
  NNum acc = c.coordinate_ring().zero();
  for (std::size_t k = 0; k < x.size(); ++k) acc += f.row[k].with_flavor(acc.field().flavor) * x[k];
  return acc;
}

/// Functionals f_i with f_i(b_j) = delta_ij.
inline std::vector<Functional> dual_basis(const Component& c, const std::vector<NVector>& basis) {
  require_dual_regime(c);
  FieldDescriptor ring = c.coordinate_ring();
  std::size_t n = c.coordinates();
  if (basis.size() != n) fail(ErrorKind::NotABasis, std::to_string(basis.size()) + " vectors for dimension " + std::to_string(n));
  std::vector<NVector> coords;
  for (const auto& b : basis) coords.push_back(coordinates(c, b));
  NMatrix m = detail::columns(ring, n, coords);
  if (!det(m).is_unit()) fail(ErrorKind::NotABasis, "coordinate matrix is not invertible");
  NMatrix inv = inverse(m);
  std::vector<Functional> out;
  for (std::size_t i = 0; i < n; ++i) {
    NVector row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(inv.at(i, k));
    out.push_back({row});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      detail::verify(functional_apply(c, out[i], basis[j]) == (i == j ? ring.one() : ring.zero()), "dual basis");
  return out;
}

struct AnnihilatorSpace {
  std::vector<Functional> generators;
  SlotCount dim_w;
  SlotCount dim_annihilator;
};

/// Functionals vanishing on span(w).
inline AnnihilatorSpace annihilator(const Component& c, const std::vector<NVector>& w) {
  require_dual_regime(c);
  FieldDescriptor ring = c.coordinate_ring();
  std::size_t n = c.coordinates();
  NMatrix rows(ring, w.size(), n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    NVector x = coordinates(c, w[i]);
    for (std::size_t k = 0; k < n; ++k) rows.at(i, k) = x[k];
  }
  AnnihilatorSpace out;
  if (w.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      NVector e(n, ring.zero());
      e[i] = ring.one();
      out.generators.push_back({e});
    }
    out.dim_annihilator = detail::mirror(ring, {n, n});
    return out;
  }
  RingKernel k = ring_kernel(rows);
  for (auto& g : k.generators) out.generators.push_back({g});
  out.dim_w = ring_rank(rows);
  out.dim_annihilator = k.nullity;
  for (int s = 0; s < 2; ++s)
    detail::verify(out.dim_w.slot[s] + out.dim_annihilator.slot[s] == n, "dim W + dim W0 = dim V");
  return out;
}

/// Transpose in the dual bases: matrices transposed, assignment inverted.
/// Needs a bijective assignment so every functional has a source.
inline NFoldMap transpose_map(const NFoldMap& t) {
  if (t.domain.size() != t.codomain.size())
    fail(ErrorKind::AssignmentMismatch, "transpose needs a bijective assignment");
  for (const auto& c : t.domain.components) require_dual_regime(c);
  std::vector<std::size_t> assign(t.codomain.size());
  for (std::size_t i = 0; i < t.assign.size(); ++i) assign[t.assign[i]] = i;
  std::vector<NMatrix> mats;
  for (std::size_t j = 0; j < assign.size(); ++j) mats.push_back(t.mats[assign[j]].transposed());
  NFoldMap out = make_map(t.codomain, t.domain, assign, mats);
  for (std::size_t j = 0; j < out.mats.size(); ++j) {
    auto a = ring_rank(out.mats[j]), b = ring_rank(t.mats[assign[j]]);
    detail::verify(a.slot == b.slot, "rank of the transpose");
  }
  return out;
}

// --------------------------------------------------------------- direct sums

/// A subspace given by generators: gens[i] lists parts in component i.
/// `entries`, when set, restricts each component's entries (for example a
/// real subspace of a neutrosophic ambient).
struct SubspaceDesc {
  std::vector<std::vector<NVector>> gens;
  std::vector<std::optional<FieldDescriptor>> entries;
};

struct DirectSumResult {
  bool direct = true;
  std::optional<NFoldVector> witness;  // nonzero, lies in two summands' sum in two ways
  std::optional<std::size_t> component;
  std::vector<NFoldMap> projections;  // only when the sum is direct and spans V
};

inline DirectSumResult direct_sum_check(const NFoldSpace& v, const std::vector<SubspaceDesc>& ws) {
  DirectSumResult out;
  for (const auto& w : ws)
    if (w.gens.size() != v.size()) fail(ErrorKind::SpaceMismatch, "subspace with the wrong number of components");
  bool spans = true;
  std::vector<std::vector<NMatrix>> proj(ws.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Component& c = v.components[i];
    FieldDescriptor ring = c.coordinate_ring();
    std::size_t n = c.coordinates();
    // Per slot: a basis of each summand's image, concatenated. The sum is
    // direct iff every concatenation is independent.
    std::array<std::vector<BaseVector>, 2> cols;
    std::array<std::vector<std::size_t>, 2> owner;
    std::array<bool, 2> dependent{false, false};
    for (Slot s : kSlots) {
      if (!detail::computed(ring, s)) continue;
      auto& cs = cols[slot_index(s)];
      for (std::size_t k = 0; k < ws.size(); ++k) {
        std::vector<BaseVector> mine;
        for (const auto& g : ws[k].gens[i]) {
          BaseVector x = slot_vector(coordinates(c, g), s);
          if (is_zero_vector(x) || (!mine.empty() && in_span(ring.base, mine, x))) continue;
          mine.push_back(x);
          cs.push_back(x);
          owner[slot_index(s)].push_back(k);
        }
      }
      dependent[slot_index(s)] = !cs.empty() && rank(BaseMatrix::from_columns(ring.base, n, cs)) < cs.size();
    }
    if (dependent[0] || dependent[1]) {
      // Normalize the slot kernel so its first nonzero coefficient is 1, then
      // keep the part owned by the first summand involved.
      std::array<BaseVector, 2> xs{BaseVector(n, BaseElem::zero(ring.base)), BaseVector(n, BaseElem::zero(ring.base))};
      for (Slot s : kSlots) {
        int si = slot_index(s);
        if (!dependent[si]) continue;
        BaseVector kv = nullspace(BaseMatrix::from_columns(ring.base, n, cols[si])).front();
        std::size_t first = static_cast<std::size_t>(
            std::find_if(kv.begin(), kv.end(), [](const BaseElem& e) { return !e.is_zero(); }) - kv.begin());
        BaseElem inv = kv[first].inverse();
        for (std::size_t j = 0; j < kv.size(); ++j)
          if (owner[si][j] == owner[si][first])
            for (std::size_t r = 0; r < n; ++r) xs[si][r] += kv[j] * inv * cols[si][j][r];
      }
      if (ring.flavor == Flavor::Real) xs[1] = xs[0];
      NFoldVector wv = zero_vector(v);
      wv.parts[i] = from_coordinates(c, recombine(xs[0], xs[1], ring));
      out.direct = false;
      out.witness = wv;
      out.component = i;
      return out;
    }
    std::vector<std::array<BaseMatrix, 2>> slot_proj(ws.size());
    for (Slot s : kSlots) {
      int si = slot_index(s);
      if (!detail::computed(ring, s)) {
        for (auto& e : slot_proj) e[si] = BaseMatrix(ring.base, n, n);
        continue;
      }
      if (cols[si].size() != n) {
        spans = false;
        break;
      }
      BaseMatrix b = BaseMatrix::from_columns(ring.base, n, cols[si]);
      BaseMatrix binv = *inverse(b);
      for (std::size_t k = 0; k < ws.size(); ++k) {
        BaseMatrix sel(ring.base, n, n);
        for (std::size_t j = 0; j < n; ++j)
          if (owner[si][j] == k) sel.at(j, j) = BaseElem::one(ring.base);
        slot_proj[k][si] = b * sel * binv;
      }
    }
    if (!spans) continue;
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (ring.flavor == Flavor::Real) slot_proj[k][1] = slot_proj[k][0];
      proj[k].push_back(recombine(slot_proj[k][0], slot_proj[k][1], ring));
    }
  }
  if (!spans) return out;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    std::vector<std::size_t> assign;
    for (std::size_t i = 0; i < v.size(); ++i) assign.push_back(i);
    out.projections.push_back(make_map(v, v, assign, proj[k]));
  }
  // E_k^2 = E_k, E_j E_k = 0, sum = 1.
  for (std::size_t i = 0; i < v.size(); ++i) {
    FieldDescriptor ring = v.components[i].coordinate_ring();
    std::size_t n = v.components[i].coordinates();
    NMatrix sum = NMatrix::zero(ring, n, n);
    for (std::size_t k = 0; k < ws.size(); ++k) {
      const NMatrix& e = out.projections[k].mats[i];
      detail::verify(e * e == e, "idempotent projection");
      for (std::size_t j = 0; j < k; ++j) detail::verify((e * out.projections[j].mats[i]).is_zero(), "EjEk = 0");
      sum = sum + e;
    }
    detail::verify(sum == NMatrix::identity(ring, n), "projections sum to the identity");
  }
  return out;
}

// ------------------------------------------------------------ classification

enum class SubspaceLabel {
  NeutrosophicSubspace,
  PseudoRealSubspace,
  QuasiPseudo,
  SpecialSubNeutrosophic,
  StrongNeutrosophic,
  PseudoStrong,
  Invalid
};

inline const char* to_string(SubspaceLabel l) {
  switch (l) {
    case SubspaceLabel::NeutrosophicSubspace: return "Neutrosophic";
    case SubspaceLabel::PseudoRealSubspace: return "PseudoReal";
    case SubspaceLabel::QuasiPseudo: return "QuasiPseudo";
    case SubspaceLabel::SpecialSubNeutrosophic: return "SpecialSubNeutrosophic";
    case SubspaceLabel::StrongNeutrosophic: return "StrongNeutrosophic";
    case SubspaceLabel::PseudoStrong: return "PseudoStrong";
    case SubspaceLabel::Invalid: return "Invalid";
  }
  return "?";
}

struct ComponentLabel {
  SubspaceLabel label = SubspaceLabel::Invalid;
  std::optional<BaseField> subfield;  // for SpecialSubNeutrosophic
};

struct ClassificationLabel {
  std::vector<ComponentLabel> components;
  std::string overall;
};

namespace detail {

inline bool fits(const NVector& part, Flavor fl) {
  for (const auto& x : part) {
    if (fl == Flavor::Real && !x.indet().is_zero()) return false;
    if (fl == Flavor::Pure && !x.real().is_zero()) return false;
  }
  return true;
}

/// Multiplying each generator by the ring's additive generators (1, and I
/// for N(K)) keeps the entries inside `fl`.
inline bool closed_under(const FieldDescriptor& scalars, const std::vector<NVector>& gens, Flavor fl) {
  std::vector<NNum> ks{scalars.one()};
  if (scalars.flavor == Flavor::Full) ks.push_back(NNum::indeterminate(scalars));
  for (const auto& g : gens)
    for (const auto& k : ks) {
      NVector y;
      for (const auto& x : g) y.push_back(x.with_flavor(Flavor::Full) * k.with_flavor(Flavor::Full));
      if (!fits(y, fl)) return false;
    }
  return true;
}

inline bool has_indeterminacy(const std::vector<NVector>& gens) {
  for (const auto& g : gens)
    for (const auto& x : g)
      if (!x.indet().is_zero()) return true;
  return false;
}

}  // namespace detail

/// Labels each component of W inside V. A declared entry restriction that
/// the scalars push W out of makes the component Invalid under R1; under R2
/// it drops W to the real subfield (SpecialSubNeutrosophic or PseudoStrong).
inline ClassificationLabel subspace_classify(const SubspaceDesc& w, const NFoldSpace& v) {
  if (w.gens.size() != v.size()) fail(ErrorKind::SpaceMismatch, "subspace with the wrong number of components");
  ClassificationLabel out;
  bool any_neutro = false, any_real = false, any_invalid = false, any_strong = false, any_special = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Component& c = v.components[i];
    const auto& gens = w.gens[i];
    Flavor declared = i < w.entries.size() && w.entries[i] ? w.entries[i]->flavor : c.entries.flavor;
    ComponentLabel lab;
    bool in_ambient = true;
    for (const auto& g : gens) {
      try {
        check_part(c, g);
      } catch (const Error&) {
        in_ambient = false;
      }
      if (!detail::fits(g, declared)) in_ambient = false;
    }
    bool neutro = detail::has_indeterminacy(gens);
    if (!in_ambient) {
      lab.label = SubspaceLabel::Invalid;
    } else if (c.regime() == Regime::R1) {
      lab.label = neutro ? SubspaceLabel::NeutrosophicSubspace : SubspaceLabel::PseudoRealSubspace;
    } else if (detail::closed_under(c.scalars, gens, declared)) {
      lab.label = neutro ? SubspaceLabel::StrongNeutrosophic : SubspaceLabel::PseudoStrong;
    } else if (neutro) {
      lab.label = SubspaceLabel::SpecialSubNeutrosophic;
      lab.subfield = c.scalars.base;
    } else {
      lab.label = SubspaceLabel::PseudoStrong;
    }
    switch (lab.label) {
      case SubspaceLabel::Invalid: any_invalid = true; break;
      case SubspaceLabel::NeutrosophicSubspace: any_neutro = true; break;
      case SubspaceLabel::PseudoRealSubspace: any_real = true; break;
      case SubspaceLabel::StrongNeutrosophic: any_strong = true; break;
      case SubspaceLabel::SpecialSubNeutrosophic: any_special = true; break;
      case SubspaceLabel::PseudoStrong: any_real = true; break;
      case SubspaceLabel::QuasiPseudo: break;
    }
    out.components.push_back(lab);
  }
  bool neutral = any_neutro || any_strong || any_special;
  if (any_invalid) out.overall = "Invalid";
  else if (neutral && any_real) out.overall = "QuasiPseudo";
  else if (any_special) out.overall = "SpecialSubNeutrosophic";
  else if (any_strong && !any_neutro) out.overall = "StrongNeutrosophic";
  else if (neutral) out.overall = "Neutrosophic";
  else {
    bool strong_space = std::all_of(v.components.begin(), v.components.end(),
                                    [](const Component& c) { return c.regime() == Regime::R2; });
    out.overall = strong_space ? "PseudoStrong" : "PseudoReal";
  }
  return out;
}

}  // namespace nfold
