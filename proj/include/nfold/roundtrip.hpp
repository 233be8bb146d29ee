#pragma once

#include <algorithm>
#include <string>

#include "nfold/documents.hpp"
#include "nfold/random.hpp"

// Random documents for the parse/print identity: scalars, polynomials,
// matrix literals, matrix JSON, vector lists and maps. Each check prints a
// random value, parses the text back, and requires both the value and the
// reprinted text to match.

namespace nfold::roundtrip {

struct Outcome {
  bool ok = true;
  std::string kind;
  std::string text;  // printed document, for reporting
};

inline std::vector<BaseField> base_fields() {
  return {BaseField::prime(2), BaseField::prime(3), BaseField::prime(5), BaseField::prime(7), BaseField::prime(11),
          BaseField::rationals()};
}

inline BaseField random_base(rnd::Rng& rng) {
  auto all = base_fields();
  return all[rnd::below(rng, all.size())];
}

inline FieldDescriptor random_field(rnd::Rng& rng, BaseField b) {
  switch (rnd::below(rng, 3)) {
    case 0: return FieldDescriptor::real(b);
    case 1: return FieldDescriptor::pure(b);
    default: return FieldDescriptor::full(b);
  }
}

inline Shape random_shape(rnd::Rng& rng) {
  switch (rnd::below(rng, 3)) {
    case 0: return Shape::tuple(1 + rnd::below(rng, 3));
    case 1: return Shape::matrix(1 + rnd::below(rng, 2), 1 + rnd::below(rng, 3));
    default: return Shape::poly(rnd::below(rng, 4));
  }
}

/// Entries compatible with the scalars (see `validate(Component)`).
inline Component random_component(rnd::Rng& rng, FieldDescriptor scalars) {
  FieldDescriptor entries = random_field(rng, scalars.base);
  if (scalars.flavor == Flavor::Full && entries.flavor == Flavor::Real) entries = FieldDescriptor::full(scalars.base);
  if (scalars.flavor == Flavor::Pure) entries = FieldDescriptor::pure(scalars.base);
  return {random_shape(rng), scalars, entries};
}

/// Type II components need pairwise distinct base fields.
inline NFoldSpace random_space(rnd::Rng& rng) {
  std::size_t n = 1 + rnd::below(rng, 3);
  bool type_i = rnd::below(rng, 2) == 0;
  auto bases = base_fields();
  std::shuffle(bases.begin(), bases.end(), rng);
  FieldDescriptor shared = random_field(rng, bases[0]);
  std::vector<Component> cs;
  for (std::size_t i = 0; i < n; ++i)
    cs.push_back(random_component(rng, type_i ? shared : random_field(rng, bases[i])));
  return NFoldSpace::make(type_i ? SpaceKind::TypeI : SpaceKind::TypeII, std::move(cs));
}

inline NFoldVector random_vector(rnd::Rng& rng, const NFoldSpace& v) {
  NFoldVector x;
  for (const auto& c : v.components) x.parts.push_back(rnd::vector(rng, c.entries, c.shape.entries()));
  return x;
}

inline NFoldMap random_map(rnd::Rng& rng) {
  NFoldSpace v = random_space(rng);
  std::vector<std::size_t> assign;
  std::vector<NMatrix> mats;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Component& c = v.components[i];
    assign.push_back(i);
    mats.push_back(rnd::matrix(rng, c.coordinate_ring(), c.coordinates(), c.coordinates()));
  }
  return make_map(v, v, assign, mats);
}

/// Document number `index` cycles through the six kinds.
inline Outcome check(rnd::Rng& rng, std::size_t index) {
  Outcome o;
  FieldDescriptor f = random_field(rng, random_base(rng));
  switch (index % 6) {
    case 0: {
      o.kind = "scalar";
      NNum x = rnd::scalar(rng, f);
      o.text = scalar_literal(x);
      NNum y = parse_scalar_literal(o.text);
      o.ok = y == x && scalar_literal(y) == o.text;
      break;
    }
    case 1: {
      o.kind = "poly";
      NPoly p = rnd::poly(rng, f, rnd::below(rng, 6));
      o.text = to_string(p);
      NPoly q = parse_poly(o.text, f);
      o.ok = q == p && to_string(q) == o.text;
      break;
    }
    case 2: {
      o.kind = "matrix-literal";
      NMatrix m = rnd::matrix(rng, f, 1 + rnd::below(rng, 3), 1 + rnd::below(rng, 3));
      o.text = to_string(m);
      NMatrix n = parse_matrix(o.text);
      o.ok = n == m && to_string(n) == o.text;
      break;
    }
    case 3: {
      o.kind = "matrix-json";
      NMatrix m = rnd::matrix(rng, f, 1 + rnd::below(rng, 3), 1 + rnd::below(rng, 3));
      o.text = to_json(m).dump();
      NMatrix n = parse_matrix(o.text);
      o.ok = n == m && to_json(n).dump() == o.text;
      break;
    }
    case 4: {
      o.kind = "vectors";
      doc::VectorList l{random_space(rng), {}};
      for (std::size_t k = 0, n = 1 + rnd::below(rng, 3); k < n; ++k) l.vectors.push_back(random_vector(rng, l.space));
      o.text = doc::to_json(l).dump();
      doc::VectorList back = doc::vectors_from_json(parse_json(o.text));
      o.ok = back.space == l.space && back.vectors == l.vectors && doc::to_json(back).dump() == o.text;
      break;
    }
    default: {
      o.kind = "map";
      NFoldMap t = random_map(rng);
      o.text = doc::to_json(t).dump();
      NFoldMap back = doc::map_from_json(parse_json(o.text));
      o.ok = back.domain == t.domain && back.mats == t.mats && back.assign == t.assign &&
             doc::to_json(back).dump() == o.text;
      break;
    }
  }
  return o;
}

}  // namespace nfold::roundtrip
