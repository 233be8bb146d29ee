#pragma once

#include <string>
#include <vector>

#include "nfold/nspace.hpp"
#include "nfold/text.hpp"

// JSON documents for spaces, vectors and maps.
//
//   space   {"kind":"TypeII","components":[{"shape":"tuple:4","scalars":"Z7I","entries":"Z7I"}, ...]}
//   vector  ["(1,I,0)", "[[1,0],[0,I]]", "2x^2 + I"]      one literal per component
//   vectors {"space": <space>, "vectors": [<vector>, ...]}
//   map     {"domain": <space>, "codomain": <space>, "assign": [2,1], "mats": ["[[1,0],[0,1]]@N(Z3)", ...]}
//
// Assignments are 1-based in documents and 0-based in memory.

namespace nfold::doc {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

inline std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(ErrorKind::ParseError, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

inline std::size_t parse_count(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::ParseError, "bad shape " + whole);
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace detail

/// "tuple:4", "matrix:2x3", "poly:5" or "poly:inf".
inline Shape parse_shape(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) fail(ErrorKind::ParseError, "bad shape " + s);
  std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
  if (kind == "tuple") {
    std::size_t n = detail::parse_count(rest, s);
    if (n == 0) fail(ErrorKind::ParseError, "empty tuple shape");
    return Shape::tuple(n);
  }
  if (kind == "matrix") {
    auto x = rest.find('x');
    if (x == std::string::npos) fail(ErrorKind::ParseError, "bad shape " + s);
    std::size_t r = detail::parse_count(rest.substr(0, x), s), c = detail::parse_count(rest.substr(x + 1), s);
    if (r == 0 || c == 0) fail(ErrorKind::ParseError, "empty matrix shape");
    return Shape::matrix(r, c);
  }
  if (kind == "poly") return rest == "inf" ? Shape::poly_unbounded() : Shape::poly(detail::parse_count(rest, s));
  fail(ErrorKind::ParseError, "unknown shape kind " + kind);
}

inline NFoldSpace space_from_json(const json& j) {
  std::string kind = detail::string_field(j, "kind");
  if (kind != "TypeI" && kind != "TypeII") fail(ErrorKind::ParseError, "kind must be TypeI or TypeII");
  const json& cs = detail::field(j, "components");
  if (!cs.is_array() || cs.empty()) fail(ErrorKind::ParseError, "\"components\" must be a non-empty array");
  std::vector<Component> comps;
  for (const auto& c : cs)
    comps.push_back({parse_shape(detail::string_field(c, "shape")), parse_field(detail::string_field(c, "scalars")),
                     parse_field(detail::string_field(c, "entries"))});
  return NFoldSpace::make(kind == "TypeI" ? SpaceKind::TypeI : SpaceKind::TypeII, std::move(comps));
}

inline json to_json(const NFoldSpace& v) {
  json cs = json::array();
  for (const auto& c : v.components)
    cs.push_back({{"shape", c.shape.tag()}, {"scalars", c.scalars.tag()}, {"entries", c.entries.tag()}});
  return {{"kind", v.field.kind == SpaceKind::TypeI ? "TypeI" : "TypeII"}, {"components", cs}};
}

inline NVector parse_part(const Component& c, const std::string& text) {
  NVector part;
  switch (c.shape.kind) {
    case Shape::Kind::Tuple: part = parse_tuple(text, c.entries); break;
    case Shape::Kind::Matrix: {
      NMatrix m = parse_matrix_rows(text, c.entries);
      if (m.rows() != c.shape.rows || m.cols() != c.shape.cols)
        fail(ErrorKind::ShapeMismatch, "matrix literal does not match " + c.shape.tag());
      part = to_part(m);
      break;
    }
    case Shape::Kind::Poly: {
      NPoly p = parse_poly(text, c.entries);
      std::size_t deg = c.shape.unbounded ? static_cast<std::size_t>(std::max(p.degree(), 0)) : c.shape.rows;
      part = to_part(p, deg);
      if (c.shape.unbounded) return part;  // no fixed length to check
      break;
    }
  }
  check_part(c, part);
  return part;
}

inline std::string part_string(const Component& c, const NVector& part) {
  switch (c.shape.kind) {
    case Shape::Kind::Tuple: return to_string(part);
    case Shape::Kind::Matrix: return rows_string(part_matrix(c, part));
    case Shape::Kind::Poly: return to_string(part_poly(c, part));
  }
  return "";
}

inline NFoldVector vector_from_json(const NFoldSpace& v, const json& j) {
  if (!j.is_array() || j.size() != v.size())
    fail(ErrorKind::ParseError, "a vector is an array with one literal per component");
  NFoldVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!j[i].is_string()) fail(ErrorKind::ParseError, "component literals are strings");
    out.parts.push_back(parse_part(v.components[i], j[i].get<std::string>()));
  }
  return out;
}

inline json to_json(const NFoldSpace& v, const NFoldVector& x) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(part_string(v.components[i], x.parts[i]));
  return out;
}

struct VectorList {
  NFoldSpace space;
  std::vector<NFoldVector> vectors;
};

inline VectorList vectors_from_json(const json& j) {
  VectorList out{space_from_json(detail::field(j, "space")), {}};
  const json& vs = detail::field(j, "vectors");
  if (!vs.is_array()) fail(ErrorKind::ParseError, "\"vectors\" must be an array");
  for (const auto& x : vs) out.vectors.push_back(vector_from_json(out.space, x));
  return out;
}

inline json to_json(const VectorList& l) {
  json vs = json::array();
  for (const auto& x : l.vectors) vs.push_back(to_json(l.space, x));
  return {{"space", to_json(l.space)}, {"vectors", vs}};
}

inline NMatrix matrix_entry(const json& m) {
  if (m.is_string()) return parse_matrix_literal(m.get<std::string>());
  return matrix_from_json(m);
}

inline NFoldMap map_from_json(const json& j) {
  NFoldSpace dom = space_from_json(detail::field(j, "domain"));
  NFoldSpace cod = j.contains("codomain") ? space_from_json(j.at("codomain")) : dom;
  const json& as = detail::field(j, "assign");
  const json& ms = detail::field(j, "mats");
  if (!as.is_array() || !ms.is_array()) fail(ErrorKind::ParseError, "\"assign\" and \"mats\" must be arrays");
  std::vector<std::size_t> assign;
  for (const auto& a : as) {
    if (!a.is_number_integer() || a.get<long>() < 1) fail(ErrorKind::ParseError, "assignments are 1-based integers");
    assign.push_back(static_cast<std::size_t>(a.get<long>() - 1));
  }
  std::vector<NMatrix> mats;
  for (const auto& m : ms) mats.push_back(matrix_entry(m));
  return make_map(dom, cod, assign, mats);
}

inline json to_json(const NFoldMap& t) {
  json as = json::array(), ms = json::array();
  for (auto a : t.assign) as.push_back(a + 1);
  for (const auto& m : t.mats) ms.push_back(to_string(m));
  return {{"domain", to_json(t.domain)}, {"codomain", to_json(t.codomain)}, {"assign", as}, {"mats", ms}};
}

/// Subspace: {"space": ..., "gens": [[literal per component], ...], "entries": ["Z3", null, ...]}
/// Each generator row lists one literal per component; "" skips a component.
inline std::pair<NFoldSpace, SubspaceDesc> subspace_from_json(const json& j) {
  NFoldSpace v = space_from_json(detail::field(j, "space"));
  SubspaceDesc w{std::vector<std::vector<NVector>>(v.size()), {}};
  const json& gens = detail::field(j, "gens");
  if (!gens.is_array()) fail(ErrorKind::ParseError, "\"gens\" must be an array");
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != v.size()) fail(ErrorKind::ParseError, "one literal per component in each generator");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!g[i].is_string()) fail(ErrorKind::ParseError, "generator literals are strings");
      std::string s = g[i].get<std::string>();
      if (s.empty()) continue;
      // Parse leniently against the full ring so out-of-ambient generators
      // reach the classifier instead of failing here.
      Component loose = v.components[i];
      loose.entries = FieldDescriptor::full(loose.entries.base);
      w.gens[i].push_back(parse_part(loose, s));
    }
  }
  if (j.contains("entries")) {
    const json& es = j.at("entries");
    if (!es.is_array() || es.size() != v.size()) fail(ErrorKind::ParseError, "\"entries\" lists one tag per component");
    for (const auto& e : es) {
      if (e.is_null()) w.entries.push_back(std::nullopt);
      else if (e.is_string()) w.entries.push_back(parse_field(e.get<std::string>()));
      else fail(ErrorKind::ParseError, "entry tags are strings or null");
    }
  }
  return {v, w};
}

}  // namespace nfold::doc
