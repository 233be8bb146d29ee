#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nfold/corpus.hpp"
#include "nfold/documents.hpp"
#include "nfold/group_scan.hpp"
#include "nfold/inner.hpp"
#include "nfold/spectral.hpp"
#include "nfold/verify.hpp"

// Subcommand front end. `run` is the whole program minus process plumbing so
// tests can drive it in-process. Output is buffered and only written once the
// job finishes, so a parse failure never leaves partial output behind.
//
// Exit codes: 0 success, 1 domain error or failed check, 2 parse error.

namespace nfold::app {

using json = nlohmann::json;

namespace detail {

/// "-" reads stdin, "@path" reads a file, anything else is the text itself.
inline std::string load(const std::string& arg, std::istream& in) {
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1), std::ios::binary);
    if (!f) fail(ErrorKind::ParseError, "cannot read " + arg.substr(1));
    return std::string(std::istreambuf_iterator<char>(f), {});
  }
  return arg;
}

inline std::string count_string(const SlotCount& c) {
  if (auto v = c.value()) return std::to_string(*v);
  return "slot0=" + std::to_string(c.slot[0]) + " slot1=" + std::to_string(c.slot[1]);
}

inline std::string slot_poly_string(const BasePoly& p) {
  return to_string(recombine(p, p, FieldDescriptor::real(p.field())));
}

inline std::string vector_string(const NFoldSpace& v, const NFoldVector& x) { return doc::to_json(v, x).dump(); }

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

inline std::string set_string(const std::vector<NNum>& xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(to_string(x));
  return "{" + join(s, ", ") + "}";
}

inline std::string set_string(const std::vector<BaseElem>& xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(x.to_string());
  return "{" + join(s, ", ") + "}";
}

inline std::string flags_string(const std::set<ReportFlag>& flags) {
  std::vector<std::string> s;
  for (auto f : flags) s.push_back(to_string(f));
  return join(s, " ");
}

inline void print_annihilator(std::ostream& os, const AnnihilatorResult& r, const FieldDescriptor& f) {
  if (!r.principal) os << "NonPrincipalMinPoly\n";
  os << to_string(r.polynomial) << "\n";
  for (Slot s : f.active_slots())
    os << "  slot" << slot_index(s) << " " << slot_poly_string(r.slot_minpolys[slot_index(s)]) << "\n";
}

inline void print_decomposition(std::ostream& os, const DecompositionReport& r, const NMatrix& a) {
  os << "kind " << to_string(r.kind) << "\n";
  if (!r.flags.empty()) os << "flags " << flags_string(r.flags) << "\n";
  if (r.polynomial) os << "polynomial " << to_string(*r.polynomial) << "\n";
  for (std::size_t i = 0; i < r.factors.size(); ++i) os << "factor" << i + 1 << " " << to_string(r.factors[i]) << "\n";
  static const char* dn[] = {"D", "N"};
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    std::string name = r.kind == DecompositionKind::DN && i < 2 ? dn[i] : "E" + std::to_string(i + 1);
    os << name << " " << to_string(r.parts[i]) << "\n";
  }
  if (r.form) os << "form " << to_string(*r.form) << "\n";
  if (r.transform) os << "transform " << to_string(*r.transform) << "\n";
  if (r.recombined()) return;
  // No recombined matrices: show each slot's classical data instead.
  for (Slot s : a.field().active_slots()) {
    const SlotDecomposition& d = r.per_slot[slot_index(s)];
    std::string tag = "  slot" + std::to_string(slot_index(s)) + " ";
    FieldDescriptor real = FieldDescriptor::real(a.field().base);
    for (const auto& p : d.polys) os << tag << "poly " << slot_poly_string(p) << "\n";
    for (const auto& b : d.blocks) os << tag << "block " << b.eigenvalue.to_string() << " size " << b.size << "\n";
    if (d.form) os << tag << "form " << rows_string(lift(*d.form, real)) << "\n";
  }
}

struct Inputs {
  std::string matrix, value, vector, document, suite, op;
  std::vector<std::string> vectors, fields;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::int64_t modulus = 0;
  bool parallel = false;
};

inline NMatrix matrix_arg(const Inputs& in, std::istream& is) { return parse_matrix(load(in.matrix, is)); }

inline std::vector<NNum> tuple_arg(const std::string& text, const FieldDescriptor& f, std::istream& is) {
  return parse_tuple(load(text, is), f);
}

inline json document_arg(const Inputs& in, std::istream& is) { return parse_json(load(in.document, is)); }

inline InnerSpaceContext inner_context(const doc::VectorList& l) { return InnerSpaceContext::make(l.space); }

inline NFoldVector beta_of(const json& j, const NFoldSpace& v) {
  if (!j.contains("beta")) fail(ErrorKind::ParseError, "missing \"beta\"");
  return doc::vector_from_json(v, j.at("beta"));
}

/// Parts of every listed vector in component i.
inline std::vector<NVector> column(const std::vector<NFoldVector>& xs, std::size_t i) {
  std::vector<NVector> out;
  for (const auto& x : xs) out.push_back(x.parts[i]);
  return out;
}

/// Failing corpora lead with the error line naming every failing fixture.
inline int corpus_output(const corpus::CorpusReport& r, std::ostream& os) {
  if (!r.ok()) os << "FixtureMismatch fixtures=" << join(r.failing(), ",") << "\n";
  os << r.text();
  return r.ok() ? 0 : 1;
}

inline int execute(const std::string& cmd, const Inputs& in, std::istream& is, std::ostream& os) {
  if (cmd == "charpoly") {
    os << to_string(charpoly(matrix_arg(in, is))) << "\n";
  } else if (cmd == "minpoly") {
    NMatrix a = matrix_arg(in, is);
    print_annihilator(os, minpoly(a), a.field());
  } else if (cmd == "det") {
    os << to_string(det(matrix_arg(in, is))) << "\n";
  } else if (cmd == "inverse") {
    os << to_string(inverse(matrix_arg(in, is))) << "\n";
  } else if (cmd == "spectrum") {
    SpectrumReport r = spectrum(matrix_arg(in, is));
    os << "charpoly " << to_string(r.charpoly) << "\n";
    os << "roots " << set_string(r.roots) << "\n";
    for (Slot s : r.matrix.field().active_slots())
      os << "slot" << slot_index(s) << " " << set_string(r.slot_spectra[slot_index(s)]) << "\n";
    if (!r.complete) os << "incomplete: root search bound reached\n";
  } else if (cmd == "eigvecs") {
    NMatrix a = matrix_arg(in, is);
    NNum c = in.value.find('@') != std::string::npos ? parse_scalar_literal(in.value) : parse_scalar(in.value, a.field());
    for (const auto& v : eigvecs(a, c)) os << to_string(v) << "\n";
  } else if (cmd == "conductor") {
    NMatrix a = matrix_arg(in, is);
    NVector v = tuple_arg(in.vector, a.field(), is);
    std::vector<NVector> w;
    for (const auto& t : in.vectors) w.push_back(tuple_arg(t, a.field(), is));
    print_annihilator(os, t_conductor(a, v, w), a.field());
  } else if (cmd == "kernel") {
    NFoldMap t = doc::map_from_json(document_arg(in, is));
    auto k = kernel_basis(t);
    for (std::size_t i = 0; i < k.size(); ++i) {
      os << "component " << i + 1 << "\n";
      for (const auto& p : k[i]) os << "  " << doc::part_string(t.domain.components[i], p) << "\n";
    }
  } else if (cmd == "ranknullity") {
    NFoldMap t = doc::map_from_json(document_arg(in, is));
    RankNullity r = rank_nullity(t);
    for (std::size_t i = 0; i < r.rank.size(); ++i)
      os << "component " << i + 1 << " rank " << count_string(r.rank[i]) << " nullity " << count_string(r.nullity[i])
         << " dim " << count_string(r.dim[i].count) << "\n";
  } else if (cmd == "basis") {
    doc::VectorList l = doc::vectors_from_json(document_arg(in, is));
    std::vector<std::vector<NVector>> spanning;
    for (std::size_t i = 0; i < l.space.size(); ++i) spanning.push_back(column(l.vectors, i));
    NBasis b = nbasis(l.space, spanning);
    for (std::size_t i = 0; i < b.components.size(); ++i) {
      os << "component " << i + 1 << " dim " << count_string(b.dims[i].count) << "\n";
      for (const auto& p : b.components[i]) os << "  " << doc::part_string(l.space.components[i], p) << "\n";
    }
    if (b.total) os << "total " << *b.total << "\n";
    if (b.slot_rank_mismatch) os << "SlotRankMismatch\n";
  } else if (cmd == "dualbasis") {
    doc::VectorList l = doc::vectors_from_json(document_arg(in, is));
    for (std::size_t i = 0; i < l.space.size(); ++i) {
      os << "component " << i + 1 << "\n";
      auto fs = dual_basis(l.space.components[i], column(l.vectors, i));
      for (std::size_t k = 0; k < fs.size(); ++k) os << "  f" << k + 1 << " " << to_string(fs[k].row) << "\n";
    }
  } else if (cmd == "annihilator") {
    doc::VectorList l = doc::vectors_from_json(document_arg(in, is));
    for (std::size_t i = 0; i < l.space.size(); ++i) {
      AnnihilatorSpace a = annihilator(l.space.components[i], column(l.vectors, i));
      os << "component " << i + 1 << " dim W " << count_string(a.dim_w) << " dim W0 "
         << count_string(a.dim_annihilator) << "\n";
      for (const auto& f : a.generators) os << "  " << to_string(f.row) << "\n";
    }
  } else if (cmd == "gramschmidt") {
    doc::VectorList l = doc::vectors_from_json(document_arg(in, is));
    for (const auto& x : gram_schmidt(inner_context(l), l.vectors)) os << vector_string(l.space, x) << "\n";
  } else if (cmd == "project") {
    json j = document_arg(in, is);
    doc::VectorList l = doc::vectors_from_json(j);
    os << vector_string(l.space, best_approx(inner_context(l), beta_of(j, l.space), l.vectors)) << "\n";
  } else if (cmd == "complement") {
    doc::VectorList l = doc::vectors_from_json(document_arg(in, is));
    InnerSpaceContext ctx = inner_context(l);
    auto gens = orth_complement(ctx, l.vectors);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      os << "component " << i + 1 << "\n";
      for (const auto& p : gens[i]) os << "  " << doc::part_string(l.space.components[i], p) << "\n";
    }
    SplitCheck s = split_check(ctx, l.vectors);
    std::vector<std::string> dets;
    for (const auto& d : s.gram_det) dets.push_back(to_string(d));
    os << "gram det " << join(dets, ", ") << "\n";
    os << "split " << (s.holds ? "holds" : "fails") << "\n";
    if (s.witness) os << "witness component " << *s.component + 1 << " " << vector_string(l.space, *s.witness) << "\n";
  } else if (cmd == "bessel") {
    json j = document_arg(in, is);
    doc::VectorList l = doc::vectors_from_json(j);
    BesselResult r = bessel_check(inner_context(l), beta_of(j, l.space), l.vectors);
    for (std::size_t i = 0; i < r.lhs.size(); ++i)
      os << "component " << i + 1 << " sum " << to_string(r.lhs[i]) << " norm " << to_string(r.rhs[i]) << "\n";
    os << "bessel " << (r.holds ? "holds" : "fails") << (r.equality ? " with equality" : "") << "\n";
    if (!r.holds) return 1;
  } else if (cmd == "decompose") {
    NMatrix a = matrix_arg(in, is);
    DecompositionReport r = in.op == "dn"        ? dn_decompose(a)
                            : in.op == "primary" ? primary_decomposition(a)
                            : in.op == "rational" ? rational_form(a)
                                                  : jordan_form(a);
    print_decomposition(os, r, a);
  } else if (cmd == "classify") {
    auto [v, w] = doc::subspace_from_json(document_arg(in, is));
    ClassificationLabel c = subspace_classify(w, v);
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      os << "component " << i + 1 << " " << to_string(c.components[i].label);
      if (c.components[i].subfield) os << " over " << c.components[i].subfield->tag();
      os << "\n";
    }
    os << "overall " << c.overall << "\n";
  } else if (cmd == "groupscan") {
    GroupScanReport r =
        group_scan(in.modulus, in.op == "add" ? ScanOperation::AdditiveModN : ScanOperation::MultiplicativeNonzeroModN);
    os << "order " << r.order << "\n";
    os << "group " << (r.is_group ? "yes" : "no") << "\n";
    if (r.failure_witness)
      os << "witness " << r.failure_witness->reason << " " << r.failure_witness->first.to_string() << " "
         << r.failure_witness->second.to_string() << "\n";
    for (const auto& g : r.subgroups) {
      std::vector<std::string> es;
      for (const auto& e : g.elements) es.push_back(e.to_string());
      os << "{" << join(es, ",") << "} identity " << g.identity.to_string() << " " << to_string(g.label) << "\n";
    }
  } else if (cmd == "verify") {
    std::vector<FieldDescriptor> fs;
    for (const auto& f : in.fields) fs.push_back(parse_field(f));
    verify::SuiteReport r = verify::run_suite(in.suite, in.seed, in.trials, fs, in.parallel);
    os << r.text();
    return r.ok() ? 0 : 1;
  } else if (cmd == "corpus") {
    return corpus_output(corpus::run(), os);
  }
  return 0;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in = std::cin) {
  CLI::App app{"Exact linear algebra over N(K) = K + KI with I^2 = I", "nfold"};
  app.require_subcommand(1);
  detail::Inputs inp;
  const char* input_help = "literal, JSON, @file or - for stdin";

  auto matrix_cmd = [&](const std::string& name, const std::string& about) {
    CLI::App* s = app.add_subcommand(name, about);
    s->add_option("matrix", inp.matrix, std::string("matrix: ") + input_help)->required();
    return s;
  };
  auto doc_cmd = [&](const std::string& name, const std::string& about) {
    CLI::App* s = app.add_subcommand(name, about);
    s->add_option("document", inp.document, std::string("JSON document: ") + input_help)->required();
    return s;
  };

  matrix_cmd("charpoly", "characteristic polynomial");
  matrix_cmd("minpoly", "minimal polynomial with slot images");
  matrix_cmd("det", "determinant");
  matrix_cmd("inverse", "inverse (Singular names the failing slot)");
  matrix_cmd("spectrum", "characteristic values");
  matrix_cmd("eigvecs", "characteristic vectors for a value")
      ->add_option("value", inp.value, "scalar, e.g. 2I or 2I@N(Z3)")
      ->required();
  CLI::App* cond = matrix_cmd("conductor", "least monic g with g(A)v in span(W); empty W gives the annihilator of v");
  cond->add_option("vector", inp.vector, "tuple, e.g. (1,0)")->required();
  cond->add_option("span", inp.vectors, "tuples spanning an invariant W");
  doc_cmd("kernel", "kernel generators of a map");
  doc_cmd("ranknullity", "rank and nullity per component");
  doc_cmd("basis", "basis of the span of a vector list");
  doc_cmd("dualbasis", "dual functionals of a basis");
  doc_cmd("annihilator", "functionals vanishing on a vector list");
  doc_cmd("gramschmidt", "orthogonalize a vector list");
  doc_cmd("project", "best approximation of \"beta\" in the span of an orthogonal list");
  doc_cmd("complement", "orthogonal complement and split check");
  doc_cmd("bessel", "Bessel inequality for \"beta\" against an orthogonal list");
  doc_cmd("classify", "label a subspace document");
  CLI::App* dec = app.add_subcommand("decompose", "DN, primary, rational or Jordan decomposition");
  dec->add_option("kind", inp.op, "dn|primary|rational|jordan")
      ->required()
      ->check(CLI::IsMember({"dn", "primary", "rational", "jordan"}));
  dec->add_option("matrix", inp.matrix, std::string("matrix: ") + input_help)->required();
  CLI::App* gs = app.add_subcommand("groupscan", "scan <Z_n u I> for subgroups");
  gs->add_option("n", inp.modulus, "modulus")->required()->check(CLI::PositiveNumber);
  gs->add_option("op", inp.op, "add|mul")->required()->check(CLI::IsMember({"add", "mul"}));
  CLI::App* ver = app.add_subcommand("verify", "randomized property suite");
  ver->add_option("suite", inp.suite, "suite name")->required();
  ver->add_option("--seed", inp.seed, "64-bit seed")->required();
  ver->add_option("--trials", inp.trials, "number of trials")->capture_default_str();
  ver->add_option("--field", inp.fields, "field tag, repeatable (default depends on the suite)");
  ver->add_flag("--parallel", inp.parallel, "fan trials out over threads; output is unchanged");
  app.add_subcommand("corpus", "run the worked-example regression corpus");

  std::ostringstream buf;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "ParseError\n" << e.what() << "\n";
    return 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  try {
    int code = detail::execute(sub->get_name(), inp, in, buf);
    out << buf.str();
    return code;
  } catch (const Error& e) {
    out << e.headline() << "\n" << e.detail() << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const json::exception& e) {
    out << "ParseError\n" << e.what() << "\n";
    return 2;
  }
}

}  // namespace nfold::app
