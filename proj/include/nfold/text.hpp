#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "nfold/nmatrix.hpp"

namespace nfold {

// ---------------------------------------------------------------- printing

namespace detail {

inline bool negative(const BaseElem& e) { return e.field().is_rational() && e.sign() < 0; }

inline std::string indet_string(const BaseElem& b) {
  if (b.is_one()) return "I";
  if (negative(b) && (-b).is_one()) return "-I";
  return b.to_string() + "I";
}

}  // namespace detail

/// Real part first, zero parts omitted, I rather than 1I.
inline std::string to_string(const NNum& x) {
  const BaseElem& a = x.real();
  const BaseElem& b = x.indet();
  if (x.is_zero()) return "0";
  if (b.is_zero()) return a.to_string();
  if (a.is_zero()) return detail::indet_string(b);
  if (detail::negative(b)) return a.to_string() + "-" + detail::indet_string(-b);
  return a.to_string() + "+" + detail::indet_string(b);
}

/// Descending degree; two-part coefficients in parentheses, I-part first,
/// e.g. "x^2 + (2I+1)x + 2I".
inline std::string to_string(const NPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const NNum& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    const BaseElem& a = c.real();
    const BaseElem& b = c.indet();
    bool neg = false;
    std::string body;
    if (!a.is_zero() && !b.is_zero()) {
      std::string inner = detail::indet_string(b) + (detail::negative(a) ? "-" + (-a).to_string() : "+" + a.to_string());
      body = "(" + inner + ")" + mono;
    } else if (b.is_zero()) {
      neg = detail::negative(a);
      BaseElem mag = neg ? -a : a;
      body = (mag.is_one() && k > 0) ? mono : mag.to_string() + mono;
    } else {
      neg = detail::negative(b);
      body = detail::indet_string(neg ? -b : b) + mono;
    }
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

/// Bracketed rows, e.g. "[[I,0],[2,2]]".
inline std::string rows_string(const NMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m.at(i, j));
    s += "]";
  }
  return s + "]";
}

/// CLI literal, e.g. "[[I,0],[2,2]]@N(Z3)".
inline std::string to_string(const NMatrix& m) { return rows_string(m) + "@" + m.field().tag(); }

inline std::string scalar_literal(const NNum& x) { return to_string(x) + "@" + x.field().tag(); }

inline nlohmann::json to_json(const NMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"field", m.field().tag()}, {"rows", rows}};
}

inline std::string to_string(const std::vector<NNum>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const NNum& x) { return os << scalar_literal(x); }
inline std::ostream& operator<<(std::ostream& os, const NPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const NMatrix& m) { return os << to_string(m); }
inline std::ostream& operator<<(std::ostream& os, const BaseElem& e) { return os << e.to_string(); }

// ----------------------------------------------------------------- parsing

/// Character cursor that reports positions as line/column.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  char get() { return done() ? '\0' : s_[i_++]; }
  std::size_t pos() const { return i_; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::string_view rest() const { return s_.substr(std::min(i_, s_.size())); }

  [[noreturn]] void error(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string found = done() ? "end of input" : std::string("'") + s_[i_] + "'";
    fail(ErrorKind::ParseError,
         "line " + std::to_string(line) + " column " + std::to_string(col) + ": " + what + ", found " + found);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

namespace detail {

inline bool parse_digits(Cursor& c, mpz_class& out) {
  std::string d;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) d += c.get();
  if (d.empty()) return false;
  out = mpz_class(d);
  return true;
}

/// int or int/int; false if no digits at the cursor.
inline bool parse_number(Cursor& c, mpq_class& out) {
  mpz_class num, den = 1;
  if (!parse_digits(c, num)) return false;
  if (c.peek() == '/') {
    c.get();
    if (!parse_digits(c, den)) c.error("expected denominator digits");
    if (den == 0) c.error("zero denominator");
  }
  out = mpq_class(num, den);
  out.canonicalize();
  return true;
}

inline BaseElem to_base(Cursor& c, BaseField f, const mpq_class& q) {
  try {
    return BaseElem(f, q);
  } catch (const Error&) {
    c.error("value has no meaning in " + f.tag());
  }
}

/// One signed part: [number][I]. Returns false if nothing is there.
inline bool parse_part(Cursor& c, BaseField f, BaseElem& a, BaseElem& b) {
  c.skip_space();
  mpq_class q;
  bool has_num = parse_number(c, q);
  bool has_i = false;
  if (c.peek() == 'I') {
    c.get();
    has_i = true;
  }
  if (!has_num && !has_i) return false;
  if (!has_num) q = 1;
  if (has_i) b += to_base(c, f, q);
  else a += to_base(c, f, q);
  return true;
}

inline NNum make_scalar(Cursor& c, FieldDescriptor f, const BaseElem& a, const BaseElem& b) {
  try {
    return NNum(f, a, b);
  } catch (const Error&) {
    c.error("value outside " + f.tag());
  }
}

/// Signed sum of parts up to a delimiter, e.g. "1+2I", "-I", "3/2".
inline NNum parse_scalar_body(Cursor& c, FieldDescriptor f) {
  BaseElem a = BaseElem::zero(f.base), b = BaseElem::zero(f.base);
  bool first = true;
  while (true) {
    c.skip_space();
    char s = c.peek();
    bool neg = false;
    if (s == '+' || s == '-') {
      c.get();
      neg = s == '-';
    } else if (!first) {
      break;
    }
    BaseElem pa = BaseElem::zero(f.base), pb = BaseElem::zero(f.base);
    if (!parse_part(c, f.base, pa, pb)) c.error("expected a number or I");
    if (neg) {
      pa = -pa;
      pb = -pb;
    }
    a += pa;
    b += pb;
    first = false;
  }
  return make_scalar(c, f, a, b);
}

inline void expect_end(Cursor& c) {
  c.skip_space();
  if (!c.done()) c.error("expected end of input");
}

}  // namespace detail

/// "Q", "Z<p>", "N(Q)", "N(Z<p>)", "QI", "Z<p>I".
inline FieldDescriptor parse_field(std::string_view tag) {
  Cursor c(tag);
  auto base = [&]() -> BaseField {
    c.skip_space();
    if (c.peek() == 'Q') {
      c.get();
      return BaseField::rationals();
    }
    if (c.peek() != 'Z') c.error("expected Q or Z<p>");
    c.get();
    mpz_class p;
    if (!detail::parse_digits(c, p)) c.error("expected a prime after Z");
    if (p > mpz_class("2147483647") || p < 2 || !is_prime_number(p.get_si()))
      c.error("modulus is not a supported prime");
    return BaseField::prime(p.get_si());
  };
  FieldDescriptor f;
  c.skip_space();
  if (c.peek() == 'N') {
    c.get();
    c.expect('(');
    f = FieldDescriptor::full(base());
    c.expect(')');
  } else {
    BaseField b = base();
    f = c.peek() == 'I' ? (c.get(), FieldDescriptor::pure(b)) : FieldDescriptor::real(b);
  }
  detail::expect_end(c);
  return f;
}

inline NNum parse_scalar(std::string_view text, FieldDescriptor f) {
  Cursor c(text);
  NNum x = detail::parse_scalar_body(c, f);
  detail::expect_end(c);
  return x;
}

namespace detail {

/// Splits "<body>@<tag>" at the last '@'.
inline std::pair<std::string_view, FieldDescriptor> split_literal(std::string_view text) {
  auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    Cursor c(text);
    while (!c.done()) c.get();
    c.error("expected '@<field>' suffix");
  }
  return {text.substr(0, at), parse_field(text.substr(at + 1))};
}

}  // namespace detail

/// "2I@N(Z3)"
inline NNum parse_scalar_literal(std::string_view text) {
  auto [body, f] = detail::split_literal(text);
  return parse_scalar(body, f);
}

/// Terms <scalar>, <scalar>x, <scalar>x^k joined by + or -; two-part
/// coefficients must be parenthesized.
inline NPoly parse_poly(std::string_view text, FieldDescriptor f) {
  Cursor c(text);
  NPoly acc(f);
  bool first = true;
  while (true) {
    c.skip_space();
    if (c.done()) {
      if (first) c.error("expected a polynomial term");
      break;
    }
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
      neg = c.get() == '-';
      c.skip_space();
    } else if (!first) {
      c.error("expected '+' or '-'");
    }
    NNum coef = f.one();
    bool has_coef = false;
    if (c.peek() == '(') {
      c.get();
      coef = detail::parse_scalar_body(c, f);
      c.expect(')');
      has_coef = true;
    } else {
      BaseElem a = BaseElem::zero(f.base), b = BaseElem::zero(f.base);
      if (detail::parse_part(c, f.base, a, b)) {
        coef = detail::make_scalar(c, {f.base, Flavor::Full}, a, b);
        has_coef = true;
      }
    }
    std::size_t deg = 0;
    c.skip_space();
    if (c.peek() == 'x') {
      c.get();
      deg = 1;
      if (c.accept('^')) {
        c.skip_space();
        mpz_class k;
        if (!detail::parse_digits(c, k)) c.error("expected an exponent");
        if (k > 4096) c.error("exponent too large");
        deg = k.get_ui();
      }
    } else if (!has_coef) {
      c.error("expected a coefficient or x");
    }
    if (neg) coef = -coef;
    std::vector<NNum> cs(deg + 1, NNum({f.base, Flavor::Full}, 0L, 0L));
    cs[deg] = coef;
    NPoly term({f.base, Flavor::Full}, cs);
    acc = NPoly({f.base, Flavor::Full}, (acc + term).coeffs());
    first = false;
  }
  try {
    return NPoly(f, acc.coeffs());
  } catch (const Error&) {
    c.error("coefficient outside " + f.tag());
  }
}

/// "[[I,0],[2,2]]" with a known field.
inline NMatrix parse_matrix_rows(std::string_view text, FieldDescriptor f) {
  Cursor c(text);
  std::vector<std::vector<NNum>> rows;
  c.expect('[');
  do {
    c.expect('[');
    std::vector<NNum> row;
    do row.push_back(detail::parse_scalar_body(c, f));
    while (c.accept(','));
    c.expect(']');
    if (!rows.empty() && row.size() != rows[0].size()) c.error("rows differ in length");
    rows.push_back(std::move(row));
  } while (c.accept(','));
  c.expect(']');
  detail::expect_end(c);
  std::vector<NNum> flat;
  for (auto& r : rows)
    for (auto& e : r) flat.push_back(e);
  return NMatrix(f, rows.size(), rows[0].size(), std::move(flat));
}

/// "[[I,0],[2,2]]@N(Z3)"
inline NMatrix parse_matrix_literal(std::string_view text) {
  auto [body, f] = detail::split_literal(text);
  return parse_matrix_rows(body, f);
}

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

/// {"field": "<tag>", "rows": [["<scalar>", ...], ...]}
inline NMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("rows") || !j["field"].is_string() || !j["rows"].is_array() ||
      j["rows"].empty())
    fail(ErrorKind::ParseError, "matrix document needs \"field\" and non-empty \"rows\"");
  FieldDescriptor f = parse_field(j["field"].get<std::string>());
  std::vector<NNum> flat;
  std::size_t cols = 0;
  for (const auto& row : j["rows"]) {
    if (!row.is_array() || row.empty()) fail(ErrorKind::ParseError, "each row must be a non-empty array");
    if (cols == 0) cols = row.size();
    if (row.size() != cols) fail(ErrorKind::ParseError, "rows differ in length");
    for (const auto& e : row) {
      if (e.is_string()) flat.push_back(parse_scalar(e.get<std::string>(), f));
      else if (e.is_number_integer()) flat.push_back(NNum(f, BaseElem(f.base, e.get<long>()), BaseElem::zero(f.base)));
      else fail(ErrorKind::ParseError, "matrix entries must be strings or integers");
    }
  }
  return NMatrix(f, j["rows"].size(), cols, std::move(flat));
}

/// Either a JSON document (leading '{') or a CLI literal.
inline NMatrix parse_matrix(std::string_view text) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string_view::npos && text[k] == '{') return matrix_from_json(parse_json(text));
  return parse_matrix_literal(text);
}

/// "(1,I,0)" with a known field.
inline std::vector<NNum> parse_tuple(std::string_view text, FieldDescriptor f) {
  Cursor c(text);
  std::vector<NNum> out;
  c.expect('(');
  do out.push_back(detail::parse_scalar_body(c, f));
  while (c.accept(','));
  c.expect(')');
  detail::expect_end(c);
  return out;
}

}  // namespace nfold
