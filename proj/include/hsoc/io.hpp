#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hsoc/code.hpp"

namespace hsoc {

// ---------------------------------------------------------------------------
// expression lexer/parser
//
// Element tokens and generator polynomials share one grammar: sums of
// products of integers, the names e / y (field generators) and the variable
// (x in polynomials), with ^ for powers, juxtaposition for products and
// parentheses.  "e^2x^2", "1+2*e", "(1+y)*e" and "x^7 + e x^5 + 1" all parse.

namespace detail {

struct Tok {
  enum Kind { Int, Name, Plus, Minus, Star, Caret, LPar, RPar, End } kind;
  unsigned long long ival = 0;
  char name = 0;
  std::size_t pos = 0;
};

inline std::vector<Tok> lex_expr(const std::string& s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t') { ++i; continue; }
    Tok t;
    t.pos = i;
    if (c >= '0' && c <= '9') {
      unsigned long long v = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + (s[i] - '0');
        if (v > (1ull << 62)) throw parse_error("integer literal too large");
        ++i;
      }
      t.kind = Tok::Int;
      t.ival = v;
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      t.kind = Tok::Name;  // single-letter names so that "ex^5" means e * x^5
      t.name = c;
      ++i;
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LPar; break;
        case ')': t.kind = Tok::RPar; break;
        default:
          throw parse_error(std::string("unexpected character '") + c + "' in expression");
      }
      ++i;
    }
    out.push_back(t);
  }
  out.push_back({Tok::End, 0, 0, s.size()});
  return out;
}

// Ring adapters: full tower field, or the bootstrap subfield used while a
// field spec is still being read.
struct FieldRing {
  const Field& F;
  using V = Fel;
  V zero() const { return 0; }
  V one() const { return 1; }
  V add(V a, V b) const { return F.add(a, b); }
  V neg(V a) const { return F.neg(a); }
  V mul(V a, V b) const { return F.mul(a, b); }
  V from_int(unsigned long long t) const { return F.from_int((long long)(t % F.p())); }
  V atom(char name) const {
    if (name == 'e') return F.e();
    if (name == 'y') {
      if (F.h() == 1) throw parse_error("'y' is undefined when h = 1");
      return F.subfield_gen();
    }
    throw parse_error(std::string("unknown name '") + name + "'");
  }
};

struct SubfieldRing {
  const Subfield& sf;
  using V = std::uint32_t;
  V zero() const { return 0; }
  V one() const { return 1; }
  V add(V a, V b) const { return sf.add(a, b); }
  V neg(V a) const { return sf.neg(a); }
  V mul(V a, V b) const { return sf.mul(a, b); }
  V from_int(unsigned long long t) const { return V(t % sf.p); }
  V atom(char name) const {
    if (name == 'y') {
      if (sf.h == 1) throw parse_error("'y' is undefined when h = 1");
      return sf.p;
    }
    throw parse_error(std::string("unknown name '") + name + "' (only y may appear here)");
  }
};

template <class Ring>
class PolyParser {
 public:
  using V = typename Ring::V;
  using P = std::vector<V>;  // ascending coefficients, empty = 0

  PolyParser(const Ring& ring, char var, const std::vector<Tok>& ts)
      : ring_(ring), var_(var), ts_(ts) {}

  P parse() {
    P r = expr();
    if (peek().kind != Tok::End) throw parse_error("trailing tokens in expression");
    return r;
  }

 private:
  const Tok& peek() const { return ts_[i_]; }
  Tok take() { return ts_[i_++]; }

  static bool starts_factor(const Tok& t) {
    return t.kind == Tok::Int || t.kind == Tok::Name || t.kind == Tok::LPar;
  }

  P expr() {
    bool negate = false;
    if (peek().kind == Tok::Minus) { take(); negate = true; }
    P r = term();
    if (negate) r = pneg(r);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      P t = term();
      r = minus ? psub(r, t) : padd(r, t);
    }
    return r;
  }

  P term() {
    P r = factor();
    while (true) {
      if (peek().kind == Tok::Star) take();
      else if (!starts_factor(peek())) break;
      r = pmul(r, factor());
    }
    return r;
  }

  P factor() {
    P r = primary();
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Int) throw parse_error("exponent must be an integer");
      unsigned long long j = take().ival;
      r = ppow(r, j);
    }
    return r;
  }

  P primary() {
    const Tok& t = peek();
    if (t.kind == Tok::Int) { take(); return pconst(ring_.from_int(t.ival)); }
    if (t.kind == Tok::Name) {
      take();
      if (t.name == var_) return P{ring_.zero(), ring_.one()};
      if (var_ == 0 && (t.name == 'x'))
        throw parse_error("'x' is not allowed in a scalar element");
      return pconst(ring_.atom(t.name));
    }
    if (t.kind == Tok::LPar) {
      take();
      P r = expr();
      if (peek().kind != Tok::RPar) throw parse_error("missing ')'");
      take();
      return r;
    }
    throw parse_error("unexpected token in expression");
  }

  P pconst(V v) const { return v == ring_.zero() ? P{} : P{v}; }
  void trim(P& a) const { while (!a.empty() && a.back() == ring_.zero()) a.pop_back(); }
  P padd(P a, const P& b) const {
    if (a.size() < b.size()) a.resize(b.size(), ring_.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ring_.add(a[i], b[i]);
    trim(a);
    return a;
  }
  P pneg(P a) const {
    for (auto& c : a) c = ring_.neg(c);
    return a;
  }
  P psub(P a, const P& b) const { return padd(std::move(a), pneg(b)); }
  P pmul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    if (a.size() + b.size() > 4096) throw parse_error("polynomial degree too large");
    P c(a.size() + b.size() - 1, ring_.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        c[i + j] = ring_.add(c[i + j], ring_.mul(a[i], b[j]));
    trim(c);
    return c;
  }
  P ppow(P a, unsigned long long j) const {
    P r = pconst(ring_.one());
    while (j) {
      if (j & 1) r = pmul(r, a);
      j >>= 1;
      if (j) a = pmul(a, a);
    }
    return r;
  }

  const Ring& ring_;
  char var_;
  const std::vector<Tok>& ts_;
  std::size_t i_ = 0;
};

}  // namespace detail

// polynomial in x over the tower field (e and y usable in coefficients)
inline std::vector<Fel> parse_poly_x(const Field& F, const std::string& s) {
  auto toks = detail::lex_expr(s);
  detail::FieldRing ring{F};
  return detail::PolyParser<detail::FieldRing>(ring, 'x', toks).parse();
}

inline Fel parse_element(const Field& F, const std::string& s) {
  auto toks = detail::lex_expr(s);
  detail::FieldRing ring{F};
  auto p = detail::PolyParser<detail::FieldRing>(ring, 0, toks).parse();
  if (p.size() > 1) throw parse_error("expected a scalar element");
  return p.empty() ? Fel(0) : p[0];
}

// ---------------------------------------------------------------------------
// canonical printing

namespace detail {

inline std::string subfield_string(const Field& F, Fel u) {
  if (F.h() == 1) return std::to_string(u);
  auto digits = F.prime_digits(u);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) out += std::to_string(digits[i]);
    else {
      if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
      out += 'y';
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

inline bool composite(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-') != std::string::npos;
}

}  // namespace detail

inline std::string format_element(const Field& F, Fel v) {
  Fel a0 = F.lo(v), a1 = F.hi(v);
  if (a1 == 0) return detail::subfield_string(F, a0);
  std::string epart;
  if (a1 == 1) epart = "e";
  else {
    std::string s = detail::subfield_string(F, a1);
    epart = (detail::composite(s) ? "(" + s + ")" : s) + "*e";
  }
  if (a0 == 0) return epart;
  return detail::subfield_string(F, a0) + "+" + epart;
}

inline std::string format_poly_x(const Field& F, const std::vector<Fel>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coef = format_element(F, c[i]);
    if (i == 0) { out += coef; continue; }
    if (coef != "1") out += (detail::composite(coef) ? "(" + coef + ")" : coef) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// file format

namespace detail {

struct KV {
  std::string key, value;
  bool has_value = false;
};

inline std::vector<KV> split_kv(const std::string& line, std::size_t line_no) {
  std::vector<KV> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') { ++i; continue; }
    KV kv;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '=')
      kv.key += line[i++];
    if (i < line.size() && line[i] == '=') {
      ++i;
      kv.has_value = true;
      if (i < line.size() && line[i] == '"') {
        ++i;
        while (i < line.size() && line[i] != '"') kv.value += line[i++];
        if (i == line.size()) throw parse_error("unterminated quote", line_no);
        ++i;
      } else {
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
          kv.value += line[i++];
      }
    }
    out.push_back(std::move(kv));
  }
  return out;
}

inline unsigned long long kv_uint(const std::vector<KV>& kvs, const std::string& key,
                                  std::size_t line_no) {
  for (const auto& kv : kvs)
    if (kv.key == key) {
      if (!kv.has_value || kv.value.empty())
        throw parse_error("missing value for '" + key + "'", line_no);
      try {
        return std::stoull(kv.value);
      } catch (...) {
        throw parse_error("'" + key + "' must be an integer", line_no);
      }
    }
  throw parse_error("missing '" + key + "='", line_no);
}

inline const std::string* kv_find(const std::vector<KV>& kvs, const std::string& key) {
  for (const auto& kv : kvs)
    if (kv.key == key && kv.has_value) return &kv.value;
  return nullptr;
}

}  // namespace detail

// `field p=3 h=1 mod2="x^2-x-1"` with optional modq="..." (polynomial in y
// over F_p) for h > 1
inline FieldPtr parse_field_kv(const std::vector<detail::KV>& kvs, std::size_t line_no) {
  FieldSpec spec;
  spec.p = (unsigned)detail::kv_uint(kvs, "p", line_no);
  if (detail::kv_find(kvs, "h")) spec.h = (unsigned)detail::kv_uint(kvs, "h", line_no);
  try {
    detail::Subfield bootstrap;
    if (const std::string* mq = detail::kv_find(kvs, "modq")) {
      detail::Subfield prime = detail::make_subfield(spec.p, 1, {});
      auto toks = detail::lex_expr(*mq);
      detail::SubfieldRing ring{prime};
      auto poly = detail::PolyParser<detail::SubfieldRing>(ring, 'y', toks).parse();
      spec.modq.assign(poly.begin(), poly.end());
      bootstrap = detail::make_subfield(spec.p, spec.h, spec.modq);
    } else {
      bootstrap = detail::make_subfield(spec.p, spec.h, {});
      spec.modq = bootstrap.modq;
    }
    if (const std::string* m2 = detail::kv_find(kvs, "mod2")) {
      auto toks = detail::lex_expr(*m2);
      detail::SubfieldRing ring{bootstrap};
      auto poly = detail::PolyParser<detail::SubfieldRing>(ring, 'x', toks).parse();
      spec.mod2.reserve(poly.size());
      for (auto c : poly) spec.mod2.push_back(Fel(c));
    }
    return Field::make(spec);
  } catch (const parse_error& pe) {
    throw parse_error(pe.what(), line_no);
  } catch (const error& e) {
    throw parse_error(e.what(), line_no);
  }
}

inline std::string field_line_string(const Field& F) {
  std::ostringstream os;
  os << "field p=" << F.p() << " h=" << F.h();
  if (F.h() > 1) {
    os << " modq=\"";
    const auto& mq = F.spec().modq;
    bool first = true;
    for (std::size_t i = mq.size(); i-- > 0;) {
      if (mq[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) { os << mq[i]; continue; }
      if (mq[i] != 1) os << mq[i] << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
    os << '"';
  }
  // print mod2 over F_q in the variable x
  os << " mod2=\"";
  const auto& m2 = F.spec().mod2;
  bool first = true;
  for (std::size_t i = m2.size(); i-- > 0;) {
    if (m2[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string coef = detail::subfield_string(F, m2[i]);
    if (i == 0) { os << coef; continue; }
    if (coef != "1") os << (detail::composite(coef) ? "(" + coef + ")" : coef) << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  os << '"';
  return os.str();
}

struct LoadedInput {
  enum class Kind { Code, Cyclic } kind = Kind::Code;
  FieldPtr field;
  LinearCode code;     // for Cyclic inputs this is the cyclic code itself
  CyclicSpec cyclic;
};

inline LoadedInput read_input(std::istream& in, const std::string& name) {
  std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, text)
  {
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::size_t a = raw.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      std::size_t b = raw.find_last_not_of(" \t\r");
      lines.emplace_back(no, raw.substr(a, b - a + 1));
    }
  }
  if (lines.size() < 2) throw parse_error("file '" + name + "' is truncated");

  auto head = detail::split_kv(lines[0].second, lines[0].first);
  if (head.empty()) throw parse_error("empty header", lines[0].first);
  auto fkv = detail::split_kv(lines[1].second, lines[1].first);
  if (fkv.empty() || fkv[0].key != "field")
    throw parse_error("expected a 'field' line", lines[1].first);
  FieldPtr F = parse_field_kv(fkv, lines[1].first);

  LoadedInput out;
  out.field = F;
  if (head[0].key == "code") {
    std::size_t n = (std::size_t)detail::kv_uint(head, "n", lines[0].first);
    std::size_t k = (std::size_t)detail::kv_uint(head, "k", lines[0].first);
    if (n == 0 || k == 0 || k > n)
      throw parse_error("need 1 <= k <= n", lines[0].first);
    if (lines.size() != 2 + k)
      throw parse_error("expected " + std::to_string(k) + " generator rows, found " +
                        std::to_string(lines.size() - 2));
    Matrix gen(F, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& [line_no, text] = lines[2 + i];
      std::istringstream row(text);
      std::string tok;
      std::size_t j = 0;
      while (row >> tok) {
        if (j >= n) throw parse_error("too many entries in row", line_no);
        try {
          gen.at(i, j) = parse_element(*F, tok);
        } catch (const parse_error& pe) {
          throw parse_error("bad element '" + tok + "': " + pe.what(), line_no);
        }
        ++j;
      }
      if (j != n)
        throw parse_error("row has " + std::to_string(j) + " entries, expected " +
                          std::to_string(n), line_no);
    }
    out.kind = LoadedInput::Kind::Code;
    try {
      out.code = from_generator(std::move(gen));
    } catch (const error& e) {
      throw parse_error(std::string(e.what()) + " in '" + name + "'");
    }
  } else if (head[0].key == "cyclic") {
    std::size_t n = (std::size_t)detail::kv_uint(head, "n", lines[0].first);
    const std::string* g = detail::kv_find(head, "g");
    if (!g) throw parse_error("missing g=\"...\"", lines[0].first);
    if (lines.size() != 2) throw parse_error("unexpected extra lines after a cyclic header");
    CyclicSpec spec;
    spec.n = n;
    try {
      spec.g = parse_poly_x(*F, *g);
    } catch (const parse_error& pe) {
      throw parse_error("bad polynomial: " + std::string(pe.what()), lines[0].first);
    }
    out.kind = LoadedInput::Kind::Cyclic;
    out.cyclic = spec;
    out.code = cyclic_code(F, spec);
  } else {
    throw parse_error("unknown header '" + head[0].key + "'", lines[0].first);
  }
  return out;
}

inline LoadedInput read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_input(in, path);
}

inline void write_code_file(std::ostream& os, const LinearCode& C,
                            const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "code n=" << C.n << " k=" << C.k << "\n";
  os << field_line_string(*C.F) << "\n";
  std::vector<std::vector<std::string>> cells(C.k, std::vector<std::string>(C.n));
  std::vector<std::size_t> width(C.n, 0);
  for (std::size_t i = 0; i < C.k; ++i)
    for (std::size_t j = 0; j < C.n; ++j) {
      cells[i][j] = format_element(*C.F, C.gen.at(i, j));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  for (std::size_t i = 0; i < C.k; ++i) {
    for (std::size_t j = 0; j < C.n; ++j) {
      if (j) os << ' ';
      os << cells[i][j];
      if (j + 1 < C.n)
        os << std::string(width[j] - cells[i][j].size(), ' ');
    }
    os << "\n";
  }
}

inline void write_code_file(const std::string& path, const LinearCode& C,
                            const std::vector<std::string>& comments = {}) {
  std::ofstream os(path);
  if (!os) throw error("cannot write '" + path + "'");
  write_code_file(os, C, comments);
}

}  // namespace hsoc
