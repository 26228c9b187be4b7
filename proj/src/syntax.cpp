#include "oak/syntax.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "oak/errors.hpp"
#include "oak/expr_parser.hpp"

namespace oak {

SymbolSet default_symbols(int n) {
  SymbolSet out{"s"};
  for (int i = 1; i <= n; ++i) {
    out.insert("a" + std::to_string(i));
    out.insert("b" + std::to_string(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

/// True if the printed scalar has a '+' or '-' outside parentheses after position 0.
bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if ((c == '+' || c == '-') && depth == 0 && i > 0 && s[i - 1] != '^') return true;
  }
  return false;
}

std::string coefficient_text(const Scalar& c) {
  const std::string s = c.to_string();
  return needs_parens(s) ? "(" + s + ")" : s;
}

std::string power(const std::string& base, long e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    Scalar c = coeff;
    const bool negative = c.leading_sign() < 0;
    if (negative) c = -c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (mono.empty()) out += coefficient_text(c);
    else if (c.is_one()) out += mono;
    else out += coefficient_text(c) + " " + mono;
  }
  return out;
}

std::string to_string(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const int c = r[i];
    if (c == 0) continue;
    out += c > 0 ? '+' : '-';
    const int a = c > 0 ? c : -c;
    if (a > 1) out += std::to_string(a);
    out += "e" + std::to_string(i + 1);
  }
  return out;
}

std::string to_string(const BasisElement& b) {
  switch (b.kind) {
    case BasisElement::Kind::Central:
      return "z";
    case BasisElement::Kind::Cartan:
      return "h" + std::to_string(b.index);
    case BasisElement::Kind::RootVector:
      break;
  }
  return "X[" + to_string(b.root) + "]";
}

std::string to_string(const LieElement& x) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [b, c] : x.terms()) terms.emplace_back(c, to_string(b));
  return join_terms(terms);
}

std::string word_to_string(const Word& sorted_word, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  std::string out;
  std::size_t i = 0;
  while (i < sorted_word.size()) {
    std::size_t j = i;
    while (j < sorted_word.size() && sorted_word[j] == sorted_word[i]) ++j;
    if (!out.empty()) out += ' ';
    out += power(to_string(g.element(sorted_word[i])), static_cast<long>(j - i));
    i = j;
  }
  return out;
}

std::string to_string(const UEAElement& u) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::size_t d = u.degree() + 1; d-- > 0;)
    for (const auto& [w, c] : u.terms())
      if (w.size() == d) terms.emplace_back(c, word_to_string(w, u.rank()));
  return join_terms(terms);
}

std::string to_string(const WeylMonomial& m) {
  std::string out;
  auto put = [&](const char* var, std::size_t i, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += power(var + std::to_string(i + 1), e);
  };
  for (std::size_t i = 0; i < m.t.size(); ++i) put("t", i, m.t[i]);
  for (std::size_t i = 0; i < m.d.size(); ++i) put("d", i, m.d[i]);
  return out;
}

std::string to_string(const WeylElement& p) {
  auto degree = [](const WeylMonomial& m) {
    unsigned d = 0;
    for (std::size_t i = 0; i < m.t.size(); ++i) d += m.t[i] + m.d[i];
    return d;
  };
  std::vector<std::pair<Scalar, std::string>> terms;
  for (unsigned d = p.degree() + 1; d-- > 0;)
    for (const auto& [m, c] : p.terms())
      if (degree(m) == d) terms.emplace_back(c, to_string(m));
  return join_terms(terms);
}

std::string offset_monomial(const Offset& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += power("t" + std::to_string(i + 1), m[i]);
  }
  return out;
}

std::string to_string(const LaurentVector& v) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [m, c] : v.terms) terms.emplace_back(c, offset_monomial(m));
  return join_terms(terms);
}

std::string to_string(const TensorElement& x) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [k, c] : x.terms()) {
    std::string left = word_to_string(k.first, x.rank());
    std::string right = to_string(k.second);
    terms.emplace_back(c, (left.empty() ? "1" : left) + " (x) " + (right.empty() ? "1" : right));
  }
  return join_terms(terms);
}

std::string to_string(const LocalizedOperator& op) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [k, c] : op.terms()) {
    std::string mono = word_to_string(k.first, op.rank());
    for (std::size_t i = 0; i < k.second.size(); ++i) {
      if (k.second[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "X[-2e" + std::to_string(i + 1) + "]^-" + std::to_string(k.second[i]);
    }
    terms.emplace_back(c, mono);
  }
  return join_terms(terms);
}

std::string to_string(const ModuleDescriptor& m) {
  if (m.kind() == ModuleDescriptor::Kind::ShaleWeil) return "S";
  std::string out = m.kind() == ModuleDescriptor::Kind::FullLaurent ? "F " : "G ";
  for (std::size_t i = 0; i < m.base().size(); ++i) {
    if (i > 0) out += ',';
    out += m.base()[i].to_string();
  }
  return out;
}

std::string offset_to_string(const Offset& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::Token;

/// Index in "h3", "t12"; 0 if text is not prefix + digits.
int indexed_name(const std::string& text, char prefix) {
  if (text.size() < 2 || text[0] != prefix) return 0;
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return 0;
  if (text[1] == '0' || text.size() > 4) return -1;
  return std::stoi(text.substr(1));
}

Root parse_root(const std::string& body, int n, const std::string& token, std::size_t pos) {
  Root r(static_cast<std::size_t>(n), 0);
  std::size_t i = 0;
  if (body.empty()) throw ParseError("empty root", token, pos);
  while (i < body.size()) {
    int sign = 1;
    if (body[i] == '+' || body[i] == '-') {
      sign = body[i] == '-' ? -1 : 1;
      ++i;
    } else if (i > 0) {
      throw ParseError("expected '+' or '-' in root", token, pos);
    }
    int mult = 1;
    const std::size_t start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (i > start) mult = std::stoi(body.substr(start, std::min<std::size_t>(i - start, 3)));
    if (i >= body.size() || body[i] != 'e') throw ParseError("expected 'e<index>' in root", token, pos);
    ++i;
    const std::size_t idx_start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (i == idx_start) throw ParseError("missing index after 'e'", token, pos);
    const int idx = std::stoi(body.substr(idx_start, std::min<std::size_t>(i - idx_start, 3)));
    if (idx < 1 || idx > n) throw ParseError("index out of range for rank " + std::to_string(n), token, pos);
    r[static_cast<std::size_t>(idx - 1)] += sign * mult;
  }
  return r;
}

std::optional<BasisElement> basis_atom(const Token& tok, int n) {
  const std::string& t = tok.text;
  if (t == "z") return BasisElement::central();
  if (const int h = indexed_name(t, 'h'); h != 0) {
    if (h < 1 || h > n) throw ParseError("Cartan index out of range for rank " + std::to_string(n), t, tok.pos);
    return BasisElement::cartan(h);
  }
  if (t.size() >= 3 && t[0] == 'X' && t[1] == '[' && t.back() == ']') {
    const Root r = parse_root(t.substr(2, t.size() - 3), n, t, tok.pos);
    const BasisElement b = BasisElement::root_vector(r);
    if (!LieAlgebra::of_rank(n).contains(b)) throw ParseError("not a root of g_" + std::to_string(n), t, tok.pos);
    return b;
  }
  return std::nullopt;
}

Scalar scalar_atom(const Token& tok, const SymbolSet* allowed) {
  if (tok.text.find('[') != std::string::npos || (allowed && !allowed->count(tok.text)))
    throw ParseError("unknown symbol", tok.text, tok.pos);
  return Scalar::symbol(tok.text);
}

/// Shared arithmetic for rings that embed scalars and expose `scalar_part`.
template <class Ring, class Derived>
struct RingTraits {
  static constexpr bool juxtaposition = true;
  const SymbolSet* allowed;
  int n;

  Derived& self() { return static_cast<Derived&>(*this); }
  Ring add(const Ring& a, const Ring& b) { return a + b; }
  Ring sub(const Ring& a, const Ring& b) { return a - b; }
  Ring div(const Ring& a, const Ring& b, const Token& op) {
    const auto c = self().as_scalar(b);
    if (!c) throw ParseError("division by a non-scalar", op.text, op.pos);
    if (c->is_zero()) throw ParseError("division by zero", op.text, op.pos);
    return self().scale(a, Scalar(1) / *c);
  }
  Ring pow(const Ring& a, long e, const Token& tok) {
    if (const auto c = self().as_scalar(a)) {
      if (e < 0 && c->is_zero()) throw ParseError("negative power of zero", tok.text, tok.pos);
      return self().from_scalar(c->pow(e));
    }
    if (e < 0) throw ParseError("negative exponent on a non-scalar", tok.text, tok.pos);
    if (e > 64) throw ParseError("exponent too large", tok.text, tok.pos);
    Ring out = self().from_scalar(Scalar(1));
    for (long k = 0; k < e; ++k) out = self().mul(out, a);
    return out;
  }
};

struct UEATraits : RingTraits<UEAElement, UEATraits> {
  UEAElement from_scalar(const Scalar& c) const { return c * UEAElement::unit(n); }
  UEAElement atom(const Token& tok) const {
    if (const auto b = basis_atom(tok, n))
      return UEAElement::monomial(n, Word{static_cast<std::uint8_t>(LieAlgebra::of_rank(n).index_of(*b))});
    return from_scalar(scalar_atom(tok, allowed));
  }
  UEAElement mul(const UEAElement& a, const UEAElement& b) const { return multiply(a, b); }
  UEAElement scale(const UEAElement& a, const Scalar& c) const { return c * a; }
  std::optional<Scalar> as_scalar(const UEAElement& a) const {
    if (a.is_zero()) return Scalar();
    if (a.terms().size() == 1 && a.terms().begin()->first.empty()) return a.terms().begin()->second;
    return std::nullopt;
  }
};

struct WeylTraits : RingTraits<WeylElement, WeylTraits> {
  WeylElement from_scalar(const Scalar& c) const { return WeylElement::constant(n, c); }
  WeylElement atom(const Token& tok) const {
    for (char prefix : {'t', 'd'}) {
      const int i = indexed_name(tok.text, prefix);
      if (i == 0) continue;
      if (i < 1 || i > n) throw ParseError("variable index out of range for rank " + std::to_string(n), tok.text, tok.pos);
      return prefix == 't' ? WeylElement::t(n, i) : WeylElement::d(n, i);
    }
    return from_scalar(scalar_atom(tok, allowed));
  }
  WeylElement mul(const WeylElement& a, const WeylElement& b) const { return a * b; }
  WeylElement scale(const WeylElement& a, const Scalar& c) const { return c * a; }
  std::optional<Scalar> as_scalar(const WeylElement& a) const {
    if (a.is_zero()) return Scalar();
    if (a.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *a.terms().begin();
    for (auto e : m.t)
      if (e) return std::nullopt;
    for (auto e : m.d)
      if (e) return std::nullopt;
    return c;
  }
};

struct LaurentTraits : RingTraits<LaurentVector, LaurentTraits> {
  std::vector<Scalar> base;
  LaurentVector from_scalar(const Scalar& c) const {
    LaurentVector v{base, {}};
    v.add(Offset(static_cast<std::size_t>(n), 0), c);
    return v;
  }
  LaurentVector atom(const Token& tok) const {
    const int i = indexed_name(tok.text, 't');
    if (i != 0) {
      if (i < 1 || i > n) throw ParseError("variable index out of range for rank " + std::to_string(n), tok.text, tok.pos);
      Offset m(static_cast<std::size_t>(n), 0);
      m[static_cast<std::size_t>(i - 1)] = 1;
      return LaurentVector::basis(base, m);
    }
    return from_scalar(scalar_atom(tok, allowed));
  }
  LaurentVector mul(const LaurentVector& a, const LaurentVector& b) const {
    LaurentVector out{base, {}};
    for (const auto& [x, c] : a.terms)
      for (const auto& [y, d] : b.terms) out.add(x + y, c * d);
    return out;
  }
  LaurentVector scale(LaurentVector a, const Scalar& c) const { return a *= c; }
  std::optional<Scalar> as_scalar(const LaurentVector& a) const {
    if (a.is_zero()) return Scalar();
    if (a.terms.size() != 1) return std::nullopt;
    const auto& [m, c] = *a.terms.begin();
    for (int e : m)
      if (e) return std::nullopt;
    return c;
  }
  LaurentVector pow(const LaurentVector& a, long e, const Token& tok) {
    if (e < 0 && a.terms.size() == 1) {
      const auto& [m, c] = *a.terms.begin();
      if (!c.is_one()) throw ParseError("negative power of a scaled monomial", tok.text, tok.pos);
      Offset target(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < m.size(); ++i) target[i] = static_cast<int>(m[i] * e);
      return LaurentVector::basis(base, target);
    }
    return RingTraits::pow(a, e, tok);
  }
};

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank must be between 1 and " + std::to_string(kMaxRank));
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::pair<std::string, std::size_t>> split_commas(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.emplace_back(std::string(text.substr(start, end - start)), start);
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

BasisElement parse_basis_element(std::string_view text, int n) {
  check_rank(n);
  const auto tokens = detail::tokenize(text);
  if (tokens.size() != 2 || tokens[0].kind != Token::Kind::Ident)
    throw ParseError("expected a single basis element", std::string(text), 0);
  if (const auto b = basis_atom(tokens[0], n)) return *b;
  throw ParseError("not a basis element", tokens[0].text, tokens[0].pos);
}

UEAElement parse_uea(std::string_view text, int n, const SymbolSet* allowed) {
  check_rank(n);
  UEATraits traits{{allowed, n}};
  return detail::ExprParser<UEAElement, UEATraits>(text, traits).parse();
}

LieElement parse_lie(std::string_view text, int n, const SymbolSet* allowed) {
  const UEAElement u = parse_uea(text, n, allowed);
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  LieElement out(n);
  for (const auto& [w, c] : u.terms()) {
    if (w.size() != 1) throw ParseError("not a Lie algebra element (degree must be 1)", std::string(text), 0);
    out.add(g.element(w[0]), c);
  }
  return out;
}

WeylElement parse_weyl(std::string_view text, int n, const SymbolSet* allowed) {
  check_rank(n);
  WeylTraits traits{{allowed, n}};
  return detail::ExprParser<WeylElement, WeylTraits>(text, traits).parse();
}

LaurentVector parse_laurent(std::string_view text, const std::vector<Scalar>& base, const SymbolSet* allowed) {
  const int n = static_cast<int>(base.size());
  check_rank(n);
  LaurentTraits traits{{allowed, n}, base};
  return detail::ExprParser<LaurentVector, LaurentTraits>(text, traits).parse();
}

std::vector<Scalar> parse_scalar_list(std::string_view text, int n, const SymbolSet* allowed) {
  check_rank(n);
  std::vector<Scalar> out;
  for (const auto& [piece, pos] : split_commas(text)) {
    if (trim(piece).empty()) throw ParseError("empty list entry", std::string(text), pos);
    try {
      out.push_back(parse_scalar(piece, allowed));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.token(), pos + e.position());
    }
  }
  if (out.size() == 1 && n > 1) out.assign(static_cast<std::size_t>(n), out.front());
  if (static_cast<int>(out.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " comma-separated entries", std::string(text), 0);
  return out;
}

Offset parse_offset(std::string_view text, int n) {
  check_rank(n);
  Offset out;
  for (const auto& [piece, pos] : split_commas(text)) {
    const std::string p = trim(piece);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer", p, pos);
    }
    if (used != p.size()) throw ParseError("expected an integer", p, pos);
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " comma-separated integers", std::string(text), 0);
  return out;
}

ModuleDescriptor parse_module(std::string_view text, int n, const SymbolSet* allowed) {
  check_rank(n);
  const std::string t = trim(text);
  if (t == "S") return ModuleDescriptor::shale_weil(n);
  if (t.size() < 2 || (t[0] != 'F' && t[0] != 'G') || !std::isspace(static_cast<unsigned char>(t[1])))
    throw ParseError("expected 'F a1,..', 'G a1,..' or 'S'", t.substr(0, t.find(' ')), 0);
  const std::string rest = t.substr(2);
  std::vector<Scalar> a;
  try {
    a = parse_scalar_list(rest, n, allowed);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.token(), e.position() + 2);
  }
  if (t[0] == 'F') return ModuleDescriptor::full(std::move(a));
  return ModuleDescriptor::quotient(std::move(a));
}

}  // namespace oak
