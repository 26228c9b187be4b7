#include "oak/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "oak/errors.hpp"
#include "oak/expr_parser.hpp"

namespace oak {

// ---------------------------------------------------------------------------
// Symbol

Symbol::Symbol(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> pool;
  std::lock_guard lock(mutex);
  auto it = pool.find(name);
  if (it == pool.end()) it = pool.emplace(name).first;
  name_ = &*it;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Symbol s, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(s, exponent);
}

unsigned Monomial::degree(Symbol s) const {
  for (const auto& [sym, e] : factors_)
    if (sym == s) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return other.degree(f.first) >= f.second; });
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& [sym, e] : other.factors_) {
    const unsigned mine = degree(sym);
    if (e > mine) out.factors_.emplace_back(sym, e - mine);
  }
  return out;
}

Monomial Monomial::without(Symbol s) const {
  Monomial out;
  for (const auto& f : factors_)
    if (!(f.first == s)) out.factors_.push_back(f);
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [sym, e] : factors_) {
    if (!out.empty()) out += '*';
    out += sym.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool LexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    if (i == fa.size()) return false;
    if (j == fb.size()) return true;
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
      continue;
    }
    return fa[i].first < fb[j].first;
  }
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) { add_term(Monomial(), c); }

Polynomial::Polynomial(Symbol s) { add_term(Monomial(s), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) { add_term(m, c); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational canonical = c;
  canonical.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, canonical);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

std::set<Symbol> Polynomial::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

std::optional<Symbol> Polynomial::first_symbol() const {
  std::optional<Symbol> best;
  for (const auto& [m, c] : terms_) {
    if (m.is_one()) continue;
    const Symbol s = m.factors().front().first;
    if (!best || s < *best) best = s;
  }
  return best;
}

unsigned Polynomial::degree(Symbol s) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(s));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  out -= o;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mm, v] : terms_) out.terms_.emplace(mm * m, v * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::map<unsigned, Polynomial> Polynomial::as_univariate(Symbol s) const {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : terms_) out[m.degree(s)].add_term(m.without(s), c);
  return out;
}

Polynomial Polynomial::from_univariate(Symbol s, const std::map<unsigned, Polynomial>& coeffs) {
  Polynomial out;
  for (const auto& [k, p] : coeffs) out += p.times_monomial(Monomial(s, k), Rational(1));
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return {};
  return scaled(Rational(1) / leading_coefficient());
}

std::pair<Rational, Polynomial> Polynomial::integer_primitive() const {
  if (terms_.empty()) return {Rational(0), Polynomial()};
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : terms_) den_lcm = lcm(den_lcm, c.get_den());
  mpz_class num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, v);
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading_coefficient() < 0) content = -content;
  return {content, scaled(Rational(1) / content)};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += mag.get_str() + "*" + m.to_string();
    }
  }
  return out;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (den.is_constant()) return num.scaled(Rational(1) / den.constant_value());
  Polynomial quotient;
  Polynomial rest = num;
  const Monomial& lm = den.leading_monomial();
  const Rational& lc = den.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    if (!lm.divides(rm)) throw std::invalid_argument("inexact polynomial division");
    const Monomial q = lm.quotient_of(rm);
    const Rational c = rest.leading_coefficient() / lc;
    quotient += Polynomial(q, c);
    rest -= den.times_monomial(q, c);
  }
  return quotient;
}

namespace {

using Univariate = std::map<unsigned, Polynomial>;

unsigned top_degree(const Univariate& u) { return u.rbegin()->first; }

Polynomial content_of(const Univariate& u) {
  Polynomial g;
  for (const auto& [k, c] : u) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Univariate divide_coefficients(const Univariate& u, const Polynomial& c) {
  Univariate out;
  for (const auto& [k, p] : u) out.emplace(k, divide_exact(p, c));
  return out;
}

Univariate primitive_part(const Univariate& u) { return divide_coefficients(u, content_of(u)); }

Univariate pseudo_remainder(Univariate r, const Univariate& b) {
  const unsigned db = top_degree(b);
  const Polynomial& lcb = b.rbegin()->second;
  while (!r.empty() && top_degree(r) >= db) {
    const unsigned dr = top_degree(r);
    const Polynomial lcr = r.rbegin()->second;
    Univariate next;
    for (const auto& [k, c] : r) next[k] += lcb * c;
    for (const auto& [k, c] : b) next[k + dr - db] -= lcr * c;
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : ++it;
    r = std::move(next);
  }
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  const auto sa = a.first_symbol();
  const auto sb = b.first_symbol();
  const Symbol x = !sa ? *sb : !sb ? *sa : (*sb < *sa ? *sb : *sa);

  const Univariate ua = a.as_univariate(x);
  const Univariate ub = b.as_univariate(x);
  const Polynomial ca = content_of(ua);
  const Polynomial cb = content_of(ub);
  const Polynomial c = gcd(ca, cb);
  if (top_degree(ua) == 0 || top_degree(ub) == 0) return c.monic();

  Univariate pa = divide_coefficients(ua, ca);
  Univariate pb = divide_coefficients(ub, cb);
  if (top_degree(pa) < top_degree(pb)) std::swap(pa, pb);
  Univariate g;
  while (true) {
    Univariate r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = std::move(pb);
      break;
    }
    if (top_degree(r) == 0) {
      g = Univariate{{0U, Polynomial(1)}};
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  g = primitive_part(g);
  return (Polynomial::from_univariate(x, g) * c).monic();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& v) : num_(v), den_(1) {}

Scalar::Scalar(const Polynomial& p) : num_(p), den_(1) {}

Scalar::Scalar(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(Rational(1) / den_.constant_value());
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(Rational(1) / lc);
    den_ = den_.scaled(Rational(1) / lc);
  }
}

bool Scalar::is_one() const { return is_rational() && to_rational() == 1; }

Rational Scalar::to_rational() const {
  if (!is_rational()) throw std::logic_error("scalar " + to_string() + " is not rational");
  return num_.constant_value();
}

bool Scalar::is_integer() const { return is_rational() && to_rational().get_den() == 1; }

int Scalar::leading_sign() const {
  if (num_.is_zero()) return 0;
  return sgn(num_.leading_coefficient());
}

std::set<Symbol> Scalar::symbols() const {
  auto out = num_.symbols();
  for (Symbol s : den_.symbols()) out.insert(s);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (is_rational() && o.is_rational()) return *this = Scalar(to_rational() * o.to_rational());
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero scalar");
  if (is_rational() && o.is_rational()) return *this = Scalar(to_rational() / o.to_rational());
  Polynomial n = num_ * o.den_;
  Polynomial d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionByZero("negative power of zero");
    return (Scalar(1) / *this).pow(-e);
  }
  Scalar out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  out.normalize();
  return out;
}

namespace {

Scalar substitute_polynomial(const Polynomial& p, const std::map<Symbol, Scalar>& values) {
  Scalar out;
  for (const auto& [m, c] : p.terms()) {
    Scalar term(c);
    for (const auto& [sym, e] : m.factors()) {
      auto it = values.find(sym);
      const Scalar base = it == values.end() ? Scalar(Polynomial(sym)) : it->second;
      term *= base.pow(e);
    }
    out += term;
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(const std::map<Symbol, Scalar>& values) const {
  const Scalar n = substitute_polynomial(num_, values);
  const Scalar d = substitute_polynomial(den_, values);
  if (d.is_zero()) throw DivisionByZero("denominator " + den_.to_string() + " vanishes");
  return n / d;
}

Rational Scalar::evaluate(const std::map<Symbol, Rational>& values) const {
  std::map<Symbol, Scalar> as_scalars;
  for (const auto& [s, v] : values) as_scalars.emplace(s, Scalar(v));
  const Scalar r = substitute(as_scalars);
  if (!r.is_rational())
    throw std::invalid_argument("unassigned symbols remain in " + r.to_string());
  return r.to_rational();
}

std::string Scalar::to_string() const {
  if (num_.is_zero()) return "0";
  if (is_rational()) return to_rational().get_str();
  const auto [cn, pn] = num_.integer_primitive();
  const auto [cd, pd] = den_.integer_primitive();
  Rational ratio = cn / cd;
  const Polynomial top = pn.scaled(Rational(ratio.get_num()));
  const Polynomial bottom = pd.scaled(Rational(ratio.get_den()));
  std::string n = top.to_string();
  if (bottom.is_constant() && bottom.constant_value() == 1) return n;
  if (top.terms().size() > 1) n = "(" + n + ")";
  std::string d = bottom.to_string();
  if (!bottom.is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

struct ScalarTraits {
  const SymbolSet* allowed;
  static constexpr bool juxtaposition = false;

  Scalar from_scalar(const Scalar& s) const { return s; }
  Scalar atom(const detail::Token& tok) const {
    if (tok.text.find('[') != std::string::npos || (allowed && !allowed->count(tok.text)))
      throw ParseError("unknown symbol", tok.text, tok.pos);
    return Scalar::symbol(tok.text);
  }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b, const detail::Token& op) const {
    if (b.is_zero()) throw ParseError("division by zero", op.text, op.pos);
    return a / b;
  }
  Scalar pow(const Scalar& a, long e, const detail::Token& tok) const {
    if (e < 0 && a.is_zero()) throw ParseError("negative power of zero", tok.text, tok.pos);
    return a.pow(e);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const SymbolSet* allowed) {
  ScalarTraits traits{allowed};
  return detail::ExprParser<Scalar, ScalarTraits>(text, traits).parse();
}

Scalar binomial(const Scalar& x, unsigned k) {
  Scalar out(1);
  for (unsigned i = 0; i < k; ++i) out *= (x - Scalar(static_cast<long>(i))) / Scalar(static_cast<long>(i + 1));
  return out;
}

}  // namespace oak
