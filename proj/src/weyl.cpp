#include "oak/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oak/errors.hpp"

namespace oak {

namespace {

WeylMonomial unit_monomial(int n) {
  return {std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
          std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
}

void check_index(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("variable index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

Rational falling(const Rational& x, unsigned k) {
  Rational out = 1;
  for (unsigned j = 0; j < k; ++j) out *= x - j;
  return out;
}

Rational choose(unsigned n, unsigned k) { return falling(Rational(n), k) / falling(Rational(k), k); }

}  // namespace

WeylElement WeylElement::constant(int rank, const Scalar& c) {
  WeylElement out(rank);
  out.add(unit_monomial(rank), c);
  return out;
}

WeylElement WeylElement::t(int rank, int i) {
  check_index(rank, i);
  WeylMonomial m = unit_monomial(rank);
  m.t[static_cast<std::size_t>(i - 1)] = 1;
  WeylElement out(rank);
  out.add(m, Scalar(1));
  return out;
}

WeylElement WeylElement::d(int rank, int i) {
  check_index(rank, i);
  WeylMonomial m = unit_monomial(rank);
  m.d[static_cast<std::size_t>(i - 1)] = 1;
  WeylElement out(rank);
  out.add(m, Scalar(1));
  return out;
}

unsigned WeylElement::degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    unsigned deg = 0;
    for (auto e : m.t) deg += e;
    for (auto e : m.d) deg += e;
    best = std::max(best, deg);
  }
  return best;
}

void WeylElement::add(const WeylMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<WeylMonomial, Rational>> multiply_monomials(const WeylMonomial& a, const WeylMonomial& b) {
  // d^beta t^gamma = sum_k C(beta,k) gamma!/(gamma-k)! t^(gamma-k) d^(beta-k), per variable.
  const std::size_t n = a.t.size();
  std::vector<std::pair<WeylMonomial, Rational>> out{{WeylMonomial{a.t, std::vector<std::uint8_t>(n, 0)}, Rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned beta = a.d[i];
    const unsigned gamma = b.t[i];
    std::vector<std::pair<WeylMonomial, Rational>> next;
    for (const auto& [m, c] : out) {
      for (unsigned k = 0; k <= std::min(beta, gamma); ++k) {
        WeylMonomial mm = m;
        mm.t[i] = static_cast<std::uint8_t>(mm.t[i] + gamma - k);
        mm.d[i] = static_cast<std::uint8_t>(beta - k + b.d[i]);
        next.emplace_back(std::move(mm), c * choose(beta, k) * falling(Rational(gamma), k));
      }
    }
    out = std::move(next);
  }
  return out;
}

WeylElement weyl_multiply(const WeylElement& p, const WeylElement& q) {
  if (p.rank() != q.rank()) throw std::invalid_argument("rank mismatch in Weyl product");
  WeylElement out(p.rank());
  for (const auto& [ma, ca] : p.terms())
    for (const auto& [mb, cb] : q.terms()) {
      const Scalar c = ca * cb;
      for (const auto& [m, r] : multiply_monomials(ma, mb)) out.add(m, c * Scalar(r));
    }
  return out;
}

WeylElement commutator(const WeylElement& p, const WeylElement& q) {
  return weyl_multiply(p, q) - weyl_multiply(q, p);
}

// ---------------------------------------------------------------------------

LaurentVector LaurentVector::basis(const std::vector<Scalar>& base, const Offset& m) {
  LaurentVector v{base, {}};
  v.add(m, Scalar(1));
  return v;
}

void LaurentVector::add(const Offset& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentVector& LaurentVector::operator+=(const LaurentVector& o) {
  if (!(o.base == base)) throw std::invalid_argument("Laurent vectors with different base exponents");
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

LaurentVector& LaurentVector::operator-=(const LaurentVector& o) {
  if (!(o.base == base)) throw std::invalid_argument("Laurent vectors with different base exponents");
  for (const auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

LaurentVector& LaurentVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------

ModuleDescriptor ModuleDescriptor::full(std::vector<Scalar> a) {
  if (a.empty()) throw std::invalid_argument("module rank must be positive");
  const std::size_t n = a.size();
  return {Kind::FullLaurent, std::move(a), std::vector<bool>(n, false)};
}

ModuleDescriptor ModuleDescriptor::quotient(std::vector<Scalar> a) {
  if (a.empty()) throw std::invalid_argument("module rank must be positive");
  std::vector<bool> q(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_integer()) {
      if (!a[i].is_zero())
        throw std::invalid_argument("integral base exponent a" + std::to_string(i + 1) + " must be normalized to 0");
      q[i] = true;
    }
  }
  return {Kind::Quotient, std::move(a), std::move(q)};
}

ModuleDescriptor ModuleDescriptor::shale_weil(int n) {
  if (n < 1) throw std::invalid_argument("module rank must be positive");
  const auto size = static_cast<std::size_t>(n);
  return {Kind::ShaleWeil, std::vector<Scalar>(size, Scalar(0)), std::vector<bool>(size, true)};
}

bool ModuleDescriptor::vanishes(const Offset& m) const {
  for (std::size_t i = 0; i < quotiented_.size(); ++i)
    if (quotiented_[i] && m[i] >= 0) return true;
  return false;
}

LaurentVector project(const LaurentVector& v, const ModuleDescriptor& m) {
  LaurentVector out{v.base, {}};
  for (const auto& [off, c] : v.terms)
    if (!m.vanishes(off)) out.terms.emplace(off, c);
  return out;
}

namespace {

void check_consistent(const LaurentVector& v, const ModuleDescriptor& m) {
  if (!(v.base == m.base())) throw std::invalid_argument("vector base exponent does not match the module");
}

}  // namespace

LaurentVector apply(const WeylElement& p, const LaurentVector& v, const ModuleDescriptor& m) {
  check_consistent(v, m);
  if (p.rank() != m.rank()) throw std::invalid_argument("rank mismatch in module action");
  const std::size_t n = v.base.size();
  LaurentVector out{v.base, {}};
  for (const auto& [off, c] : v.terms) {
    if (m.vanishes(off)) continue;
    for (const auto& [mono, coeff] : p.terms()) {
      Scalar value = c * coeff;
      Offset target = off;
      for (std::size_t i = 0; i < n && !value.is_zero(); ++i) {
        for (unsigned k = 0; k < mono.d[i]; ++k) value *= v.base[i] + Scalar(static_cast<long>(off[i]) - static_cast<long>(k));
        target[i] += static_cast<int>(mono.t[i]) - static_cast<int>(mono.d[i]);
      }
      if (!value.is_zero() && !m.vanishes(target)) out.add(target, value);
    }
  }
  return out;
}

LaurentVector apply_inverse_long_root(int i, unsigned power, const LaurentVector& v, const ModuleDescriptor& m) {
  check_consistent(v, m);
  check_index(m.rank(), i);
  if (m.quotiented(i)) throw std::invalid_argument("-d_i^2 is not invertible on a quotiented index");
  const auto k = static_cast<std::size_t>(i - 1);
  LaurentVector cur = project(v, m);
  for (unsigned step = 0; step < power; ++step) {
    LaurentVector next{v.base, {}};
    for (const auto& [off, c] : cur.terms) {
      const Scalar x = v.base[k] + Scalar(static_cast<long>(off[k]));
      const Scalar factor = (x + Scalar(2)) * (x + Scalar(1));
      if (factor.is_zero())
        throw DivisionByZero("(-d" + std::to_string(i) + "^2)^-1 undefined at exponent " + x.to_string());
      Offset target = off;
      target[k] += 2;
      next.add(target, -c / factor);
    }
    cur = std::move(next);
  }
  return cur;
}

SumVector apply(const WeylElement& p, const SumVector& v, const ModuleDescriptor& m) {
  SumVector out;
  out.reserve(v.size());
  for (const auto& component : v) out.push_back(apply(p, component, m));
  return out;
}

namespace {

bool all_zero(const SumVector& v) {
  return std::all_of(v.begin(), v.end(), [](const LaurentVector& c) { return c.is_zero(); });
}

SumVector add(SumVector a, const SumVector& b, const Scalar& scale) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    LaurentVector part = b[j];
    part *= scale;
    a[j] += part;
  }
  return a;
}

}  // namespace

unsigned nilpotency_index(const SumVector& w, int i, const ModuleDescriptor& m) {
  check_index(m.rank(), i);
  int spread = 0;
  for (const auto& c : w)
    for (const auto& [off, v] : c.terms) spread = std::max(spread, std::abs(off[static_cast<std::size_t>(i - 1)]));
  const WeylElement ti = WeylElement::t(m.rank(), i);
  SumVector cur = w;
  for (unsigned l = 0; l <= static_cast<unsigned>(spread) + 1; ++l) {
    cur = apply(ti, cur, m);
    if (all_zero(cur)) return l;
  }
  throw std::invalid_argument("t" + std::to_string(i) + " does not act nilpotently on the vector");
}

SumVector straighten_highest(const SumVector& w, int i, const ModuleDescriptor& m) {
  if (all_zero(w)) throw std::invalid_argument("cannot straighten the zero vector");
  const unsigned l = nilpotency_index(w, i, m);
  const WeylElement ti = WeylElement::t(m.rank(), i);
  const WeylElement di = WeylElement::d(m.rank(), i);
  SumVector result = w;
  SumVector raised = w;  // t_i^k w
  Rational factorial = 1;
  for (unsigned k = 1; k <= l; ++k) {
    raised = apply(ti, raised, m);
    factorial *= k;
    SumVector term = raised;
    for (unsigned j = 0; j < k; ++j) term = apply(di, term, m);
    result = add(std::move(result), term, Scalar(Rational(1) / factorial));
  }
  return result;
}

LaurentVector straighten_highest(const LaurentVector& w, int i, const ModuleDescriptor& m) {
  return straighten_highest(SumVector{w}, i, m).front();
}

SumVector make_highest(const SumVector& w, const ModuleDescriptor& m) {
  SumVector cur = w;
  for (int i = 1; i <= m.rank(); ++i) {
    if (all_zero(cur)) break;
    cur = straighten_highest(cur, i, m);
  }
  return cur;
}

std::vector<std::vector<Scalar>> support(const ModuleDescriptor& m, const Box& box) {
  const int n = m.rank();
  if (box.rank() != n) throw std::invalid_argument("box rank does not match module rank");
  std::vector<WeylElement> cartan;
  for (int i = 1; i <= n; ++i)
    cartan.push_back(weyl_multiply(WeylElement::t(n, i), WeylElement::d(n, i)) +
                     WeylElement::constant(n, Scalar::fraction(1, 2)));
  std::vector<std::vector<Scalar>> out;
  box.for_each([&](const Offset& off) {
    if (m.vanishes(off)) return;
    const LaurentVector v = LaurentVector::basis(m.base(), off);
    std::vector<Scalar> weight;
    for (const auto& h : cartan) {
      const LaurentVector hv = apply(h, v, m);
      auto it = hv.terms.find(off);
      weight.push_back(it == hv.terms.end() ? Scalar() : it->second);
    }
    out.push_back(std::move(weight));
  });
  return out;
}

}  // namespace oak
