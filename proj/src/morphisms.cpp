#include "oak/morphisms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "oak/syntax.hpp"

namespace oak {

namespace {

int abs_sum(const Root& r) {
  int s = 0;
  for (int c : r) s += c < 0 ? -c : c;
  return s;
}

WeylMonomial unit_monomial(int n) {
  return {std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
          std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
}

Scalar sqrt_central() { return Scalar::symbol("s"); }

}  // namespace

WeylElement f_map(const BasisElement& b, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  if (!g.contains(b)) throw std::out_of_range("basis element not valid at rank " + std::to_string(n));
  const Scalar s = sqrt_central();
  switch (b.kind) {
    case BasisElement::Kind::Central:
      return WeylElement::constant(n, s.pow(2));
    case BasisElement::Kind::Cartan:
      return WeylElement::t(n, b.index) * WeylElement::d(n, b.index) + WeylElement::constant(n, Scalar::fraction(1, 2));
    case BasisElement::Kind::RootVector:
      break;
  }
  std::vector<int> plus, minus;  // 1-based indices, with multiplicity
  for (int i = 0; i < n; ++i) {
    const int c = b.root[static_cast<std::size_t>(i)];
    for (int k = 0; k < c; ++k) plus.push_back(i + 1);
    for (int k = 0; k < -c; ++k) minus.push_back(i + 1);
  }
  if (abs_sum(b.root) == 1) {
    if (!plus.empty()) return s * WeylElement::t(n, plus[0]);
    return -s * WeylElement::d(n, minus[0]);
  }
  if (plus.size() == 1 && minus.size() == 1) return WeylElement::t(n, plus[0]) * WeylElement::d(n, minus[0]);
  if (plus.size() == 2) return WeylElement::t(n, plus[0]) * WeylElement::t(n, plus[1]);
  return Scalar(-1) * (WeylElement::d(n, minus[0]) * WeylElement::d(n, minus[1]));
}

WeylElement f_map(const LieElement& x) {
  WeylElement out(x.rank());
  for (const auto& [b, c] : x.terms()) out += c * f_map(b, x.rank());
  return out;
}

WeylElement f_map(const UEAElement& u) {
  const int n = u.rank();
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  std::vector<WeylElement> images;
  images.reserve(g.dim());
  for (const auto& b : g.basis()) images.push_back(f_map(b, n));
  WeylElement out(n);
  for (const auto& [w, c] : u.terms()) {
    WeylElement prod = WeylElement::constant(n, c);
    for (auto letter : w) prod = prod * images[letter];
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorElement TensorElement::unit(int rank) {
  TensorElement out(rank);
  out.add({Word{}, unit_monomial(rank)}, Scalar(1));
  return out;
}

TensorElement TensorElement::left(const UEAElement& u) {
  const LieAlgebra& g = LieAlgebra::of_rank(u.rank());
  TensorElement out(u.rank());
  for (const auto& [w, c] : u.terms()) {
    for (auto letter : w)
      if (!g.in_sp(letter)) throw std::invalid_argument("left tensor factor must lie in U(sp_2n)");
    out.add({w, unit_monomial(u.rank())}, c);
  }
  return out;
}

TensorElement TensorElement::right(const WeylElement& p) {
  TensorElement out(p.rank());
  for (const auto& [m, c] : p.terms()) out.add({Word{}, m}, c);
  return out;
}

void TensorElement::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in tensor product");
  const int n = a.rank();
  TensorElement out(n);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Word w = ka.first;
      w.insert(w.end(), kb.first.begin(), kb.first.end());
      const UEAElement left = normal_order(w, n);
      const auto right = multiply_monomials(ka.second, kb.second);
      const Scalar c = ca * cb;
      for (const auto& [lw, lc] : left.terms())
        for (const auto& [rm, rc] : right) out.add({lw, rm}, c * lc * Scalar(rc));
    }
  return out;
}

TensorElement phi_map(const BasisElement& b, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  const std::size_t i = g.index_of(b);
  if (b.kind == BasisElement::Kind::Central)
    throw std::invalid_argument("phi is defined on the quotient z = s^2; reduce z first");
  TensorElement out = TensorElement::right(f_map(b, n));
  if (g.in_sp(i)) out += TensorElement::left(UEAElement::monomial(n, Word{static_cast<std::uint8_t>(i)}));
  return out;
}

TensorElement phi_map(const UEAElement& u) {
  const int n = u.rank();
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  std::vector<TensorElement> images;
  images.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    images.push_back(i == g.central_index() ? TensorElement(n) : phi_map(g.element(i), n));
  TensorElement out(n);
  for (const auto& [w, c] : u.terms()) {
    TensorElement prod = TensorElement::unit(n);
    prod *= c;
    for (auto letter : w) {
      if (letter == g.central_index())
        throw std::invalid_argument("phi is defined on the quotient z = s^2; reduce z first");
      prod = prod * images[letter];
    }
    out += prod;
  }
  return out;
}

namespace {

void record(HomReport& report, const BasisElement& x, const BasisElement& y, bool zero, std::string residual) {
  ++report.pairs_checked;
  report.pairs.push_back({x, y, residual});
  if (!zero) report.violations.push_back({x, y, std::move(residual)});
}

}  // namespace

HomReport verify_lie_hom(HomMap map, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  HomReport report;
  report.map = map;
  report.rank = n;
  const std::size_t d = g.dim();

  if (map == HomMap::F) {
    std::vector<WeylElement> images;
    for (const auto& b : g.basis()) images.push_back(f_map(b, n));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        const LieElement br = bracket(LieElement(n, g.element(i)), LieElement(n, g.element(j)), n);
        const WeylElement residual = f_map(br) - commutator(images[i], images[j]);
        record(report, g.element(i), g.element(j), residual.is_zero(), to_string(residual));
      }
    return report;
  }

  auto phi_of = [&](const UEAElement& u) { return phi_map(reduce_central(u)); };
  std::vector<TensorElement> images;
  for (const auto& b : g.basis()) images.push_back(phi_of(UEAElement::from_lie(LieElement(n, b))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const LieElement br = bracket(LieElement(n, g.element(i)), LieElement(n, g.element(j)), n);
      const TensorElement residual =
          phi_of(UEAElement::from_lie(br)) - (images[i] * images[j] - images[j] * images[i]);
      record(report, g.element(i), g.element(j), residual.is_zero(), to_string(residual));
    }
  return report;
}

// ---------------------------------------------------------------------------

void TwistSpec::validate(int n) const {
  if (indices.size() != b.size()) throw std::invalid_argument("twist needs one parameter per index");
  std::set<int> seen;
  for (int i : indices) {
    if (i < 1 || i > n) throw std::invalid_argument("twist index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (!seen.insert(i).second) throw std::invalid_argument("twist indices must be distinct");
  }
}

const Scalar& TwistSpec::parameter(int i) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k] == i) return b[k];
  throw std::invalid_argument("index " + std::to_string(i) + " is not in the twist index set");
}

LocalizedOperator LocalizedOperator::from_uea(const UEAElement& u) {
  LocalizedOperator out(u.rank());
  const std::vector<unsigned> none(static_cast<std::size_t>(u.rank()), 0);
  for (const auto& [w, c] : u.terms()) out.add(w, none, c);
  return out;
}

void LocalizedOperator::add(const Word& sorted_word, const std::vector<unsigned>& inverse_powers, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({sorted_word, inverse_powers}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentVector apply(const LocalizedOperator& op, const LaurentVector& v, const ModuleDescriptor& m) {
  const int n = op.rank();
  LaurentVector out{v.base, {}};
  for (const auto& [key, c] : op.terms()) {
    LaurentVector w = v;
    for (int i = 1; i <= n; ++i)
      if (const unsigned r = key.second[static_cast<std::size_t>(i - 1)]; r > 0) w = apply_inverse_long_root(i, r, w, m);
    w = apply(f_map(UEAElement::monomial(n, key.first)), w, m);
    w *= c;
    out += w;
  }
  return out;
}

namespace {

struct TwistLetters {
  std::uint8_t minus_eps;
  std::uint8_t plus_eps;
  std::uint8_t plus_2eps;
  std::uint8_t minus_2eps;
  std::uint8_t cartan;
};

TwistLetters letters_for(const LieAlgebra& g, int i) {
  const int n = g.rank();
  auto root = [&](int c) {
    Root r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i - 1)] = c;
    return static_cast<std::uint8_t>(g.index_of(BasisElement::root_vector(r)));
  };
  return {root(-1), root(1), root(2), root(-2), static_cast<std::uint8_t>(g.cartan_index(i))};
}

/// Index i of a twistable generator X_{-eps_i}, X_{eps_i}, X_{2eps_i}; 0 otherwise.
int twist_index(const BasisElement& g) {
  if (g.kind != BasisElement::Kind::RootVector) return 0;
  int index = 0;
  for (std::size_t k = 0; k < g.root.size(); ++k) {
    if (g.root[k] == 0) continue;
    if (index != 0) return 0;
    if (g.root[k] != -1 && g.root[k] != 1 && g.root[k] != 2) return 0;
    index = static_cast<int>(k) + 1;
  }
  return index;
}

int checked_twist_index(const BasisElement& g, const TwistSpec& spec, int n) {
  spec.validate(n);
  const int i = twist_index(g);
  if (i == 0) throw std::invalid_argument("theta_b is tabulated only on X_{-eps_i}, X_{eps_i}, X_{2eps_i}");
  spec.parameter(i);
  return i;
}

}  // namespace

LocalizedOperator theta_generator(const BasisElement& g, const TwistSpec& spec) {
  const int n = static_cast<int>(g.root.size());
  const int i = checked_twist_index(g, spec, n);
  const LieAlgebra& alg = LieAlgebra::of_rank(n);
  const TwistLetters x = letters_for(alg, i);
  const Scalar& b = spec.parameter(i);
  std::vector<unsigned> none(static_cast<std::size_t>(n), 0);
  std::vector<unsigned> once = none;
  once[static_cast<std::size_t>(i - 1)] = 1;

  LocalizedOperator out(n);
  const auto letter = static_cast<std::uint8_t>(alg.index_of(g));
  out.add(Word{letter}, none, Scalar(1));
  if (letter == x.plus_eps) {
    out.add(Word{x.minus_eps}, once, Scalar(2) * b);
  } else if (letter == x.plus_2eps) {
    out.add(Word{x.cartan}, once, Scalar(-4) * b);
    out.add(Word{}, once, Scalar(-4) * b * (b - Scalar(1)));
  }
  return out;
}

LocalizedOperator theta_series(const BasisElement& g, const TwistSpec& spec) {
  const int n = static_cast<int>(g.root.size());
  checked_twist_index(g, spec, n);
  const LieAlgebra& alg = LieAlgebra::of_rank(n);
  const UEAElement base = UEAElement::monomial(n, Word{static_cast<std::uint8_t>(alg.index_of(g))});

  int active = 0;
  for (int l : spec.indices) {
    const UEAElement x = UEAElement::monomial(n, Word{letters_for(alg, l).minus_2eps});
    if (!(multiply(x, base) - multiply(base, x)).is_zero()) {
      if (active != 0) throw std::invalid_argument("generator is moved by more than one twist factor");
      active = l;
    }
  }
  if (active == 0) return LocalizedOperator::from_uea(base);

  const std::uint8_t xl = letters_for(alg, active).minus_2eps;
  const UEAElement x = UEAElement::monomial(n, Word{xl});
  const Scalar& b = spec.parameter(active);
  LocalizedOperator out(n);
  UEAElement ad = base;
  constexpr unsigned kMaxSteps = 64;
  for (unsigned j = 0; !ad.is_zero(); ++j) {
    if (j > kMaxSteps) throw std::logic_error("ad-series did not terminate");
    const Scalar coeff = binomial(b, j);
    for (const auto& [w, c] : ad.terms()) {
      std::vector<unsigned> r(static_cast<std::size_t>(n), 0);
      const bool pure = std::all_of(w.begin(), w.end(), [&](std::uint8_t t) { return t == xl; });
      if (pure && w.size() >= j) {
        out.add(Word(w.size() - j, xl), r, coeff * c);
      } else if (pure) {
        r[static_cast<std::size_t>(active - 1)] = j - static_cast<unsigned>(w.size());
        out.add(Word{}, r, coeff * c);
      } else {
        r[static_cast<std::size_t>(active - 1)] = j;
        out.add(w, r, coeff * c);
      }
    }
    ad = multiply(x, ad) - multiply(ad, x);
  }
  return out;
}

std::vector<BasisElement> twist_generators(const TwistSpec& spec, int n) {
  spec.validate(n);
  std::vector<BasisElement> out;
  for (int i : spec.indices) {
    for (int c : {-1, 1, 2}) {
      Root r(static_cast<std::size_t>(n), 0);
      r[static_cast<std::size_t>(i - 1)] = c;
      out.push_back(BasisElement::root_vector(r));
    }
  }
  return out;
}

TwistReport verify_theta_conjugation(const TwistSpec& spec, const std::vector<Scalar>& a, int depth) {
  const int n = static_cast<int>(a.size());
  spec.validate(n);
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  std::vector<unsigned> powers;
  for (const auto& b : spec.b) {
    if (!b.is_integer() || b.to_rational() < 0)
      throw std::invalid_argument("conjugation oracle needs nonnegative integer b, got " + b.to_string());
    powers.push_back(static_cast<unsigned>(b.to_rational().get_num().get_ui()));
  }

  TwistReport report;
  report.rank = n;
  report.spec = spec;
  report.base = a;
  report.depth = depth;
  const ModuleDescriptor m = ModuleDescriptor::full(a);

  std::vector<WeylElement> conj;  // X_{-2eps_i}^{b_i} as Weyl operators
  for (std::size_t k = 0; k < spec.indices.size(); ++k) {
    const int i = spec.indices[k];
    WeylElement minus_d2 = Scalar(-1) * (WeylElement::d(n, i) * WeylElement::d(n, i));
    WeylElement p = WeylElement::constant(n, Scalar(1));
    for (unsigned e = 0; e < powers[k]; ++e) p = p * minus_d2;
    conj.push_back(std::move(p));
  }

  const Box box = Box::cube(n, depth);
  for (const auto& g : twist_generators(spec, n)) {
    const LocalizedOperator closed = theta_generator(g, spec);
    if (!(theta_series(g, spec) == closed)) report.series_matches_closed_form = false;
    const WeylElement fg = f_map(g, n);
    box.for_each([&](const Offset& off) {
      const LaurentVector v = LaurentVector::basis(a, off);
      LaurentVector rhs = v;
      for (std::size_t k = 0; k < spec.indices.size(); ++k)
        rhs = apply_inverse_long_root(spec.indices[k], powers[k], rhs, m);
      rhs = apply(fg, rhs, m);
      for (const auto& p : conj) rhs = apply(p, rhs, m);
      const LaurentVector lhs = apply(closed, v, m);
      ++report.checks;
      if (!(lhs == rhs)) report.mismatches.push_back({g, off, to_string(rhs), to_string(lhs)});
    });
  }
  return report;
}

}  // namespace oak
