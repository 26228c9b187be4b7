#include "oak/lie.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace oak {

bool is_positive_root(const Root& r) {
  for (int c : r)
    if (c != 0) return c > 0;
  return false;
}

int BasisElement::block() const {
  switch (kind) {
    case Kind::RootVector:
      return is_positive_root(root) ? 3 : 0;
    case Kind::Cartan:
      return 1;
    case Kind::Central:
      return 2;
  }
  return 2;
}

std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
  if (auto c = a.block() <=> b.block(); c != 0) return c;
  if (a.kind == BasisElement::Kind::Cartan) return a.index <=> b.index;
  if (a.kind == BasisElement::Kind::RootVector) return a.root <=> b.root;
  return std::strong_ordering::equal;
}

Weight Weight::operator+(const Weight& o) const {
  if (h.size() != o.h.size()) throw std::invalid_argument("weights of different rank");
  Weight out = *this;
  for (std::size_t i = 0; i < h.size(); ++i) out.h[i] += o.h[i];
  out.z += o.z;
  return out;
}

// ---------------------------------------------------------------------------
// Matrix realization: an element is (M in sp_2n, v in C^2n, c * z).

namespace {

struct Realization {
  int n;
  std::vector<Rational> m;  // 2n x 2n row-major
  std::vector<Rational> v;  // 2n
  Rational c;

  explicit Realization(int rank) : n(rank), m(4 * rank * rank), v(2 * rank), c(0) {}

  // 1-based matrix unit helpers, matching e_{i,j} in the root-vector table.
  Rational& at(int i, int j) { return m[(i - 1) * 2 * n + (j - 1)]; }
  const Rational& at(int i, int j) const { return m[(i - 1) * 2 * n + (j - 1)]; }

  bool operator==(const Realization& o) const { return m == o.m && v == o.v && c == o.c; }
};

Realization realize(const BasisElement& b, int n) {
  Realization r(n);
  switch (b.kind) {
    case BasisElement::Kind::Central:
      r.c = 1;
      return r;
    case BasisElement::Kind::Cartan:
      r.at(b.index, b.index) = 1;
      r.at(n + b.index, n + b.index) = -1;
      return r;
    case BasisElement::Kind::RootVector:
      break;
  }
  std::vector<std::pair<int, int>> nz;  // (1-based coordinate, value)
  for (int i = 0; i < n; ++i)
    if (b.root[i] != 0) nz.emplace_back(i + 1, b.root[i]);
  if (nz.size() == 1) {
    const auto [i, val] = nz[0];
    if (val == 1) {
      r.v[i - 1] = 1;  // X_{eps_i} = e_i
    } else if (val == -1) {
      r.v[n + i - 1] = 1;  // X_{-eps_i} = e_{n+i}
    } else if (val == 2) {
      r.at(i, n + i) = 2;  // X_{2eps_i} = 2 e_{i,n+i}
    } else {
      r.at(n + i, i) = 2;  // X_{-2eps_i} = 2 e_{n+i,i}
    }
    return r;
  }
  const auto [i, vi] = nz[0];
  const auto [j, vj] = nz[1];
  if (vi == 1 && vj == 1) {
    r.at(i, n + j) = 1;
    r.at(j, n + i) = 1;
  } else if (vi == -1 && vj == -1) {
    r.at(n + i, j) = 1;
    r.at(n + j, i) = 1;
  } else {
    const int p = vi == 1 ? i : j;  // +1 coordinate
    const int q = vi == 1 ? j : i;  // -1 coordinate
    r.at(p, q) = 1;                 // X_{eps_p - eps_q} = e_{p,q} - e_{n+q,n+p}
    r.at(n + q, n + p) = -1;
  }
  return r;
}

Realization commutator(const Realization& a, const Realization& b) {
  const int n = a.n;
  const int d = 2 * n;
  Realization out(n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s = 0;
      for (int k = 0; k < d; ++k) s += a.m[i * d + k] * b.m[k * d + j] - b.m[i * d + k] * a.m[k * d + j];
      out.m[i * d + j] = s;
    }
  for (int i = 0; i < d; ++i) {
    Rational s = 0;
    for (int k = 0; k < d; ++k) s += a.m[i * d + k] * b.v[k] - b.m[i * d + k] * a.v[k];
    out.v[i] = s;
  }
  // omega(u, w) = u^T S w with S = [[0, I], [-I, 0]]
  Rational omega = 0;
  for (int i = 0; i < n; ++i) omega += a.v[i] * b.v[n + i] - a.v[n + i] * b.v[i];
  out.c = omega;
  return out;
}

Root unit_root(int n, std::initializer_list<std::pair<int, int>> coords) {
  Root r(n, 0);
  for (auto [i, v] : coords) r[i - 1] += v;
  return r;
}

// Reads the coefficients of (M, v, c) in the distinguished basis.
std::map<BasisElement, Rational> decompose(const Realization& r) {
  const int n = r.n;
  std::map<BasisElement, Rational> out;
  auto put = [&](BasisElement b, const Rational& c) {
    if (c != 0) out[std::move(b)] += c;
  };
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      if (p == q) {
        put(BasisElement::cartan(p), r.at(p, p));
        put(BasisElement::root_vector(unit_root(n, {{p, 2}})), r.at(p, n + p) / 2);
        put(BasisElement::root_vector(unit_root(n, {{p, -2}})), r.at(n + p, p) / 2);
      } else {
        put(BasisElement::root_vector(unit_root(n, {{p, 1}, {q, -1}})), r.at(p, q));
        if (p < q) {
          put(BasisElement::root_vector(unit_root(n, {{p, 1}, {q, 1}})), r.at(p, n + q));
          put(BasisElement::root_vector(unit_root(n, {{p, -1}, {q, -1}})), r.at(n + p, q));
        }
      }
    }
    put(BasisElement::root_vector(unit_root(n, {{p, 1}})), r.v[p - 1]);
    put(BasisElement::root_vector(unit_root(n, {{p, -1}})), r.v[n + p - 1]);
  }
  put(BasisElement::central(), r.c);

  Realization check(n);
  for (const auto& [b, c] : out) {
    const Realization part = realize(b, n);
    for (std::size_t k = 0; k < check.m.size(); ++k) check.m[k] += c * part.m[k];
    for (std::size_t k = 0; k < check.v.size(); ++k) check.v[k] += c * part.v[k];
    check.c += c * part.c;
  }
  if (!(check == r)) throw std::logic_error("bracket left the symplectic oscillator algebra");
  return out;
}

std::vector<BasisElement> enumerate_basis(int n) {
  std::vector<BasisElement> out;
  for (const Root& r : root_system(n).roots) out.push_back(BasisElement::root_vector(r));
  for (int i = 1; i <= n; ++i) out.push_back(BasisElement::cartan(i));
  out.push_back(BasisElement::central());
  std::sort(out.begin(), out.end());
  return out;
}

bool valid_root(const Root& r, int n) {
  if (static_cast<int>(r.size()) != n) return false;
  int nonzero = 0;
  int abs_sum = 0;
  for (int c : r) {
    if (c != 0) ++nonzero;
    abs_sum += c < 0 ? -c : c;
    if (c < -2 || c > 2) return false;
  }
  if (nonzero == 1) return true;  // ±eps_i, ±2eps_i
  return nonzero == 2 && abs_sum == 2;
}

}  // namespace

LieAlgebra::LieAlgebra(int n) : n_(n), basis_(enumerate_basis(n)) {
  const std::size_t d = basis_.size();
  for (std::size_t i = 0; i < d; ++i) {
    lookup_.emplace(basis_[i], i);
    weights_.push_back(weight_of(basis_[i], n));
    if (basis_[i].kind == BasisElement::Kind::Central) central_ = i;
  }
  std::vector<Realization> real;
  real.reserve(d);
  for (const auto& b : basis_) real.push_back(realize(b, n));
  table_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto& row = table_[i * d + j];
      for (const auto& [b, c] : decompose(commutator(real[i], real[j])))
        row.emplace_back(static_cast<std::uint8_t>(lookup_.at(b)), c);
    }
}

const LieAlgebra& LieAlgebra::of_rank(int n) {
  if (n < 1 || n > kMaxRank)
    throw std::out_of_range("rank " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxRank) + "]");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<LieAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot.reset(new LieAlgebra(n));
  return *slot;
}

std::size_t LieAlgebra::index_of(const BasisElement& b) const {
  auto it = lookup_.find(b);
  if (it == lookup_.end()) throw std::out_of_range("basis element not valid for rank " + std::to_string(n_));
  return it->second;
}

bool LieAlgebra::contains(const BasisElement& b) const { return lookup_.count(b) > 0; }

bool LieAlgebra::in_sp(std::size_t i) const {
  const auto& b = basis_[i];
  if (b.kind == BasisElement::Kind::Central) return false;
  if (b.kind == BasisElement::Kind::Cartan) return true;
  int abs_sum = 0;
  for (int c : b.root) abs_sum += c < 0 ? -c : c;
  return abs_sum == 2;
}

// ---------------------------------------------------------------------------

LieElement::LieElement(int rank, const BasisElement& b, const Scalar& c) : rank_(rank) { add(b, c); }

Scalar LieElement::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar() : it->second;
}

void LieElement::add(const BasisElement& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [b, c] : o.terms_) add(b, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

LieElement bracket(const LieElement& x, const LieElement& y, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  LieElement out(n);
  for (const auto& [bx, cx] : x.terms()) {
    const std::size_t i = g.index_of(bx);
    for (const auto& [by, cy] : y.terms()) {
      const std::size_t j = g.index_of(by);
      const Scalar c = cx * cy;
      for (const auto& [k, r] : g.bracket(i, j)) out.add(g.element(k), c * Scalar(r));
    }
  }
  return out;
}

RootSystem root_system(int n) {
  if (n < 1) throw std::out_of_range("rank must be positive");
  RootSystem rs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) rs.positive.push_back(unit_root(n, {{i, 1}, {j, -1}}));
  for (int k = 1; k <= n; ++k)
    for (int l = k; l <= n; ++l) rs.positive.push_back(unit_root(n, {{k, 1}, {l, 1}}));
  for (int k = 1; k <= n; ++k) rs.positive.push_back(unit_root(n, {{k, 1}}));
  std::sort(rs.positive.begin(), rs.positive.end());
  rs.roots = rs.positive;
  for (const Root& r : rs.positive) {
    Root neg = r;
    for (int& c : neg) c = -c;
    rs.roots.push_back(std::move(neg));
  }
  return rs;
}

std::vector<Root> sp_positive_roots(int n) {
  std::vector<Root> out;
  for (const Root& r : root_system(n).positive) {
    int abs_sum = 0;
    for (int c : r) abs_sum += c < 0 ? -c : c;
    if (abs_sum == 2) out.push_back(r);
  }
  return out;
}

Root weight_of(const BasisElement& x, int n) {
  if (x.kind == BasisElement::Kind::RootVector) {
    if (!valid_root(x.root, n)) throw std::out_of_range("not a root of g_" + std::to_string(n));
    return x.root;
  }
  return Root(n, 0);
}

TriangularDecomposition decomposition_parts(int n, DecompositionKind kind) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  TriangularDecomposition out;
  for (const auto& b : g.basis()) {
    int part = 0;  // -1, 0, +1
    if (kind == DecompositionKind::Standard) {
      part = b.block() == 0 ? -1 : b.block() == 3 ? 1 : 0;
    } else if (b.kind == BasisElement::Kind::RootVector) {
      int sum = 0;
      for (int c : b.root) sum += c;
      part = sum > 0 ? 1 : sum < 0 ? -1 : 0;  // eps_i - eps_j has coordinate sum 0
    }
    (part < 0 ? out.negative : part > 0 ? out.positive : out.zero).push_back(b);
  }
  for (const auto* set : {&out.negative, &out.zero, &out.positive}) {
    std::map<BasisElement, bool> member;
    for (const auto& b : *set) member[b] = true;
    for (const auto& x : *set)
      for (const auto& y : *set)
        for (const auto& [k, r] : g.bracket(g.index_of(x), g.index_of(y)))
          if (!member.count(g.element(k))) throw std::logic_error("decomposition part not closed under bracket");
  }
  return out;
}

}  // namespace oak
