#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "oak/lie.hpp"
#include "oak/scalar.hpp"
#include "oak/uea.hpp"

namespace oak::testing {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix zeros(std::size_t d) { return Matrix(d, std::vector<Rational>(d, Rational(0))); }

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix out = zeros(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (std::size_t j = 0; j < d; ++j) out[i][j] -= b[i][k] * a[k][j];
    }
  return out;
}

// Faithful (2n+2)-dimensional realization. Row/column 0 and 2n+1 frame the
// Heisenberg part, rows 1..2n carry sp_2n acting on C^2n:
//   A in sp_2n      -> block A
//   v in C^2n       -> column v in the last column, row (1/2) v^T J in row 0
//   z               -> E_{0, 2n+1}
// with J = [[0, I], [-I, 0]], so [M(u), M(v)] = u^T J v z.
class MatrixRealization {
 public:
  explicit MatrixRealization(int n) : n_(n), d_(static_cast<std::size_t>(2 * n + 2)) {}

  std::size_t size() const { return d_; }

  Matrix of(const BasisElement& b) const {
    Matrix m = zeros(d_);
    auto e = [&](int r, int c, const Rational& v) { m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += v; };
    const int last = 2 * n_ + 1;
    // Positions in C^2n are 1..n (e_i) and n+1..2n (e_{n+i}).
    auto sp = [&](int r, int c, const Rational& v) { e(r, c, v); };
    auto vec = [&](int pos) {
      e(pos, last, 1);
      // row 0: (1/2) (v^T J)_c ; v = e_pos, (e_i^T J) = e_{n+i}^T, (e_{n+i}^T J) = -e_i^T
      if (pos <= n_) e(0, pos + n_, Rational(1, 2));
      else e(0, pos - n_, Rational(-1, 2));
    };
    switch (b.kind) {
      case BasisElement::Kind::Central:
        e(0, last, 1);
        break;
      case BasisElement::Kind::Cartan:
        sp(b.index, b.index, 1);
        sp(b.index + n_, b.index + n_, -1);
        break;
      case BasisElement::Kind::RootVector: {
        std::vector<int> plus, minus;
        for (int i = 0; i < n_; ++i) {
          const int c = b.root[static_cast<std::size_t>(i)];
          for (int k = 0; k < c; ++k) plus.push_back(i + 1);
          for (int k = 0; k < -c; ++k) minus.push_back(i + 1);
        }
        if (plus.size() == 1 && minus.empty()) {
          vec(plus[0]);
        } else if (minus.size() == 1 && plus.empty()) {
          vec(minus[0] + n_);
        } else if (plus.size() == 1 && minus.size() == 1) {
          const int i = plus[0], j = minus[0];
          sp(i, j, 1);
          sp(n_ + j, n_ + i, -1);
        } else if (plus.size() == 2) {
          const int i = plus[0], j = plus[1];
          sp(i, n_ + j, 1);
          sp(j, n_ + i, 1);
        } else if (minus.size() == 2) {
          const int i = minus[0], j = minus[1];
          sp(n_ + i, j, 1);
          sp(n_ + j, i, 1);
        } else {
          throw std::invalid_argument("not a root of g_n");
        }
        break;
      }
    }
    return m;
  }

  /// Coordinates of `target` in the span of the realized basis; throws if outside.
  std::vector<Rational> coordinates(const Matrix& target, const std::vector<BasisElement>& basis) const {
    const std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> rows;  // one row per matrix entry: [coeffs | rhs]
    std::vector<Matrix> images;
    for (const auto& b : basis) images.push_back(of(b));
    for (std::size_t r = 0; r < d_; ++r)
      for (std::size_t c = 0; c < d_; ++c) {
        std::vector<Rational> row(cols + 1);
        bool any = target[r][c] != 0;
        for (std::size_t k = 0; k < cols; ++k) {
          row[k] = images[k][r][c];
          any = any || row[k] != 0;
        }
        row[cols] = target[r][c];
        if (any) rows.push_back(std::move(row));
      }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      const Rational inv = 1 / rows[rank][c];
      for (auto& x : rows[rank]) x *= inv;
      for (std::size_t q = 0; q < rows.size(); ++q) {
        if (q == rank || rows[q][c] == 0) continue;
        const Rational f = rows[q][c];
        for (std::size_t k = 0; k <= cols; ++k) rows[q][k] -= f * rows[rank][k];
      }
      pivot_col.push_back(c);
      ++rank;
    }
    for (std::size_t q = rank; q < rows.size(); ++q)
      if (rows[q][cols] != 0) throw std::logic_error("matrix outside the realized span");
    std::vector<Rational> out(cols, Rational(0));
    for (std::size_t k = 0; k < rank; ++k) out[pivot_col[k]] = rows[k][cols];
    return out;
  }

 private:
  int n_;
  std::size_t d_;
};

/// Every basis element of g_n, built from the root list rather than LieAlgebra.
inline std::vector<BasisElement> oracle_basis(int n) {
  std::vector<BasisElement> out;
  auto unit = [n](int i) {
    Root r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i - 1)] = 1;
    return r;
  };
  for (int i = 1; i <= n; ++i) {
    out.push_back(BasisElement::root_vector(unit(i)));
    Root m = unit(i);
    m[static_cast<std::size_t>(i - 1)] = -1;
    out.push_back(BasisElement::root_vector(m));
    for (int j = i; j <= n; ++j) {
      Root p = unit(i);
      p[static_cast<std::size_t>(j - 1)] += 1;
      out.push_back(BasisElement::root_vector(p));
      Root q = p;
      for (auto& x : q) x = -x;
      out.push_back(BasisElement::root_vector(q));
      if (j != i) {
        Root a = unit(i);
        a[static_cast<std::size_t>(j - 1)] -= 1;
        out.push_back(BasisElement::root_vector(a));
        for (auto& x : a) x = -x;
        out.push_back(BasisElement::root_vector(a));
      }
    }
    out.push_back(BasisElement::cartan(i));
  }
  out.push_back(BasisElement::central());
  return out;
}

/// Brute-force Kostant partition count: bounded enumeration of coefficient
/// vectors. Every positive root of g_n has height >= 1 with respect to the
/// simple system eps_1 - eps_2, ..., eps_{n-1} - eps_n, eps_n, so no coefficient
/// exceeds the height sum_k (mu_1 + ... + mu_k).
inline std::uint64_t brute_partitions(const std::vector<int>& mu, const std::vector<Root>& roots) {
  long height = 0, partial = 0;
  for (int x : mu) {
    partial += x;
    if (partial < 0) return 0;
    height += partial;
  }
  const std::size_t n = mu.size();
  std::uint64_t count = 0;
  std::vector<int> acc(n, 0);
  auto rec = [&](auto&& self, std::size_t r, long used) -> void {
    if (r == roots.size()) {
      if (acc == mu) ++count;
      return;
    }
    for (long c = 0; used + c <= height; ++c) {
      self(self, r + 1, used + c);
      for (std::size_t i = 0; i < n; ++i) acc[i] += roots[r][i];
    }
    for (long c = 0; used + c <= height; ++c)
      for (std::size_t i = 0; i < n; ++i) acc[i] -= roots[r][i];
  };
  rec(rec, 0, 0);
  return count;
}

/// Rank of a set of rational vectors (sparse, keyed by any ordered type).
template <class Key>
std::size_t rational_rank(const std::vector<std::map<Key, Rational>>& vectors) {
  std::vector<std::map<Key, Rational>> basis;  // echelon rows keyed by leading key
  std::map<Key, std::size_t> lead;
  for (auto v : vectors) {
    for (auto it = v.begin(); it != v.end();) {
      if (it->second == 0) {
        it = v.erase(it);
        continue;
      }
      auto found = lead.find(it->first);
      if (found == lead.end()) {
        ++it;
        continue;
      }
      const auto& row = basis[found->second];
      const Rational f = it->second / row.at(it->first);
      for (const auto& [k, c] : row) v[k] -= f * c;
      it = v.begin();
    }
    if (v.empty()) continue;
    lead[v.begin()->first] = basis.size();
    basis.push_back(std::move(v));
  }
  return basis.size();
}

inline Word random_word(std::mt19937_64& rng, int n, std::size_t max_len, bool allow_z = true) {
  const auto& g = LieAlgebra::of_rank(n);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, g.dim() - 1);
  Word w;
  const std::size_t l = len(rng);
  while (w.size() < l) {
    const auto x = letter(rng);
    if (!allow_z && x == g.central_index()) continue;
    w.push_back(static_cast<std::uint8_t>(x));
  }
  return w;
}

inline Scalar random_rational(std::mt19937_64& rng, int span = 7, int den = 4) {
  std::uniform_int_distribution<int> num(-span * den, span * den);
  std::uniform_int_distribution<int> d(1, den);
  return Scalar(Rational(num(rng), d(rng)));
}

}  // namespace oak::testing
