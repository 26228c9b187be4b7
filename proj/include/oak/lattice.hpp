#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oak {

/// Integer vector in epsilon coordinates (an exponent offset or a weight offset).
using Offset = std::vector<int>;

inline Offset operator+(Offset a, const Offset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Offset operator-(Offset a, const Offset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// Axis-aligned integer box [lo_i, hi_i] in Z^n. Empty if any lo_i > hi_i.
struct Box {
  Offset lo;
  Offset hi;

  static Box cube(int n, int radius) {
    return {Offset(static_cast<std::size_t>(n), -radius), Offset(static_cast<std::size_t>(n), radius)};
  }

  int rank() const noexcept { return static_cast<int>(lo.size()); }

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] > hi[i]) return true;
    return false;
  }

  bool contains(const Offset& p) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  }

  Box intersect(const Box& o) const {
    if (o.lo.size() != lo.size()) throw std::invalid_argument("box rank mismatch");
    Box out = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      out.lo[i] = std::max(lo[i], o.lo[i]);
      out.hi[i] = std::min(hi[i], o.hi[i]);
    }
    return out;
  }

  Box shifted(const Offset& by) const { return {lo + by, hi + by}; }

  /// Visits every lattice point, first coordinate slowest (lexicographic order).
  template <class F>
  void for_each(F&& visit) const {
    if (empty()) return;
    Offset p = lo;
    while (true) {
      visit(static_cast<const Offset&>(p));
      std::size_t k = p.size();
      while (k > 0) {
        --k;
        if (p[k] < hi[k]) {
          ++p[k];
          break;
        }
        p[k] = lo[k];
        if (k == 0) return;
      }
      if (p.empty()) return;
    }
  }

  friend bool operator==(const Box&, const Box&) = default;
};

}  // namespace oak
