#include "oak/characters.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace oak {

std::uint64_t CharTable::at(const Offset& m) const {
  auto it = entries.find(m);
  return it == entries.end() ? 0 : it->second;
}

void CharTable::set(const Offset& m, std::uint64_t mult) {
  if (!box.contains(m)) throw std::out_of_range("offset outside the character box");
  if (mult == 0) entries.erase(m);
  else entries[m] = mult;
}

Weight shift_weight(const Weight& w, const std::vector<Scalar>& by) {
  Weight out = w;
  for (std::size_t i = 0; i < out.h.size(); ++i) out.h[i] += by.at(i);
  return out;
}

Weight half_sum_shift(const Weight& w, int sign) {
  return shift_weight(w, std::vector<Scalar>(w.h.size(), Scalar::fraction(sign, 2)));
}

// ---------------------------------------------------------------------------
// Partition function

namespace {

class PartitionCounter {
 public:
  explicit PartitionCounter(std::vector<Root> roots) : roots_(std::move(roots)) {
    if (roots_.empty()) return;
    n_ = roots_.front().size();
    long maxabs = 1;
    for (const auto& r : roots_) {
      if (r.size() != n_) throw std::invalid_argument("roots of different ranks");
      if (!is_positive_root(r)) throw std::invalid_argument("partition roots must be lexicographically positive");
      for (int c : r) maxabs = std::max<long>(maxabs, std::abs(c));
    }
    // A linear functional positive on every lexicographically positive vector
    // with entries bounded by maxabs.
    weights_.assign(n_, 1);
    const long base = maxabs + 2;
    for (std::size_t i = n_; i-- > 1;) weights_[i - 1] = weights_[i] * base;
  }

  std::uint64_t count(const Offset& mu) {
    if (roots_.empty()) return std::all_of(mu.begin(), mu.end(), [](int c) { return c == 0; }) ? 1 : 0;
    if (mu.size() != n_) throw std::invalid_argument("offset rank does not match the roots");
    return count(0, mu);
  }

 private:
  long value(const Offset& x) const {
    long v = 0;
    for (std::size_t i = 0; i < n_; ++i) v += weights_[i] * x[i];
    return v;
  }

  std::uint64_t count(std::size_t k, const Offset& mu) {
    if (value(mu) < 0) return 0;
    if (k == roots_.size()) return std::all_of(mu.begin(), mu.end(), [](int c) { return c == 0; }) ? 1 : 0;
    std::string key(1, static_cast<char>(k));
    for (int c : mu) key.append(reinterpret_cast<const char*>(&c), sizeof c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    Offset rest = mu;
    while (value(rest) >= 0) {
      total += count(k + 1, rest);
      rest = rest - roots_[k];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<Root> roots_;
  std::size_t n_ = 0;
  std::vector<long> weights_;
  std::unordered_map<std::string, std::uint64_t> memo_;
};

Offset negate(Offset x) {
  for (auto& c : x) c = -c;
  return x;
}

}  // namespace

std::uint64_t kostant_partition(const Offset& mu, const std::vector<Root>& roots) {
  return PartitionCounter(roots).count(mu);
}

Box cone_box(int n, int depth) {
  if (n < 1 || depth < 0) throw std::invalid_argument("cone box needs n >= 1 and depth >= 0");
  Box b{Offset(static_cast<std::size_t>(n)), Offset(static_cast<std::size_t>(n))};
  for (int k = 1; k <= n; ++k) {
    b.lo[static_cast<std::size_t>(k - 1)] = -k * depth;
    b.hi[static_cast<std::size_t>(k - 1)] = k * depth;
  }
  return b;
}

CharTable partition_char(const Weight& reference, const std::vector<Root>& roots, int depth) {
  const int n = static_cast<int>(reference.h.size());
  CharTable out{reference, cone_box(n, depth), {}, Offset(static_cast<std::size_t>(n), 0), false};
  PartitionCounter counter(roots);
  out.box.for_each([&](const Offset& x) {
    if (const auto m = counter.count(negate(x)); m != 0) out.entries.emplace(x, m);
  });
  return out;
}

CharTable verma_char(const Weight& lambda, AlgebraKind algebra, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  const int n = static_cast<int>(lambda.h.size());
  return partition_char(lambda, algebra == AlgebraKind::G ? root_system(n).positive : sp_positive_roots(n), depth);
}

CharTable char_module(const ModuleDescriptor& m, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  const int n = m.rank();
  Weight ref{{}, Scalar::symbol("s").pow(2)};
  bool all_quotiented = true;
  for (int i = 1; i <= n; ++i) {
    if (m.quotiented(i)) {
      ref.h.push_back(Scalar::fraction(-1, 2));
    } else {
      ref.h.push_back(m.base()[static_cast<std::size_t>(i - 1)] + Scalar::fraction(1, 2));
      all_quotiented = false;
    }
  }
  CharTable out{ref, all_quotiented ? cone_box(n, depth) : Box::cube(n, depth), {}, std::nullopt, false};
  if (all_quotiented) out.apex = Offset(static_cast<std::size_t>(n), 0);
  out.box.for_each([&](const Offset& x) {
    for (int i = 1; i <= n; ++i)
      if (m.quotiented(i) && x[static_cast<std::size_t>(i - 1)] > 0) return;
    out.entries.emplace(x, 1);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

void accumulate_products(CharTable& out, const CharTable& a, const CharTable& b) {
  for (const auto& [x, ma] : a.entries)
    for (const auto& [y, mb] : b.entries) {
      Offset z = x + y;
      if (out.box.contains(z)) out.entries[z] += ma * mb;
    }
}

/// Offset q with (support of f) contained in q + C.
Offset cone_cover(const CharTable& f) {
  const std::size_t n = static_cast<std::size_t>(f.rank());
  std::vector<long> top(n, LONG_MIN);
  for (const auto& [x, m] : f.entries) {
    long s = 0;
    for (std::size_t k = 0; k < n; ++k) {
      s += x[k];
      top[k] = std::max(top[k], s);
    }
  }
  Offset q(n, 0);
  long prev = 0;
  for (std::size_t k = 0; k < n; ++k) {
    q[k] = static_cast<int>(top[k] - prev);
    prev = top[k];
  }
  return q;
}

CharTable convolve_finite(const CharTable& f, const CharTable& o) {
  const std::size_t n = static_cast<std::size_t>(f.rank());
  CharTable out{f.reference + o.reference, o.box, {}, std::nullopt, false};
  if (f.entries.empty()) {
    out.box = Box{o.box.lo, o.box.lo - Offset(n, 1)};
    return out;
  }
  Offset lo(n, INT_MAX), hi(n, INT_MIN);
  for (const auto& [x, m] : f.entries)
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = std::min(lo[k], x[k]);
      hi[k] = std::max(hi[k], x[k]);
    }
  if (o.finite) {
    out.box = Box{o.box.lo + lo, o.box.hi + hi};
    out.finite = true;
  } else {
    out.box = Box{o.box.lo + hi, o.box.hi + lo};
    if (o.apex) out.apex = *o.apex + cone_cover(f);
  }
  accumulate_products(out, f, o);
  return out;
}

CharTable convolve_cones(const CharTable& a, const CharTable& b) {
  const int n = a.rank();
  long radius = LONG_MAX;
  for (const CharTable* t : {&a, &b}) {
    for (int k = 1; k <= n; ++k) {
      const auto i = static_cast<std::size_t>(k - 1);
      const long below = static_cast<long>((*t->apex)[i]) - t->box.lo[i];
      const long above = static_cast<long>(t->box.hi[i]) - (*t->apex)[i];
      radius = std::min(radius, below < 0 ? -1 : below / k);
      if (k > 1) radius = std::min(radius, above < 0 ? -1 : above / (k - 1));
    }
  }
  const Offset apex = *a.apex + *b.apex;
  CharTable out{a.reference + b.reference, {}, {}, apex, false};
  if (radius < 0) {
    out.box = Box{apex, apex - Offset(static_cast<std::size_t>(n), 1)};
    return out;
  }
  out.box = Box::cube(n, static_cast<int>(radius)).shifted(apex);
  accumulate_products(out, a, b);
  return out;
}

}  // namespace

CharTable convolve(const CharTable& a, const CharTable& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in convolution");
  if (a.finite) return convolve_finite(a, b);
  if (b.finite) return convolve_finite(b, a);
  if (a.apex && b.apex) return convolve_cones(a, b);
  throw std::invalid_argument("convolution of two characters with unbounded support in opposite directions");
}

CharComparison compare(const CharTable& a, const CharTable& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in character comparison");
  if (!(a.reference.z == b.reference.z)) throw std::invalid_argument("central characters differ");
  Offset diff(static_cast<std::size_t>(a.rank()));
  for (std::size_t i = 0; i < diff.size(); ++i) {
    const Scalar d = a.reference.h[i] - b.reference.h[i];
    if (!d.is_integer()) throw std::invalid_argument("reference weights differ by a non-integral shift");
    diff[i] = static_cast<int>(d.to_rational().get_num().get_si());
  }
  CharComparison out;
  out.region = a.box.intersect(b.box.shifted(negate(diff)));
  out.region.for_each([&](const Offset& x) {
    ++out.points;
    const auto l = a.at(x);
    const auto r = b.at(x + diff);
    if (l != r && out.equal) {
      out.equal = false;
      out.first_mismatch = x;
      out.lhs = l;
      out.rhs = r;
    }
  });
  return out;
}

FactorizationReport verify_verma_factorization(const Weight& lambda, int n, int depth) {
  if (static_cast<int>(lambda.h.size()) != n) throw std::invalid_argument("weight rank does not match n");
  FactorizationReport report{n, depth, lambda, {}};
  const CharTable lhs = verma_char(lambda, AlgebraKind::G, depth);
  Weight sp = half_sum_shift(lambda, 1);
  sp.z = lambda.z - Scalar::symbol("s").pow(2);
  const CharTable rhs = convolve(verma_char(sp, AlgebraKind::Sp, depth), char_module(ModuleDescriptor::shale_weil(n), depth));
  report.comparison = compare(lhs, rhs);
  return report;
}

std::vector<Root> parabolic_roots(int n, AlgebraKind algebra) {
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Root r(static_cast<std::size_t>(n), 0);
      ++r[static_cast<std::size_t>(i)];
      ++r[static_cast<std::size_t>(j)];
      out.push_back(r);
    }
  if (algebra == AlgebraKind::G)
    for (int i = 0; i < n; ++i) {
      Root r(static_cast<std::size_t>(n), 0);
      r[static_cast<std::size_t>(i)] = 1;
      out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

CharTable generalized_verma_char(const CharTable& v, AlgebraKind algebra, int depth) {
  if (!v.finite) throw std::invalid_argument("generalized Verma characters need a finite V");
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  const int n = v.rank();
  const Weight zero{std::vector<Scalar>(static_cast<std::size_t>(n)), Scalar()};
  return convolve(v, partition_char(zero, parabolic_roots(n, algebra), depth));
}

FactorizationReport verify_prop8b(const CharTable& v, int depth) {
  const int n = v.rank();
  CharTable vg = v;
  vg.reference.z = Scalar::symbol("s").pow(2);
  CharTable vsp = v;
  vsp.reference = half_sum_shift(v.reference, 1);
  vsp.reference.z = Scalar();
  FactorizationReport report{n, depth, vg.reference, {}};
  const CharTable lhs = generalized_verma_char(vg, AlgebraKind::G, depth);
  const CharTable rhs = convolve(generalized_verma_char(vsp, AlgebraKind::Sp, depth),
                                 char_module(ModuleDescriptor::shale_weil(n), depth));
  report.comparison = compare(lhs, rhs);
  return report;
}

CharTable trivial_char(int n, const Weight& reference) {
  CharTable out{reference, Box::cube(n, 0), {}, std::nullopt, true};
  out.entries.emplace(Offset(static_cast<std::size_t>(n), 0), 1);
  return out;
}

CharTable natural_char(int n, const Weight& reference) {
  CharTable out{reference, Box::cube(n, 1), {}, std::nullopt, true};
  for (int i = 0; i < n; ++i)
    for (int c : {-1, 1}) {
      Offset x(static_cast<std::size_t>(n), 0);
      x[static_cast<std::size_t>(i)] = c;
      out.entries.emplace(x, 1);
    }
  return out;
}

CharTable sl2_string_char(unsigned k, const Weight& reference) {
  const int top = static_cast<int>(k);
  CharTable out{reference, Box::cube(1, top), {}, std::nullopt, true};
  for (int x = -top; x <= top; x += 2) out.entries.emplace(Offset{x}, 1);
  return out;
}

CharTable sp2_simple_from_vermas(unsigned k, int depth) {
  const int kk = static_cast<int>(k);
  if (depth < 2 * kk) throw std::invalid_argument("depth too small to contain the simple module");
  const Weight top{{Scalar(static_cast<long>(kk))}, Scalar()};
  const Weight reflected{{Scalar(static_cast<long>(-kk - 2))}, Scalar()};
  const CharTable m = verma_char(top, AlgebraKind::Sp, depth);
  const CharTable r = verma_char(reflected, AlgebraKind::Sp, depth);
  CharTable out{top, m.box, {}, Offset{0}, false};
  m.box.for_each([&](const Offset& x) {
    const auto a = m.at(x);
    const auto b = r.at(Offset{x[0] + 2 * kk + 2});
    if (b > a) throw std::logic_error("negative multiplicity in M(k) - M(-k-2)");
    if (a > b) out.entries.emplace(x, a - b);
  });
  return out;
}

int default_probe_depth() {
  if (const char* env = std::getenv("OAK_PROBE_DEPTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return 12;
}

FlagSets classify_flags(const CharTable& table, int depth) {
  if (depth < 1) throw std::invalid_argument("probe depth must be positive");
  const int n = table.rank();
  FlagSets out;
  out.probe_depth = depth;
  for (int i = 1; i <= n; ++i) {
    if (table.finite) {  // the support ends inside the box, so every ray terminates
      out.F.push_back(i);
      continue;
    }
    const auto k = static_cast<std::size_t>(i - 1);
    bool continues[2] = {false, false};
    for (int side = 0; side < 2; ++side) {
      const int step = side == 0 ? 2 : -2;
      bool room = false;
      for (const auto& [x, m] : table.entries) {
        const int edge = step > 0 ? table.box.hi[k] : table.box.lo[k];
        const int steps = (step > 0 ? edge - x[k] : x[k] - edge) / 2;
        if (steps < depth) continue;
        room = true;
        Offset y = x;
        bool full = true;
        for (int t = 1; t <= steps && full; ++t) {
          y[k] += step;
          full = table.entries.count(y) > 0;
        }
        if (full) {
          continues[side] = true;
          break;
        }
      }
      if (!room)
        throw std::invalid_argument("box too small: no occupied weight has " + std::to_string(depth) +
                                    " steps of room along " + (step > 0 ? "+" : "-") + "2eps" + std::to_string(i));
    }
    if (continues[0] && continues[1]) out.I.push_back(i);
    else if (!continues[0] && !continues[1]) out.F.push_back(i);
    else if (!continues[0]) out.F_plus.push_back(i);
    else out.F_minus.push_back(i);
  }
  return out;
}

}  // namespace oak
