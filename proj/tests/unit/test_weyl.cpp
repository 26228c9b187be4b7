#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "oak/errors.hpp"
#include "oak/syntax.hpp"
#include "oak/weyl.hpp"
#include "support/oracles.hpp"

using namespace oak;

namespace {

WeylElement w(int n, const char* text) { return parse_weyl(text, n); }

WeylElement random_weyl(std::mt19937_64& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-3, 3);
  WeylElement out(n);
  for (int k = 0; k < 3; ++k) {
    WeylMonomial m{std::vector<std::uint8_t>(static_cast<std::size_t>(n)), std::vector<std::uint8_t>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) {
      m.t[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e(rng));
      m.d[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e(rng));
    }
    out.add(m, Scalar(c(rng)));
  }
  return out;
}

LaurentVector random_vector(std::mt19937_64& rng, const ModuleDescriptor& m, int lo, int hi, int terms) {
  std::uniform_int_distribution<int> off(lo, hi);
  std::uniform_int_distribution<int> c(1, 5);
  LaurentVector v{m.base(), {}};
  for (int k = 0; k < terms; ++k) {
    Offset x;
    for (int i = 0; i < m.rank(); ++i) x.push_back(off(rng));
    v.add(x, Scalar(c(rng)));
  }
  return project(v, m);
}

// Normalizes a nonzero vector by its first coefficient so scalar multiples coincide.
LaurentVector normalized(LaurentVector v) {
  const Scalar lead = v.terms.begin()->second;
  v *= Scalar(1) / lead;
  return v;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("commutation relations") {
    for (int n = 1; n <= 3; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          CHECK(commutator(WeylElement::d(n, i), WeylElement::t(n, j)) ==
                WeylElement::constant(n, Scalar(i == j ? 1 : 0)));
          CHECK(commutator(WeylElement::t(n, i), WeylElement::t(n, j)).is_zero());
          CHECK(commutator(WeylElement::d(n, i), WeylElement::d(n, j)).is_zero());
        }
    CHECK(w(1, "d1 t1") == w(1, "t1 d1 + 1"));
    CHECK(w(1, "d1^2 t1^2") == w(1, "t1^2 d1^2 + 4 t1 d1 + 2"));
  }

  TEST_CASE("multiplication is associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + trial % 2;
      const auto a = random_weyl(rng, n, 2), b = random_weyl(rng, n, 2), c = random_weyl(rng, n, 2);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("documented actions") {
    const auto S1 = ModuleDescriptor::shale_weil(1);
    const LaurentVector tinv = LaurentVector::basis({Scalar(0)}, {-1});
    CHECK(apply(w(1, "d1^2"), tinv, S1) == LaurentVector::basis({Scalar(0)}, {-3}) + LaurentVector::basis({Scalar(0)}, {-3}));
    CHECK(apply(w(1, "t1"), tinv, S1).is_zero());
    const Scalar a = Scalar::symbol("a1");
    const auto F = ModuleDescriptor::full({a});
    LaurentVector expect = LaurentVector::basis({a}, {-1});
    expect *= a;
    CHECK(apply(w(1, "d1"), LaurentVector::basis({a}, {0}), F) == expect);
  }

  TEST_CASE("action is faithful to multiplication") {
    std::mt19937_64 rng(5);
    const Scalar a1 = Scalar::symbol("a1");
    std::vector<ModuleDescriptor> mods = {ModuleDescriptor::full({a1}), ModuleDescriptor::shale_weil(1),
                                          ModuleDescriptor::full({a1, Scalar::fraction(1, 3)}),
                                          ModuleDescriptor::quotient({a1, Scalar(0)}), ModuleDescriptor::shale_weil(2)};
    for (const auto& m : mods)
      for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_weyl(rng, m.rank(), 2), q = random_weyl(rng, m.rank(), 2);
        const auto v = random_vector(rng, m, -4, 3, 3);
        CHECK(apply(p * q, v, m) == apply(p, apply(q, v, m), m));
      }
  }

  TEST_CASE("quotient is well defined on generators") {
    std::mt19937_64 rng(17);
    const auto full = ModuleDescriptor::full({Scalar::symbol("a1"), Scalar(0)});
    const auto quot = ModuleDescriptor::quotient({Scalar::symbol("a1"), Scalar(0)});
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = random_vector(rng, full, -3, 3, 4);
      for (int i = 1; i <= 2; ++i)
        for (const auto& p : {WeylElement::t(2, i), WeylElement::d(2, i)})
          CHECK(project(apply(p, v, full), quot) == apply(p, project(v, quot), quot));
    }
  }

  TEST_CASE("S is simple: every vector reaches the generator") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 2; ++n) {
      const auto S = ModuleDescriptor::shale_weil(n);
      const LaurentVector target = LaurentVector::basis(S.base(), Offset(static_cast<std::size_t>(n), -1));
      std::vector<WeylElement> gens;
      for (int i = 1; i <= n; ++i) {
        gens.push_back(WeylElement::t(n, i));
        gens.push_back(WeylElement::d(n, i));
      }
      for (int trial = 0; trial < 8; ++trial) {
        const auto v = random_vector(rng, S, -4, -1, 3);
        REQUIRE_FALSE(v.is_zero());
        std::set<std::string> seen;
        std::deque<std::pair<LaurentVector, int>> queue{{normalized(v), 0}};
        bool reached = false;
        while (!queue.empty() && !reached) {
          auto [cur, depth] = queue.front();
          queue.pop_front();
          if (cur == target) {
            reached = true;
            break;
          }
          if (depth == 10 || !seen.insert(to_string(cur)).second) continue;
          for (const auto& g : gens) {
            const auto next = apply(g, cur, S);
            if (!next.is_zero()) queue.emplace_back(normalized(next), depth + 1);
          }
        }
        CHECK(reached);
      }
    }
  }

  TEST_CASE("straightening kills t_i") {
    const auto S = ModuleDescriptor::shale_weil(1);
    const SumVector w0{LaurentVector::basis(S.base(), {-2}), LaurentVector::basis(S.base(), {-1})};
    const SumVector out = straighten_highest(w0, 1, S);
    CHECK(out[0].is_zero());
    CHECK(out[1] == LaurentVector::basis(S.base(), {-1}));
    CHECK_THROWS_AS(straighten_highest(SumVector{LaurentVector{S.base(), {}}}, 1, S), std::invalid_argument);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + trial % 2;
      const auto Sn = ModuleDescriptor::shale_weil(n);
      const std::size_t k = 1 + static_cast<std::size_t>(trial % 3);
      SumVector v;
      for (std::size_t j = 0; j < k; ++j) v.push_back(random_vector(rng, Sn, -4, -1, 3));
      if (std::all_of(v.begin(), v.end(), [](const auto& c) { return c.is_zero(); })) continue;
      const SumVector h = make_highest(v, Sn);
      for (int i = 1; i <= n; ++i)
        for (const auto& c : apply(WeylElement::t(n, i), h, Sn)) CHECK(c.is_zero());
    }
  }

  TEST_CASE("straightening stays in the span of d^g t^g w") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 1 + trial % 2;
      const auto S = ModuleDescriptor::shale_weil(n);
      const auto v = random_vector(rng, S, -4, -1, 3);
      if (v.is_zero()) continue;
      const LaurentVector h = make_highest(SumVector{v}, S).front();
      std::vector<std::map<Offset, Rational>> span;
      Box(Offset(static_cast<std::size_t>(n), 0), Offset(static_cast<std::size_t>(n), 4)).for_each([&](const Offset& g) {
        if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) return;
        WeylElement p = WeylElement::constant(n, Scalar(1));
        for (int i = 1; i <= n; ++i)
          for (int e = 0; e < g[static_cast<std::size_t>(i - 1)]; ++e) p = p * WeylElement::t(n, i);
        WeylElement q = WeylElement::constant(n, Scalar(1));
        for (int i = 1; i <= n; ++i)
          for (int e = 0; e < g[static_cast<std::size_t>(i - 1)]; ++e) q = q * WeylElement::d(n, i);
        std::map<Offset, Rational> row;
        for (const auto& [m, c] : apply(q * p, v, S).terms) row[m] = c.to_rational();
        span.push_back(row);
      });
      const std::size_t r = testing::rational_rank(span);
      std::map<Offset, Rational> diff;
      for (const auto& [m, c] : (h - v).terms) diff[m] = c.to_rational();
      span.push_back(diff);
      CHECK(testing::rational_rank(span) == r);
    }
  }

  TEST_CASE("localized inverse of -d^2") {
    const Scalar a = Scalar::symbol("a1");
    const auto F = ModuleDescriptor::full({a});
    const LaurentVector v = LaurentVector::basis({a}, {0});
    const LaurentVector inv = apply_inverse_long_root(1, 1, v, F);
    CHECK(apply(w(1, "-d1^2"), inv, F) == v);
    const LaurentVector inv2 = apply_inverse_long_root(1, 2, v, F);
    CHECK(apply(w(1, "d1^4"), inv2, F) == v);
    const auto F0 = ModuleDescriptor::full({Scalar(0)});
    CHECK_THROWS_AS(apply_inverse_long_root(1, 1, LaurentVector::basis({Scalar(0)}, {-2}), F0), DivisionByZero);
    CHECK_THROWS_AS(apply_inverse_long_root(1, 1, LaurentVector::basis({Scalar(0)}, {-1}), ModuleDescriptor::shale_weil(1)),
                    std::invalid_argument);
  }

  TEST_CASE("support") {
    const auto weights = support(ModuleDescriptor::shale_weil(1), Box::cube(1, 3));
    REQUIRE(weights.size() == 3);
    CHECK(weights[0][0] == Scalar::fraction(-5, 2));
    CHECK(weights[2][0] == Scalar::fraction(-1, 2));
    const auto g = support(ModuleDescriptor::quotient({Scalar::fraction(1, 3), Scalar(0)}), Box::cube(2, 1));
    CHECK(g.size() == 3);
    CHECK_THROWS_AS(ModuleDescriptor::quotient({Scalar(2)}), std::invalid_argument);
  }
}
