#include <doctest.h>

#include <random>

#include "oak/errors.hpp"
#include "oak/morphisms.hpp"
#include "oak/syntax.hpp"
#include "support/oracles.hpp"

using namespace oak;

namespace {

BasisElement X(Root r) { return BasisElement::root_vector(std::move(r)); }

WeylElement w(int n, const char* text) { return parse_weyl(text, n); }

std::vector<Word> pbw_monomials(int n, std::size_t max_degree) {
  const auto& g = LieAlgebra::of_rank(n);
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& m : frontier)
      for (std::size_t x = m.empty() ? 0 : m.back(); x < g.dim(); ++x) {
        if (x == g.central_index()) continue;
        Word e = m;
        e.push_back(static_cast<std::uint8_t>(x));
        next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Conjugation oracle: (-d_i^2)^b f(g) (-d_i^2)^-b on v, built from the module action alone.
LaurentVector conjugate(const BasisElement& g, int i, unsigned b, const LaurentVector& v, const ModuleDescriptor& m) {
  const int n = m.rank();
  LaurentVector cur = apply_inverse_long_root(i, b, v, m);
  cur = apply(f_map(g, n), cur, m);
  WeylElement x = WeylElement::constant(n, Scalar(-1)) * WeylElement::d(n, i) * WeylElement::d(n, i);
  for (unsigned k = 0; k < b; ++k) cur = apply(x, cur, m);
  return cur;
}

}  // namespace

TEST_SUITE("morphisms") {
  TEST_CASE("oscillator realization on the basis") {
    const int n = 2;
    CHECK(f_map(X({1, -1}), n) == w(n, "t1 d2"));
    CHECK(f_map(X({1, 1}), n) == w(n, "t1 t2"));
    CHECK(f_map(X({2, 0}), n) == w(n, "t1^2"));
    CHECK(f_map(X({-1, -1}), n) == w(n, "-d1 d2"));
    CHECK(f_map(X({0, -2}), n) == w(n, "-d2^2"));
    CHECK(f_map(BasisElement::cartan(2), n) == w(n, "t2 d2 + 1/2"));
    CHECK(f_map(X({1, 0}), n) == w(n, "s t1"));
    CHECK(f_map(X({0, -1}), n) == w(n, "-s d2"));
    CHECK(f_map(BasisElement::central(), n) == w(n, "s^2"));
  }

  TEST_CASE("f and phi are Lie homomorphisms") {
    const std::size_t expected_pairs[] = {21, 120, 406};
    for (int n = 1; n <= 3; ++n) {
      const HomReport r = verify_lie_hom(HomMap::F, n);
      CHECK(r.ok());
      CHECK(r.pairs_checked == expected_pairs[n - 1]);
      CHECK(r.pairs.size() == r.pairs_checked);
    }
    for (int n = 1; n <= 2; ++n) CHECK(verify_lie_hom(HomMap::Phi, n).ok());
  }

  TEST_CASE("f is multiplicative on U(g)") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 2;
      const UEAElement a = normal_order(testing::random_word(rng, n, 3), n);
      const UEAElement b = normal_order(testing::random_word(rng, n, 3), n);
      CHECK(f_map(multiply(a, b)) == f_map(a) * f_map(b));
    }
  }

  TEST_CASE("phi is multiplicative") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + trial % 2;
      const UEAElement a = reduce_central(normal_order(testing::random_word(rng, n, 3), n));
      const UEAElement b = reduce_central(normal_order(testing::random_word(rng, n, 3), n));
      CHECK(phi_map(reduce_central(multiply(a, b))) == phi_map(a) * phi_map(b));
    }
    CHECK_THROWS_AS(phi_map(UEAElement::from_lie(LieElement(1, BasisElement::central()))), std::invalid_argument);
  }

  TEST_CASE("phi on generators") {
    const int n = 1;
    const TensorElement hx = phi_map(BasisElement::cartan(1), n);
    const TensorElement expect =
        TensorElement::left(UEAElement::from_lie(LieElement(n, BasisElement::cartan(1)))) +
        TensorElement::right(w(n, "t1 d1 + 1/2"));
    CHECK(hx == expect);
    CHECK(phi_map(X({1}), n) == TensorElement::right(w(n, "s t1")));
  }

  TEST_CASE("phi is injective on low-degree PBW monomials") {
    // Linear independence after specializing s = 3 implies independence over Q(s).
    const std::map<Symbol, Scalar> at{{Symbol("s"), Scalar(3)}};
    for (const auto& [n, deg] : std::vector<std::pair<int, std::size_t>>{{1, 3}, {2, 2}}) {
      const auto words = pbw_monomials(n, deg);
      std::vector<std::map<TensorElement::Key, Rational>> images;
      for (const auto& m : words) {
        std::map<TensorElement::Key, Rational> row;
        const TensorElement image = phi_map(UEAElement::monomial(n, m));
        for (const auto& [k, c] : image.terms()) row[k] = c.substitute(at).to_rational();
        images.push_back(std::move(row));
      }
      CHECK(testing::rational_rank(images) == words.size());
    }
  }

  TEST_CASE("twist closed form reproduces the rank-one b = 1 value") {
    const Scalar a = Scalar::symbol("a1");
    const auto F = ModuleDescriptor::full({a});
    const TwistSpec spec{{1}, {Scalar(1)}};
    const LaurentVector out = apply(theta_generator(X({2}), spec), LaurentVector::basis({a}, {0}), F);
    const Scalar expected = (a + Scalar(3)) * (a + Scalar(4)) / ((a + Scalar(1)) * (a + Scalar(2)));
    CHECK(out == [&] {
      LaurentVector v = LaurentVector::basis({a}, {2});
      v *= expected;
      return v;
    }());
  }

  TEST_CASE("ad-series matches the closed form for symbolic b") {
    for (int n = 1; n <= 2; ++n) {
      std::vector<int> idx;
      std::vector<Scalar> b;
      for (int i = 1; i <= n; ++i) {
        idx.push_back(i);
        b.push_back(Scalar::symbol("b" + std::to_string(i)));
      }
      const TwistSpec spec{idx, b};
      for (const auto& g : twist_generators(spec, n)) CHECK(theta_series(g, spec) == theta_generator(g, spec));
    }
  }

  TEST_CASE("closed form equals conjugation for b = 0..3") {
    for (int n = 1; n <= 2; ++n)
      for (int b = 0; b <= 3; ++b) {
        std::vector<int> idx;
        std::vector<Scalar> bs, a;
        for (int i = 1; i <= n; ++i) {
          idx.push_back(i);
          bs.push_back(Scalar(b));
          a.push_back(Scalar::symbol("a" + std::to_string(i)));
        }
        const TwistReport r = verify_theta_conjugation({idx, bs}, a, n == 1 ? 4 : 2);
        CHECK(r.ok());
        CHECK(r.checks > 0);
      }
  }

  TEST_CASE("conjugation oracle agrees with the closed form and rejects the printed variant") {
    const Scalar a = Scalar::symbol("a1");
    const auto F = ModuleDescriptor::full({a});
    const auto& g = LieAlgebra::of_rank(1);
    const auto xm1 = static_cast<std::uint8_t>(g.index_of(X({-1})));
    const auto h = static_cast<std::uint8_t>(g.cartan_index(1));
    for (unsigned b = 1; b <= 3; ++b) {
      const TwistSpec spec{{1}, {Scalar(static_cast<long>(b))}};
      const Scalar bb(static_cast<long>(b));
      // X_{eps} + b X_{-eps} X^-1 and X_{2eps} + 2b(b - 1 - 2h) X^-1
      LocalizedOperator eps_variant(1), two_variant(1);
      eps_variant.add(Word{static_cast<std::uint8_t>(g.index_of(X({1})))}, {0}, Scalar(1));
      eps_variant.add(Word{xm1}, {1}, bb);
      two_variant.add(Word{static_cast<std::uint8_t>(g.index_of(X({2})))}, {0}, Scalar(1));
      two_variant.add(Word{}, {1}, Scalar(2) * bb * (bb - Scalar(1)));
      two_variant.add(Word{h}, {1}, Scalar(-4) * bb);
      for (int m = -3; m <= 3; ++m) {
        const LaurentVector v = LaurentVector::basis({a}, {m});
        for (const auto& gen : {X({-1}), X({1}), X({2})})
          CHECK(apply(theta_generator(gen, spec), v, F) == conjugate(gen, 1, b, v, F));
        CHECK_FALSE(apply(eps_variant, v, F) == conjugate(X({1}), 1, b, v, F));
        // the two forms agree on X_{2eps} exactly when b(b-1) = 0
        if (b >= 2) CHECK_FALSE(apply(two_variant, v, F) == conjugate(X({2}), 1, b, v, F));
      }
    }
  }

  TEST_CASE("twist specification checks") {
    CHECK_THROWS_AS(TwistSpec({{1, 1}, {Scalar(1), Scalar(1)}}).validate(2), std::invalid_argument);
    CHECK_THROWS_AS(TwistSpec({{3}, {Scalar(1)}}).validate(2), std::invalid_argument);
    CHECK_THROWS_AS(theta_generator(X({-1, 1}), TwistSpec{{1}, {Scalar(1)}}), std::invalid_argument);
    CHECK_THROWS(verify_theta_conjugation({{1}, {Scalar::fraction(1, 2)}}, {Scalar::symbol("a1")}, 2));
  }
}
