#include <doctest.h>

#include <random>

#include "oak/characters.hpp"
#include "oak/reports.hpp"
#include "support/oracles.hpp"

using namespace oak;

namespace {

Weight weight(std::vector<Scalar> h, Scalar z = Scalar()) { return {std::move(h), std::move(z)}; }

Weight zero_weight(int n) { return weight(std::vector<Scalar>(static_cast<std::size_t>(n))); }

std::vector<int> all_indices(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

CharTable translate(const CharTable& t, const Offset& by) {
  CharTable out{t.reference, t.box.shifted(by), {}, t.apex ? std::optional<Offset>(*t.apex + by) : std::nullopt, t.finite};
  for (const auto& [x, m] : t.entries) out.entries.emplace(x + by, m);
  return out;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("partition function agrees with brute force") {
    for (int n = 1; n <= 3; ++n) {
      const int r = n == 1 ? 8 : (n == 2 ? 4 : 2);
      for (const auto& roots : {root_system(n).positive, sp_positive_roots(n)}) {
        Box::cube(n, r).for_each([&](const Offset& mu) {
          INFO("n=", n, " mu[0]=", mu[0]);
          CHECK(kostant_partition(mu, roots) == testing::brute_partitions(mu, roots));
        });
      }
    }
    CHECK(kostant_partition({0}, {{1}, {2}}) == 1);
    CHECK_THROWS_AS(kostant_partition({1}, {{-1}}), std::invalid_argument);
  }

  TEST_CASE("rank-one Verma multiplicities") {
    const CharTable t = verma_char(zero_weight(1), AlgebraKind::G, 10);
    for (int k = 0; k <= 10; ++k) CHECK(t.at({-k}) == static_cast<std::uint64_t>(k / 2 + 1));
    CHECK(t.at({1}) == 0);
    const CharTable sp = verma_char(zero_weight(1), AlgebraKind::Sp, 10);
    for (int k = 0; k <= 10; ++k) CHECK(sp.at({-k}) == (k % 2 == 0 ? 1u : 0u));
  }

  TEST_CASE("Verma tables match the partition oracle on their box") {
    for (int n = 1; n <= 2; ++n) {
      const CharTable t = verma_char(zero_weight(n), AlgebraKind::G, 3);
      CHECK(t.box == cone_box(n, 3));
      const auto roots = root_system(n).positive;
      t.box.for_each([&](const Offset& x) {
        Offset mu = x;
        for (auto& c : mu) c = -c;
        CHECK(t.at(x) == testing::brute_partitions(mu, roots));
      });
    }
  }

  TEST_CASE("module characters") {
    const CharTable s = char_module(ModuleDescriptor::shale_weil(1), 5);
    CHECK(s.reference.h[0] == Scalar::fraction(-1, 2));
    CHECK(s.at({0}) == 1);
    CHECK(s.at({-3}) == 1);
    CHECK(s.at({1}) == 0);
    const CharTable f = char_module(ModuleDescriptor::full({Scalar::fraction(1, 3)}), 4);
    CHECK(f.entries.size() == 9);
    CHECK(f.reference.h[0] == Scalar::fraction(5, 6));
    const CharTable g = char_module(ModuleDescriptor::quotient({Scalar::fraction(1, 3), Scalar(0)}), 3);
    for (const auto& [x, m] : g.entries) CHECK(x[1] <= 0);
  }

  TEST_CASE("convolution of finite tables") {
    const CharTable nat = natural_char(1, zero_weight(1));
    const CharTable sq = convolve(nat, nat);
    CHECK(sq.finite);
    CHECK(sq.at({0}) == 2);
    CHECK(sq.at({2}) == 1);
    CHECK(sq.at({-2}) == 1);
    CHECK(convolve(trivial_char(2, zero_weight(2)), natural_char(2, zero_weight(2))) == natural_char(2, zero_weight(2)));
  }

  TEST_CASE("Verma factorization through S") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 3; ++trial) {
      CHECK(verify_verma_factorization(weight({testing::random_rational(rng)}), 1, 8).ok());
      CHECK(verify_verma_factorization(weight({testing::random_rational(rng), testing::random_rational(rng)}), 2, 4).ok());
    }
    CHECK(verify_verma_factorization(weight({Scalar::symbol("a1"), Scalar::symbol("a2")}), 2, 4).ok());
  }

  TEST_CASE("generalized Verma factorization") {
    for (int n = 1; n <= 2; ++n) {
      CHECK(verify_prop8b(trivial_char(n, zero_weight(n)), 5).ok());
      CHECK(verify_prop8b(trivial_char(n, weight(std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::fraction(3, 2)))), 5).ok());
      CHECK(verify_prop8b(natural_char(n, zero_weight(n)), 5).ok());
    }
  }

  TEST_CASE("a wrong shift is detected") {
    const int n = 1;
    const CharTable lhs = verma_char(weight({Scalar(0)}, Scalar::symbol("s").pow(2)), AlgebraKind::G, 6);
    const CharTable rhs = convolve(verma_char(weight({Scalar::fraction(3, 2)}), AlgebraKind::Sp, 6),
                                   char_module(ModuleDescriptor::shale_weil(n), 6));
    CHECK_FALSE(compare(lhs, rhs).equal);
  }

  TEST_CASE("sp_2 simple modules are sl_2 strings") {
    for (unsigned k = 0; k <= 5; ++k) {
      const CharTable l = sp2_simple_from_vermas(k, 12);
      const CharTable str = sl2_string_char(k, zero_weight(1));
      const CharComparison c = compare(l, str);
      CHECK(c.equal);
      std::uint64_t total = 0;
      for (const auto& [x, m] : l.entries) total += m;
      CHECK(total == k + 1);
    }
  }

  TEST_CASE("flag sets") {
    const int D = 12;
    for (int n = 1; n <= 2; ++n) {
      const Weight z0 = zero_weight(n);
      std::vector<Scalar> generic;
      for (int i = 1; i <= n; ++i) generic.push_back(Scalar::fraction(1, i + 2));
      const CharTable f = char_module(ModuleDescriptor::full(generic), 2 * D + 2);
      CHECK(classify_flags(f, D).I == all_indices(n));
      CHECK(classify_flags(convolve(natural_char(n, z0), f), D).I == all_indices(n));

      const CharTable s = char_module(ModuleDescriptor::shale_weil(n), 2 * D + 2);
      const FlagSets fs = classify_flags(s, D);
      CHECK(fs.I.empty());
      CHECK(fs.F_plus == all_indices(n));
      CHECK(classify_flags(convolve(natural_char(n, z0), s), D).F_plus == all_indices(n));
      const FlagSets gv = classify_flags(generalized_verma_char(trivial_char(n, z0), AlgebraKind::G, 2 * D + 2), D);
      CHECK(gv.I.empty());
      CHECK(gv.F_plus == all_indices(n));
    }
    const CharTable g = char_module(ModuleDescriptor::quotient({Scalar::fraction(1, 3), Scalar(0)}), 2 * D + 2);
    const FlagSets fg = classify_flags(g, D);
    CHECK(fg.I == std::vector<int>{1});
    CHECK(fg.F_plus == std::vector<int>{2});
    CHECK(classify_flags(sl2_string_char(4, zero_weight(1)), 1).F == std::vector<int>{1});
    CHECK_THROWS_AS(classify_flags(g, 100), std::invalid_argument);
  }

  TEST_CASE("flag sets are translation invariant") {
    const CharTable g = char_module(ModuleDescriptor::quotient({Scalar::fraction(1, 3), Scalar(0)}), 26);
    const FlagSets base = classify_flags(g, 12);
    for (const Offset& by : {Offset{3, -5}, Offset{-7, 2}, Offset{10, 10}}) CHECK(classify_flags(translate(g, by), 12) == base);
  }

  TEST_CASE("probe depth default") {
    CHECK(default_probe_depth() > 0);
  }

  TEST_CASE("JSON round trip and determinism") {
    const CharTable t = verma_char(weight({Scalar::fraction(1, 2), Scalar::symbol("a2")}, Scalar::symbol("s").pow(2)),
                                   AlgebraKind::G, 3);
    const Json j = to_json(t);
    CHECK(char_table_from_json(j) == t);
    CHECK(char_table_from_json(Json::parse(j.dump())) == t);
    CHECK(to_json(t).dump() == j.dump());
    Json bad = j;
    bad["entries"][0]["offset"] = Json::array({1});
    CHECK_THROWS_AS(char_table_from_json(bad), std::invalid_argument);
  }
}
