#include <algorithm>
#include <string>

#include "cuspsemi/error.hpp"
#include "cuspsemi/semigroup.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cuspsemi;

TEST_CASE("whole semigroup") {
  const auto s = from_generators({1});
  CHECK(s.is_whole());
  CHECK(s.frobenius() == -1);
  CHECK(s.genus() == 0);
  CHECK(s.conductor() == 0);
  CHECK(s.gaps().empty());
  CHECK(s.minimal_generators() == std::vector<std::int64_t>{1});
  CHECK(betti_elements(s, 50).empty());
  CHECK_THROWS_AS(is_symmetric(s), InvalidArgument);
}

TEST_CASE("invariants of <6,10,15>") {
  const auto s = from_generators({15, 6, 10, 6});
  CHECK(s.generators() == std::vector<std::int64_t>{6, 10, 15});
  CHECK(s.genus() == 15);
  CHECK(s.frobenius() == 29);
  CHECK(s.conductor() == 30);
  CHECK(is_symmetric(s));
  CHECK(apery(s).entries == std::vector<std::int64_t>{0, 25, 20, 15, 10, 35});
  CHECK(betti_elements(s, 60) == std::vector<std::int64_t>{30});
  CHECK(s.gaps() == oracle::gaps({6, 10, 15}, 90));
}

TEST_CASE("gap list of <8,10,12,21,25>") {
  const auto s = from_generators({8, 10, 12, 21, 25});
  const std::vector<std::int64_t> expected = {1, 2, 3, 4, 5, 6, 7, 9, 11, 13, 14, 15, 17, 19, 23, 27};
  CHECK(s.gaps() == expected);
  CHECK(oracle::gaps({8, 10, 12, 21, 25}, 200) == expected);
  CHECK(s.genus() == 16);
}

TEST_CASE("small cases") {
  const auto two_three = from_generators({2, 3});
  CHECK(is_symmetric(two_three));
  CHECK(apery(two_three).entries == std::vector<std::int64_t>{0, 3});
  CHECK(betti_elements(two_three, 12) == std::vector<std::int64_t>{6});

  const auto s357 = from_generators({3, 5, 7});
  CHECK(s357.frobenius() == 4);
  CHECK_FALSE(is_symmetric(s357));

  const auto s = from_generators({12, 15, 20});
  CHECK(s.genus() == 37);
  CHECK(s.frobenius() == 73);
  CHECK(s.gaps_above(60) == 2);
  CHECK(s.gaps_above(s.frobenius()) == 0);
  CHECK(from_generators({20, 28, 35}).gaps_above(140) == 8);

  CHECK(apery(from_generators({8, 10, 12, 21})).entries == std::vector<std::int64_t>{0, 33, 10, 43, 12, 21, 22, 31});
}

TEST_CASE("bad generators") {
  CHECK_THROWS_AS(from_generators({4, 6}), GcdNotOne);
  CHECK_THROWS_AS(from_generators({}), InvalidArgument);
  CHECK_THROWS_AS(from_generators({0, 3}), InvalidArgument);
  CHECK_THROWS_AS(from_generators({-2, 3}), InvalidArgument);
  CHECK_THROWS_AS(apery(from_generators({3, 5}), 4), InvalidArgument);
}

TEST_CASE("factorizations") {
  const auto s = from_generators({6, 10, 15});
  using F = Factorization;
  CHECK(factorizations(s, 30) == std::vector<F>{{{0, 0, 2}}, {{0, 3, 0}}, {{5, 0, 0}}});
  CHECK(factorizations(s, 0) == std::vector<F>{{{0, 0, 0}}});
  CHECK(factorizations(s, 29).empty());
  CHECK_THROWS_AS(factorizations(s, -1), InvalidArgument);

  const auto t = from_generators({12, 15, 20});
  CHECK(factorizations(t, 60) == std::vector<F>{{{0, 0, 3}}, {{0, 4, 0}}, {{5, 0, 0}}});

  CHECK(factorization_graph_connected({{{1, 1, 0}}, {{0, 1, 1}}}));
  CHECK_FALSE(factorization_graph_connected({{{2, 0, 0}}, {{0, 0, 1}}}));
}

namespace {

// Deterministic spread of generator sets with gcd 1.
std::vector<std::vector<std::int64_t>> sample_generator_sets() {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a + 1; b <= 14; ++b) {
      for (std::int64_t c = b + 1; c <= 19; c += 3) {
        if (std::gcd(std::gcd(a, b), c) == 1) out.push_back({a, b, c});
      }
      if (std::gcd(a, b) == 1) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("properties over generated semigroups") {
  for (const auto& gens : sample_generator_sets()) {
    std::string label;
    for (const auto g : gens) label += std::to_string(g) + " ";
    CAPTURE(label);
    const auto s = from_generators(gens);
    const std::int64_t limit = s.conductor() + 2 * gens.back();
    const auto in = oracle::members(gens, limit);
    for (std::int64_t x = 0; x < limit; ++x) REQUIRE(s.contains(x) == in[static_cast<std::size_t>(x)]);

    // closure under addition
    for (std::int64_t x = 0; x < limit; ++x) {
      for (std::int64_t y = 0; x + y < limit && s.contains(x); ++y) {
        if (s.contains(y)) REQUIRE(s.contains(x + y));
      }
    }

    CHECK(genus_from_apery(apery(s)) == s.genus());
    CHECK(static_cast<std::int64_t>(s.gaps().size()) == s.genus());
    CHECK(s.count_members_below(s.conductor()) + s.genus() == s.conductor());
    if (!s.is_whole() && is_symmetric(s)) CHECK(2 * s.genus() == s.frobenius() + 1);
    if (!s.is_whole()) CHECK(2 * s.genus() >= s.frobenius() + 1);

    for (std::int64_t x = 0; x < std::min<std::int64_t>(limit, 60); ++x) {
      const auto z = factorizations(s, x);
      CHECK(z.empty() == !s.contains(x));
      CHECK(static_cast<std::int64_t>(z.size()) == oracle::factorization_count(s.generators(), x));
    }
    const auto mg = s.minimal_generators();
    CHECK(from_generators(mg) == s);
  }
}
