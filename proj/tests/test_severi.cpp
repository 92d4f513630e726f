#include "cuspsemi/error.hpp"
#include "cuspsemi/severi.hpp"
#include "cuspsemi/supersym.hpp"
#include "doctest.h"

using namespace cuspsemi;

namespace {
std::int64_t rp(std::vector<std::int64_t> v) { return ramification_codim(v); }
}  // namespace

TEST_CASE("ramification codimension") {
  const std::vector<std::int64_t> p = {8, 10, 12};
  CHECK(ramification_codim(p) == 24);
  CHECK(generic_codim(p) == 23);
  const std::vector<std::int64_t> flat = {1, 2, 3};
  CHECK(ramification_codim(flat) == 0);
  CHECK(generic_codim(flat) == -1);
  CHECK(is_degenerate_profile(flat));
  CHECK(rp({12, 15, 20}) == 41);  // 11 + 13 + 17
  CHECK(generic_codim(std::vector<std::int64_t>{12, 15, 20}) == 40);
  CHECK(reducibility_threshold(p) == 24);
  const std::vector<std::int64_t> q = {12, 15, 20};
  CHECK(reducibility_threshold(q) == 41);
  for (std::int64_t m = 2; m <= 4; ++m) {
    for (std::int64_t l = 2 * m; l <= 12; ++l) {
      const std::vector<std::int64_t> r = {m * l, m * l + m, m * l + 2 * m};
      CHECK(reducibility_threshold(r) == 3 * m * l + 3 * m - 6);
    }
  }
  const std::vector<std::int64_t> four = {4, 5, 6, 7};
  CHECK_THROWS_AS(reducibility_threshold(four), InvalidArgument);
}

TEST_CASE("supersymmetric codimension") {
  CHECK(supersym_codim(SupersymTriple(3, 4, 5)) == 44);
  CHECK(supersym_codim(SupersymTriple(4, 5, 7)) == 92);
  CHECK(supersym_codim(SupersymTriple(2, 3, 5)) == 24);
}

TEST_CASE("excess reports") {
  const auto r345 = excess_supersym(SupersymTriple(3, 4, 5));
  CHECK(r345.codim == 44);
  CHECK(r345.genus == 37);
  CHECK_FALSE(r345.excess);

  const auto r457 = excess_supersym(SupersymTriple(4, 5, 7));
  CHECK(r457.codim == 92);
  CHECK(r457.nodal_codim == 99);
  CHECK(r457.excess);
  const auto& rb = r457.check("rho < abc/2 - 3(ab+ac+bc)/4 + 15/4");
  CHECK(rb.lhs == 8);
  CHECK(rb.rhs == Rational(23, 2));
  CHECK(rb.holds);

  CHECK(excess_supersym(SupersymTriple(5, 6, 7)).excess);
  CHECK_THROWS(r457.check("no such predicate"));
}

TEST_CASE("generic excess reports") {
  const SupersymTriple t345(3, 4, 5);
  CHECK(generic_genus_surrogate(t345) == 35);
  const auto r = excess_generic_supersym(t345, 35);
  CHECK(r.codim == 40);
  CHECK_FALSE(r.excess);
  CHECK_FALSE(r.check("#{x in S : x < abc} < abc - ab - ac - bc + 7").holds);

  const SupersymTriple t457(4, 5, 7);
  const auto q = excess_generic_supersym(t457, generic_genus_surrogate(t457));
  const auto& bound = q.check("#{x in S : x < abc} < abc - ab - ac - bc + 7");
  CHECK(bound.rhs == 64);
  CHECK(bound.lhs == 49);
  CHECK(bound.holds);

  const SupersymTriple t567(5, 6, 7);
  CHECK(excess_generic_supersym(t567, generic_genus_surrogate(t567)).excess);
}

TEST_CASE("F polynomial") {
  CHECK(bound_polynomial_F(4, 5, 7) == Rational(-1, 2));
  CHECK(bound_polynomial_F(4, 7, 9) == Rational(21, 2));
  CHECK(bound_polynomial_F(5, 6, 7) == Rational(17, 2));
}

TEST_CASE("excess over the a >= 4 sweep") {
  for (const auto& t : supersym_triples(4000, 4)) {
    const auto r = excess_supersym(t);
    CHECK(r.excess == (r.codim < r.nodal_codim));
    CHECK(r.nodal_codim == r.genus);
    if (r.check("F(a,b,c) >= 0").holds) CHECK(r.check("rho < abc/2 - 3(ab+ac+bc)/4 + 15/4").holds);
    if (!(t == SupersymTriple(4, 5, 7))) CHECK(r.excess);
    const auto g = excess_generic_supersym(t, generic_genus_surrogate(t));
    CHECK(g.check("#{x in S : x < abc} < abc - ab - ac - bc + 7").holds);
  }
}
