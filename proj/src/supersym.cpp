#include "cuspsemi/supersym.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "cuspsemi/checked.hpp"
#include "cuspsemi/error.hpp"

namespace cuspsemi {

SupersymTriple::SupersymTriple(std::int64_t a_, std::int64_t b_, std::int64_t c_) : a(a_), b(b_), c(c_) {
  if (!(2 <= a && a < b && b < c)) throw InvalidArgument("supersymmetric triple needs 2 <= a < b < c");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw InvalidArgument("supersymmetric triple must be pairwise coprime");
  }
  checked_mul(checked_mul(checked_mul(a, b), c), 4);
}

std::vector<SupersymTriple> supersym_triples(std::int64_t max_abc, std::int64_t min_a) {
  std::vector<SupersymTriple> out;
  for (std::int64_t a = std::max<std::int64_t>(2, min_a); a * (a + 1) * (a + 2) <= max_abc; ++a) {
    for (std::int64_t b = a + 1; a * b * (b + 1) <= max_abc; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t c = b + 1; a * b * c <= max_abc; ++c) {
        if (std::gcd(a, c) == 1 && std::gcd(b, c) == 1) out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

NumericalSemigroup supersym_semigroup(const SupersymTriple& t) { return from_generators(t.generators()); }

std::int64_t frobenius_formula(const SupersymTriple& t) { return 2 * t.abc() - t.pair_sum(); }

std::int64_t genus_formula(const SupersymTriple& t) { return t.abc() - (t.pair_sum() - 1) / 2; }

std::int64_t lattice_count(const SimplexSpec& spec) {
  if (spec.alpha <= 0 || spec.beta <= 0 || spec.gamma <= 0) {
    throw InvalidArgument("simplex intercepts must be positive");
  }
  // x/(p1/q1) + y/(p2/q2) + z/(p3/q3) <= 1  <=>  x A + y B + z C <= D
  const BigInt p1 = numerator(spec.alpha), q1 = denominator(spec.alpha);
  const BigInt p2 = numerator(spec.beta), q2 = denominator(spec.beta);
  const BigInt p3 = numerator(spec.gamma), q3 = denominator(spec.gamma);
  const BigInt A = q1 * p2 * p3;
  const BigInt B = q2 * p1 * p3;
  const BigInt C = q3 * p1 * p2;
  const BigInt D = p1 * p2 * p3;
  std::int64_t count = 0;
  for (BigInt x = 0; x * A <= D; ++x) {
    for (BigInt y = 0; x * A + y * B <= D; ++y) {
      const BigInt rest = D - x * A - y * B;
      count = checked_add(count, static_cast<std::int64_t>(rest / C) + 1);
    }
  }
  return count;
}

SimplexSpec intercepts(const SupersymTriple& t) {
  // Each intercept is (abc - ab - ac - bc) over one of ab, ac, bc.
  const std::int64_t n = t.abc() - t.pair_sum();
  return {make_rational(n, t.ab()), make_rational(n, t.ac()), make_rational(n, t.bc())};
}

std::int64_t rho_by_members(const SupersymTriple& t) {
  return supersym_semigroup(t).count_members_below(t.abc() - t.pair_sum());
}

std::int64_t rho_by_lattice(const SupersymTriple& t) {
  // abc <= ab + ac + bc only for (2,3,5); the simplex is then empty.
  if (t.abc() - t.pair_sum() <= 0) return 0;
  return lattice_count(intercepts(t));
}

std::int64_t rho(const SupersymTriple& t) {
  const std::int64_t by_gaps = supersym_semigroup(t).gaps_above(t.abc());
  const std::int64_t by_members = rho_by_members(t);
  const std::int64_t by_lattice = rho_by_lattice(t);
  if (by_gaps != by_members || by_members != by_lattice) {
    throw MethodMismatch("rho(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) +
                         "): gaps " + std::to_string(by_gaps) + ", members " + std::to_string(by_members) +
                         ", lattice " + std::to_string(by_lattice));
  }
  return by_gaps;
}

namespace {

Rational eta(const SimplexSpec& s) { return 1 / s.alpha + 1 / s.beta + 1 / s.gamma; }

}  // namespace

Rational yz_weak_bound(const SimplexSpec& s) {
  const Rational e = 1 + eta(s);
  return s.alpha * s.beta * s.gamma / 6 * e * e * e;
}

Rational yz_strong_bound(const SimplexSpec& s) {
  const Rational e = 1 + eta(s);
  return (s.alpha * e - 1) * (s.beta * e - 1) * (s.gamma * e - 1) / 6;
}

bool yz_in_hypothesis(const SimplexSpec& s) { return s.alpha >= s.beta && s.beta >= s.gamma && s.gamma >= 1; }

namespace {

// Inverse of x modulo m for gcd(x, m) = 1, in [0, m).
std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r0 = m, r1 = floor_mod(x, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return floor_mod(s0, m);
}

}  // namespace

AbcCoordinates abc_normal_form(const SupersymTriple& t, std::int64_t n) {
  const std::int64_t x = floor_mod(checked_mul(floor_mod(n, t.c), inverse_mod(t.ab(), t.c)), t.c);
  const std::int64_t y = floor_mod(checked_mul(floor_mod(n, t.b), inverse_mod(t.ac(), t.b)), t.b);
  const std::int64_t rest = checked_sub(checked_sub(n, x * t.ab()), y * t.ac());
  return {x, y, rest / t.bc()};
}

bool abc_member(const SupersymTriple& t, std::int64_t n) { return abc_normal_form(t, n).z >= 0; }

std::vector<AbcCoordinates> abc_all_factorizations(const SupersymTriple& t, std::int64_t n) {
  if (n < 0) throw InvalidArgument("factorizations of a negative integer");
  const auto base = abc_normal_form(t, n);
  std::vector<AbcCoordinates> out;
  if (base.z < 0) return out;
  // (x + k1 c, y + k2 b, z - (k1 + k2) a) with k1, k2 >= 0.
  const std::int64_t budget = base.z / t.a;
  for (std::int64_t k1 = 0; k1 <= budget; ++k1) {
    for (std::int64_t k2 = 0; k1 + k2 <= budget; ++k2) {
      out.push_back({base.x + k1 * t.c, base.y + k2 * t.b, base.z - (k1 + k2) * t.a});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResidueTriple residue_triple(const SupersymTriple& t) {
  return {inverse_mod(t.bc(), t.a), inverse_mod(t.ac(), t.b), inverse_mod(t.ab(), t.c)};
}

std::int64_t min_congruent_one(const SupersymTriple& t) {
  const auto r = residue_triple(t);
  const std::int64_t v = r.gamma_hat * t.ab() + r.beta_hat * t.ac() + r.alpha_hat * t.bc();
  if (v != t.abc() + 1 && v != 2 * t.abc() + 1) {
    throw MethodMismatch("least element congruent to 1 mod abc is " + std::to_string(v));
  }
  return v;
}

bool s_prime_applicable(const SupersymTriple& t) { return min_congruent_one(t) == 2 * t.abc() + 1; }

NumericalSemigroup s_prime(const SupersymTriple& t) {
  if (!s_prime_applicable(t)) throw NotApplicable("abc + 1 already lies in <ab, ac, bc>; S' = S");
  auto gens = t.generators();
  gens.push_back(t.abc() + 1);
  return from_generators(std::move(gens));
}

std::int64_t genus_s_prime_formula(const SupersymTriple& t) {
  if (!s_prime_applicable(t)) throw NotApplicable("abc + 1 already lies in <ab, ac, bc>; S' = S");
  const auto r = residue_triple(t);
  return genus_formula(t) - (t.a - r.alpha_hat) * (t.b - r.beta_hat) * (t.c - r.gamma_hat);
}

std::int64_t frobenius_s_prime_formula(const SupersymTriple& t) {
  if (!s_prime_applicable(t)) throw NotApplicable("abc + 1 already lies in <ab, ac, bc>; S' = S");
  const auto r = residue_triple(t);
  return std::max({(r.gamma_hat - 1) * t.ab() + (t.b - 1) * t.ac() - t.bc(),
                   (t.c - 1) * t.ab() + (r.beta_hat - 1) * t.ac() - t.bc(),
                   (t.c - 1) * t.ab() + (t.b - 1) * t.ac() + (r.alpha_hat - t.a - 1) * t.bc()});
}

AbcPlusCheck generic_contains_abc_plus(const SupersymTriple& t, std::uint64_t prime, std::uint64_t seed) {
  auto s = empirical_generic_semigroup(RamificationProfile(t.generators()), 3, prime, seed);
  const bool one = s.contains(t.abc() + 1);
  const bool two = s.contains(t.abc() + 2);
  return {one, two, std::move(s)};
}

}  // namespace cuspsemi
