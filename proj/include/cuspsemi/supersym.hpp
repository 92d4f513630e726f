#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cuspsemi/rational.hpp"
#include "cuspsemi/semigroup.hpp"
#include "cuspsemi/series.hpp"

namespace cuspsemi {

/// Pairwise coprime 2 <= a < b < c; generates S = <ab, ac, bc>.
struct SupersymTriple {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  /// Throws InvalidArgument unless the triple is ordered and pairwise coprime.
  SupersymTriple(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t ab() const noexcept { return a * b; }
  std::int64_t ac() const noexcept { return a * c; }
  std::int64_t bc() const noexcept { return b * c; }
  std::int64_t abc() const noexcept { return a * b * c; }
  std::int64_t pair_sum() const noexcept { return ab() + ac() + bc(); }
  std::vector<std::int64_t> generators() const { return {ab(), ac(), bc()}; }

  friend auto operator<=>(const SupersymTriple&, const SupersymTriple&) = default;
};

/// Every valid triple with abc <= max_abc (and a >= min_a), in lexicographic order.
std::vector<SupersymTriple> supersym_triples(std::int64_t max_abc, std::int64_t min_a = 2);

NumericalSemigroup supersym_semigroup(const SupersymTriple& t);
/// 2abc - (ab + ac + bc).
std::int64_t frobenius_formula(const SupersymTriple& t);
/// abc - (ab + ac + bc - 1) / 2.
std::int64_t genus_formula(const SupersymTriple& t);

/// Right-angled simplex with vertices 0, (alpha,0,0), (0,beta,0), (0,0,gamma).
struct SimplexSpec {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

/// #{(x,y,z) in N^3 : x/alpha + y/beta + z/gamma <= 1}, by exact
/// cross-multiplied integer comparisons. Intercepts must be positive.
std::int64_t lattice_count(const SimplexSpec& spec);

/// alpha = c-1-c/a-c/b, beta = b-1-b/a-b/c, gamma = a-1-a/b-a/c. These are the
/// simplex intercepts, unrelated to residue_triple.
SimplexSpec intercepts(const SupersymTriple& t);

/// rho(abc) as #{x in S : x < abc - (ab+ac+bc)}, via the symmetry of S.
std::int64_t rho_by_members(const SupersymTriple& t);
/// rho(abc) as the lattice-point count of the intercept simplex.
std::int64_t rho_by_lattice(const SupersymTriple& t);
/// Number of gaps of S above abc; both methods are run and must agree
/// (MethodMismatch otherwise).
std::int64_t rho(const SupersymTriple& t);

/// (alpha beta gamma / 6)(1 + eta)^3 with eta = 1/alpha + 1/beta + 1/gamma.
Rational yz_weak_bound(const SimplexSpec& spec);
/// (alpha(1+eta) - 1)(beta(1+eta) - 1)(gamma(1+eta) - 1) / 6.
Rational yz_strong_bound(const SimplexSpec& spec);
/// alpha >= beta >= gamma >= 1, where both bounds are known to hold.
bool yz_in_hypothesis(const SimplexSpec& spec);

/// n = x ab + y ac + z bc with 0 <= x < c, 0 <= y < b.
struct AbcCoordinates {
  std::int64_t x;
  std::int64_t y;
  std::int64_t z;

  friend auto operator<=>(const AbcCoordinates&, const AbcCoordinates&) = default;
};

AbcCoordinates abc_normal_form(const SupersymTriple& t, std::int64_t n);
/// n in S iff z >= 0 in its normal form.
bool abc_member(const SupersymTriple& t, std::int64_t n);
/// All nonnegative (ab, ac, bc)-factorizations of n >= 0, sorted.
std::vector<AbcCoordinates> abc_all_factorizations(const SupersymTriple& t, std::int64_t n);

/// gamma_hat ab = 1 mod c, beta_hat ac = 1 mod b, alpha_hat bc = 1 mod a, each
/// in [1, modulus - 1]. Unrelated to the simplex intercepts.
struct ResidueTriple {
  std::int64_t alpha_hat;
  std::int64_t beta_hat;
  std::int64_t gamma_hat;

  friend auto operator<=>(const ResidueTriple&, const ResidueTriple&) = default;
};

ResidueTriple residue_triple(const SupersymTriple& t);
/// Least element of S congruent to 1 mod abc: gamma_hat ab + beta_hat ac +
/// alpha_hat bc, always abc + 1 or 2abc + 1.
std::int64_t min_congruent_one(const SupersymTriple& t);
/// abc + 1 lies outside S, so S' = <ab, ac, bc, abc + 1> differs from S.
bool s_prime_applicable(const SupersymTriple& t);

/// <ab, ac, bc, abc + 1>; NotApplicable when abc + 1 is already in S.
NumericalSemigroup s_prime(const SupersymTriple& t);
/// g(S) - (a - alpha_hat)(b - beta_hat)(c - gamma_hat).
std::int64_t genus_s_prime_formula(const SupersymTriple& t);
/// max{(gamma_hat-1)ab + (b-1)ac - bc, (c-1)ab + (beta_hat-1)ac - bc,
///     (c-1)ab + (b-1)ac + (alpha_hat-a-1)bc}.
std::int64_t frobenius_s_prime_formula(const SupersymTriple& t);

struct AbcPlusCheck {
  bool abc_plus_1;
  bool abc_plus_2;
  EmpiricalSemigroup semigroup;
};

/// Whether abc + 1 and abc + 2 are valuations of the generic cusp with
/// profile (ab, ac, bc), from a 3-seed Monte-Carlo run.
AbcPlusCheck generic_contains_abc_plus(const SupersymTriple& t, std::uint64_t prime, std::uint64_t seed);

}  // namespace cuspsemi
