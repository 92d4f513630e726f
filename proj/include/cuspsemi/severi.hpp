#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cuspsemi/rational.hpp"
#include "cuspsemi/supersym.hpp"

namespace cuspsemi {

/// sum_i (r_i - i) over strictly increasing positive orders.
std::int64_t ramification_codim(std::span<const std::int64_t> orders);
/// ramification_codim - 1, the codimension for a generic cusp.
std::int64_t generic_codim(std::span<const std::int64_t> orders);
/// Unramified profile (r_i = i for all i): no cusp, codimension formulas
/// are meaningless.
bool is_degenerate_profile(std::span<const std::int64_t> orders);

/// r_1 + r_2 + r_3 - 6; a generic cusp of genus at least this makes the
/// Severi variety reducible. Requires three orders.
std::int64_t reducibility_threshold(std::span<const std::int64_t> orders);

/// 2 rho(abc) + ab + ac + bc - 7.
std::int64_t supersym_codim(const SupersymTriple& t);

/// abc/3 - (7/12)(ab+ac+bc) - (1/6)(a+b+c) + 47/12.
Rational bound_polynomial_F(std::int64_t a, std::int64_t b, std::int64_t c);

/// One named inequality with exact sides.
struct PredicateCheck {
  std::string name;
  Rational lhs;
  std::string relation;  // "<", "<=", ">="
  Rational rhs;
  bool holds;
};

struct CodimReport {
  std::vector<std::int64_t> profile;
  std::int64_t genus;
  std::int64_t codim;
  std::int64_t nodal_codim;  // (n - 2) g with n = 3
  bool excess;               // codim < nodal_codim
  std::vector<PredicateCheck> trace;
  std::string applicability;  // degree threshold, recorded only

  const PredicateCheck& check(const std::string& name) const;
};

/// S = <ab, ac, bc> with profile (ab, ac, bc); trace carries the direct
/// comparison, the rho bound, the F-polynomial sign and the theorem hypothesis.
CodimReport excess_supersym(const SupersymTriple& t);

/// #{gaps of S below abc}; the generic semigroup agrees with S below abc, so
/// this is a lower bound for its genus.
std::int64_t generic_genus_surrogate(const SupersymTriple& t);

/// Generic cusp with profile (ab, ac, bc): codim ab + ac + bc - 7 against the
/// given genus, plus the sufficient member-count bound.
CodimReport excess_generic_supersym(const SupersymTriple& t, std::int64_t genus);

}  // namespace cuspsemi
