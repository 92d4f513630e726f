#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspsemi/rational.hpp"
#include "cuspsemi/semigroup.hpp"

namespace cuspsemi {

/// Ramification triple (m*l, m*l + m, m*l + 2m) of consecutive multiples of m.
/// The closed forms below are proved for l >= 2m; smaller l is accepted for
/// exploration and reported as out of hypothesis.
struct ArithProfile {
  std::int64_t m;
  std::int64_t l;

  ArithProfile(std::int64_t m, std::int64_t l);

  std::vector<std::int64_t> orders() const { return {m * l, m * l + m, m * l + 2 * m}; }
  bool even() const noexcept { return l % 2 == 0; }
  bool in_hypothesis() const noexcept { return l >= 2 * m; }
};

/// Odd l with m = 2 has two first approximations: the m = 2 theorem adds
/// (l+3)l + 1, the general theorem adds (m/2)(l+1)(l+2) + 1 and (m/2)l(l+3) + 1.
enum class SStarBranch { general, m2 };

std::vector<std::int64_t> s_star_generators(const ArithProfile& p, SStarBranch branch = SStarBranch::general);
/// Requires l >= 2; SStarBranch::m2 requires m = 2.
NumericalSemigroup s_star(const ArithProfile& p, SStarBranch branch = SStarBranch::general);

/// Closed-form gap set of the m = 2 approximation (G_0 for even l, G_1 for
/// odd l). Requires l >= 4.
std::vector<std::int64_t> gap_set_m2(std::int64_t l);

/// Which closed-form family predicts an Apery entry of S*.
enum class AperyFamily { nonspecial, special, special_bis, uncovered };

std::string to_string(AperyFamily f);

struct AperyPrediction {
  std::int64_t residue;
  AperyFamily family;
  std::optional<std::int64_t> value;          // from the stated family, if any
  std::optional<std::int64_t> proof_shifted;  // m-shifted special entry used by the genus count
};

/// A stated index range that leaves [1, m*l - 1], or two families disagreeing.
struct RangeFinding {
  std::string family;
  std::int64_t j;
  std::int64_t k;
  std::int64_t index;
  std::string note;
};

struct AperyFormulaTable {
  ArithProfile profile;
  std::int64_t modulus;
  std::vector<AperyPrediction> entries;  // residues 1 .. modulus - 1
  std::vector<RangeFinding> findings;

  const AperyPrediction& at(std::int64_t residue) const {
    return entries.at(static_cast<std::size_t>(residue - 1));
  }
};

/// Closed-form Apery predictions for S* modulo m*l. Stated families use the
/// index ranges of the genus count; indices the stated ranges would add past
/// m*l - 1 are recorded, not raised.
AperyFormulaTable apery_formula(const ArithProfile& p);

/// One disagreement between a prediction and the directly computed table.
struct AperyMismatch {
  std::int64_t residue;
  std::string source;  // family name or "proof_shifted"
  std::int64_t predicted;
  std::int64_t actual;
};

std::vector<AperyMismatch> compare_apery(const AperyFormulaTable& formula, const AperyTable& direct);

/// Upper bound on g(S(r)); odd l carries both the stated value and the value
/// the genus count actually produces.
struct GenusUpperBound {
  Rational stated;
  std::optional<Rational> proof_derived;
  bool in_hypothesis;
};

GenusUpperBound genus_upper_arith(const ArithProfile& p);

/// m(k+1) - b*C(k+1, 2) - C(k+3, 3), a lower bound on g(S(m, m+a, m+b)).
std::int64_t genus_lower_bound(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t k);

struct BestLowerBound {
  std::int64_t k;
  std::int64_t bound;
};

/// Maximizes genus_lower_bound over k in [0, ceil(2 sqrt m) + b]; smallest k on ties.
BestLowerBound best_genus_lower(std::int64_t m, std::int64_t a, std::int64_t b);

/// Valuation window that no polynomial in generic f_1, f_2, f_3 reaches.
/// The stated window is closed at (d+1)m, which f_1^{d+1} attains, so the
/// usable window is [lo, hi - 1].
struct ForbiddenWindow {
  std::int64_t lo;
  std::int64_t hi;  // as stated, inclusive
  bool upper_attained = true;

  std::int64_t open_hi() const noexcept { return hi - 1; }
  std::int64_t width() const noexcept { return hi - lo; }  // integers in [lo, hi - 1]
};

/// [d(m+b) + C(d+2,2), (d+1)m] when b*d + C(d+2,2) <= m.
std::optional<ForbiddenWindow> forbidden_window(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t d);

struct AsymptoticCheck {
  bool holds;
  std::int64_t k;
  std::int64_t lower_bound;
  long double threshold;  // ((2m)^{3/2}/3 - eps) * l^{3/2}
};

/// Compares best_genus_lower(ml, m, 2m) with ((2m)^{3/2}/3 - eps) l^{3/2}.
/// The comparison is only claimed for l much larger than m.
AsymptoticCheck asymptotic_check(std::int64_t m, std::int64_t l, double eps);

}  // namespace cuspsemi
