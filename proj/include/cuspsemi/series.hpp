#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cuspsemi/prime_field.hpp"
#include "cuspsemi/semigroup.hpp"

namespace cuspsemi {

/// Power series over F_p truncated at t^precision (exclusive). Coefficients
/// are stored densely from degree 0.
class TruncatedSeries {
 public:
  TruncatedSeries(PrimeField field, std::vector<std::uint64_t> coefficients);

  static TruncatedSeries zero(PrimeField field, std::int64_t precision);
  static TruncatedSeries one(PrimeField field, std::int64_t precision);

  const PrimeField& field() const noexcept { return field_; }
  std::int64_t precision() const noexcept { return static_cast<std::int64_t>(coefficients_.size()); }
  std::uint64_t coefficient(std::int64_t degree) const {
    return coefficients_.at(static_cast<std::size_t>(degree));
  }
  std::span<const std::uint64_t> coefficients() const noexcept { return coefficients_; }

  /// t-adic valuation; nullopt when the series vanishes below the horizon.
  std::optional<std::int64_t> valuation() const noexcept;

  TruncatedSeries scaled(std::uint64_t factor) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  PrimeField field_;
  std::vector<std::uint64_t> coefficients_;
};

/// Series t^valuation + (uniform random higher coefficients) truncated at
/// `precision`. Throws PrecisionTooSmall when precision <= valuation.
TruncatedSeries random_series(std::int64_t valuation, std::int64_t precision, std::uint64_t prime,
                              std::uint64_t seed);
TruncatedSeries random_series(std::int64_t valuation, std::int64_t precision, const PrimeField& field,
                              SeededRng& rng);

/// Vanishing orders r_1 < ... < r_n of a parameterization, n >= 2, r_1 >= 2.
class RamificationProfile {
 public:
  explicit RamificationProfile(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return orders_.size(); }
  std::int64_t front() const noexcept { return orders_.front(); }
  std::int64_t back() const noexcept { return orders_.back(); }
  std::int64_t gcd() const noexcept;

  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

/// Valuations of every element of the F_p-algebra generated by `generators`,
/// restricted to [0, horizon) where horizon is their shared precision.
///
/// Rows are the monomials of weighted degree below the horizon, inserted in
/// increasing weighted degree into an echelon form keyed by leading t-degree.
/// The set of leading degrees is the set of valuations of the row span.
std::vector<std::int64_t> valuations_of_algebra(std::span<const TruncatedSeries> generators);

/// Start of the first run of `run_length` consecutive values lying entirely
/// below `horizon`, or nullopt.
std::optional<std::int64_t> detect_conductor(std::span<const std::int64_t> achieved, std::int64_t run_length,
                                             std::int64_t horizon);

/// Achieved valuations in [0, precision) for random series with the given
/// vanishing orders and leading coefficients 1. Throws PrecisionTooSmall when
/// no run of r_1 consecutive achieved values fits below the horizon.
std::vector<std::int64_t> value_semigroup(const RamificationProfile& profile, std::int64_t precision,
                                          std::uint64_t prime, std::uint64_t seed);

/// First horizon tried by empirical_generic_semigroup.
std::int64_t initial_precision(const RamificationProfile& profile);

struct EmpiricalSemigroup {
  RamificationProfile profile;
  std::vector<std::int64_t> achieved;  // sorted, all below conductor
  std::int64_t conductor = 0;
  std::int64_t precision = 0;  // horizon at which the trials succeeded
  std::vector<std::uint64_t> seeds_used;
  std::uint64_t prime = 0;

  bool contains(std::int64_t x) const;
  std::int64_t genus() const noexcept {
    return conductor - static_cast<std::int64_t>(achieved.size());
  }
  std::int64_t frobenius() const noexcept { return conductor - 1; }
  NumericalSemigroup to_semigroup() const;
};

/// Runs value_semigroup for seeds base_seed, base_seed + 1, ... with
/// precision doubling, and requires every trial to agree. Throws
/// SeedDisagreement otherwise.
EmpiricalSemigroup empirical_generic_semigroup(const RamificationProfile& profile, int trials,
                                               std::uint64_t prime, std::uint64_t base_seed);

/// v_t(sum_i coefficients[i] * series[i]); nullopt when the combination
/// vanishes below the shared precision.
std::optional<std::int64_t> combination_valuation_probe(std::span<const TruncatedSeries> series,
                                                        std::span<const std::uint64_t> coefficients);

}  // namespace cuspsemi
