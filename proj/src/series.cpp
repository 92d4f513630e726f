#include "cuspsemi/series.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <string>

#include "cuspsemi/checked.hpp"
#include "cuspsemi/error.hpp"

namespace cuspsemi {

TruncatedSeries::TruncatedSeries(PrimeField field, std::vector<std::uint64_t> coefficients)
    : field_(field), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw PrecisionTooSmall("a truncated series needs precision >= 1");
  for (auto& c : coefficients_) c = field_.reduce(c);
}

TruncatedSeries TruncatedSeries::zero(PrimeField field, std::int64_t precision) {
  return TruncatedSeries(field, std::vector<std::uint64_t>(static_cast<std::size_t>(precision), 0));
}

TruncatedSeries TruncatedSeries::one(PrimeField field, std::int64_t precision) {
  auto s = zero(field, precision);
  s.coefficients_[0] = 1;
  return s;
}

std::optional<std::int64_t> TruncatedSeries::valuation() const noexcept {
  for (std::size_t d = 0; d < coefficients_.size(); ++d) {
    if (coefficients_[d] != 0) return static_cast<std::int64_t>(d);
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::scaled(std::uint64_t factor) const {
  TruncatedSeries r = *this;
  factor = field_.reduce(factor);
  for (auto& c : r.coefficients_) c = field_.mul(c, factor);
  return r;
}

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.field() != b.field()) throw InvalidArgument("series over different fields");
  if (a.precision() != b.precision()) throw InvalidArgument("series with different precisions");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries r = a;
  for (std::size_t i = 0; i < r.coefficients_.size(); ++i) {
    r.coefficients_[i] = a.field_.add(r.coefficients_[i], b.coefficients_[i]);
  }
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries r = a;
  for (std::size_t i = 0; i < r.coefficients_.size(); ++i) {
    r.coefficients_[i] = a.field_.sub(r.coefficients_[i], b.coefficients_[i]);
  }
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  const auto& f = a.field_;
  const std::size_t n = a.coefficients_.size();
  std::vector<std::uint64_t> out(n, 0);
  const std::size_t va = static_cast<std::size_t>(a.valuation().value_or(a.precision()));
  const std::size_t vb = static_cast<std::size_t>(b.valuation().value_or(b.precision()));
  for (std::size_t i = va; i < n; ++i) {
    const std::uint64_t ai = a.coefficients_[i];
    if (ai == 0) continue;
    for (std::size_t j = vb; i + j < n; ++j) {
      out[i + j] = f.add(out[i + j], f.mul(ai, b.coefficients_[j]));
    }
  }
  return TruncatedSeries(f, std::move(out));
}

TruncatedSeries random_series(std::int64_t valuation, std::int64_t precision, std::uint64_t prime,
                              std::uint64_t seed) {
  SeededRng rng(seed);
  return random_series(valuation, precision, PrimeField(prime), rng);
}

TruncatedSeries random_series(std::int64_t valuation, std::int64_t precision, const PrimeField& field,
                              SeededRng& rng) {
  if (valuation <= 0) throw InvalidArgument("series valuation must be positive");
  if (precision <= valuation) {
    throw PrecisionTooSmall("precision " + std::to_string(precision) + " leaves no room for t^" +
                            std::to_string(valuation));
  }
  std::vector<std::uint64_t> c(static_cast<std::size_t>(precision), 0);
  c[static_cast<std::size_t>(valuation)] = 1;
  for (std::int64_t d = valuation + 1; d < precision; ++d) {
    c[static_cast<std::size_t>(d)] = rng.below(field.modulus());
  }
  return TruncatedSeries(field, std::move(c));
}

RamificationProfile::RamificationProfile(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  if (orders_.size() < 2) throw InvalidArgument("a ramification profile needs at least two orders");
  if (orders_.front() < 2) throw InvalidArgument("ramification orders must start at 2 or more");
  for (std::size_t i = 1; i < orders_.size(); ++i) {
    if (orders_[i] <= orders_[i - 1]) throw InvalidArgument("ramification orders must be strictly increasing");
  }
}

std::int64_t RamificationProfile::gcd() const noexcept {
  std::int64_t d = 0;
  for (const std::int64_t r : orders_) d = std::gcd(d, r);
  return d;
}

namespace {

struct Monomial {
  std::int64_t weight;
  std::vector<std::int64_t> exponents;
};

void enumerate_monomials(std::span<const std::int64_t> weights, std::size_t index, std::int64_t weight,
                         std::int64_t horizon, std::vector<std::int64_t>& exps, std::vector<Monomial>& out) {
  if (index == weights.size()) {
    out.push_back(Monomial{weight, exps});
    return;
  }
  for (std::int64_t e = 0; weight + e * weights[index] < horizon; ++e) {
    exps[index] = e;
    enumerate_monomials(weights, index + 1, weight + e * weights[index], horizon, exps, out);
  }
  exps[index] = 0;
}

// Row-echelon form over F_p keyed by leading degree; pivot rows are monic.
class Echelon {
 public:
  Echelon(PrimeField field, std::size_t width) : field_(field), pivots_(width) {}

  void insert(std::vector<std::uint64_t> row) {
    for (std::size_t d = 0; d < row.size(); ++d) {
      const std::uint64_t c = row[d];
      if (c == 0) continue;
      if (!pivots_[d].empty()) {
        const auto& p = pivots_[d];
        for (std::size_t j = d; j < row.size(); ++j) {
          if (p[j] != 0) row[j] = field_.sub(row[j], field_.mul(c, p[j]));
        }
        continue;
      }
      const std::uint64_t inv = field_.inv(c);
      for (std::size_t j = d; j < row.size(); ++j) row[j] = field_.mul(row[j], inv);
      pivots_[d] = std::move(row);
      return;
    }
  }

  std::vector<std::int64_t> leading_degrees() const {
    std::vector<std::int64_t> out;
    for (std::size_t d = 0; d < pivots_.size(); ++d) {
      if (!pivots_[d].empty()) out.push_back(static_cast<std::int64_t>(d));
    }
    return out;
  }

 private:
  PrimeField field_;
  std::vector<std::vector<std::uint64_t>> pivots_;
};

}  // namespace

std::vector<std::int64_t> valuations_of_algebra(std::span<const TruncatedSeries> generators) {
  if (generators.empty()) throw InvalidArgument("no generating series");
  const PrimeField field = generators.front().field();
  const std::int64_t horizon = generators.front().precision();
  std::vector<std::int64_t> weights;
  for (const auto& g : generators) {
    require_compatible(generators.front(), g);
    const auto v = g.valuation();
    if (!v || *v < 1) throw InvalidArgument("generating series must have positive valuation below the horizon");
    weights.push_back(*v);
  }

  std::vector<Monomial> monomials;
  std::vector<std::int64_t> exps(weights.size(), 0);
  enumerate_monomials(weights, 0, 0, horizon, exps, monomials);
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.exponents < b.exponents;
  });

  // Each monomial is its parent (last nonzero exponent lowered) times one
  // generator; parents have smaller weight and are built first.
  std::map<std::vector<std::int64_t>, std::size_t> index;
  std::vector<TruncatedSeries> values;
  values.reserve(monomials.size());
  Echelon echelon(field, static_cast<std::size_t>(horizon));
  for (const auto& m : monomials) {
    auto it = std::find_if(m.exponents.rbegin(), m.exponents.rend(), [](std::int64_t e) { return e != 0; });
    if (it == m.exponents.rend()) {
      values.push_back(TruncatedSeries::one(field, horizon));
    } else {
      const auto j = static_cast<std::size_t>(std::distance(it, m.exponents.rend()) - 1);
      auto parent = m.exponents;
      --parent[j];
      values.push_back(values[index.at(parent)] * generators[j]);
    }
    index.emplace(m.exponents, values.size() - 1);
    const auto c = values.back().coefficients();
    echelon.insert(std::vector<std::uint64_t>(c.begin(), c.end()));
  }
  return echelon.leading_degrees();
}

std::optional<std::int64_t> detect_conductor(std::span<const std::int64_t> achieved, std::int64_t run_length,
                                             std::int64_t horizon) {
  std::int64_t start = -1;
  std::int64_t prev = -2;
  for (const std::int64_t x : achieved) {
    if (x >= horizon) break;
    if (x != prev + 1) start = x;
    prev = x;
    if (x - start + 1 >= run_length) return start;
  }
  return std::nullopt;
}

std::vector<std::int64_t> value_semigroup(const RamificationProfile& profile, std::int64_t precision,
                                          std::uint64_t prime, std::uint64_t seed) {
  const PrimeField field(prime);
  SeededRng rng(seed);
  std::vector<TruncatedSeries> series;
  for (const std::int64_t r : profile.orders()) series.push_back(random_series(r, precision, field, rng));
  auto achieved = valuations_of_algebra(series);
  if (!detect_conductor(achieved, profile.front(), precision)) {
    throw PrecisionTooSmall("no run of " + std::to_string(profile.front()) + " achieved values below " +
                            std::to_string(precision));
  }
  return achieved;
}

std::int64_t initial_precision(const RamificationProfile& profile) {
  if (profile.gcd() == 1) {
    const auto monoid = from_generators(profile.orders());
    return checked_add(checked_mul(2, monoid.frobenius() + 1), 2);
  }
  return checked_add(checked_mul(2, checked_add(profile.front(), profile.back())), 2);
}

bool EmpiricalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor) return true;
  return std::binary_search(achieved.begin(), achieved.end(), x);
}

NumericalSemigroup EmpiricalSemigroup::to_semigroup() const {
  // Every element below conductor + r_1 is a sum of achieved values and
  // members >= conductor, so those generate.
  std::vector<std::int64_t> gens;
  for (const std::int64_t x : achieved) {
    if (x > 0) gens.push_back(x);
  }
  for (std::int64_t x = conductor; x < conductor + profile.front(); ++x) gens.push_back(x);
  if (gens.empty()) gens.push_back(1);
  return from_generators(std::move(gens));
}

namespace {

constexpr std::int64_t kMaxPrecision = 1 << 14;

struct TrialResult {
  std::vector<std::int64_t> achieved;
  std::int64_t conductor;
  std::int64_t precision;
};

TrialResult run_trial(const RamificationProfile& profile, std::uint64_t prime, std::uint64_t seed) {
  for (std::int64_t precision = initial_precision(profile);; precision *= 2) {
    try {
      auto achieved = value_semigroup(profile, precision, prime, seed);
      const std::int64_t c = *detect_conductor(achieved, profile.front(), precision);
      achieved.erase(std::lower_bound(achieved.begin(), achieved.end(), c), achieved.end());
      return TrialResult{std::move(achieved), c, precision};
    } catch (const PrecisionTooSmall&) {
      if (precision * 2 > kMaxPrecision) throw;
    }
  }
}

}  // namespace

EmpiricalSemigroup empirical_generic_semigroup(const RamificationProfile& profile, int trials, std::uint64_t prime,
                                               std::uint64_t base_seed) {
  if (trials < 3) throw InvalidArgument("at least 3 trials are required, got " + std::to_string(trials));
  (void)PrimeField(prime);  // validate before spawning work

  std::vector<std::uint64_t> seeds;
  std::vector<std::future<TrialResult>> pending;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    seeds.push_back(seed);
    pending.push_back(std::async(std::launch::async, run_trial, std::cref(profile), prime, seed));
  }
  std::vector<TrialResult> results;
  for (auto& f : pending) results.push_back(f.get());

  for (std::size_t t = 1; t < results.size(); ++t) {
    if (results[t].conductor != results[0].conductor || results[t].achieved != results[0].achieved) {
      throw SeedDisagreement("seeds " + std::to_string(seeds[0]) + " and " + std::to_string(seeds[t]) +
                             " give different value semigroups (conductors " +
                             std::to_string(results[0].conductor) + " vs " + std::to_string(results[t].conductor) +
                             ")");
    }
  }
  std::int64_t precision = 0;
  for (const auto& r : results) precision = std::max(precision, r.precision);
  return EmpiricalSemigroup{profile, std::move(results[0].achieved), results[0].conductor, precision,
                            std::move(seeds), prime};
}

std::optional<std::int64_t> combination_valuation_probe(std::span<const TruncatedSeries> series,
                                                        std::span<const std::uint64_t> coefficients) {
  if (series.empty()) throw InvalidArgument("empty linear combination");
  if (series.size() != coefficients.size()) throw InvalidArgument("one coefficient per series is required");
  const PrimeField& field = series.front().field();
  TruncatedSeries sum = TruncatedSeries::zero(field, series.front().precision());
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (field.reduce(coefficients[i]) == 0) throw InvalidArgument("combination coefficients must be nonzero");
    sum = sum + series[i].scaled(coefficients[i]);
  }
  return sum.valuation();
}

}  // namespace cuspsemi
