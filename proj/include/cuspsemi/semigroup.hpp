#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace cuspsemi {

/// A numerical semigroup given by generators, with a dense membership table
/// covering [0, conductor + max generator).
///
/// Construction runs a sieve that grows by doubling until it sees a run of
/// `multiplicity` consecutive members; every integer after the start of that
/// run is a member, so the start is the conductor.
class NumericalSemigroup {
 public:
  /// Generators are sorted and deduplicated. Throws GcdNotOne when their gcd
  /// exceeds 1 and InvalidArgument for an empty list or a nonpositive entry.
  static NumericalSemigroup from_generators(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::int64_t multiplicity() const noexcept { return generators_.front(); }
  std::int64_t conductor() const noexcept { return conductor_; }
  /// Largest gap; -1 for S = N.
  std::int64_t frobenius() const noexcept { return conductor_ - 1; }
  std::int64_t genus() const noexcept { return genus_; }
  bool is_whole() const noexcept { return conductor_ == 0; }

  bool contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return membership_[static_cast<std::size_t>(x)] != 0;
  }

  /// Sorted gaps.
  std::vector<std::int64_t> gaps() const;
  /// Number of gaps strictly larger than t.
  std::int64_t gaps_above(std::int64_t t) const;
  /// #{x in S : x < t}.
  std::int64_t count_members_below(std::int64_t t) const;
  /// Elements of S that are not sums of two nonzero elements.
  std::vector<std::int64_t> minimal_generators() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.gaps() == b.gaps();
  }

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> generators_;
  std::int64_t conductor_ = 0;
  std::int64_t genus_ = 0;
  std::vector<std::uint8_t> membership_;
};

inline NumericalSemigroup from_generators(std::vector<std::int64_t> generators) {
  return NumericalSemigroup::from_generators(std::move(generators));
}

/// Least element of each residue class modulo `modulus`.
struct AperyTable {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> entries;  // entries[i] = min{x in S : x = i mod modulus}
};

/// Apery set with respect to the multiplicity.
AperyTable apery(const NumericalSemigroup& s);
/// Apery set with respect to a positive element n of S.
AperyTable apery(const NumericalSemigroup& s, std::int64_t n);

/// Sum of (e_i - i) / n over an Apery table; equals the genus.
std::int64_t genus_from_apery(const AperyTable& table);

/// Exactly one of x, F - x lies in S for every x in [0, F]. Requires S != N.
bool is_symmetric(const NumericalSemigroup& s);

struct Factorization {
  std::vector<std::int64_t> coefficients;  // one per generator

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

/// Z(s) with respect to s.generators(), in lexicographic order. Empty iff s is
/// not in S.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, std::int64_t element);

/// Elements in (0, bound] whose factorization graph is disconnected; two
/// factorizations are adjacent when their supports intersect.
std::vector<std::int64_t> betti_elements(const NumericalSemigroup& s, std::int64_t bound);

/// Connectivity test used by betti_elements, exposed for direct testing.
bool factorization_graph_connected(const std::vector<Factorization>& z);

}  // namespace cuspsemi
