#include "cuspsemi/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cuspsemi/checked.hpp"
#include "cuspsemi/error.hpp"

namespace cuspsemi {

namespace {

// Membership of [0, limit) for the monoid generated by `gens` (sorted).
std::vector<std::uint8_t> sieve(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(limit), 0);
  table[0] = 1;
  for (std::int64_t x = 1; x < limit; ++x) {
    for (const std::int64_t g : gens) {
      if (g > x) break;
      if (table[static_cast<std::size_t>(x - g)]) {
        table[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return table;
}

// Start of the first run of `run` consecutive members fully inside the table.
std::int64_t first_run(const std::vector<std::uint8_t>& table, std::int64_t run) {
  std::int64_t length = 0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x]) {
      if (++length == run) return static_cast<std::int64_t>(x) - run + 1;
    } else {
      length = 0;
    }
  }
  return -1;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens) {
  if (gens.empty()) throw InvalidArgument("a semigroup needs at least one generator");
  for (const std::int64_t g : gens) {
    if (g < 1) throw InvalidArgument("generators must be positive, got " + std::to_string(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::int64_t d = 0;
  for (const std::int64_t g : gens) d = std::gcd(d, g);
  if (d != 1) throw GcdNotOne("generators have gcd " + std::to_string(d));

  const std::int64_t g1 = gens.front();
  const std::int64_t gk = gens.back();
  // Schur: F < g1 * gk, so the table never needs to pass this.
  const std::int64_t cap = checked_add(checked_add(checked_mul(g1, gk), gk), g1);

  std::int64_t limit = std::min(cap, std::max<std::int64_t>(64, checked_mul(4, gk)));
  NumericalSemigroup s;
  for (;;) {
    auto table = sieve(gens, limit);
    const std::int64_t c = first_run(table, g1);
    if (c >= 0) {
      const std::int64_t needed = checked_add(c, gk);
      if (needed > limit) {
        limit = needed;
        continue;
      }
      table.resize(static_cast<std::size_t>(needed));
      s.generators_ = std::move(gens);
      s.conductor_ = c;
      s.genus_ = c - std::count(table.begin(), table.begin() + c, std::uint8_t{1});
      s.membership_ = std::move(table);
      return s;
    }
    if (limit >= cap) {
      throw Error("no run of " + std::to_string(g1) + " members below the Schur bound " +
                  std::to_string(cap));
    }
    limit = std::min(cap, checked_mul(limit, 2));
  }
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (std::int64_t x = 0; x < conductor_; ++x) {
    if (!membership_[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

std::int64_t NumericalSemigroup::gaps_above(std::int64_t t) const {
  std::int64_t n = 0;
  for (std::int64_t x = std::max<std::int64_t>(t + 1, 0); x < conductor_; ++x) {
    if (!membership_[static_cast<std::size_t>(x)]) ++n;
  }
  return n;
}

std::int64_t NumericalSemigroup::count_members_below(std::int64_t t) const {
  if (t <= 0) return 0;
  if (t <= conductor_) {
    return std::count(membership_.begin(), membership_.begin() + t, std::uint8_t{1});
  }
  return (conductor_ - genus_) + (t - conductor_);
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  // Minimal generators are at most F + multiplicity; the +1 keeps 1 for N itself.
  const std::int64_t end = conductor_ + multiplicity() + 1;
  std::vector<std::int64_t> members;
  for (std::int64_t x = 1; x < end; ++x) {
    if (contains(x)) members.push_back(x);
  }
  std::vector<std::int64_t> out;
  for (const std::int64_t x : members) {
    bool decomposable = false;
    for (const std::int64_t y : members) {
      if (2 * y > x) break;
      if (contains(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

AperyTable apery(const NumericalSemigroup& s) { return apery(s, s.multiplicity()); }

AperyTable apery(const NumericalSemigroup& s, std::int64_t n) {
  if (n <= 0 || !s.contains(n)) {
    throw InvalidArgument("Apery modulus must be a positive element of S, got " + std::to_string(n));
  }
  AperyTable t{n, std::vector<std::int64_t>(static_cast<std::size_t>(n), -1)};
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < n; ++x) {
    auto& slot = t.entries[static_cast<std::size_t>(x % n)];
    if (slot < 0 && s.contains(x)) {
      slot = x;
      ++found;
    }
  }
  return t;
}

std::int64_t genus_from_apery(const AperyTable& table) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    g += (table.entries[i] - static_cast<std::int64_t>(i)) / table.modulus;
  }
  return g;
}

bool is_symmetric(const NumericalSemigroup& s) {
  if (s.is_whole()) throw InvalidArgument("symmetry is defined for S != N");
  const std::int64_t f = s.frobenius();
  for (std::int64_t x = 0; x <= f; ++x) {
    if (s.contains(x) == s.contains(f - x)) return false;
  }
  return true;
}

namespace {

void enumerate(const std::vector<std::int64_t>& gens, std::size_t index, std::int64_t rest,
               std::vector<std::int64_t>& current, std::vector<Factorization>& out) {
  const std::int64_t g = gens[index];
  if (index + 1 == gens.size()) {
    if (rest % g == 0) {
      current[index] = rest / g;
      out.push_back(Factorization{current});
    }
    return;
  }
  for (std::int64_t k = 0; k * g <= rest; ++k) {
    current[index] = k;
    enumerate(gens, index + 1, rest - k * g, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& s, std::int64_t element) {
  if (element < 0) throw InvalidArgument("factorizations of a negative integer");
  std::vector<Factorization> out;
  if (!s.contains(element)) return out;
  std::vector<std::int64_t> current(s.generators().size(), 0);
  enumerate(s.generators(), 0, element, current, out);
  return out;
}

bool factorization_graph_connected(const std::vector<Factorization>& z) {
  if (z.size() <= 1) return true;
  std::vector<std::size_t> parent(z.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  // Join every factorization to the first one seen using each generator.
  const std::size_t width = z.front().coefficients.size();
  std::vector<std::size_t> owner(width, z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (z[i].coefficients[j] == 0) continue;
      if (owner[j] == z.size()) {
        owner[j] = i;
      } else {
        parent[find(i)] = find(owner[j]);
      }
    }
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

std::vector<std::int64_t> betti_elements(const NumericalSemigroup& s, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= bound; ++x) {
    if (!s.contains(x)) continue;
    if (!factorization_graph_connected(factorizations(s, x))) out.push_back(x);
  }
  return out;
}

}  // namespace cuspsemi
