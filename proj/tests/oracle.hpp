#pragma once

// Brute-force reference computations, written without touching the library
// so tests compare two independent code paths.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// in[x] for x < limit: unbounded coin-change reachability.
inline std::vector<bool> members(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  if (limit > 0) in[0] = true;
  for (std::int64_t x = 1; x < limit; ++x) {
    for (const auto g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return in;
}

// Gaps, assuming gcd 1 and that every gap is below `limit`.
inline std::vector<std::int64_t> gaps(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  const auto in = members(gens, limit);
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < limit; ++x) {
    if (!in[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

inline std::int64_t factorization_count(const std::vector<std::int64_t>& gens, std::int64_t s) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(s + 1), 0);
  ways[0] = 1;
  for (const auto g : gens) {
    for (std::int64_t x = g; x <= s; ++x) ways[static_cast<std::size_t>(x)] += ways[static_cast<std::size_t>(x - g)];
  }
  return ways[static_cast<std::size_t>(s)];
}

// #{(x,y,z) >= 0 : x/alpha + y/beta + z/gamma <= 1} with alpha = an/ad etc.
inline std::int64_t simplex_points(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd,
                                   std::int64_t cn, std::int64_t cd) {
  // x*ad/an + y*bd/bn + z*cd/cn <= 1, cleared of denominators.
  std::int64_t count = 0;
  for (std::int64_t x = 0; x * ad <= an; ++x) {
    for (std::int64_t y = 0; x * ad * bn + y * bd * an <= an * bn; ++y) {
      for (std::int64_t z = 0; (x * ad * bn + y * bd * an) * cn + z * cd * an * bn <= an * bn * cn; ++z) ++count;
    }
  }
  return count;
}

}  // namespace oracle
