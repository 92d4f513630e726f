#include "cuspsemi/arith_profiles.hpp"

#include <cmath>
#include <map>
#include <set>

#include "cuspsemi/checked.hpp"
#include "cuspsemi/error.hpp"

namespace cuspsemi {

ArithProfile::ArithProfile(std::int64_t m_, std::int64_t l_) : m(m_), l(l_) {
  if (m < 2) throw InvalidArgument("arithmetic profile needs m >= 2, got " + std::to_string(m));
  if (l < 1) throw InvalidArgument("arithmetic profile needs l >= 1, got " + std::to_string(l));
  checked_mul(checked_mul(m, l), l);  // every closed form below stays in range
}

std::vector<std::int64_t> s_star_generators(const ArithProfile& p, SStarBranch branch) {
  const std::int64_t m = p.m;
  const std::int64_t l = p.l;
  if (l < 2) throw InvalidArgument("S* needs l >= 2");
  std::vector<std::int64_t> gens = p.orders();
  gens.push_back(2 * m * (l + 1) + 1);
  if (branch == SStarBranch::m2 && m != 2) throw InvalidArgument("the m2 branch needs m = 2");
  if (p.even()) {
    gens.push_back(m * (l / 2 + 1) * l + 1);
  } else if (branch == SStarBranch::m2) {
    gens.push_back((l + 3) * l + 1);
  } else {
    // (l+1)(l+2) and l(l+3) are even for odd l
    gens.push_back(m * ((l + 1) * (l + 2) / 2) + 1);
    gens.push_back(m * (l * (l + 3) / 2) + 1);
  }
  return gens;
}

NumericalSemigroup s_star(const ArithProfile& p, SStarBranch branch) {
  return from_generators(s_star_generators(p, branch));
}

std::vector<std::int64_t> gap_set_m2(std::int64_t l) {
  if (l < 4) throw InvalidArgument("gap_set_m2 needs l >= 4, got " + std::to_string(l));
  std::set<std::int64_t> g;
  for (std::int64_t x = 1; x <= 2 * l - 1; ++x) g.insert(x);
  for (std::int64_t x = 2 * l + 1; x <= 4 * l + 3; x += 2) g.insert(x);

  const std::int64_t doubled_top = l % 2 == 0 ? l / 2 - 1 : (l - 1) / 2 - 1;
  for (std::int64_t i = 1; i <= doubled_top; ++i) {
    for (std::int64_t x = i * l + 2 * i + 1; x <= (i + 1) * l - 1; ++x) g.insert(2 * x);
  }
  const std::int64_t odd_top = l % 2 == 0 ? l / 2 - 2 : (l - 1) / 2 - 1;
  for (std::int64_t i = 1; i <= odd_top; ++i) {
    for (std::int64_t x = 2 * (i + 1) * l + 2 * (2 * i + 1) + 1; x <= 2 * (i + 2) * l + 3; x += 2) g.insert(x);
  }
  if (l % 2 == 0) {
    g.insert(l * l + 2 * l - 1);
    g.insert(l * l + 2 * l + 3);
  } else {
    g.insert(l * l + 3 * l + 3);
  }
  return {g.begin(), g.end()};
}

std::string to_string(AperyFamily f) {
  switch (f) {
    case AperyFamily::nonspecial:
      return "nonspecial";
    case AperyFamily::special:
      return "special";
    case AperyFamily::special_bis:
      return "special_bis";
    case AperyFamily::uncovered:
      return "uncovered";
  }
  return "?";
}

AperyFormulaTable apery_formula(const ArithProfile& p) {
  const std::int64_t m = p.m;
  const std::int64_t l = p.l;
  const std::int64_t n = m * l;
  const std::int64_t a = m * l + m;          // f_2 order
  const std::int64_t b = m * l + 2 * m;      // f_3 order
  const std::int64_t c = 2 * m * (l + 1) + 1;  // v(f_1 f_3 - f_2^2)
  const bool even = p.even();

  AperyFormulaTable t{p, n, {}, {}};
  for (std::int64_t i = 1; i < n; ++i) t.entries.push_back({i, AperyFamily::uncovered, std::nullopt, std::nullopt});

  auto record = [&](const std::string& family, AperyFamily fam, std::int64_t j, std::int64_t k, std::int64_t index,
                    std::int64_t value, bool operative) {
    if (index == 0) return;  // e_0 = 0
    if (index < 0 || index >= n) {
      t.findings.push_back({family, j, k, index, "RangeInconsistency: index outside [1, m*l - 1]"});
      return;
    }
    if (!operative) {
      t.findings.push_back({family, j, k, index, "stated range entry beyond the genus-count range; not used"});
      return;
    }
    auto& e = t.entries[static_cast<std::size_t>(index - 1)];
    if (e.value && *e.value != value) {
      t.findings.push_back({family, j, k, index,
                            "conflicts with " + to_string(e.family) + " value " + std::to_string(*e.value)});
      return;
    }
    e.family = fam;
    e.value = value;
  };

  // Stated: k in [0, m-1], j in [k, l-1]. The genus count sums j up to
  // l/2 - 1 (even) or (l-1)/2 and (l-3)/2 (odd).
  const std::int64_t top_plain = even ? l / 2 - 1 : (l - 1) / 2;
  const std::int64_t top_shift = even ? l / 2 - 1 : (l - 3) / 2;
  for (std::int64_t k = 0; k < m; ++k) {
    for (std::int64_t j = k; j <= l - 1; ++j) {
      const std::int64_t v = (j - k) * b + k * c;
      record("nonspecial", AperyFamily::nonspecial, j, k, 2 * m * j + k, v, j <= top_plain);
      record("nonspecial", AperyFamily::nonspecial, j, k, 2 * m * j + m + k, a + v, j <= top_shift);
    }
  }

  // Special entries and the m-shifted partners the genus count relies on.
  // Shift: +(ml + m) for even l, +m for odd l.
  const std::int64_t shift = even ? a : m;
  std::vector<std::pair<std::int64_t, std::int64_t>> shifted;  // (residue, value)
  for (std::int64_t j = 0; j <= m - 2; ++j) {
    const std::int64_t v = even ? j * c + (m * l * (l / 2 + 1) + 1) : m * (l * (l + 3) / 2) + 1 + j * c;
    const std::int64_t i = 2 * m * j + j + 1;
    record("special", AperyFamily::special, j, j + 1, i, v, true);
    shifted.emplace_back(i + m, v + shift);
    for (std::int64_t k = j + 2; k <= m - 1; ++k) {
      const std::int64_t w = even ? (j + l / 2 - k) * b + k * c : a + (j + (l - 1) / 2 - k) * b + k * c;
      const std::int64_t ik = 2 * m * j + k;
      record("special_bis", AperyFamily::special_bis, j, k, ik, w, true);
      shifted.emplace_back(ik + m, w + shift);
    }
  }
  for (const auto& [i, v] : shifted) {
    if (i <= 0 || i >= n) continue;
    auto& e = t.entries[static_cast<std::size_t>(i - 1)];
    if (e.family == AperyFamily::uncovered) e.proof_shifted = v;
  }
  return t;
}

std::vector<AperyMismatch> compare_apery(const AperyFormulaTable& formula, const AperyTable& direct) {
  if (direct.modulus != formula.modulus) throw InvalidArgument("Apery tables use different moduli");
  std::vector<AperyMismatch> out;
  for (const auto& e : formula.entries) {
    const std::int64_t actual = direct.entries.at(static_cast<std::size_t>(e.residue));
    if (e.value && *e.value != actual) out.push_back({e.residue, to_string(e.family), *e.value, actual});
    if (e.proof_shifted && *e.proof_shifted != actual) {
      out.push_back({e.residue, "proof_shifted", *e.proof_shifted, actual});
    }
  }
  return out;
}

GenusUpperBound genus_upper_arith(const ArithProfile& p) {
  const Rational m = p.m;
  const Rational l = p.l;
  const Rational tail = m * (m - 1) * l + (m - 1) * (m - 2);
  if (p.even()) return {m * l * l / 4 + tail, std::nullopt, p.in_hypothesis()};
  return {m * (l + 1) * (l - 2) / 4 + tail, m * (l + 1) * (l - 1) / 4 + tail, p.in_hypothesis()};
}

std::int64_t genus_lower_bound(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t k) {
  if (m < 2 || a <= 0 || b <= a) throw InvalidArgument("genus_lower_bound needs m >= 2 and 0 < a < b");
  if (k < 0) throw InvalidArgument("genus_lower_bound needs k >= 0");
  return checked_sub(checked_sub(checked_mul(m, k + 1), checked_mul(b, binomial(k + 1, 2))), binomial(k + 3, 3));
}

namespace {

// ceil(2 sqrt(m)) = least t with t^2 >= 4m.
std::int64_t ceil_two_sqrt(std::int64_t m) {
  auto t = static_cast<std::int64_t>(std::sqrt(4.0L * static_cast<long double>(m)));
  while (t > 0 && (t - 1) * (t - 1) >= 4 * m) --t;
  while (t * t < 4 * m) ++t;
  return t;
}

}  // namespace

BestLowerBound best_genus_lower(std::int64_t m, std::int64_t a, std::int64_t b) {
  const std::int64_t top = ceil_two_sqrt(m) + b;
  BestLowerBound best{0, genus_lower_bound(m, a, b, 0)};
  for (std::int64_t k = 1; k <= top; ++k) {
    const std::int64_t v = genus_lower_bound(m, a, b, k);
    if (v > best.bound) best = {k, v};
  }
  return best;
}

std::optional<ForbiddenWindow> forbidden_window(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t d) {
  if (m < 2 || a <= 0 || b <= a) throw InvalidArgument("forbidden_window needs m >= 2 and 0 < a < b");
  if (d < 0) throw InvalidArgument("forbidden_window needs d >= 0");
  const std::int64_t tri = binomial(d + 2, 2);
  if (checked_add(checked_mul(b, d), tri) > m) return std::nullopt;
  return ForbiddenWindow{checked_add(checked_mul(d, m + b), tri), checked_mul(d + 1, m), true};
}

AsymptoticCheck asymptotic_check(std::int64_t m, std::int64_t l, double eps) {
  if (eps <= 0) throw InvalidArgument("asymptotic_check needs eps > 0");
  const auto best = best_genus_lower(checked_mul(m, l), m, 2 * m);
  const long double coef = std::pow(2.0L * static_cast<long double>(m), 1.5L) / 3.0L - static_cast<long double>(eps);
  const long double threshold = coef * std::pow(static_cast<long double>(l), 1.5L);
  return {static_cast<long double>(best.bound) > threshold, best.k, best.bound, threshold};
}

}  // namespace cuspsemi
