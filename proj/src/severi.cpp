#include "cuspsemi/severi.hpp"

#include "cuspsemi/checked.hpp"
#include "cuspsemi/error.hpp"

namespace cuspsemi {

namespace {

void require_orders(std::span<const std::int64_t> orders) {
  if (orders.empty()) throw InvalidArgument("empty profile");
  if (orders.front() < 1) throw InvalidArgument("orders must be positive");
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (orders[i] <= orders[i - 1]) throw InvalidArgument("orders must be strictly increasing");
  }
}

PredicateCheck less_than(std::string name, Rational lhs, Rational rhs) {
  const bool holds = lhs < rhs;
  return {std::move(name), std::move(lhs), "<", std::move(rhs), holds};
}

}  // namespace

std::int64_t ramification_codim(std::span<const std::int64_t> orders) {
  require_orders(orders);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    total = checked_add(total, orders[i] - static_cast<std::int64_t>(i + 1));
  }
  return total;
}

std::int64_t generic_codim(std::span<const std::int64_t> orders) { return ramification_codim(orders) - 1; }

bool is_degenerate_profile(std::span<const std::int64_t> orders) { return ramification_codim(orders) == 0; }

std::int64_t reducibility_threshold(std::span<const std::int64_t> orders) {
  require_orders(orders);
  if (orders.size() != 3) throw InvalidArgument("reducibility threshold is defined for space curves (n = 3)");
  return orders[0] + orders[1] + orders[2] - 6;
}

std::int64_t supersym_codim(const SupersymTriple& t) { return 2 * rho(t) + t.pair_sum() - 7; }

Rational bound_polynomial_F(std::int64_t a, std::int64_t b, std::int64_t c) {
  const Rational abc = Rational(a) * b * c;
  const Rational pairs = Rational(a) * b + Rational(a) * c + Rational(b) * c;
  return abc / 3 - Rational(7, 12) * pairs - Rational(a + b + c, 6) + Rational(47, 12);
}

const PredicateCheck& CodimReport::check(const std::string& name) const {
  for (const auto& c : trace) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("no predicate named " + name);
}

CodimReport excess_supersym(const SupersymTriple& t) {
  const std::int64_t r = rho(t);
  const std::int64_t g = genus_formula(t);
  const std::int64_t codim = 2 * r + t.pair_sum() - 7;

  CodimReport report;
  report.profile = t.generators();
  report.genus = g;
  report.codim = codim;
  report.nodal_codim = g;
  report.excess = codim < g;
  report.trace.push_back(less_than("codim < genus", codim, g));
  report.trace.push_back(less_than("rho < abc/2 - 3(ab+ac+bc)/4 + 15/4", r,
                                   Rational(t.abc(), 2) - Rational(3 * t.pair_sum(), 4) + Rational(15, 4)));
  const Rational f = bound_polynomial_F(t.a, t.b, t.c);
  report.trace.push_back({"F(a,b,c) >= 0", f, ">=", Rational(0), f >= 0});
  const Rational strong = yz_strong_bound(intercepts(t));
  report.trace.push_back({"strong lattice bound", Rational(r), "<=", strong, Rational(r) <= strong});
  const bool hypothesis = t.a >= 4 && !(t.a == 4 && t.b == 5 && t.c == 7);
  report.trace.push_back({"4 <= a and (a,b,c) != (4,5,7)", Rational(hypothesis ? 1 : 0), ">=", Rational(1),
                          hypothesis});
  report.applicability = "d >= 2g = " + std::to_string(2 * g);
  return report;
}

std::int64_t generic_genus_surrogate(const SupersymTriple& t) {
  return t.abc() - supersym_semigroup(t).count_members_below(t.abc());
}

CodimReport excess_generic_supersym(const SupersymTriple& t, std::int64_t genus) {
  const std::int64_t codim = t.pair_sum() - 7;
  const std::int64_t members = supersym_semigroup(t).count_members_below(t.abc());

  CodimReport report;
  report.profile = t.generators();
  report.genus = genus;
  report.codim = codim;
  report.nodal_codim = genus;
  report.excess = codim < genus;
  report.trace.push_back(less_than("codim < genus", codim, genus));
  report.trace.push_back(less_than("#{x in S : x < abc} < abc - ab - ac - bc + 7", members,
                                   t.abc() - t.pair_sum() + 7));
  report.trace.push_back({"4 <= a", Rational(t.a), ">=", Rational(4), t.a >= 4});
  report.applicability = "d >= 2g = " + std::to_string(2 * genus);
  return report;
}

}  // namespace cuspsemi
