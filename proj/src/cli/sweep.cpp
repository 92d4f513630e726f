#include <algorithm>
#include <atomic>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "cuspsemi/arith_profiles.hpp"
#include "cuspsemi/cli.hpp"
#include "cuspsemi/error.hpp"
#include "cuspsemi/prime_field.hpp"
#include "cuspsemi/series.hpp"
#include "cuspsemi/severi.hpp"
#include "cuspsemi/supersym.hpp"
#include "internal.hpp"
#include "json.hpp"

namespace cuspsemi::cli {

namespace {

using Json = nlohmann::ordered_json;

// A cell keeps its JSON type; CSV renders it as text.
using Row = std::vector<std::pair<std::string, Json>>;

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_null()) {
    s = "";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string sign_word(const Rational& x) {
  if (x < 0) return "negative";
  if (x == 0) return "zero";
  return "positive";
}

Row supersym_row(const SupersymTriple& t) {
  const auto s = supersym_semigroup(t);
  const auto rep = excess_supersym(t);
  const bool applicable = s_prime_applicable(t);
  Row row = {{"a", t.a},
             {"b", t.b},
             {"c", t.c},
             {"genus", s.genus()},
             {"frobenius", s.frobenius()},
             {"rho", rho(t)},
             {"codim", rep.codim},
             {"nodal_codim", rep.nodal_codim},
             {"excess", rep.excess},
             {"rhobound1_holds", rep.check("rho < abc/2 - 3(ab+ac+bc)/4 + 15/4").holds},
             {"F_poly_sign", sign_word(bound_polynomial_F(t.a, t.b, t.c))},
             {"sprime_applicable", applicable}};
  if (applicable) {
    const auto sp = s_prime(t);
    row.emplace_back("sprime_genus", sp.genus());
    row.emplace_back("sprime_frobenius", sp.frobenius());
  } else {
    row.emplace_back("sprime_genus", s.genus());
    row.emplace_back("sprime_frobenius", s.frobenius());
  }
  return row;
}

Row arith_row(std::int64_t m, std::int64_t l) {
  const ArithProfile p(m, l);
  const auto s = s_star(p);
  const auto up = genus_upper_arith(p);
  const auto lower = best_genus_lower(m * l, m, 2 * m);
  const auto asym = asymptotic_check(m, l, 0.1);
  const Rational upper = p.even() ? up.stated : *up.proof_derived;
  return {{"m", m},
          {"l", l},
          {"parity", p.even() ? "even" : "odd"},
          {"in_hypothesis", p.in_hypothesis()},
          {"sstar_genus", s.genus()},
          {"sstar_conductor", s.conductor()},
          {"genus_upper", to_string(upper)},
          {"genus_upper_stated", to_string(up.stated)},
          {"best_lower", lower.bound},
          {"best_lower_k", lower.k},
          {"asymptotic_holds", asym.holds}};
}

Row generic_row(std::int64_t m, std::int64_t l, const SweepConfig& config, std::uint64_t prime) {
  const ArithProfile p(m, l);
  const auto e = empirical_generic_semigroup(RamificationProfile(p.orders()), config.trials, prime, config.seed);
  const auto up = genus_upper_arith(p);
  const Rational upper = p.even() ? up.stated : *up.proof_derived;
  const auto lower = best_genus_lower(m * l, m, 2 * m);
  bool sstar_inside = true;
  const auto sstar = s_star(p);
  for (const auto g : sstar.generators()) sstar_inside = sstar_inside && e.contains(g);
  bool windows_clear = true;
  for (std::int64_t d = 0;; ++d) {
    const auto w = forbidden_window(m * l, m, 2 * m, d);
    if (!w) break;
    for (std::int64_t x = w->lo; x <= w->open_hi(); ++x) windows_clear = windows_clear && !e.contains(x);
  }
  std::string profile;
  for (const auto r : p.orders()) profile += (profile.empty() ? "" : ",") + std::to_string(r);
  return {{"m", m},
          {"l", l},
          {"profile", profile},
          {"trials", config.trials},
          {"empirical_genus", e.genus()},
          {"conductor", e.conductor},
          {"precision", e.precision},
          {"genus_lower", lower.bound},
          {"genus_upper", to_string(upper)},
          {"in_bounds", lower.bound <= e.genus() && Rational(e.genus()) <= upper},
          {"sstar_contained", sstar_inside},
          {"windows_clear", windows_clear}};
}

}  // namespace

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 1; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  worker();
  // get() rethrows the first worker exception after all have finished
  for (auto& f : pool) f.wait();
  for (auto& f : pool) f.get();
}

std::string sweep(const SweepConfig& config) {
  const std::uint64_t prime = config.prime ? config.prime : kDefaultPrime;
  std::vector<std::function<Row()>> jobs;
  if (config.family == "supersym") {
    if (config.max_abc < 1) throw InvalidArgument("max-abc must be positive");
    for (const auto& t : supersym_triples(config.max_abc, config.min_a)) jobs.push_back([t] { return supersym_row(t); });
  } else if (config.family == "arith" || config.family == "generic") {
    if (config.m.lo > config.m.hi || config.l.lo > config.l.hi) throw InvalidArgument("empty parameter range");
    if (config.family == "generic" && config.trials < 3) throw InvalidArgument("generic sweeps need trials >= 3");
    for (std::int64_t m = config.m.lo; m <= config.m.hi; ++m) {
      for (std::int64_t l = config.l.lo; l <= config.l.hi; ++l) {
        if (config.family == "arith") {
          jobs.push_back([m, l] { return arith_row(m, l); });
        } else {
          jobs.push_back([m, l, &config, prime] { return generic_row(m, l, config, prime); });
        }
      }
    }
  } else {
    throw InvalidArgument("unknown sweep family '" + config.family + "'");
  }

  std::vector<std::optional<Row>> rows(jobs.size());
  parallel_for(jobs.size(), config.threads, [&](std::size_t i) { rows[i] = jobs[i](); });
  for (auto& row : rows) {
    row->emplace_back("toolkit_version", kToolkitVersion);
    row->emplace_back("seed", config.seed);
  }

  if (config.format == Format::json) {
    Json doc;
    doc["toolkit_version"] = kToolkitVersion;
    doc["family"] = config.family;
    doc["seed"] = config.seed;
    doc["prime"] = prime;
    doc["rows"] = Json::array();
    for (const auto& row : rows) {
      Json obj = Json::object();
      for (const auto& [k, v] : *row) obj[k] = v;
      doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  if (rows.empty()) return "";
  for (std::size_t i = 0; i < rows.front()->size(); ++i) out << (i ? "," : "") << (*rows.front())[i].first;
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row->size(); ++i) out << (i ? "," : "") << csv_field((*row)[i].second);
    out << '\n';
  }
  return out.str();
}

}  // namespace cuspsemi::cli
