#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cuspsemi/cli.hpp"
#include "cuspsemi/error.hpp"
#include "cuspsemi/prime_field.hpp"
#include "cuspsemi/semigroup.hpp"
#include "cuspsemi/series.hpp"
#include "internal.hpp"
#include "json.hpp"

namespace cuspsemi::cli {

using Json = nlohmann::ordered_json;

namespace {

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("not an integer: '" + text + "'");
  return v;
}

std::uint64_t parse_prime(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not a prime: '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("not a prime: '" + text + "'");
  return v;
}

// --prime beats CUSPSEMI_PRIME beats the built-in default.
std::uint64_t resolve_prime(const std::string& flag) {
  std::uint64_t p = kDefaultPrime;
  if (!flag.empty()) {
    p = parse_prime(flag);
  } else if (const char* env = std::getenv("CUSPSEMI_PRIME"); env && *env) {
    p = parse_prime(env);
  }
  (void)PrimeField(p);
  return p;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const GcdNotOne*>(&e)) return "GcdNotOne";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
  if (dynamic_cast<const PrecisionTooSmall*>(&e)) return "PrecisionTooSmall";
  if (dynamic_cast<const SeedDisagreement*>(&e)) return "SeedDisagreement";
  if (dynamic_cast<const MethodMismatch*>(&e)) return "MethodMismatch";
  if (dynamic_cast<const NotApplicable*>(&e)) return "NotApplicable";
  return "Error";
}

Json info_report(const std::string& gens_text, std::int64_t betti_bound) {
  const auto s = NumericalSemigroup::from_generators(parse_list(gens_text));
  const auto ap = apery(s);
  const std::int64_t bound =
      betti_bound >= 0 ? betti_bound : s.conductor() + s.multiplicity() + s.generators().back();
  Json j;
  j["toolkit_version"] = kToolkitVersion;
  j["generators"] = s.minimal_generators();
  j["genus"] = s.genus();
  j["frobenius"] = s.frobenius();
  j["conductor"] = s.conductor();
  j["symmetric"] = s.is_whole() || is_symmetric(s);
  j["multiplicity"] = s.multiplicity();
  j["apery"] = ap.entries;
  j["betti_up_to"] = bound;
  j["betti"] = betti_elements(s, bound);
  return j;
}

Json generic_report(const std::string& profile_text, int trials, std::uint64_t prime, std::uint64_t seed) {
  const RamificationProfile profile(parse_list(profile_text));
  const auto e = empirical_generic_semigroup(profile, trials, prime, seed);
  Json j;
  j["toolkit_version"] = kToolkitVersion;
  j["profile"] = profile.orders();
  j["trials"] = trials;
  j["seed"] = seed;
  j["seeds_used"] = e.seeds_used;
  j["prime"] = prime;
  j["precision"] = e.precision;
  j["conductor"] = e.conductor;
  j["genus"] = e.genus();
  j["frobenius"] = e.frobenius();
  j["achieved_below_conductor"] = e.achieved;
  j["minimal_generators"] = e.to_semigroup().minimal_generators();
  return j;
}

void write_verify(const VerifyResult& r, bool as_json, std::ostream& out) {
  std::size_t failed = 0;
  std::size_t out_of_hypothesis = 0;
  for (const auto& i : r.instances) {
    failed += i.in_hypothesis && !i.pass;
    out_of_hypothesis += !i.in_hypothesis;
  }
  if (as_json) {
    Json j;
    j["toolkit_version"] = kToolkitVersion;
    j["theorem"] = r.theorem;
    j["passed"] = r.passed();
    j["instances"] = Json::array();
    for (const auto& i : r.instances) {
      j["instances"].push_back(
          {{"instance", i.instance}, {"in_hypothesis", i.in_hypothesis}, {"pass", i.pass}, {"detail", i.detail}});
    }
    j["findings"] = r.findings;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& i : r.instances) {
    const char* tag = !i.in_hypothesis ? "SKIP" : (i.pass ? "PASS" : "FAIL");
    out << tag << "  " << i.instance << "  " << i.detail << '\n';
  }
  for (const auto& f : r.findings) out << "FINDING  " << f << '\n';
  out << r.theorem << ": " << (r.instances.size() - failed - out_of_hypothesis) << " passed, " << failed
      << " failed, " << out_of_hypothesis << " outside hypothesis, " << r.findings.size() << " findings\n";
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const Range r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw InvalidArgument("empty range '" + text + "'");
  return r;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_int(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cuspsemi: numerical semigroups of cusp singularities"};
  app.set_version_flag("--version", kToolkitVersion);
  bool list_theorems = false;
  app.add_flag("--list-theorems", list_theorems, "List verification theorem ids");

  std::string gens;
  std::int64_t betti_bound = -1;
  auto* info = app.add_subcommand("info", "Invariants of <generators>");
  info->add_option("--gens", gens, "Comma-separated generators")->required();
  info->add_option("--betti-up-to", betti_bound, "Search bound for Betti elements");

  std::string profile;
  int trials = 3;
  std::uint64_t seed = 1;
  std::string prime_flag;
  auto* generic = app.add_subcommand("generic", "Monte-Carlo value semigroup of a generic branch");
  generic->add_option("--profile", profile, "Comma-separated ramification orders")->required();
  generic->add_option("--trials", trials, "Independent trials (>= 3)");
  generic->add_option("--seed", seed, "Base seed");
  generic->add_option("--prime", prime_flag, "Field characteristic");

  std::string theorem;
  std::string l_text;
  std::string m_text;
  VerifyParams vp;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "Check a theorem over a parameter range");
  ver->add_option("theorem", theorem, "Theorem id (see --list-theorems)")->required();
  ver->add_option("--max-abc", vp.max_abc, "Largest abc for triple sweeps");
  ver->add_option("--l", l_text, "Range of l, a..b");
  ver->add_option("--m", m_text, "Range of m, a..b");
  ver->add_option("--l-max", vp.l_max, "Largest l");
  ver->add_option("--trials", vp.trials, "Monte-Carlo trials");
  ver->add_option("--seed", vp.seed, "Base seed");
  ver->add_option("--prime", prime_flag, "Field characteristic");
  ver->add_option("--instances", vp.instances, "Random instances");
  ver->add_flag("--json", verify_json, "Emit JSON");

  SweepConfig sc;
  std::string sweep_m = "2";
  std::string sweep_l = "4..8";
  std::string format = "csv";
  std::string output;
  auto* sw = app.add_subcommand("sweep", "Tabulate a family");
  sw->add_option("--family", sc.family, "arith | supersym | generic")
      ->required()
      ->check(CLI::IsMember({"arith", "supersym", "generic"}));
  sw->add_option("--max-abc", sc.max_abc, "Largest abc (supersym)");
  sw->add_option("--min-a", sc.min_a, "Smallest a (supersym)");
  sw->add_option("--m", sweep_m, "Range of m, a..b");
  sw->add_option("--l", sweep_l, "Range of l, a..b");
  sw->add_option("--trials", sc.trials, "Monte-Carlo trials (generic)");
  sw->add_option("--seed", sc.seed, "Base seed");
  sw->add_option("--prime", prime_flag, "Field characteristic");
  sw->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sw->add_option("--output", output, "Output file (default stdout)");
  sw->add_option("--threads", sc.threads, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (list_theorems) {
      for (const auto& t : theorem_catalog()) out << t.id << "\t" << t.statement << "\t" << t.flags << '\n';
      return kSuccess;
    }
    if (info->parsed()) {
      out << info_report(gens, betti_bound).dump(2) << '\n';
      return kSuccess;
    }
    if (generic->parsed()) {
      if (trials < 3) throw InvalidArgument("trials must be at least 3");
      out << generic_report(profile, trials, resolve_prime(prime_flag), seed).dump(2) << '\n';
      return kSuccess;
    }
    if (ver->parsed()) {
      if (!known_theorem(theorem)) throw InvalidArgument("unknown theorem id '" + theorem + "'");
      if (!l_text.empty()) vp.l = parse_range(l_text);
      if (!m_text.empty()) vp.m = parse_range(m_text);
      if (vp.trials < 3) throw InvalidArgument("trials must be at least 3");
      vp.prime = resolve_prime(prime_flag);
      const auto result = verify(theorem, vp);
      write_verify(result, verify_json, out);
      return result.passed() ? kSuccess : kVerificationFailure;
    }
    if (sw->parsed()) {
      sc.m = parse_range(sweep_m);
      sc.l = parse_range(sweep_l);
      sc.prime = resolve_prime(prime_flag);
      sc.format = format == "json" ? Format::json : Format::csv;
      const std::string table = sweep(sc);
      if (output.empty()) {
        out << table;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw InvalidArgument("cannot open '" + output + "'");
        file << table;
      }
      return kSuccess;
    }
    out << app.help();
    return kUsageError;
  } catch (const SeedDisagreement& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return kSeedDisagreement;
  } catch (const InvalidArgument& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const MethodMismatch& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return kNumericError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace cuspsemi::cli
