#include <cstdlib>
#include <sstream>

#include "cuspsemi/cli.hpp"
#include "doctest.h"
#include "internal.hpp"
#include "json.hpp"

using cuspsemi::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("info") {
  const auto r = call({"info", "--gens", "6,10,15"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["genus"] == 15);
  CHECK(j["frobenius"] == 29);
  CHECK(j["conductor"] == 30);
  CHECK(j["symmetric"] == true);
  CHECK(j["multiplicity"] == 6);
  CHECK(j["betti"] == Json::array({30}));
  CHECK(j["apery"] == Json::array({0, 25, 20, 15, 10, 35}));
  CHECK(j.contains("betti_up_to"));
  CHECK(j.contains("toolkit_version"));

  const auto whole = Json::parse(call({"info", "--gens", "1"}).out);
  CHECK(whole["genus"] == 0);
  CHECK(whole["frobenius"] == -1);

  const auto bad = call({"info", "--gens", "4,6"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("GcdNotOne") != std::string::npos);
  CHECK(call({"info", "--gens", "4,x"}).code == 2);
}

TEST_CASE("generic") {
  const auto r = call({"generic", "--profile", "8,10,12", "--trials", "3", "--seed", "7"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  const auto achieved = j["achieved_below_conductor"].get<std::vector<std::int64_t>>();
  CHECK(std::count(achieved.begin(), achieved.end(), 21) == 1);
  CHECK(std::count(achieved.begin(), achieved.end(), 25) == 1);
  CHECK(j["seed"] == 7);

  CHECK(Json::parse(call({"generic", "--profile", "2,3"}).out)["genus"] == 1);

  const auto big = Json::parse(call({"generic", "--profile", "12,15,20"}).out);
  const auto v = big["achieved_below_conductor"].get<std::vector<std::int64_t>>();
  const std::int64_t conductor = big["conductor"];
  for (const std::int64_t x : {61, 62}) {
    CHECK((x >= conductor || std::count(v.begin(), v.end(), x) == 1));
  }

  CHECK(call({"generic", "--profile", "8,10,12", "--trials", "2"}).code == 2);
  CHECK(call({"generic", "--profile", "8"}).code == 2);
}

TEST_CASE("prime selection") {
  const auto flag = Json::parse(call({"generic", "--profile", "2,3", "--prime", "1073741827"}).out);
  CHECK(flag["prime"] == 1073741827ULL);
  ::setenv("CUSPSEMI_PRIME", "1073741827", 1);
  const auto env = Json::parse(call({"generic", "--profile", "2,3"}).out);
  CHECK(env["prime"] == 1073741827ULL);
  const auto both = Json::parse(call({"generic", "--profile", "2,3", "--prime", "2305843009213693951"}).out);
  CHECK(both["prime"] == 2305843009213693951ULL);
  ::setenv("CUSPSEMI_PRIME", "1000", 1);
  CHECK(call({"generic", "--profile", "2,3"}).code == 2);
  ::unsetenv("CUSPSEMI_PRIME");
  CHECK(Json::parse(call({"generic", "--profile", "2,3"}).out)["prime"] == 2305843009213693951ULL);
}

TEST_CASE("verify") {
  CHECK(call({"verify", "m2-gaps", "--l", "4..12"}).code == 0);
  CHECK(call({"verify", "supersym-invariants", "--max-abc", "5000"}).code == 0);
  const auto ap = call({"verify", "apery-even", "--m", "2..4", "--l-max", "20"});
  CHECK(ap.code == 0);
  CHECK(ap.out.find("FINDING") != std::string::npos);
  CHECK(call({"verify", "no-such-theorem"}).code == 2);
  CHECK(call({"verify"}).code == 2);

  const auto j = Json::parse(call({"verify", "m2-gaps", "--l", "4..6", "--json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["instances"].size() == 3);
}

TEST_CASE("list theorems") {
  const auto r = call({"--list-theorems"});
  CHECK(r.code == 0);
  for (const auto& t : cuspsemi::cli::theorem_catalog()) CHECK(r.out.find(t.id + "\t") != std::string::npos);
}

TEST_CASE("sweeps") {
  const auto s = call({"sweep", "--family", "supersym", "--max-abc", "2000"});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("a,b,c,genus,frobenius,rho,codim,nodal_codim,excess,rhobound1_holds,F_poly_sign,"
                    "sprime_applicable,sprime_genus,sprime_frobenius,",
                    0) == 0);
  CHECK(s.out.find("\n4,5,7,99,197,8,92,99,true,true,negative,true,96,177,") != std::string::npos);
  CHECK(s.out.find('\r') == std::string::npos);

  const auto a = call({"sweep", "--family", "arith", "--m", "2", "--l", "4..8"});
  REQUIRE(a.code == 0);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    // m,l,parity,in_hypothesis,sstar_genus,sstar_conductor,genus_upper,...
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    CHECK(cells[4] == cells[6]);
    ++rows;
  }
  CHECK(rows == 5);

  const auto g = call({"sweep", "--family", "generic", "--l", "4..8", "--format", "json"});
  REQUIRE(g.code == 0);
  for (const auto& row : Json::parse(g.out)["rows"]) {
    CHECK(row["in_bounds"] == true);
    CHECK(row["windows_clear"] == true);
    CHECK(row["sstar_contained"] == true);
  }

  CHECK(call({"sweep", "--family", "bogus"}).code == 2);
  CHECK(call({"sweep", "--family", "generic", "--trials", "2"}).code == 2);
  CHECK(call({"sweep", "--family", "arith", "--l", "8..4"}).code == 2);
}

TEST_CASE("byte-identical repeats") {
  const std::vector<std::string> args = {"sweep", "--family", "generic", "--l", "4..6", "--seed", "5", "--threads", "3"};
  const auto first = call(args);
  CHECK(first.out == call(args).out);
  const std::vector<std::string> single = {"sweep", "--family", "generic", "--l", "4..6", "--seed", "5", "--threads", "1"};
  CHECK(first.out == call(single).out);
}

TEST_CASE("range parsing") {
  using cuspsemi::cli::parse_range;
  CHECK(parse_range("4..12").lo == 4);
  CHECK(parse_range("4..12").hi == 12);
  CHECK(parse_range("7").hi == 7);
  CHECK_THROWS(parse_range("9..3"));
  CHECK_THROWS(parse_range("a..3"));
}
