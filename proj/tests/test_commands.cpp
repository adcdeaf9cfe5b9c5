#include "nilmult/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

using namespace nilmult;
using Json = nlohmann::json;

namespace {

RunConfig compute_cfg(const std::string& spec) {
  RunConfig cfg;
  cfg.command = "compute";
  cfg.catalog_spec = spec;
  return cfg;
}

}  // namespace

TEST_CASE("compute renders the full text report") {
  RunResult r = run_command(compute_cfg("d8"));
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "M2(d8) = Z2 x Z4 (order 2^3), s2 = 2\n"
        "prime: 2\n"
        "order: 2^3\n"
        "class: 2\n"
        "abelianization: Z2 x Z2\n"
        "derived order: 2^1\n"
        "family: D8xEA\n");
}

TEST_CASE("compute emits the documented json schema") {
  RunConfig cfg = compute_cfg("d8");
  cfg.json = true;
  RunResult r = run_command(cfg);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["schema"] == 1);
  CHECK(j["prime"] == 2);
  CHECK(j["n"] == 3);
  CHECK(j["class"] == 2);
  CHECK(j["m"] == 1);
  CHECK(j["abelianization"] == Json::array({2, 2}));
  CHECK(j["c_nil"] == 2);
  CHECK(j["multiplier"] == Json::array({2, 4}));
  CHECK(j["mult_exponent"] == 3);
  CHECK(j["s2"] == 2);
  CHECK(j["family"] == "D8xEA");
  CHECK(j["notes"] == Json::array());

  // the json fields reappear verbatim in the text rendering
  RunResult t = run_command(compute_cfg("d8"));
  CHECK(t.output.find("prime: " + j["prime"].dump()) != std::string::npos);
  CHECK(t.output.find("class: " + j["class"].dump()) != std::string::npos);
  CHECK(t.output.find("s2 = " + j["s2"].dump()) != std::string::npos);
}

TEST_CASE("compute covers the classical multiplier and abelian inputs") {
  RunConfig cfg = compute_cfg("q8");
  cfg.c_nil = 1;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("M1(q8) = 1 (order 2^0)\n") == 0);

  cfg = compute_cfg("elem_abelian:p=2,rank=2");
  cfg.json = true;
  Json j = Json::parse(run_command(cfg).output);
  CHECK(j["s2"].is_null());
  CHECK(j["multiplier"] == Json::array({2, 2}));
  CHECK(j["notes"].size() == 1);
}

TEST_CASE("compute reads presentation files") {
  const std::string path = "cmd_test_tmp.grp";
  {
    std::ofstream out(path);
    out << "# dihedral of order 8\n"
           "gens a b\n"
           "rel a^4\n"
           "rel b^2\n"
           "rel [a,b] a^2\n";
  }
  RunConfig cfg;
  cfg.command = "compute";
  cfg.file = path;
  cfg.class_hint = 2;
  RunResult r = run_command(cfg);
  std::remove(path.c_str());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= Z2 x Z4 (order 2^3), s2 = 2") != std::string::npos);
  // no catalog construction behind it, so no family line
  CHECK(r.output.find("family:") == std::string::npos);

  cfg.file = "does_not_exist.grp";
  CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("compute validates its input source and spec") {
  RunConfig cfg;
  cfg.command = "compute";
  CHECK(run_command(cfg).exit_code == 2);  // no source
  cfg.catalog_spec = "d8";
  cfg.file = "x.grp";
  CHECK(run_command(cfg).exit_code == 2);  // both sources

  CHECK(run_command(compute_cfg("no_such_family")).exit_code == 2);
  CHECK(run_command(compute_cfg("cpz:p=2,m=2,kind=dihedral")).exit_code == 3);

  RunResult r = run_command(compute_cfg("cyclic:p=6,m=1"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error:") == 0);
}

TEST_CASE("a larger class hint does not change the answer") {
  RunConfig cfg = compute_cfg("d8");
  cfg.json = true;
  Json base = Json::parse(run_command(cfg).output);
  cfg.class_hint = 3;
  Json hinted = Json::parse(run_command(cfg).output);
  CHECK(base == hinted);
}

TEST_CASE("classify reports defect and families") {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.catalog_spec = "xEA:base=(d8),k=1";
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("s2 = 2\n") == 0);
  CHECK(r.output.find("D8xEA") != std::string::npos);

  cfg.catalog_spec = "cpz:p=3,m=1,kind=exp_p";
  cfg.json = true;
  Json j = Json::parse(run_command(cfg).output);
  CHECK(j["s2"] == 3);
  CHECK(j["kind"] == "classified");
  const auto& fams = j["families"];
  CHECK(std::count(fams.begin(), fams.end(), Json("HmZp2xEA")) == 1);
}

TEST_CASE("classify rejects abelian groups with its own exit code") {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.catalog_spec = "abelian:p=3,type=1.1";
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 6);
  CHECK(r.output.find("abelian") != std::string::npos);
}

TEST_CASE("catalog lists the sweep deterministically") {
  RunConfig cfg;
  cfg.command = "catalog";
  cfg.primes = {2};
  cfg.max_n = 4;
  RunResult a = run_command(cfg);
  RunResult b = run_command(cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("d8") != std::string::npos);
  CHECK(a.output.find("family=HmZp2xEA") != std::string::npos);

  cfg.json = true;
  Json j = Json::parse(run_command(cfg).output);
  CHECK(j["schema"] == 1);
  CHECK(j["groups"].size() == 17);
  CHECK(j["groups"][0]["spec"] == "cyclic:p=2,m=1");
  CHECK(j["groups"][0]["n"] == 1);
}

TEST_CASE("verify runs a single group and rejects unknown ones") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.only = "extraspecial";
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("checks: 6, failures: 0\n") != std::string::npos);

  cfg.json = true;
  Json j = Json::parse(run_command(cfg).output);
  CHECK(j["failures"] == 0);
  REQUIRE(j["checks"].size() == 6);
  for (const auto& row : j["checks"]) {
    CHECK(row["pass"] == true);
    CHECK(row["expected"] == row["computed"]);
  }

  cfg.only = "nope";
  CHECK(run_command(cfg).exit_code == 3);
}

TEST_CASE("bounds prints every applicable ceiling") {
  RunConfig cfg;
  cfg.command = "bounds";
  cfg.bound_n = 5;
  cfg.bound_m = 3;
  CHECK(run_command(cfg).output ==
        "derived-size-bound: 13\n"
        "large-derived-ceiling: 18\n"
        "nonabelian-base-bound: 23\n");

  cfg.bound_n = 4;
  cfg.bound_m = 2;
  CHECK(run_command(cfg).output ==
        "derived-size-bound: 9\n"
        "order-p2-derived-ceiling: 9\n"
        "nonabelian-base-bound: 11\n");

  cfg.bound_n = 4;
  cfg.bound_m = 1;
  CHECK(run_command(cfg).output ==
        "derived-size-bound: 11\n"
        "nonabelian-base-bound: 11\n");

  cfg.bound_m = 4;  // n must exceed m
  CHECK(run_command(cfg).exit_code == 3);

  cfg.bound_n = 6;
  cfg.bound_m = 3;
  cfg.json = true;
  Json j = Json::parse(run_command(cfg).output);
  CHECK(j["bounds"]["derived-size-bound"] == 29);
  CHECK(j["bounds"]["large-derived-ceiling"] == 38);
}

TEST_CASE("table walks the defect range") {
  RunConfig cfg;
  cfg.command = "table";
  cfg.table_p = 2;
  cfg.table_n = 4;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("e = 11  s2 = 0  classified  [E1xEA]") == 0);
  CHECK(r.output.find("e = 10  s2 = 1  impossible") != std::string::npos);
  CHECK(r.output.find("e = 9  s2 = 2  classified  [D8xEA]") !=
        std::string::npos);
  CHECK(r.output.find("e = 8  s2 = 3  classified  [HmxEA, HmZp2xEA]") !=
        std::string::npos);

  cfg.table_p = 3;  // defect 2 needs p = 2, so it flips to impossible
  RunResult odd = run_command(cfg);
  CHECK(odd.output.find("e = 9  s2 = 2  impossible") != std::string::npos);

  cfg.json = true;
  Json j = Json::parse(run_command(cfg).output);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["e"] == 11);
  CHECK(j["rows"][0]["kind"] == "classified");

  cfg.table_p = 4;
  CHECK(run_command(cfg).exit_code == 3);
  cfg.table_p = 2;
  cfg.table_n = 2;
  CHECK(run_command(cfg).exit_code == 3);
}

TEST_CASE("unknown commands are rejected") {
  RunConfig cfg;
  cfg.command = "frobnicate";
  CHECK(run_command(cfg).exit_code == 3);
}
