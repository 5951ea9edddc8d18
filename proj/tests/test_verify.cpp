#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "trig5/typetables.hpp"
#include "trig5/verify.hpp"

using trig5::verify::Check;
using trig5::verify::Options;
using trig5::verify::Report;

namespace {

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// pipeline without the census phase; the cheap checks still take ~15 s
Report run_cheap(const std::string& table_json = "") {
  Options opt;
  opt.q = 2;
  opt.with_census = false;
  opt.table_json = table_json;
  return trig5::verify::run(opt);
}

}  // namespace

TEST_CASE("preconditions") {
  Options opt;
  opt.q = 4;
  CHECK_THROWS_AS((void)trig5::verify::run(opt), std::invalid_argument);
  opt.q = 3;
  opt.extended = false;
  CHECK_THROWS_AS((void)trig5::verify::run(opt), std::invalid_argument);
}

TEST_CASE("cheap pipeline passes and serializes byte-stably") {
  Report rep = run_cheap();
  CHECK(rep.all_pass);
  CHECK(!rep.census_ran);
  CHECK(rep.checks.size() == 32);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(c.expected == c.actual);
  }
  CHECK(find(rep, "formula.values")->actual == "2817, 229636");
  CHECK(find(rep, "sieve.q3.cusp.total")->actual == "5668704");

  std::string a = to_json_string(rep, 2);
  std::string b = to_json_string(rep, 2);
  CHECK(a == b);
  // timings are excluded from the default rendering
  CHECK(a.find("seconds") == std::string::npos);
  CHECK(to_json_string(rep, 2, true).find("seconds") != std::string::npos);

  auto parsed = nlohmann::json::parse(a);
  CHECK(parsed["all_pass"] == true);
  CHECK(parsed["checks"].size() == rep.checks.size());

  std::string human = trig5::verify::human_summary(rep);
  CHECK(human.find("[FAIL]") == std::string::npos);
  CHECK(human.find("32 checks, 32 passed, 0 failed") != std::string::npos);
  // no census, no headline count
  CHECK(human.find("T_5") == std::string::npos);
}

TEST_CASE("a corrupted table row fails its check by name and nothing halts") {
  // tamper one sigma and re-stamp the checksum so row validation is reached
  auto doc = nlohmann::json::parse(trig5::typetables::embedded_json());
  doc["rows"][0]["sigma"] = doc["rows"][0]["sigma"].get<long long>() + 1;
  std::uint64_t sum = trig5::typetables::fnv1a64(doc["rows"].dump());
  std::ostringstream hex;
  hex << std::hex;
  for (int i = 60; i >= 0; i -= 4) hex << ((sum >> i) & 0xf);
  doc["checksum_fnv1a64"] = hex.str();
  std::string row_id = doc["rows"][0]["id"].get<std::string>();

  Report rep = run_cheap(doc.dump());
  CHECK(!rep.all_pass);

  const Check* validate = find(rep, "tables.validate");
  REQUIRE(validate != nullptr);
  CHECK(!validate->pass);
  CHECK(validate->actual.find(row_id) != std::string::npos);
  CHECK(validate->actual.find("sigma") != std::string::npos);

  // downstream table consumers fail, independent checks still pass
  CHECK(!find(rep, "tables.total.odd")->pass);
  CHECK(!find(rep, "formula.assembly.even")->pass);
  CHECK(find(rep, "symbolic.quotient.cusp")->pass);
  CHECK(find(rep, "stabilizer.q3.nonsplit")->pass);
  CHECK(find(rep, "det.lines")->pass);
  CHECK(find(rep, "sieve.q2.split.total")->pass);
  CHECK(rep.checks.size() == 32);

  std::string human = trig5::verify::human_summary(rep);
  CHECK(human.find("[FAIL] tables.validate") != std::string::npos);
  CHECK(human.find(row_id) != std::string::npos);
}
