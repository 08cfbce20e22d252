#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "fibcube/errors.hpp"
#include "fibcube/verify.hpp"

using namespace fibcube;
using namespace fibcube::verify;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fibcube-tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

std::string render(const GridReport& r, ReportFormat f) {
  std::ostringstream os;
  write_report(os, r, f, false);
  return os.str();
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(parse_range("5").lo == 5);
  CHECK(parse_range("5").hi == 5);
  const Range r = parse_range("1..12");
  CHECK(r.lo == 1);
  CHECK(r.hi == 12);
  CHECK(parse_range("3..2").empty());
  CHECK_THROWS_AS(parse_range("1..x"), UsageError);
  CHECK_THROWS_AS(parse_range(""), UsageError);
}

TEST_CASE("single-point checks") {
  const ClaimCheck c = run_claim("thm4.4-diameter", {Family::O, 2, 2, 5});
  CHECK(c.verdict == Verdict::kMatch);
  CHECK(c.expected == 4);
  CHECK(c.observed == 4);
  CHECK_FALSE(c.failing());

  const ClaimCheck big = run_claim("thm4.4-diameter", {Family::O, 1, 20, 20}, 1000);
  CHECK(big.verdict == Verdict::kSkipped);
  CHECK(big.witness["reason"].get<std::string>().find("vertex budget") != std::string::npos);

  const ClaimCheck wrong_family = run_claim("thm4.4-diameter", {Family::I, 2, 2, 5});
  CHECK(wrong_family.verdict == Verdict::kSkipped);

  CHECK_THROWS_AS(run_claim("no-such-claim", {Family::O, 1, 1, 1}), UsageError);
  CHECK_THROWS_AS(find_claim("no-such-claim"), UsageError);
}

TEST_CASE("registered discrepancies do not fail the run") {
  GridSpec spec;
  spec.claims = {"table1-phi"};
  const GridReport r = run_grid(spec);
  REQUIRE(r.checks.size() == 52);
  int mismatches = 0;
  for (const auto& c : r.checks) {
    if (c.verdict != Verdict::kMismatch) continue;
    ++mismatches;
    CHECK(c.point.p == 2);
    CHECK(c.point.r == 2);
    CHECK(c.point.n == 11);
    CHECK(c.expected == 85);
    CHECK(c.observed == 74);
    CHECK(c.known_discrepancy.has_value());
  }
  CHECK(mismatches == 1);
  CHECK_FALSE(r.failed());

  RunOptions bare;
  bare.known.clear();
  CHECK(run_grid(spec, bare).failed());
}

TEST_CASE("probes report but never fail") {
  GridSpec spec;
  spec.p = {2, 3};
  spec.r = {2, 3};
  spec.n = {1, 9};
  const GridReport r = probe_I_radius_claim(spec);
  CHECK_FALSE(r.checks.empty());
  for (const auto& c : r.checks) {
    CHECK(c.kind == ClaimKind::kProbe);
    CHECK_FALSE(c.failing());
    CHECK(c.point.family == Family::I);
  }
  REQUIRE(r.summary.size() == 1);
  CHECK(r.summary[0].extra.contains("residue_zero"));
  CHECK(r.summary[0].extra.contains("residue_nonzero"));
}

TEST_CASE("grid output is ordered and independent of the thread count") {
  GridSpec spec;
  spec.p = {1, 3};
  spec.r = {1, 3};
  spec.n = {1, 8};
  spec.claims = {"thm4.4-diameter", "thm5.1-max-degree", "prop2.4-order-comparison"};
  RunOptions one;
  one.threads = 1;
  RunOptions many;
  many.threads = 4;
  const GridReport a = run_grid(spec, one);
  const GridReport b = run_grid(spec, many);
  CHECK(render(a, ReportFormat::kJson) == render(b, ReportFormat::kJson));
  CHECK(std::is_sorted(a.checks.begin(), a.checks.end(), [](const auto& x, const auto& y) {
    return std::tie(x.claim_id, x.point) < std::tie(y.claim_id, y.point);
  }));
  for (const auto& c : a.checks) {
    if (c.claim_id == "prop2.4-order-comparison") CHECK_FALSE(c.point.family.has_value());
  }
}

TEST_CASE("cache round trip") {
  const auto path = temp_path("cache.ndjson");
  GridSpec spec;
  spec.p = {1, 2};
  spec.r = {1, 2};
  spec.n = {1, 7};
  spec.claims = {"thm4.2-radius", "thm5.4-min-degree"};
  std::string cold;
  {
    Cache cache(path);
    RunOptions o;
    o.cache = &cache;
    cold = render(run_grid(spec, o), ReportFormat::kCsv);
    CHECK(cache.size() > 0);
  }
  Cache warm(path);
  CHECK(warm.size() > 0);
  CHECK(warm.ignored_records() == 0);
  RunOptions o;
  o.cache = &warm;
  CHECK(render(run_grid(spec, o), ReportFormat::kCsv) == cold);

  // A damaged line and a record from another code version are skipped.
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n";
    out << R"({"schema_version":1,"key":"O/1/1/1/bundle","value":{},"code_version":"0.0.0"})" << '\n';
  }
  Cache damaged(path);
  CHECK(damaged.ignored_records() == 2);
  CHECK(damaged.size() == warm.size());
  CHECK(Cache::key({Family::I, 2, 3, 4}, "bundle") == "I/2/3/4/bundle");
  CHECK(Cache::key({std::nullopt, 2, 3, 4}, "x") == "-/2/3/4/x");
}

TEST_CASE("report formats") {
  GridSpec spec;
  spec.p = {2, 2};
  spec.r = {2, 2};
  spec.n = {5, 5};
  spec.claims = {"thm4.4-diameter"};
  const GridReport r = run_grid(spec);
  const std::string csv = render(r, ReportFormat::kCsv);
  CHECK(csv.rfind("claim_id,kind,family,p,r,n,expected,observed,verdict,known_discrepancy,witness\n", 0) == 0);
  CHECK(csv.find("thm4.4-diameter,theorem,O,2,2,5,4,4,match") != std::string::npos);
  const auto j = Json::parse(render(r, ReportFormat::kJson));
  CHECK(j["checks"].size() == 1);
  CHECK_FALSE(j["checks"][0].contains("runtime_ms"));
  CHECK(j["failed"] == false);
  CHECK(render(r, ReportFormat::kTable).find("OK") != std::string::npos);
  CHECK(parse_report_format("csv") == ReportFormat::kCsv);
  CHECK_THROWS_AS(parse_report_format("xml"), UsageError);
}

TEST_CASE("every registered claim has a unique id") {
  const auto& claims = registered_claims();
  std::set<std::string> ids;
  for (const auto& c : claims) ids.insert(c.id);
  CHECK(ids.size() == claims.size());
  CHECK(ids.count("thm4.5-diameter") == 1);
  CHECK(ids.count("conj-connectivity") == 1);
}
