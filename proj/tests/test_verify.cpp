#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <tuple>

#include "whitdim/verify.hpp"

using namespace whitdim;

namespace {

SweepConfig config(std::int64_t n_max, std::int64_t r_max) {
  SweepConfig cfg;
  cfg.n_max = n_max;
  cfg.r_max = r_max;
  return cfg;
}

std::string strip_wall_ms(std::string json) {
  auto pos = json.rfind(",\"wall_ms\":");
  REQUIRE(pos != std::string::npos);
  json.erase(pos, json.size() - pos - 1);  // keep the closing brace
  return json;
}

}  // namespace

TEST_CASE("default checks exclude the negative control") {
  const auto& defaults = default_checks();
  CHECK(std::find(defaults.begin(), defaults.end(), std::string(kNegativeControlCheck)) ==
        defaults.end());
  const auto& all = all_known_checks();
  CHECK(std::find(all.begin(), all.end(), std::string(kNegativeControlCheck)) != all.end());
  CHECK(all.size() == defaults.size() + 1);
}

TEST_CASE("tiny sweeps are clean") {
  auto report = run_sweep(config(2, 1));
  CHECK(report.cells_checked == 5);  // n=1 has one (c,d) cell, n=2 has four
  CHECK(report.cells_skipped == 0);
  CHECK(report.mismatches.empty());

  report = run_sweep(config(6, 3));
  CHECK(report.cells_checked == 1 + 4 + 9 + 16 + 25 + 36);
  CHECK(report.mismatches.empty());
}

TEST_CASE("single-check sweep counts every cell") {
  SweepConfig cfg;
  cfg.n_min = cfg.n_max = 10;
  cfg.r_min = cfg.r_max = 3;
  cfg.checks = {"v1_equals_brute"};
  auto report = run_sweep(cfg);
  CHECK(report.cells_checked == 100);
  CHECK(report.cells_skipped == 0);
  CHECK(report.mismatches.empty());
}

TEST_CASE("unknown check names are rejected") {
  SweepConfig cfg = config(3, 2);
  cfg.checks = {"not_a_check"};
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);
}

TEST_CASE("empty ranges are rejected") {
  SweepConfig cfg = config(0, 2);
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);
  cfg = config(3, 2);
  cfg.r_min = 3;
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);
  cfg = config(3, 2);
  cfg.parallelism = 0;
  CHECK_THROWS_AS(run_sweep(cfg), UsageError);
}

TEST_CASE("negative control produces mismatches") {
  SweepConfig cfg = config(4, 2);
  cfg.checks = {std::string(kNegativeControlCheck)};
  auto report = run_sweep(cfg);
  CHECK(!report.mismatches.empty());
  for (const auto& rec : report.mismatches) {
    CHECK(rec.check_name == kNegativeControlCheck);
    CHECK(rec.expected != rec.actual);
  }
  // The perturbed formula still agrees wherever gcd(n, d*n/d1) equals A,
  // e.g. at c = d = 0, so not every cell mismatches.
  CHECK(report.mismatches.size() < static_cast<std::size_t>(report.cells_checked));
}

TEST_CASE("over-cap cells are skipped, not failed") {
  SweepConfig cfg = config(4, 4);
  cfg.enumeration_cap = 100;  // 4^4 = 256 exceeds this; 2^4, 3^4 do not
  auto report = run_sweep(cfg);
  CHECK(report.cells_skipped == 16);  // the n=4, r=4 cells
  CHECK(report.cells_checked + report.cells_skipped == 4 * (1 + 4 + 9 + 16));
  CHECK(report.mismatches.empty());
}

TEST_CASE("formula-only sweeps ignore the enumeration cap") {
  SweepConfig cfg = config(5, 3);
  cfg.enumeration_cap = 1;
  cfg.checks = {"v1_equals_v2", "m_prime_equals_m", "kappa_multiplicative"};
  auto report = run_sweep(cfg);
  CHECK(report.cells_skipped == 0);
  CHECK(report.mismatches.empty());
}

TEST_CASE("report is independent of parallelism") {
  SweepConfig base = config(5, 3);
  auto reference = run_sweep(base);
  for (int jobs : {2, 4, 7}) {
    SweepConfig cfg = base;
    cfg.parallelism = jobs;
    auto report = run_sweep(cfg);
    CHECK(report.cells_checked == reference.cells_checked);
    CHECK(report.cells_skipped == reference.cells_skipped);
    CHECK(report.mismatches == reference.mismatches);
  }

  // Same with mismatches present: order must be canonical.
  SweepConfig broken = config(4, 2);
  broken.checks = {std::string(kNegativeControlCheck)};
  auto ref_json = strip_wall_ms(to_json(run_sweep(broken)));
  for (int jobs : {2, 5}) {
    SweepConfig cfg = broken;
    cfg.parallelism = jobs;
    CHECK(strip_wall_ms(to_json(run_sweep(cfg))) == ref_json);
  }
}

TEST_CASE("mismatch records are sorted by cell then check") {
  SweepConfig cfg = config(4, 2);
  cfg.checks = {std::string(kNegativeControlCheck), "v1_equals_brute"};
  cfg.parallelism = 3;
  auto report = run_sweep(cfg);
  auto sorted = report.mismatches;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::tie(a.params.n, a.params.r, a.params.c, a.params.d, a.check_name) <
           std::tie(b.params.n, b.params.r, b.params.c, b.params.d, b.check_name);
  });
  CHECK(report.mismatches == sorted);
}

TEST_CASE("report json shape") {
  SweepConfig cfg = config(2, 1);
  cfg.checks = {"v1_equals_brute"};
  std::string json = to_json(run_sweep(cfg));
  CHECK(json.find("\"config\":{\"n_min\":1,\"n_max\":2,\"r_min\":1,\"r_max\":1,"
                  "\"checks\":[\"v1_equals_brute\"],") != std::string::npos);
  CHECK(json.find("\"cells_checked\":5,\"cells_skipped\":0,\"mismatches\":[],") !=
        std::string::npos);
  CHECK(json.find("\"wall_ms\":") != std::string::npos);
}
