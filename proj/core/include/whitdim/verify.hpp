#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "whitdim/cover.hpp"
#include "whitdim/lattice.hpp"

namespace whitdim {

// A sweep covers every (c, d) in (Z/nZ)^2 for each (n, r) in the ranges.
// One work unit is a single (n, r, c, d) tuple; all requested checks for
// that tuple run together so the n^r lattice scan is paid once.
struct SweepConfig {
  std::int64_t n_min = 1;
  std::int64_t n_max = 8;
  std::int64_t r_min = 1;
  std::int64_t r_max = 4;
  std::vector<std::string> checks;  // empty means the full default set
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  int parallelism = 1;
};

// Oracle-vs-formula identities, one name per check. The default set is every
// check except the deliberately broken "v1_perturbed" negative control,
// which exists so tests can prove the harness is able to fail.
const std::vector<std::string>& default_checks();
const std::vector<std::string>& all_known_checks();
inline constexpr std::string_view kNegativeControlCheck = "v1_perturbed";

struct MismatchRecord {
  CoverParams params;
  std::string check_name;
  std::string expected;  // oracle / direct value
  std::string actual;    // closed-form / predicted value
  std::string context;

  friend bool operator==(const MismatchRecord&, const MismatchRecord&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::int64_t cells_checked = 0;
  std::int64_t cells_skipped = 0;  // n^r over cap; skipped cells never pass
  std::vector<MismatchRecord> mismatches;  // sorted by (n, r, c, d, check)
  std::int64_t wall_ms = 0;
};

// Deterministic up to wall_ms regardless of parallelism: work units are
// independent and side-effect-free, and the aggregator sorts the output.
// Throws UsageError for empty ranges or unknown check names.
SweepReport run_sweep(const SweepConfig& cfg);

std::string to_json(const SweepReport& report);

}  // namespace whitdim
