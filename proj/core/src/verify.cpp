#include "whitdim/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "whitdim/formulas.hpp"
#include "whitdim/json_writer.hpp"
#include "whitdim/quantum.hpp"

namespace whitdim {

namespace {

enum CheckId : unsigned {
  kV1EqualsBrute,
  kV2EqualsBrute,
  kV1EqualsV2,
  kCorootEqualsBrute,
  kAMinEqualsBrute,
  kInhomEqualsBrute,
  kInhomStructure,
  kFrBEqualsBrute,
  kSlEqualsClosed,
  kMPrimeEqualsM,
  kKappaMultiplicative,
  kMinDimIff,
  kMaxDimIff,
  kCoprimeProduct,
  kCor71ClosedForms,
  kProp75Flag,
  kProp76Flag,
  kThetaWellDefined,
  kIsoClassConsistent,
  kV1Perturbed,  // negative control, excluded from the default set
  kCheckCount,
};

constexpr std::string_view kCheckNames[kCheckCount] = {
    "v1_equals_brute",   "v2_equals_brute",  "v1_equals_v2",
    "coroot_equals_brute", "a_min_equals_brute", "inhom_equals_brute",
    "inhom_structure",   "fr_b_equals_brute", "sl_equals_closed",
    "m_prime_equals_m",  "kappa_multiplicative", "min_dim_iff",
    "max_dim_iff",       "coprime_product",  "cor71_closed_forms",
    "prop75_flag",       "prop76_flag",      "theta_well_defined",
    "iso_class_consistent", "v1_perturbed",
};

bool brute_needed(unsigned id) {
  switch (id) {
    case kV1EqualsBrute:
    case kV2EqualsBrute:
    case kCorootEqualsBrute:
    case kAMinEqualsBrute:
    case kInhomEqualsBrute:
    case kInhomStructure:
    case kFrBEqualsBrute:  // tuple enumeration, bounded by n^r like the scan
    case kSlEqualsClosed:
    case kThetaWellDefined:
    case kV1Perturbed:
      return true;
    default:
      return false;
  }
}

struct CheckSet {
  std::array<bool, kCheckCount> enabled{};

  bool any_brute() const {
    for (unsigned i = 0; i < kCheckCount; ++i)
      if (enabled[i] && brute_needed(i)) return true;
    return false;
  }
};

CheckSet resolve_checks(const std::vector<std::string>& names) {
  CheckSet set;
  if (names.empty()) {
    for (unsigned i = 0; i < kCheckCount; ++i) set.enabled[i] = (i != kV1Perturbed);
    return set;
  }
  for (const auto& name : names) {
    bool found = false;
    for (unsigned i = 0; i < kCheckCount; ++i) {
      if (name == kCheckNames[i]) {
        set.enabled[i] = true;
        found = true;
        break;
      }
    }
    if (!found) throw UsageError("run_sweep: unknown check name \"" + name + "\"");
  }
  return set;
}

struct CellContext {
  CoverParams p;
  CoverInvariants inv;
  BigInt v1;
  BigInt dim;
  std::optional<LatticeScan> scan;  // present unless every check is formula-only
};

std::string brief_context(const CellContext& ctx) {
  return "d1=" + std::to_string(ctx.inv.d1) + " d2=" + std::to_string(ctx.inv.d2) +
         " A=" + std::to_string(ctx.inv.A) + " M=" + std::to_string(ctx.inv.M) +
         " b=" + std::to_string(ctx.inv.b);
}

void report(std::vector<MismatchRecord>& out, const CellContext& ctx, unsigned id,
            std::string expected, std::string actual) {
  out.push_back(MismatchRecord{ctx.p, std::string(kCheckNames[id]), std::move(expected),
                               std::move(actual), brief_context(ctx)});
}

void check_equal_big(std::vector<MismatchRecord>& out, const CellContext& ctx, unsigned id,
                     const BigInt& expected, const BigInt& actual) {
  if (expected != actual) report(out, ctx, id, expected.str(), actual.str());
}

void check_equal_bool(std::vector<MismatchRecord>& out, const CellContext& ctx, unsigned id,
                      bool expected, bool actual) {
  if (expected != actual)
    report(out, ctx, id, expected ? "true" : "false", actual ? "true" : "false");
}

void run_cell_checks(const CellContext& ctx, const CheckSet& checks, std::int64_t cap,
                     std::vector<MismatchRecord>& out) {
  const CoverParams& p = ctx.p;
  const auto& scan = ctx.scan;

  if (checks.enabled[kV1EqualsBrute])
    check_equal_big(out, ctx, kV1EqualsBrute, scan->lambda_count, ctx.v1);
  if (checks.enabled[kV2EqualsBrute])
    check_equal_big(out, ctx, kV2EqualsBrute, scan->lambda_count, s_cochar_closed_v2(p));
  if (checks.enabled[kV1EqualsV2])
    check_equal_big(out, ctx, kV1EqualsV2, ctx.v1, s_cochar_closed_v2(p));
  if (checks.enabled[kCorootEqualsBrute])
    check_equal_big(out, ctx, kCorootEqualsBrute, scan->coroot_count, s_coroot_closed(p));
  if (checks.enabled[kAMinEqualsBrute]) {
    std::int64_t brute_a = p.n;
    for (std::int64_t a = 1; a < p.n; ++a) {
      if (scan->inhom_count_by_a[static_cast<std::size_t>(a)] > 0) {
        brute_a = a;
        break;
      }
    }
    check_equal_big(out, ctx, kAMinEqualsBrute, brute_a, a_min_closed(p));
  }
  if (checks.enabled[kInhomEqualsBrute])
    check_equal_big(out, ctx, kInhomEqualsBrute, scan->inhom_count, s_inhom_closed(p));
  if (checks.enabled[kInhomStructure]) {
    // Achievable offsets must be exactly the multiples of A, with the same
    // number of solutions in every achievable class.
    std::int64_t a_min = ctx.inv.A;
    std::int64_t reference = scan->inhom_count_by_a[0];
    bool ok = reference > 0;
    for (std::int64_t a = 0; ok && a < p.n; ++a) {
      std::int64_t count = scan->inhom_count_by_a[static_cast<std::size_t>(a)];
      if (a % a_min == 0) {
        ok = (count == reference);
      } else {
        ok = (count == 0);
      }
    }
    if (!ok)
      report(out, ctx, kInhomStructure, "uniform counts on multiples of A",
             "irregular offset histogram");
  }
  if (checks.enabled[kFrBEqualsBrute]) {
    Rational brute = brute_fr_b(p, cap);
    Rational closed = fr_b_closed(p);
    if (!(brute == closed))
      report(out, ctx, kFrBEqualsBrute, brute.str(), closed.str());
  }
  if (checks.enabled[kSlEqualsClosed])
    check_equal_big(out, ctx, kSlEqualsClosed, scan->sl_count, pow_big(ctx.inv.d1, p.r - 1));
  if (checks.enabled[kMPrimeEqualsM])
    check_equal_big(out, ctx, kMPrimeEqualsM, m_closed(p), m_prime_closed(p));
  if (checks.enabled[kKappaMultiplicative]) {
    std::int64_t product = 1;
    for (const auto& [prime, e] : factorize(p.n).factors) {
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < e; ++i) q *= prime;
      product *= derive_invariants(canonicalize(p.c, p.d, p.r, q)).kappa;
    }
    check_equal_big(out, ctx, kKappaMultiplicative, product, ctx.inv.kappa);
  }
  if (checks.enabled[kMinDimIff])
    check_equal_bool(out, ctx, kMinDimIff, ctx.dim == 1, p.c == 0 && p.d == 0);
  if (checks.enabled[kMaxDimIff])
    check_equal_bool(out, ctx, kMaxDimIff, ctx.dim == pow_big(p.n, p.r),
                     ctx.inv.d1 == 1 && ctx.inv.d2 == 1);
  if (checks.enabled[kCoprimeProduct]) {
    if (std::gcd(p.r, p.n) == 1)
      check_equal_big(out, ctx, kCoprimeProduct,
                      pow_big(ctx.inv.d1, p.r - 1) * ctx.inv.d2, ctx.v1);
  }
  if (checks.enabled[kCor71ClosedForms]) {
    if (p.d == 0)
      check_equal_big(out, ctx, kCor71ClosedForms, ctx.dim,
                      pow_big(p.n / std::gcd(p.c, p.n), p.r));
    if (p.c == 0) {
      BigInt rd = BigInt(p.r - 1) * p.d;
      if (rd < 0) rd = -rd;
      std::int64_t g = static_cast<std::int64_t>(boost::multiprecision::gcd(rd, BigInt(p.n)));
      check_equal_big(out, ctx, kCor71ClosedForms, ctx.dim,
                      pow_big(p.n / std::gcd(p.d, p.n), p.r - 1) * (p.n / g));
    }
  }
  if (checks.enabled[kProp75Flag])
    check_equal_bool(out, ctx, kProp75Flag,
                     ctx.v1 == pow_big(ctx.inv.d1, p.r - 1) * ctx.inv.d2,
                     diag_product_prime_conditions(p));
  if (checks.enabled[kProp76Flag])
    check_equal_bool(out, ctx, kProp76Flag, ctx.dim == pow_big(ctx.inv.nQ, p.r),
                     quantum_dim_prime_conditions(p));
  if (checks.enabled[kThetaWellDefined])
    check_equal_bool(out, ctx, kThetaWellDefined, scan->lambda_all_zero_mod_nq,
                     theta_well_defined_closed(p));
  if (checks.enabled[kIsoClassConsistent]) {
    IsoClass iso = classify_isomorphism(p);
    BigInt module_dim = pow_big(ctx.inv.nQ, p.r);
    bool dims_match = (ctx.dim == module_dim);
    bool ok = true;
    if (iso == IsoClass::max_dim_iso || iso == IsoClass::min_dim_iso)
      ok = theta_well_defined_closed(p) && dims_match;
    else if (iso == IsoClass::dim_match_unclassified)
      ok = dims_match;
    else
      ok = !dims_match;
    if (!ok)
      report(out, ctx, kIsoClassConsistent, "iso class consistent with dimensions",
             std::string(to_string(iso)));
  }
  if (checks.enabled[kV1Perturbed]) {
    // Deliberately wrong variant of the closed form (d2 replaced by n);
    // proves the harness reports mismatches instead of rubber-stamping.
    BigInt perturbed =
        pow_big(ctx.inv.d1, p.r - 1) * std::gcd(p.n, p.d * (p.n / ctx.inv.d1));
    check_equal_big(out, ctx, kV1Perturbed, scan->lambda_count, perturbed);
  }
}

}  // namespace

const std::vector<std::string>& default_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (unsigned i = 0; i < kCheckCount; ++i)
      if (i != kV1Perturbed) out.emplace_back(kCheckNames[i]);
    return out;
  }();
  return names;
}

const std::vector<std::string>& all_known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (unsigned i = 0; i < kCheckCount; ++i) out.emplace_back(kCheckNames[i]);
    return out;
  }();
  return names;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  auto started = Clock::now();

  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw UsageError("run_sweep: empty n range");
  if (cfg.r_min < 1 || cfg.r_max < cfg.r_min) throw UsageError("run_sweep: empty r range");
  if (cfg.parallelism < 1) throw UsageError("run_sweep: parallelism must be >= 1");
  CheckSet checks = resolve_checks(cfg.checks);

  struct WorkUnit {
    CoverParams p;
  };
  std::vector<WorkUnit> units;
  for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n)
    for (std::int64_t r = cfg.r_min; r <= cfg.r_max; ++r)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) units.push_back({CoverParams{c, d, r, n}});

  struct Local {
    std::int64_t checked = 0;
    std::int64_t skipped = 0;
    std::vector<MismatchRecord> mismatches;
  };
  std::vector<Local> locals(static_cast<std::size_t>(cfg.parallelism));
  std::atomic<std::size_t> next{0};
  const bool need_scan = checks.any_brute();

  auto worker = [&](Local& local) {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= units.size()) break;
      const CoverParams& p = units[i].p;
      if (need_scan && (p.r > cfg.enumeration_cap || pow_big(p.n, p.r) > cfg.enumeration_cap)) {
        ++local.skipped;
        continue;
      }
      CellContext ctx;
      ctx.p = p;
      ctx.inv = derive_invariants(p);
      ctx.v1 = s_cochar_closed_v1(p);
      ctx.dim = pow_big(p.n, p.r) / ctx.v1;
      if (need_scan) ctx.scan = scan_lattice(p, cfg.enumeration_cap);
      run_cell_checks(ctx, checks, cfg.enumeration_cap, local.mismatches);
      ++local.checked;
    }
  };

  if (cfg.parallelism == 1) {
    worker(locals[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(locals.size());
    for (auto& local : locals) threads.emplace_back(worker, std::ref(local));
    for (auto& t : threads) t.join();
  }

  SweepReport report;
  report.config = cfg;
  if (report.config.checks.empty()) report.config.checks = default_checks();
  for (auto& local : locals) {
    report.cells_checked += local.checked;
    report.cells_skipped += local.skipped;
    report.mismatches.insert(report.mismatches.end(),
                             std::make_move_iterator(local.mismatches.begin()),
                             std::make_move_iterator(local.mismatches.end()));
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const MismatchRecord& a, const MismatchRecord& b) {
              return std::tie(a.params.n, a.params.r, a.params.c, a.params.d, a.check_name) <
                     std::tie(b.params.n, b.params.r, b.params.c, b.params.d, b.check_name);
            });
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
  return report;
}

std::string to_json(const SweepReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("config").begin_object();
  w.key("n_min").value(report.config.n_min);
  w.key("n_max").value(report.config.n_max);
  w.key("r_min").value(report.config.r_min);
  w.key("r_max").value(report.config.r_max);
  w.key("checks").begin_array();
  for (const auto& name : report.config.checks) w.value(name);
  w.end_array();
  w.key("enumeration_cap").value(report.config.enumeration_cap);
  w.key("parallelism").value(static_cast<std::int64_t>(report.config.parallelism));
  w.end_object();
  w.key("cells_checked").value(report.cells_checked);
  w.key("cells_skipped").value(report.cells_skipped);
  w.key("mismatches").begin_array();
  for (const auto& rec : report.mismatches) {
    w.begin_object();
    w.key("params").begin_object();
    w.key("c").value(rec.params.c);
    w.key("d").value(rec.params.d);
    w.key("r").value(rec.params.r);
    w.key("n").value(rec.params.n);
    w.end_object();
    w.key("check").value(rec.check_name);
    w.key("expected").value(rec.expected);
    w.key("actual").value(rec.actual);
    w.key("context").value(rec.context);
    w.end_object();
  }
  w.end_array();
  w.key("wall_ms").value(report.wall_ms);
  w.end_object();
  return std::move(w).str();
}

}  // namespace whitdim
