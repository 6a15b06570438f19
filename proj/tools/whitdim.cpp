// Command-line front end: every capability of the core library behind one
// scriptable binary. All structured output is JSON on stdout; exit codes are
// 0 success, 1 verification mismatch, 2 usage error, 3 resource/cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "whitdim/formulas.hpp"
#include "whitdim/quantum.hpp"
#include "whitdim/tables.hpp"
#include "whitdim/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::int64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("WHITDIM_ENUM_CAP");
  if (raw == nullptr) return whitdim::kDefaultEnumerationCap;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1)
    throw whitdim::UsageError("WHITDIM_ENUM_CAP must be a positive integer");
  return static_cast<std::int64_t>(v);
}

struct ParamFlags {
  std::int64_t c = 0, d = 0, r = 1, n = 1;

  void attach(CLI::App& cmd) {
    cmd.add_option("--c", c, "diagonal entry of the bilinear form")->required();
    cmd.add_option("--d", d, "off-diagonal entry of the bilinear form")->required();
    cmd.add_option("--r", r, "rank of GL_r")->required();
    cmd.add_option("--n", n, "cover degree")->required();
  }

  whitdim::CoverParams canonical() const { return whitdim::canonicalize(c, d, r, n); }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw whitdim::UsageError("cannot open --out path: " + out_path);
  out << text;
}

std::vector<std::string> split_csv_list(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::size_t end = (comma == std::string::npos) ? list.size() : comma;
    if (end > start) out.push_back(list.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"whitdim: exact Whittaker-space dimensions for n-fold metaplectic covers of "
               "GL_r, with brute-force verification sweeps"};
  app.require_subcommand(1);
  std::int64_t cap = enumeration_cap_from_env();

  // dim
  auto* dim_cmd = app.add_subcommand("dim", "dimension report for one cover");
  ParamFlags dim_params;
  dim_params.attach(*dim_cmd);
  std::string method_name = "closed";
  dim_cmd->add_option("--method", method_name, "closed | coroot | brute")
      ->check(CLI::IsMember({"closed", "coroot", "brute"}));

  // lambda
  auto* lambda_cmd = app.add_subcommand("lambda", "list the lattice kernel elements");
  ParamFlags lambda_params;
  lambda_params.attach(*lambda_cmd);
  std::int64_t limit = -1;
  lambda_cmd->add_option("--limit", limit, "print at most this many vectors");

  // table
  auto* table_cmd = app.add_subcommand("table", "render an n x n grid of one quantity");
  std::int64_t table_r = 1, table_n = 1;
  std::string quantity_name, format_name = "csv", out_path;
  bool annotate = false;
  table_cmd->add_option("--r", table_r, "rank of GL_r")->required();
  table_cmd->add_option("--n", table_n, "cover degree")->required();
  table_cmd->add_option("--quantity", quantity_name,
                        "s_cochar | dim | kappa | m | d1 | d2 | a_min")
      ->required();
  table_cmd->add_option("--format", format_name, "ascii | csv | json");
  table_cmd->add_flag("--annotate", annotate, "attach diagonal annotations (json only)");
  table_cmd->add_option("--out", out_path, "write to this file instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the oracle-vs-formula sweep");
  std::int64_t n_max = 0, r_max = 0;
  std::string checks_list;
  int jobs = 1;
  verify_cmd->add_option("--n-max", n_max, "sweep n over [1, n-max]")->required();
  verify_cmd->add_option("--r-max", r_max, "sweep r over [1, r-max]")->required();
  verify_cmd->add_option("--checks", checks_list, "comma-separated subset of checks");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  // quantum
  auto* quantum_cmd = app.add_subcommand("quantum", "quantum-module report for one cover");
  ParamFlags quantum_params;
  quantum_params.attach(*quantum_cmd);
  bool quantum_brute = false;
  quantum_cmd->add_flag("--brute", quantum_brute,
                        "also run the lattice oracle and assert agreement");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "structural classification of one cover");
  ParamFlags classify_params;
  classify_params.attach(*classify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (dim_cmd->parsed()) {
    auto method = whitdim::parse_method(method_name);
    if (!method) throw whitdim::UsageError("unknown --method: " + method_name);
    auto report = whitdim::dimension_report(dim_params.canonical(), *method, cap);
    std::cout << whitdim::to_json(report) << "\n";
    return kExitOk;
  }

  if (lambda_cmd->parsed()) {
    auto p = lambda_params.canonical();
    std::int64_t total = 0;
    whitdim::for_each_lambda_fin(p, cap, [&](const whitdim::LatticeVector& v) {
      ++total;
      if (limit >= 0 && total > limit) return;
      for (std::size_t j = 0; j < v.entries.size(); ++j) {
        if (j > 0) std::cout << ',';
        std::cout << v.entries[j];
      }
      std::cout << '\n';
    });
    if (limit >= 0 && total > limit) std::cout << "# total: " << total << '\n';
    return kExitOk;
  }

  if (table_cmd->parsed()) {
    auto quantity = whitdim::parse_quantity(quantity_name);
    if (!quantity) throw whitdim::UsageError("unknown --quantity: " + quantity_name);
    auto format = whitdim::parse_format(format_name);
    if (!format) throw whitdim::UsageError("unknown --format: " + format_name);
    if (annotate && *format != whitdim::TableFormat::json)
      throw whitdim::UsageError("--annotate is supported for --format json only");
    auto grid = whitdim::build_table(table_r, table_n, *quantity);
    std::string text = annotate
                           ? whitdim::render_annotated_json(whitdim::annotate_diagonals(grid))
                           : whitdim::render(grid, *format);
    emit(text, out_path);
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    whitdim::SweepConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = n_max;
    cfg.r_min = 1;
    cfg.r_max = r_max;
    cfg.checks = split_csv_list(checks_list);
    cfg.enumeration_cap = cap;
    cfg.parallelism = jobs;
    auto report = whitdim::run_sweep(cfg);
    std::cout << whitdim::to_json(report) << "\n";
    if (!report.mismatches.empty()) return kExitMismatch;
    if (report.cells_skipped > 0) return kExitResource;
    return kExitOk;
  }

  if (quantum_cmd->parsed()) {
    auto report = whitdim::quantum_report(quantum_params.canonical(), quantum_brute, cap);
    std::cout << whitdim::to_json(report) << "\n";
    return kExitOk;
  }

  if (classify_cmd->parsed()) {
    auto report = whitdim::classify(classify_params.canonical());
    std::cout << whitdim::to_json(report) << "\n";
    return kExitOk;
  }

  throw whitdim::UsageError("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const whitdim::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const whitdim::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const whitdim::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
