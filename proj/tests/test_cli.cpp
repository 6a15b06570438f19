// End-to-end tests of the whitdim binary: flag handling, exit codes,
// output shapes, and the WHITDIM_ENUM_CAP override.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + " '" + WHITDIM_BIN + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("dim subcommand") {
  auto res = run_cli("dim --c 1 --d 0 --r 3 --n 10");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"dim_whittaker\":1000") != std::string::npos);
  CHECK(res.out.find("\"method\":\"closed_v1\"") != std::string::npos);

  res = run_cli("dim --c 0 --d 0 --r 2 --n 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"dim_whittaker\":1") != std::string::npos);

  res = run_cli("dim --c 4 --d 8 --r 3 --n 10 --method brute");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"s_cochar\":40") != std::string::npos);
  CHECK(res.out.find("\"method\":\"brute\"") != std::string::npos);

  res = run_cli("dim --c 4 --d 8 --r 3 --n 10 --method coroot");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"s_cochar\":40") != std::string::npos);
  CHECK(res.out.find("\"method\":\"closed_v2\"") != std::string::npos);
}

TEST_CASE("negative parameters are canonicalized and echoed") {
  auto res = run_cli("dim --c -1 --d -13 --r 2 --n 7");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"params\":{\"c\":6,\"d\":1,\"r\":2,\"n\":7}") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  auto a = run_cli("dim --c 3 --d 5 --r 4 --n 12");
  auto b = run_cli("dim --c 3 --d 5 --r 4 --n 12");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto t1 = run_cli("table --r 3 --n 10 --quantity s_cochar --format json");
  auto t2 = run_cli("table --r 3 --n 10 --quantity s_cochar --format json");
  CHECK(t1.out == t2.out);
}

TEST_CASE("lambda subcommand") {
  auto res = run_cli("lambda --c 1 --d 3 --r 2 --n 4");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0,0\n1,1\n2,2\n3,3\n");

  res = run_cli("lambda --c 1 --d 0 --r 2 --n 7");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0,0\n");

  res = run_cli("lambda --c 0 --d 0 --r 1 --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0\n1\n2\n");

  res = run_cli("lambda --c 1 --d 3 --r 2 --n 4 --limit 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0,0\n1,1\n# total: 4\n");

  res = run_cli("lambda --c 1 --d 3 --r 2 --n 4 --limit 9");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0,0\n1,1\n2,2\n3,3\n");
}

TEST_CASE("table subcommand") {
  auto res = run_cli("table --r 3 --n 10 --quantity s_cochar --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out.rfind("c\\d,0,1,2,3,4,5,6,7,8,9\n0,1000,2,8,2,8,250,8,2,8,2\n", 0) == 0);

  res = run_cli("table --r 1 --n 1 --quantity dim --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "c\\d,0\n0,1\n");

  res = run_cli("table --r 8 --n 8 --quantity kappa --format ascii");
  CHECK(res.exit_code == 0);
  CHECK(res.out.rfind("8 1 2 1 4 1 2 1\n1 1 1 2 1 2 1 2\n", 0) == 0);

  res = run_cli("table --r 2 --n 4 --quantity s_cochar --format json --annotate");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"d1\":[[4,1,2,1]") != std::string::npos);
  CHECK(res.out.find("\"diagonals_slope_minus1\"") != std::string::npos);

  res = run_cli("table --r 2 --n 4 --quantity s_cochar --format csv --annotate");
  CHECK(res.exit_code == 2);

  res = run_cli("table --r 2 --n 4 --quantity bogus --format csv");
  CHECK(res.exit_code == 2);

  res = run_cli("table --r 2 --n 4 --quantity dim --format bogus");
  CHECK(res.exit_code == 2);
}

TEST_CASE("table --out writes the same bytes to a file") {
  std::string path = "/tmp/whitdim_table_test.csv";
  std::remove(path.c_str());
  auto res = run_cli("table --r 2 --n 7 --quantity s_cochar --format csv --out " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto direct = run_cli("table --r 2 --n 7 --quantity s_cochar --format csv");
  CHECK(contents == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
  auto res = run_cli("verify --n-max 2 --r-max 1");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"cells_checked\":5") != std::string::npos);
  CHECK(res.out.find("\"mismatches\":[]") != std::string::npos);

  res = run_cli("verify --n-max 8 --r-max 4 --checks v1_equals_v2");
  CHECK(res.exit_code == 0);

  res = run_cli("verify --n-max 4 --r-max 2 --checks v1_perturbed --jobs 2");
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("\"check\":\"v1_perturbed\"") != std::string::npos);

  res = run_cli("verify --n-max 4 --r-max 4", "WHITDIM_ENUM_CAP=100");
  CHECK(res.exit_code == 3);
  CHECK(res.out.find("\"cells_skipped\":16") != std::string::npos);

  res = run_cli("verify --n-max 3 --r-max 2 --checks bogus_check");
  CHECK(res.exit_code == 2);
}

TEST_CASE("quantum subcommand") {
  auto res = run_cli("quantum --c 1 --d 3 --r 2 --n 4");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"well_defined_closed\":false") != std::string::npos);
  CHECK(res.out.find("\"well_defined_brute\":null") != std::string::npos);

  res = run_cli("quantum --c 1 --d 3 --r 2 --n 4 --brute");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"well_defined_brute\":false") != std::string::npos);

  res = run_cli("quantum --c 0 --d 0 --r 3 --n 9");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"well_defined_closed\":true") != std::string::npos);
  CHECK(res.out.find("\"iso_class\":\"min_dim_iso\"") != std::string::npos);

  res = run_cli("quantum --c 1 --d 0 --r 2 --n 7");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"iso_class\":\"max_dim_iso\"") != std::string::npos);
  CHECK(res.out.find("\"module_dim\":49") != std::string::npos);
}

TEST_CASE("classify subcommand") {
  auto res = run_cli("classify --c 2 --d 1 --r 3 --n 10");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"coprime_rn_case\":{\"holds\":true") != std::string::npos);

  res = run_cli("classify --c 0 --d 0 --r 4 --n 6");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"is_min_dimension\":true") != std::string::npos);

  res = run_cli("classify --c 3 --d 0 --r 2 --n 9");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"d_zero_case\":{\"holds\":true,\"predicted_dim\":9}") !=
        std::string::npos);
  CHECK(res.out.find("\"dim_whittaker\":9") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("dim --c 1 --d 0 --r 2").exit_code == 2);        // missing --n
  CHECK(run_cli("dim --c 1 --d 0 --r 2 --n 7 --bogus 1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("dim --c 1 --d 0 --r 0 --n 7").exit_code == 2);  // invalid rank
  CHECK(run_cli("dim --c 1 --d 0 --r 2 --n 7 --method sideways").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                             // no subcommand
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cap overruns exit with code 3") {
  auto res = run_cli("lambda --c 0 --d 0 --r 4 --n 10", "WHITDIM_ENUM_CAP=10");
  CHECK(res.exit_code == 3);

  res = run_cli("dim --c 0 --d 0 --r 4 --n 10 --method brute", "WHITDIM_ENUM_CAP=10");
  CHECK(res.exit_code == 3);

  // Closed methods never enumerate, so the cap does not bind them.
  res = run_cli("dim --c 0 --d 0 --r 4 --n 10", "WHITDIM_ENUM_CAP=10");
  CHECK(res.exit_code == 0);

  res = run_cli("dim --c 1 --d 0 --r 2 --n 4", "WHITDIM_ENUM_CAP=banana");
  CHECK(res.exit_code == 2);
}
