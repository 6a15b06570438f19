#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "whitdim/formulas.hpp"
#include "whitdim/lattice.hpp"

using namespace whitdim;

namespace {

// Published s_cochar grid for r = 3, n = 10, with the (4,8) cell circled.
constexpr std::int64_t kGridR3N10[10][10] = {
    {1000, 2, 8, 2, 8, 250, 8, 2, 8, 2},
    {1, 100, 5, 4, 1, 4, 25, 20, 1, 4},
    {8, 2, 200, 2, 40, 2, 8, 50, 8, 10},
    {1, 20, 1, 100, 1, 4, 5, 4, 25, 4},
    {8, 2, 8, 10, 200, 2, 8, 2, 40, 50},
    {125, 4, 1, 4, 1, 500, 1, 4, 1, 4},
    {8, 50, 40, 2, 8, 2, 200, 10, 8, 2},
    {1, 4, 25, 4, 5, 4, 1, 100, 1, 20},
    {8, 10, 8, 50, 8, 2, 40, 2, 200, 2},
    {1, 4, 1, 20, 25, 4, 1, 4, 5, 100},
};

}  // namespace

TEST_CASE("s_inhom_closed") {
  CHECK(s_inhom_closed(canonicalize(1, 0, 2, 4)) == 4);
  CHECK(s_inhom_closed(canonicalize(0, 0, 2, 3)) == 9);
  CHECK(s_inhom_closed(canonicalize(2, 0, 3, 4)) == 16);
}

TEST_CASE("a_min_closed") {
  CHECK(a_min_closed(canonicalize(2, 0, 2, 4)) == 2);
  CHECK(a_min_closed(canonicalize(1, 0, 2, 7)) == 1);
  CHECK(a_min_closed(canonicalize(0, 0, 2, 4)) == 4);
}

TEST_CASE("s_cochar_closed_v1 on published entries") {
  CHECK(s_cochar_closed_v1(canonicalize(4, 8, 3, 10)) == 40);
  CHECK(s_cochar_closed_v1(canonicalize(4, 4, 4, 8)) == 2048);
  CHECK(s_cochar_closed_v1(canonicalize(1, 1, 2, 7)) == 7);
  for (std::int64_t c = 0; c < 10; ++c)
    for (std::int64_t d = 0; d < 10; ++d)
      CHECK(s_cochar_closed_v1(canonicalize(c, d, 3, 10)) == kGridR3N10[c][d]);
}

TEST_CASE("s_coroot_closed") {
  CHECK(s_coroot_closed(canonicalize(1, 0, 2, 2)) == 2);
  CHECK(s_coroot_closed(canonicalize(0, 0, 2, 3)) == 9);
  CHECK(s_coroot_closed(canonicalize(1, 0, 3, 10)) == 1);
}

TEST_CASE("fr_b_closed") {
  CHECK(fr_b_closed(canonicalize(1, 1, 2, 2)) == Rational{1, 2});
  CHECK(fr_b_closed(canonicalize(1, 0, 3, 10)) == Rational{1, 1});
  CHECK(fr_b_closed(canonicalize(0, 0, 2, 4)) == Rational{1, 2});
}

TEST_CASE("m_closed") {
  CHECK(m_closed(canonicalize(0, 0, 2, 8)) == 8);
  CHECK(m_closed(canonicalize(1, 0, 4, 8)) == 2);
  CHECK(m_closed(canonicalize(0, 4, 8, 8)) == 4);
}

TEST_CASE("m_prime_closed") {
  CHECK(m_prime_closed(canonicalize(0, 4, 4, 8)) == 4);
  CHECK(m_prime_closed(canonicalize(1, 0, 2, 7)) == 7);
  CHECK(m_prime_closed(canonicalize(0, 0, 6, 6)) == 6);
}

TEST_CASE("s_cochar_closed_v2") {
  CHECK(s_cochar_closed_v2(canonicalize(1, 0, 2, 2)) == 1);
  CHECK(s_cochar_closed_v2(canonicalize(4, 8, 3, 10)) == 40);
  CHECK(s_cochar_closed_v2(canonicalize(0, 0, 3, 9)) == 729);
}

TEST_CASE("whittaker_dimension") {
  CHECK(whittaker_dimension(canonicalize(1, 0, 2, 7)) == 49);
  CHECK(whittaker_dimension(canonicalize(0, 0, 3, 10)) == 1);
  CHECK(whittaker_dimension(canonicalize(0, 5, 3, 10)) == 4);
  // Big-integer path: the full space at a rank that overflows 64 bits.
  CHECK(whittaker_dimension(canonicalize(1, 0, 16, 20)) == BigInt("6553600000000000000000"));
}

TEST_CASE("dimension product identity: dim * s_cochar == n^r") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          auto p = canonicalize(c, d, r, n);
          CHECK(whittaker_dimension(p) * s_cochar_closed_v1(p) == pow_big(n, r));
        }
      }
    }
  }
}

TEST_CASE("the two closed forms agree everywhere in range") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          auto p = canonicalize(c, d, r, n);
          CHECK(s_cochar_closed_v1(p) == s_cochar_closed_v2(p));
          CHECK(m_closed(p) == m_prime_closed(p));
        }
      }
    }
  }
}

TEST_CASE("closed forms match the brute oracle on a small sweep") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          auto p = canonicalize(c, d, r, n);
          CHECK(BigInt(count_lambda_fin(p)) == s_cochar_closed_v1(p));
          CHECK(BigInt(count_coroot_solutions(p)) == s_coroot_closed(p));
          CHECK(brute_a_min(p) == a_min_closed(p));
          CHECK(BigInt(count_inhom_solutions(p)) == s_inhom_closed(p));
          CHECK(brute_fr_b(p) == fr_b_closed(p));
          auto diag = diagonal_numbers(p);
          CHECK(BigInt(count_sl_lambda(p)) == pow_big(diag.d1, r - 1));
        }
      }
    }
  }
}

TEST_CASE("kappa is multiplicative over coprime factors") {
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t n1 : {2, 3, 4, 5, 8, 9}) {
      for (std::int64_t n2 : {3, 5, 7, 9}) {
        if (std::gcd(n1, n2) != 1) continue;
        std::int64_t n = n1 * n2;
        for (std::int64_t c = 0; c < n; ++c) {
          for (std::int64_t d = 0; d < n; ++d) {
            std::int64_t whole = derive_invariants(canonicalize(c, d, r, n)).kappa;
            std::int64_t part1 = derive_invariants(canonicalize(c, d, r, n1)).kappa;
            std::int64_t part2 = derive_invariants(canonicalize(c, d, r, n2)).kappa;
            CHECK(whole == part1 * part2);
          }
        }
      }
    }
  }
}

TEST_CASE("methods and reports") {
  CHECK(parse_method("closed") == Method::closed_v1);
  CHECK(parse_method("coroot") == Method::closed_v2);
  CHECK(parse_method("brute") == Method::brute);
  CHECK(!parse_method("nope").has_value());

  auto p = canonicalize(4, 8, 3, 10);
  for (Method m : {Method::closed_v1, Method::closed_v2, Method::brute}) {
    auto rep = dimension_report(p, m);
    CHECK(rep.s_cochar == 40);
    CHECK(rep.dim_whittaker == 25);
    CHECK(rep.s_coroot * BigInt(rep.inv.M) == rep.s_cochar * BigInt(p.n));
    CHECK(rep.method == m);
  }

  std::string json = to_json(dimension_report(p, Method::closed_v1));
  CHECK(json ==
        R"({"params":{"c":4,"d":8,"r":3,"n":10},"method":"closed_v1","d1":2,"d2":10,)"
        R"("b":1,"A":10,"M":10,"kappa":1,"s_cochar":40,"s_coroot":40,"fr_b":"1/1",)"
        R"("dim_whittaker":25})");
}

TEST_CASE("classification flags on the named cases") {
  auto rep = classify(canonicalize(0, 0, 5, 6));
  CHECK(rep.is_min_dimension);
  CHECK(rep.dim_whittaker == 1);

  rep = classify(canonicalize(1, 0, 3, 10));
  CHECK(rep.is_max_dimension);
  CHECK(rep.dim_whittaker == 1000);

  rep = classify(canonicalize(2, 1, 3, 10));
  CHECK(rep.coprime_rn_case);
  CHECK(rep.s_cochar == rep.diag_product);

  rep = classify(canonicalize(3, 0, 2, 9));
  CHECK(rep.d_zero_case);
  REQUIRE(rep.d_zero_predicted_dim.has_value());
  CHECK(*rep.d_zero_predicted_dim == 9);
  CHECK(rep.dim_whittaker == 9);

  rep = classify(canonicalize(0, 2, 3, 8));
  CHECK(rep.c_zero_case);
  REQUIRE(rep.c_zero_predicted_dim.has_value());
  CHECK(*rep.c_zero_predicted_dim == rep.dim_whittaker);
}

TEST_CASE("classification flags agree with direct checks across a sweep") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = 1; r <= 5; ++r) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          auto p = canonicalize(c, d, r, n);
          // classify() itself throws InternalError if any prime-condition
          // flag disagrees with its direct check.
          auto rep = classify(p);
          CHECK(rep.is_min_dimension == (rep.dim_whittaker == 1));
          CHECK(rep.is_max_dimension == (rep.dim_whittaker == pow_big(n, r)));
          CHECK(rep.diag_product_case == (rep.s_cochar == rep.diag_product));
          CHECK(rep.quantum_dim_match == (rep.dim_whittaker == rep.quantum_dim));
        }
      }
    }
  }
}
