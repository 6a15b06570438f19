#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "whitdim/arithmetic.hpp"
#include "whitdim/cover.hpp"

namespace whitdim {

// Closed-form counts, each O(polylog n) arithmetic from the parameters alone.

// Solutions to the inhomogeneous system over all offsets a: n * d1^(r-1).
BigInt s_inhom_closed(const CoverParams& p);

// Least achievable positive offset: gcd(d2, d*n/d1) with gcd(x,0) = x.
std::int64_t a_min_closed(const CoverParams& p);

// |Lambda_fin| = d1^(r-1) * gcd(d2, d*n/d1).
BigInt s_cochar_closed_v1(const CoverParams& p);

// Solutions to the coroot system: d1^(r-1) * d2 * gcd(n/d1, n/d2, r).
BigInt s_coroot_closed(const CoverParams& p);

// gcd(n/d1, n/d2, b) / b in lowest terms, b = gcd(r, n).
Rational fr_b_closed(const CoverParams& p);

// M = lcm(gcd(d2, d*n/d1), n/gcd(n,r)); divides n.
std::int64_t m_closed(const CoverParams& p);

// M recomputed prime-by-prime as prod p^max(m - mu, min(s, t + m - s)),
// with s, t, mu the (clamped) valuations of c-d, d, r at each p | n.
// Agrees with m_closed on every input; the sweep checks this.
std::int64_t m_prime_closed(const CoverParams& p);

// |Lambda_fin| again, via the coroot route: s_coroot * M / n.
// Throws InternalError if the division is not exact.
BigInt s_cochar_closed_v2(const CoverParams& p);

// dim(W) = n^r / |Lambda_fin|; division is exact by construction.
BigInt whittaker_dimension(const CoverParams& p);

// Per-prime structure predicates (evaluated from the s/t/mu/tau valuations).
// Each is equivalent to a direct divisibility test; classify() verifies the
// equivalence and throws InternalError on any disagreement.
bool diag_product_prime_conditions(const CoverParams& p);  // S_cochar == d1^(r-1) * d2
bool quantum_dim_prime_conditions(const CoverParams& p);   // dim(W) == (n/d1)^r

enum class Method { closed_v1, closed_v2, brute };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

struct DimensionReport {
  CoverParams params;
  CoverInvariants inv;
  BigInt s_cochar;
  BigInt s_coroot;
  BigInt dim_whittaker;
  Rational fr_b;
  Method method = Method::closed_v1;
};

// Computes s_cochar by the requested route and cross-checks the others
// (closed routes always; the brute oracle only when method == brute).
DimensionReport dimension_report(const CoverParams& p, Method method,
                                 std::int64_t cap = 100'000'000);

std::string to_json(const DimensionReport& rep);

// Structural classification of a cover. Flags that assert an equality carry
// both the predicted and the directly computed value; the constructor has
// already checked they agree.
struct ClassificationReport {
  CoverParams params;
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
  BigInt s_cochar;
  BigInt dim_whittaker;

  bool d_zero_case = false;  // d == 0 mod n
  std::optional<BigInt> d_zero_predicted_dim;  // (n/gcd(c,n))^r when active

  bool c_zero_case = false;  // c == 0 mod n
  std::optional<BigInt> c_zero_predicted_dim;  // (n/gcd(d,n))^(r-1) * n/gcd((r-1)d,n)

  bool is_min_dimension = false;  // dim == 1, iff c == d == 0 mod n
  bool is_max_dimension = false;  // dim == n^r, iff d1 == d2 == 1

  bool coprime_rn_case = false;   // gcd(r,n) == 1; then s_cochar == d1^(r-1)*d2
  BigInt diag_product;            // d1^(r-1) * d2

  bool diag_product_case = false;  // s_cochar == diag_product (per-prime test)
  bool quantum_dim_match = false;  // dim == quantum_dim (per-prime test)
  BigInt quantum_dim;              // (n/d1)^r
};

ClassificationReport classify(const CoverParams& p);

std::string to_json(const ClassificationReport& rep);

}  // namespace whitdim
