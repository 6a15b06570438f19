#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "whitdim/arithmetic.hpp"
#include "whitdim/cover.hpp"

namespace whitdim {

// An element of (Z/nZ)^r; the rank is entries.size().
struct LatticeVector {
  std::vector<std::int64_t> entries;
  std::int64_t modulus = 1;

  std::int64_t rank() const { return static_cast<std::int64_t>(entries.size()); }

  // Builds a vector with each raw entry reduced into [0, modulus).
  static LatticeVector reduced(std::vector<std::int64_t> raw, std::int64_t modulus);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

inline constexpr std::int64_t kDefaultEnumerationCap = 100'000'000;

// B_{c,d} * x with every row reduced mod n.
// Throws UsageError when x's (rank, modulus) do not match p.
LatticeVector bilinear_apply(const CoverParams& p, const LatticeVector& x);

// True iff B_{c,d} * x == a * (1,...,1) mod n. Requires 0 <= a < n.
bool is_inhom_solution(const CoverParams& p, const LatticeVector& x, std::int64_t a);

// True iff (c-d)(x_i - x_r) == 0 mod n for all i < r and
// (c + (r-1)d)(x_1 + ... + x_r) == 0 mod n.
bool is_coroot_solution(const CoverParams& p, const LatticeVector& x);

// The brute-force oracles below exhaustively scan (Z/nZ)^r in lexicographic
// order (component 0 most significant) and never consult the closed forms.
// All throw ResourceError naming the cap when n^r exceeds it. Counting
// variants stream with O(r) memory.

std::vector<LatticeVector> enumerate_lambda_fin(const CoverParams& p,
                                                std::int64_t cap = kDefaultEnumerationCap);
std::int64_t count_lambda_fin(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

// Streams Lambda_fin in the same order without materializing it.
void for_each_lambda_fin(const CoverParams& p, std::int64_t cap,
                         const std::function<void(const LatticeVector&)>& fn);

// {a in [0,n) : the inhomogeneous system B*x == a*1 has a solution}.
std::set<std::int64_t> achievable_a_values(const CoverParams& p,
                                           std::int64_t cap = kDefaultEnumerationCap);

// Least positive achievable a, or n when only a == 0 is achievable.
std::int64_t brute_a_min(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

// Total (x, a) solution pairs over all a in [0, n).
std::int64_t count_inhom_solutions(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

std::int64_t count_coroot_solutions(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

// Elements of Lambda_fin with x_1 + ... + x_r == 0 mod n.
std::int64_t count_sl_lambda(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

// Enumerates the tuple space S_{Y,Z} (each y_i a multiple of n/d1 in [0,n),
// z a multiple of n/d2 in [0,n)) and returns the exact fraction of tuples
// with z - sum(y_i) == 0 mod b, in lowest terms.
Rational brute_fr_b(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

// One streaming pass producing every per-cell oracle quantity at once; the
// sweep harness uses this to amortize the n^r scan across its checks.
struct LatticeScan {
  std::int64_t lambda_count = 0;
  std::int64_t coroot_count = 0;
  std::int64_t inhom_count = 0;
  std::int64_t sl_count = 0;
  std::vector<std::int64_t> inhom_count_by_a;  // size n
  // True iff every Lambda_fin element is componentwise divisible by n/d1,
  // i.e. the coset map to (Z/(n/d1)Z)^r ignores the representative.
  bool lambda_all_zero_mod_nq = true;
};

LatticeScan scan_lattice(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

}  // namespace whitdim
