#include "whitdim/cover.hpp"

#include <numeric>

namespace whitdim {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
  std::int64_t m = x % n;
  return m < 0 ? m + n : m;
}

}  // namespace

CoverParams canonicalize(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t n) {
  if (r < 1) throw UsageError("canonicalize: rank r must be >= 1");
  if (n < 1) throw UsageError("canonicalize: degree n must be >= 1");
  return CoverParams{mod_reduce(c, n), mod_reduce(d, n), r, n};
}

DiagonalNumbers diagonal_numbers(const CoverParams& p) {
  std::int64_t d1 = std::gcd(p.c - p.d, p.n);
  // Full integer value of c + (r-1)d before the gcd; BigInt keeps it exact
  // for any rank.
  BigInt second = BigInt(p.c) + BigInt(p.r - 1) * p.d;
  if (second < 0) second = -second;
  std::int64_t d2 = static_cast<std::int64_t>(boost::multiprecision::gcd(second, BigInt(p.n)));
  return DiagonalNumbers{d1, d2};
}

CoverInvariants derive_invariants(const CoverParams& p) {
  CoverInvariants inv;
  auto diag = diagonal_numbers(p);
  inv.d1 = diag.d1;
  inv.d2 = diag.d2;
  inv.b = std::gcd(p.r, p.n);
  inv.nQ = p.n / inv.d1;
  // gcd(x, 0) = x, so d == 0 gives A = d2 directly.
  inv.A = std::gcd(inv.d2, p.d * (p.n / inv.d1));
  inv.M = lcm_pair(inv.A, p.n / inv.b);
  if ((inv.M * inv.b) % p.n != 0)
    throw InternalError("derive_invariants: kappa = M*b/n is not integral");
  inv.kappa = inv.M * inv.b / p.n;
  return inv;
}

}  // namespace whitdim
