#pragma once

#include <cstdint>

#include "whitdim/arithmetic.hpp"

namespace whitdim {

// An n-fold metaplectic cover of GL_r, identified by the bilinear form
// with c on the diagonal and d off it. c and d are kept canonical in [0, n).
struct CoverParams {
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t r = 1;
  std::int64_t n = 1;

  friend bool operator==(const CoverParams&, const CoverParams&) = default;
};

// Reduces arbitrary integer c, d mod n. Throws UsageError for r < 1 or n < 1.
CoverParams canonicalize(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t n);

struct DiagonalNumbers {
  std::int64_t d1 = 1;  // gcd(c - d, n)
  std::int64_t d2 = 1;  // gcd(c + (r-1)d, n)

  friend bool operator==(const DiagonalNumbers&, const DiagonalNumbers&) = default;
};

// c + (r-1)d is evaluated in full integer arithmetic before the gcd with n.
DiagonalNumbers diagonal_numbers(const CoverParams& p);

// Scalar invariants of a cover. All of d1, d2, b, A, M divide n.
struct CoverInvariants {
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
  std::int64_t b = 1;      // gcd(r, n)
  std::int64_t nQ = 1;     // n / d1
  std::int64_t A = 1;      // gcd(d2, d*n/d1), least achievable positive offset
  std::int64_t M = 1;      // lcm(A, n/b)
  std::int64_t kappa = 1;  // M*b/n, exactly

  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

CoverInvariants derive_invariants(const CoverParams& p);

}  // namespace whitdim
