#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "whitdim/errors.hpp"

namespace whitdim {

// Counts such as n^r and dim(W) overflow 64 bits at desk scale already
// (n = 20, r = 16), so every derived quantity is carried as a cpp_int.
using BigInt = boost::multiprecision::cpp_int;

// gcd with the convention gcd(x, 0) = |x|; gcd(0, 0) = 0.
std::int64_t gcd_pair(std::int64_t a, std::int64_t b);

// gcd of a nonempty list; all-zero input yields 0.
std::int64_t gcd_all(std::span<const std::int64_t> values);

// lcm of two positive integers. lcm(a,b) * gcd(a,b) == a*b.
std::int64_t lcm_pair(std::int64_t a, std::int64_t b);

// Exact prime factorization, primes in strictly increasing key order.
// factorize(1) is the empty map.
struct PrimeFactorization {
  std::map<std::int64_t, std::int64_t> factors;

  // Product of p^e over all entries; reconstructs the original integer.
  std::int64_t value() const;

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

bool is_prime(std::int64_t m);

// Trial division; intended for desk-scale inputs (<= ~10^9).
PrimeFactorization factorize(std::int64_t m);

// Largest e with p^e | m, or nullopt for m == 0 (0 is divisible by every
// power of p); callers clamp the infinite case to their modulus exponent.
std::optional<std::int64_t> valuation(std::int64_t m, std::int64_t p);

// valuation with the infinite marker (and any larger value) clamped to cap.
std::int64_t valuation_clamped(std::int64_t m, std::int64_t p, std::int64_t cap);
std::int64_t valuation_big_clamped(BigInt m, std::int64_t p, std::int64_t cap);

// base^exp for exp >= 0.
BigInt pow_big(const BigInt& base, std::int64_t exp);

// Exact nonnegative rational in lowest terms. Used for tuple-fraction
// results where a float comparison would weaken tests.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);

  std::string str() const;  // "num/den"

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace whitdim
