#include "whitdim/arithmetic.hpp"

#include <cstdlib>
#include <numeric>

namespace whitdim {

std::int64_t gcd_pair(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t gcd_all(std::span<const std::int64_t> values) {
  if (values.empty()) throw UsageError("gcd_all: empty list");
  std::int64_t g = 0;
  for (std::int64_t v : values) g = std::gcd(g, v);
  return g;
}

std::int64_t lcm_pair(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw UsageError("lcm_pair: arguments must be positive");
  return a / std::gcd(a, b) * b;
}

std::int64_t PrimeFactorization::value() const {
  std::int64_t m = 1;
  for (const auto& [p, e] : factors)
    for (std::int64_t i = 0; i < e; ++i) m *= p;
  return m;
}

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  if (m % 3 == 0) return m == 3;
  for (std::int64_t f = 5; f * f <= m; f += 6) {
    if (m % f == 0 || m % (f + 2) == 0) return false;
  }
  return true;
}

PrimeFactorization factorize(std::int64_t m) {
  if (m < 1) throw UsageError("factorize: input must be positive");
  PrimeFactorization out;
  auto strip = [&](std::int64_t p) {
    std::int64_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace(p, e);
  };
  strip(2);
  strip(3);
  for (std::int64_t f = 5; f * f <= m; f += 6) {
    strip(f);
    strip(f + 2);
  }
  if (m > 1) out.factors.emplace(m, 1);
  return out;
}

std::optional<std::int64_t> valuation(std::int64_t m, std::int64_t p) {
  if (!is_prime(p)) throw UsageError("valuation: p must be prime");
  if (m == 0) return std::nullopt;
  std::int64_t v = 0;
  m = std::abs(m);
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::int64_t valuation_clamped(std::int64_t m, std::int64_t p, std::int64_t cap) {
  auto v = valuation(m, p);
  if (!v) return cap;
  return std::min(*v, cap);
}

std::int64_t valuation_big_clamped(BigInt m, std::int64_t p, std::int64_t cap) {
  if (!is_prime(p)) throw UsageError("valuation: p must be prime");
  if (m == 0) return cap;
  if (m < 0) m = -m;
  std::int64_t v = 0;
  while (v < cap && m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

BigInt pow_big(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw UsageError("pow_big: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  std::int64_t e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw UsageError("Rational: denominator must be positive");
  if (num < 0) throw UsageError("Rational: negative numerator unsupported");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace whitdim
