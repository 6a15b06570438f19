#include "whitdim/lattice.hpp"

#include <numeric>
#include <string>

namespace whitdim {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
  std::int64_t m = x % n;
  return m < 0 ? m + n : m;
}

void require_context(const CoverParams& p, const LatticeVector& x, const char* op) {
  if (x.rank() != p.r || x.modulus != p.n)
    throw UsageError(std::string(op) + ": vector context does not match cover parameters");
}

void require_within_cap(const CoverParams& p, std::int64_t cap) {
  // p.r > cap guards the per-vector storage; candidates are the real limit.
  if (p.r > cap || pow_big(p.n, p.r) > cap)
    throw ResourceError("enumeration over (Z/" + std::to_string(p.n) + "Z)^" +
                        std::to_string(p.r) + " exceeds the cap of " + std::to_string(cap) +
                        " candidate vectors");
}

// Visits every x in [0,n)^r in lexicographic order (component 0 most
// significant), passing the running component sum alongside.
template <typename Fn>
void for_each_vector(std::int64_t r, std::int64_t n, Fn&& fn) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(r), 0);
  std::int64_t sum = 0;
  for (;;) {
    fn(static_cast<const std::vector<std::int64_t>&>(x), sum);
    std::int64_t i = r - 1;
    for (; i >= 0; --i) {
      if (x[static_cast<std::size_t>(i)] + 1 < n) {
        ++x[static_cast<std::size_t>(i)];
        ++sum;
        break;
      }
      sum -= x[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
}

// Row i of B_{c,d} * x is c*x_i + d*(sum - x_i); everything stays below n^2
// thanks to the 128-bit intermediate in mulmod.
std::int64_t row_value(const CoverParams& p, std::int64_t xi, std::int64_t sum) {
  std::int64_t rest = mod_reduce(sum - xi, p.n);
  return mod_reduce(mulmod(p.c, xi, p.n) + mulmod(p.d, rest, p.n), p.n);
}

bool all_rows_zero(const CoverParams& p, const std::vector<std::int64_t>& x, std::int64_t sum) {
  for (std::int64_t xi : x)
    if (row_value(p, xi, sum) != 0) return false;
  return true;
}

}  // namespace

LatticeVector LatticeVector::reduced(std::vector<std::int64_t> raw, std::int64_t modulus) {
  if (modulus < 1) throw UsageError("LatticeVector: modulus must be >= 1");
  for (auto& e : raw) e = mod_reduce(e, modulus);
  return LatticeVector{std::move(raw), modulus};
}

LatticeVector bilinear_apply(const CoverParams& p, const LatticeVector& x) {
  require_context(p, x, "bilinear_apply");
  std::int64_t sum = 0;
  for (std::int64_t e : x.entries) sum = mod_reduce(sum + e, p.n);
  LatticeVector out;
  out.modulus = p.n;
  out.entries.reserve(x.entries.size());
  for (std::int64_t e : x.entries) out.entries.push_back(row_value(p, e, sum));
  return out;
}

bool is_inhom_solution(const CoverParams& p, const LatticeVector& x, std::int64_t a) {
  require_context(p, x, "is_inhom_solution");
  if (a < 0 || a >= p.n) throw UsageError("is_inhom_solution: offset a must lie in [0, n)");
  std::int64_t sum = 0;
  for (std::int64_t e : x.entries) sum += e;
  for (std::int64_t e : x.entries)
    if (row_value(p, e, sum) != a) return false;
  return true;
}

bool is_coroot_solution(const CoverParams& p, const LatticeVector& x) {
  require_context(p, x, "is_coroot_solution");
  std::int64_t cd = mod_reduce(p.c - p.d, p.n);
  std::int64_t crd = mod_reduce(p.c + mulmod(mod_reduce(p.r - 1, p.n), p.d, p.n), p.n);
  std::int64_t last = x.entries.back();
  std::int64_t sum = 0;
  for (std::int64_t e : x.entries) sum = mod_reduce(sum + e, p.n);
  for (std::size_t i = 0; i + 1 < x.entries.size(); ++i) {
    if (mulmod(cd, mod_reduce(x.entries[i] - last, p.n), p.n) != 0) return false;
  }
  return mulmod(crd, sum, p.n) == 0;
}

void for_each_lambda_fin(const CoverParams& p, std::int64_t cap,
                         const std::function<void(const LatticeVector&)>& fn) {
  require_within_cap(p, cap);
  LatticeVector scratch;
  scratch.modulus = p.n;
  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    if (all_rows_zero(p, x, sum)) {
      scratch.entries = x;
      fn(scratch);
    }
  });
}

std::vector<LatticeVector> enumerate_lambda_fin(const CoverParams& p, std::int64_t cap) {
  std::vector<LatticeVector> out;
  for_each_lambda_fin(p, cap, [&](const LatticeVector& v) { out.push_back(v); });
  return out;
}

std::int64_t count_lambda_fin(const CoverParams& p, std::int64_t cap) {
  require_within_cap(p, cap);
  std::int64_t count = 0;
  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    if (all_rows_zero(p, x, sum)) ++count;
  });
  return count;
}

std::set<std::int64_t> achievable_a_values(const CoverParams& p, std::int64_t cap) {
  require_within_cap(p, cap);
  std::set<std::int64_t> out;
  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    std::int64_t a = row_value(p, x[0], sum);
    for (std::size_t i = 1; i < x.size(); ++i)
      if (row_value(p, x[i], sum) != a) return;
    out.insert(a);
  });
  return out;
}

std::int64_t brute_a_min(const CoverParams& p, std::int64_t cap) {
  auto achievable = achievable_a_values(p, cap);
  for (std::int64_t a : achievable)
    if (a > 0) return a;
  // Only a == 0 achievable: x = 0 still solves a == n == 0, so report n.
  return p.n;
}

std::int64_t count_inhom_solutions(const CoverParams& p, std::int64_t cap) {
  require_within_cap(p, cap);
  std::int64_t count = 0;
  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    std::int64_t a = row_value(p, x[0], sum);
    for (std::size_t i = 1; i < x.size(); ++i)
      if (row_value(p, x[i], sum) != a) return;
    ++count;
  });
  return count;
}

std::int64_t count_coroot_solutions(const CoverParams& p, std::int64_t cap) {
  require_within_cap(p, cap);
  std::int64_t cd = mod_reduce(p.c - p.d, p.n);
  std::int64_t crd = mod_reduce(p.c + mulmod(mod_reduce(p.r - 1, p.n), p.d, p.n), p.n);
  std::int64_t count = 0;
  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    std::int64_t last = x.back();
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (mulmod(cd, mod_reduce(x[i] - last, p.n), p.n) != 0) return;
    if (mulmod(crd, mod_reduce(sum, p.n), p.n) == 0) ++count;
  });
  return count;
}

std::int64_t count_sl_lambda(const CoverParams& p, std::int64_t cap) {
  require_within_cap(p, cap);
  std::int64_t count = 0;
  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    if (sum % p.n != 0) return;
    if (all_rows_zero(p, x, sum)) ++count;
  });
  return count;
}

Rational brute_fr_b(const CoverParams& p, std::int64_t cap) {
  auto diag = diagonal_numbers(p);
  std::int64_t b = std::gcd(p.r, p.n);
  BigInt tuples = pow_big(diag.d1, p.r - 1) * diag.d2;
  if (tuples > cap)
    throw ResourceError("tuple enumeration of size " + tuples.str() +
                        " exceeds the cap of " + std::to_string(cap) + " candidate vectors");

  std::int64_t y_step = p.n / diag.d1;
  std::int64_t z_step = p.n / diag.d2;
  // Mixed-radix odometer: r-1 digits of radix d1 for the y_i, one digit of
  // radix d2 for z. Tracks sum(y_i) mod b incrementally.
  std::vector<std::int64_t> digit(static_cast<std::size_t>(p.r), 0);
  std::int64_t matches = 0;
  std::int64_t total = 0;
  for (;;) {
    std::int64_t y_sum = 0;
    for (std::size_t i = 0; i + 1 < digit.size(); ++i) y_sum += digit[i] * y_step;
    std::int64_t z = digit.back() * z_step;
    ++total;
    if (mod_reduce(z - y_sum, b) == 0) ++matches;

    std::int64_t i = p.r - 1;
    for (; i >= 0; --i) {
      std::int64_t radix = (i == p.r - 1) ? diag.d2 : diag.d1;
      if (digit[static_cast<std::size_t>(i)] + 1 < radix) {
        ++digit[static_cast<std::size_t>(i)];
        break;
      }
      digit[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return Rational::reduced(matches, total);
}

LatticeScan scan_lattice(const CoverParams& p, std::int64_t cap) {
  require_within_cap(p, cap);
  LatticeScan scan;
  scan.inhom_count_by_a.assign(static_cast<std::size_t>(p.n), 0);

  std::int64_t cd = mod_reduce(p.c - p.d, p.n);
  std::int64_t crd = mod_reduce(p.c + mulmod(mod_reduce(p.r - 1, p.n), p.d, p.n), p.n);
  std::int64_t nq = p.n / std::gcd(p.c - p.d, p.n);

  for_each_vector(p.r, p.n, [&](const std::vector<std::int64_t>& x, std::int64_t sum) {
    std::int64_t a = row_value(p, x[0], sum);
    bool constant_rows = true;
    bool zero_rows = (a == 0);
    for (std::size_t i = 1; i < x.size() && constant_rows; ++i) {
      if (row_value(p, x[i], sum) != a) constant_rows = false;
    }
    if (constant_rows) {
      ++scan.inhom_count;
      ++scan.inhom_count_by_a[static_cast<std::size_t>(a)];
      if (zero_rows) {
        ++scan.lambda_count;
        if (sum % p.n == 0) ++scan.sl_count;
        if (scan.lambda_all_zero_mod_nq) {
          for (std::int64_t xi : x) {
            if (xi % nq != 0) {
              scan.lambda_all_zero_mod_nq = false;
              break;
            }
          }
        }
      }
    }

    std::int64_t last = x.back();
    bool coroot = true;
    for (std::size_t i = 0; i + 1 < x.size() && coroot; ++i)
      if (mulmod(cd, mod_reduce(x[i] - last, p.n), p.n) != 0) coroot = false;
    if (coroot && mulmod(crd, mod_reduce(sum, p.n), p.n) == 0) ++scan.coroot_count;
  });
  return scan;
}

}  // namespace whitdim
