#include "whitdim/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "whitdim/json_writer.hpp"
#include "whitdim/lattice.hpp"

namespace whitdim {

namespace {

// Per-prime valuation data for the structure predicates: at each p | n with
// n-exponent m, s = v_p(c-d), t = v_p(d), mu = min(m, v_p(r)), all clamped
// to [0, m]; tau = extra powers of p in c + (r-1)d beyond s, clamped to
// [0, m - s]. Valuations of 0 clamp to the top of their range.
struct PrimeLocal {
  std::int64_t p = 2;
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t mu = 0;
  std::int64_t tau = 0;
};

std::vector<PrimeLocal> prime_locals(const CoverParams& p) {
  std::vector<PrimeLocal> out;
  BigInt second = BigInt(p.c) + BigInt(p.r - 1) * p.d;
  for (const auto& [prime, m] : factorize(p.n).factors) {
    PrimeLocal loc;
    loc.p = prime;
    loc.m = m;
    loc.s = valuation_clamped(p.c - p.d, prime, m);
    loc.t = valuation_clamped(p.d, prime, m);
    loc.mu = valuation_clamped(p.r, prime, m);
    std::int64_t v = valuation_big_clamped(second, prime, m);
    loc.tau = std::clamp<std::int64_t>(v - loc.s, 0, m - loc.s);
    out.push_back(loc);
  }
  return out;
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt diag_product_value(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  return pow_big(diag.d1, p.r - 1) * diag.d2;
}

}  // namespace

BigInt s_inhom_closed(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  return BigInt(p.n) * pow_big(diag.d1, p.r - 1);
}

std::int64_t a_min_closed(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  return std::gcd(diag.d2, p.d * (p.n / diag.d1));
}

BigInt s_cochar_closed_v1(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  return pow_big(diag.d1, p.r - 1) * a_min_closed(p);
}

BigInt s_coroot_closed(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  std::int64_t g = std::gcd(std::gcd(p.n / diag.d1, p.n / diag.d2), p.r);
  return pow_big(diag.d1, p.r - 1) * diag.d2 * g;
}

Rational fr_b_closed(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  std::int64_t b = std::gcd(p.r, p.n);
  std::int64_t g = std::gcd(std::gcd(p.n / diag.d1, p.n / diag.d2), b);
  return Rational::reduced(g, b);
}

std::int64_t m_closed(const CoverParams& p) {
  return lcm_pair(a_min_closed(p), p.n / std::gcd(p.r, p.n));
}

std::int64_t m_prime_closed(const CoverParams& p) {
  std::int64_t m = 1;
  for (const auto& loc : prime_locals(p)) {
    std::int64_t expo = std::max(loc.m - loc.mu, std::min(loc.s, loc.t + loc.m - loc.s));
    m *= ipow(loc.p, expo);
  }
  return m;
}

BigInt s_cochar_closed_v2(const CoverParams& p) {
  BigInt product = s_coroot_closed(p) * m_closed(p);
  if (product % p.n != 0)
    throw InternalError("s_cochar_closed_v2: s_coroot * M is not divisible by n");
  return product / p.n;
}

BigInt whittaker_dimension(const CoverParams& p) {
  BigInt total = pow_big(p.n, p.r);
  BigInt s = s_cochar_closed_v1(p);
  if (total % s != 0)
    throw InternalError("whittaker_dimension: n^r is not divisible by the solution count");
  return total / s;
}

bool diag_product_prime_conditions(const CoverParams& p) {
  for (const auto& loc : prime_locals(p)) {
    bool ok;
    if (loc.s < loc.t + loc.mu) {
      ok = 2 * loc.s <= loc.t + loc.m;
    } else if (loc.s > loc.t + loc.mu) {
      ok = loc.s <= loc.m - loc.mu;
    } else {
      ok = 2 * loc.s + loc.tau <= loc.t + loc.m;
    }
    if (!ok) return false;
  }
  return true;
}

bool quantum_dim_prime_conditions(const CoverParams& p) {
  for (const auto& loc : prime_locals(p)) {
    if (2 * loc.s > loc.m + loc.t) return false;
    bool ok = loc.s < loc.t + loc.mu ||
              (loc.s == loc.t + loc.mu && 2 * loc.s == loc.t + loc.m) ||
              (loc.s == loc.t + loc.mu && loc.tau == 0);
    if (!ok) return false;
  }
  return true;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_v1: return "closed_v1";
    case Method::closed_v2: return "closed_v2";
    case Method::brute: return "brute";
  }
  throw InternalError("to_string(Method): unknown tag");
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "closed") return Method::closed_v1;
  if (s == "closed_v1") return Method::closed_v1;
  if (s == "coroot") return Method::closed_v2;
  if (s == "closed_v2") return Method::closed_v2;
  if (s == "brute") return Method::brute;
  return std::nullopt;
}

DimensionReport dimension_report(const CoverParams& p, Method method, std::int64_t cap) {
  DimensionReport rep;
  rep.params = p;
  rep.inv = derive_invariants(p);
  rep.s_coroot = s_coroot_closed(p);
  rep.fr_b = fr_b_closed(p);
  rep.method = method;

  BigInt v1 = s_cochar_closed_v1(p);
  BigInt v2 = s_cochar_closed_v2(p);
  if (v1 != v2)
    throw InternalError("dimension_report: the two closed forms disagree (v1=" + v1.str() +
                        ", v2=" + v2.str() + ")");
  switch (method) {
    case Method::closed_v1:
      rep.s_cochar = v1;
      break;
    case Method::closed_v2:
      rep.s_cochar = v2;
      break;
    case Method::brute: {
      std::int64_t brute = count_lambda_fin(p, cap);
      if (BigInt(brute) != v1)
        throw InternalError("dimension_report: brute count " + std::to_string(brute) +
                            " disagrees with the closed form " + v1.str());
      rep.s_cochar = brute;
      break;
    }
  }

  BigInt total = pow_big(p.n, p.r);
  if (total % rep.s_cochar != 0)
    throw InternalError("dimension_report: n^r is not divisible by the solution count");
  rep.dim_whittaker = total / rep.s_cochar;
  return rep;
}

ClassificationReport classify(const CoverParams& p) {
  ClassificationReport rep;
  rep.params = p;
  auto diag = diagonal_numbers(p);
  rep.d1 = diag.d1;
  rep.d2 = diag.d2;
  rep.s_cochar = s_cochar_closed_v1(p);
  rep.dim_whittaker = whittaker_dimension(p);
  rep.diag_product = diag_product_value(p);
  rep.quantum_dim = pow_big(p.n / diag.d1, p.r);

  rep.d_zero_case = (p.d == 0);
  if (rep.d_zero_case) {
    rep.d_zero_predicted_dim = pow_big(p.n / std::gcd(p.c, p.n), p.r);
    if (*rep.d_zero_predicted_dim != rep.dim_whittaker)
      throw InternalError("classify: d == 0 closed form disagrees with dim(W)");
  }

  rep.c_zero_case = (p.c == 0);
  if (rep.c_zero_case) {
    BigInt rd = BigInt(p.r - 1) * p.d;
    if (rd < 0) rd = -rd;
    std::int64_t g = static_cast<std::int64_t>(boost::multiprecision::gcd(rd, BigInt(p.n)));
    rep.c_zero_predicted_dim =
        pow_big(p.n / std::gcd(p.d, p.n), p.r - 1) * (p.n / g);
    if (*rep.c_zero_predicted_dim != rep.dim_whittaker)
      throw InternalError("classify: c == 0 closed form disagrees with dim(W)");
  }

  rep.is_min_dimension = (p.c == 0 && p.d == 0);
  if (rep.is_min_dimension != (rep.dim_whittaker == 1))
    throw InternalError("classify: minimum-dimension criterion disagrees with dim(W)");

  rep.is_max_dimension = (diag.d1 == 1 && diag.d2 == 1);
  if (rep.is_max_dimension != (rep.dim_whittaker == pow_big(p.n, p.r)))
    throw InternalError("classify: maximum-dimension criterion disagrees with dim(W)");

  rep.coprime_rn_case = (std::gcd(p.r, p.n) == 1);
  if (rep.coprime_rn_case && rep.s_cochar != rep.diag_product)
    throw InternalError("classify: coprime r,n case disagrees with the diagonal product");

  rep.diag_product_case = diag_product_prime_conditions(p);
  if (rep.diag_product_case != (rep.s_cochar == rep.diag_product))
    throw InternalError("classify: diagonal-product prime conditions disagree with direct check");

  rep.quantum_dim_match = quantum_dim_prime_conditions(p);
  if (rep.quantum_dim_match != (rep.dim_whittaker == rep.quantum_dim))
    throw InternalError("classify: quantum-dimension prime conditions disagree with direct check");

  return rep;
}

namespace {

void write_params(JsonWriter& w, const CoverParams& p) {
  w.key("params").begin_object();
  w.key("c").value(p.c);
  w.key("d").value(p.d);
  w.key("r").value(p.r);
  w.key("n").value(p.n);
  w.end_object();
}

}  // namespace

std::string to_json(const DimensionReport& rep) {
  JsonWriter w;
  w.begin_object();
  write_params(w, rep.params);
  w.key("method").value(to_string(rep.method));
  w.key("d1").value(rep.inv.d1);
  w.key("d2").value(rep.inv.d2);
  w.key("b").value(rep.inv.b);
  w.key("A").value(rep.inv.A);
  w.key("M").value(rep.inv.M);
  w.key("kappa").value(rep.inv.kappa);
  w.key("s_cochar").value(rep.s_cochar);
  w.key("s_coroot").value(rep.s_coroot);
  w.key("fr_b").value(rep.fr_b.str());
  w.key("dim_whittaker").value(rep.dim_whittaker);
  w.end_object();
  return std::move(w).str();
}

std::string to_json(const ClassificationReport& rep) {
  JsonWriter w;
  w.begin_object();
  write_params(w, rep.params);
  w.key("d1").value(rep.d1);
  w.key("d2").value(rep.d2);
  w.key("s_cochar").value(rep.s_cochar);
  w.key("dim_whittaker").value(rep.dim_whittaker);

  w.key("d_zero_case").begin_object();
  w.key("holds").value(rep.d_zero_case);
  w.key("predicted_dim");
  if (rep.d_zero_predicted_dim)
    w.value(*rep.d_zero_predicted_dim);
  else
    w.value_null();
  w.end_object();

  w.key("c_zero_case").begin_object();
  w.key("holds").value(rep.c_zero_case);
  w.key("predicted_dim");
  if (rep.c_zero_predicted_dim)
    w.value(*rep.c_zero_predicted_dim);
  else
    w.value_null();
  w.end_object();

  w.key("is_min_dimension").value(rep.is_min_dimension);
  w.key("is_max_dimension").value(rep.is_max_dimension);

  w.key("coprime_rn_case").begin_object();
  w.key("holds").value(rep.coprime_rn_case);
  w.key("predicted_s_cochar").value(rep.diag_product);
  w.end_object();

  w.key("diag_product_case").begin_object();
  w.key("holds").value(rep.diag_product_case);
  w.key("predicted_s_cochar").value(rep.diag_product);
  w.end_object();

  w.key("quantum_dim_match").begin_object();
  w.key("holds").value(rep.quantum_dim_match);
  w.key("predicted_dim").value(rep.quantum_dim);
  w.end_object();

  w.end_object();
  return std::move(w).str();
}

}  // namespace whitdim
