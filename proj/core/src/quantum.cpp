#include "whitdim/quantum.hpp"

#include <numeric>

#include "whitdim/formulas.hpp"
#include "whitdim/json_writer.hpp"

namespace whitdim {

BigInt quantum_module_dimension(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  return pow_big(p.n / diag.d1, p.r);
}

LatticeVector theta_apply(const CoverParams& p, const LatticeVector& nu) {
  if (nu.rank() != p.r || nu.modulus != p.n)
    throw UsageError("theta_apply: vector context does not match cover parameters");
  auto diag = diagonal_numbers(p);
  std::int64_t nq = p.n / diag.d1;
  LatticeVector out;
  out.modulus = nq;
  out.entries.reserve(nu.entries.size());
  for (std::int64_t i = 0; i < p.r; ++i) {
    // rho = (r-1, ..., 1, 0), applied 1-based: component i maps to r-i-nu_i.
    std::int64_t v = (p.r - 1 - i - nu.entries[static_cast<std::size_t>(i)]) % nq;
    if (v < 0) v += nq;
    out.entries.push_back(v);
  }
  return out;
}

bool theta_well_defined_closed(const CoverParams& p) {
  std::int64_t lhs = a_min_closed(p);
  std::int64_t rhs = std::gcd(std::gcd(p.c, p.d), p.n);
  return lhs == rhs;
}

bool theta_well_defined_brute(const CoverParams& p, std::int64_t cap) {
  // Streaming scan instead of materializing Lambda_fin; memory stays O(r).
  return scan_lattice(p, cap).lambda_all_zero_mod_nq;
}

std::string_view to_string(IsoClass c) {
  switch (c) {
    case IsoClass::max_dim_iso: return "max_dim_iso";
    case IsoClass::min_dim_iso: return "min_dim_iso";
    case IsoClass::dim_match_unclassified: return "dim_match_unclassified";
    case IsoClass::dim_mismatch: return "dim_mismatch";
  }
  throw InternalError("to_string(IsoClass): unknown tag");
}

IsoClass classify_isomorphism(const CoverParams& p) {
  auto diag = diagonal_numbers(p);
  if (diag.d1 == 1 && diag.d2 == 1) return IsoClass::max_dim_iso;
  if (p.c == 0 && p.d == 0) return IsoClass::min_dim_iso;
  if (whittaker_dimension(p) == quantum_module_dimension(p))
    return IsoClass::dim_match_unclassified;
  return IsoClass::dim_mismatch;
}

QuantumReport quantum_report(const CoverParams& p, bool run_brute, std::int64_t cap) {
  QuantumReport rep;
  rep.params = p;
  auto diag = diagonal_numbers(p);
  rep.nQ = p.n / diag.d1;
  rep.module_dim = quantum_module_dimension(p);
  rep.well_defined_closed = theta_well_defined_closed(p);
  if (run_brute) {
    rep.well_defined_brute = theta_well_defined_brute(p, cap);
    if (*rep.well_defined_brute != rep.well_defined_closed)
      throw InternalError("quantum_report: brute well-definedness disagrees with the criterion");
  }
  rep.iso_class = classify_isomorphism(p);
  return rep;
}

std::string to_json(const QuantumReport& rep) {
  JsonWriter w;
  w.begin_object();
  w.key("params").begin_object();
  w.key("c").value(rep.params.c);
  w.key("d").value(rep.params.d);
  w.key("r").value(rep.params.r);
  w.key("n").value(rep.params.n);
  w.end_object();
  w.key("nQ").value(rep.nQ);
  w.key("module_dim").value(rep.module_dim);
  w.key("well_defined_closed").value(rep.well_defined_closed);
  w.key("well_defined_brute");
  if (rep.well_defined_brute)
    w.value(*rep.well_defined_brute);
  else
    w.value_null();
  w.key("iso_class").value(to_string(rep.iso_class));
  w.end_object();
  return std::move(w).str();
}

}  // namespace whitdim
