#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "whitdim/cover.hpp"
#include "whitdim/lattice.hpp"

namespace whitdim {

// Dimension of the r-fold tensor product of evaluation modules: (n/d1)^r.
BigInt quantum_module_dimension(const CoverParams& p);

// theta(nu) = rho - nu componentwise mod n/d1, rho = (r-1,...,1,0).
// Input context is (r, n); output context is (r, n/d1).
LatticeVector theta_apply(const CoverParams& p, const LatticeVector& nu);

// Criterion for theta to be independent of the coset representative:
// gcd(d2, d*n/d1) == gcd(c, d, n).
bool theta_well_defined_closed(const CoverParams& p);

// Direct test: every Lambda_fin element is componentwise == 0 mod n/d1.
bool theta_well_defined_brute(const CoverParams& p, std::int64_t cap = kDefaultEnumerationCap);

// max_dim_iso / min_dim_iso are the proven isomorphism cases. A bare
// dimension match is necessary but not proven sufficient, so it gets its
// own tag instead of overclaiming.
enum class IsoClass { max_dim_iso, min_dim_iso, dim_match_unclassified, dim_mismatch };

std::string_view to_string(IsoClass c);

IsoClass classify_isomorphism(const CoverParams& p);

struct QuantumReport {
  CoverParams params;
  std::int64_t nQ = 1;
  BigInt module_dim;
  bool well_defined_closed = false;
  std::optional<bool> well_defined_brute;  // only when the oracle was run
  IsoClass iso_class = IsoClass::dim_mismatch;
};

// With run_brute set, also runs the Lambda_fin oracle and throws
// InternalError if it disagrees with the closed criterion.
QuantumReport quantum_report(const CoverParams& p, bool run_brute,
                             std::int64_t cap = kDefaultEnumerationCap);

std::string to_json(const QuantumReport& rep);

}  // namespace whitdim
