#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gjl/jacobi.hpp"

namespace gjl {

/// Frozen bounds for the ratio diagnostics, observed over alpha, beta in
/// {-0.9, -0.5, 0, 0.5, 2.5} and n = 8..512: interior max/min reaches 2.25,
/// endpoint ratios reach 8.97.
inline constexpr double kInteriorRatioSpread = 2.5;
inline constexpr double kEndpointRatioBound = 10.0;

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the rule invariants for one weight with rule sizes up to n_max:
/// weight sums, polynomial exactness, the sharpness witness, Gauss exactness
/// and interlacing, the Nevai identity, weight-to-spacing ratio bounds and the
/// Lagrange and integral-representation cross-checks. seed drives the random
/// test polynomials.
std::vector<CheckResult> run_verify_suite(const JacobiExponents& e, int n_max,
                                          std::uint64_t seed);

}  // namespace gjl
