#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "gjl/jacobi.hpp"

namespace gjl {

enum class ReferenceMethod { closed_form, tanh_sinh };

std::string_view to_string(ReferenceMethod method);

struct ReferenceValue {
  double value = 0.0;
  ReferenceMethod method = ReferenceMethod::closed_form;
  double estimated_accuracy = 0.0;  ///< absolute error bound
  bool converged = true;            ///< false: accuracy is only the last level difference
  int levels_used = 0;
  /// |I_l - I_{l-1}| for l = 1..levels_used (tanh-sinh only).
  std::vector<double> level_differences;
};

/// Abscissa handed to oracle integrands. The endpoint distances are formed
/// directly from the substitution and stay accurate where t rounds to +-1.
struct OraclePoint {
  double t;
  double one_minus_t;
  double one_plus_t;
};

using OracleIntegrand = std::function<double(const OraclePoint&)>;

struct TanhSinhOptions {
  int max_level = 8;  ///< step h = 2^-level at the finest level; must lie in [4, 12]
  /// Interior points where f is not smooth; each subinterval is mapped separately.
  std::vector<double> breakpoints;
};

/// Double-exponential (tanh-sinh) integration of f(t) (1-t)^alpha (1+t)^beta
/// over (-1, 1). The weight is folded into the transformed integrand in log
/// space, the trapezoid sums are accumulated in double-double, and levels are
/// refined until successive levels agree to about 1e-16 of the L1 mass.
ReferenceValue reference_integral(const JacobiExponents& e, const OracleIntegrand& f,
                                  const TanhSinhOptions& options = {});

ReferenceValue reference_integral(const JacobiExponents& e,
                                  const std::function<double(double)>& f,
                                  const TanhSinhOptions& options = {});

enum class ClosedForm {
  abs_pow_symmetric,  ///< int |t|^s (1-t^2)^alpha dt = B((s+1)/2, alpha+1); needs alpha == beta
  endpoint_pow,       ///< int (1+t)^sigma w = 2^{sigma+alpha+beta+1} B(alpha+1, sigma+beta+1)
  monomial,           ///< int t^k w
};

/// Beta-function reference. parameter is s, sigma or k respectively.
ReferenceValue closed_form_reference(ClosedForm name, const JacobiExponents& e,
                                     double parameter);

}  // namespace gjl
