#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gjl/analysis.hpp"

namespace gjl {

enum class IntegrandName { poly, abs_pow, endpoint_pow, runge, exp_t, sharpness };

/// A closed registry entry: name plus its numeric parameters.
///   poly          degree (optional; omitted means 2n+1 for each rule size n)
///   abs_pow       s > 0             f(t) = |t|^s
///   endpoint_pow  sigma > 0         f(t) = (1+t)^sigma
///   runge         c > 0 (default 25) f(t) = 1 / (1 + c t^2)
///   exp_t                           f(t) = exp(t)
///   sharpness                       f(t) = (1-t^2) p_n^{alpha+1,beta+1}(t)^2
struct IntegrandSpec {
  IntegrandName name;
  std::map<std::string, double> parameters;
};

std::string_view to_string(IntegrandName name);

/// Parses a registry name and "key=value" strings; throws DomainError naming
/// the offending name, key or value.
IntegrandSpec parse_integrand(std::string_view name, std::span<const std::string> params);

/// Stable identifier such as "abs_pow(s=0.5)".
std::string integrand_id(const IntegrandSpec& spec);

/// Binds the integrand to a weight. seed drives the poly coefficients.
IntegrandFamily make_family(const IntegrandSpec& spec, const JacobiExponents& e,
                            std::uint64_t seed);

/// Coefficients c_0..c_degree uniform in [-1, 1], reproducible across
/// platforms for a given (seed, degree).
std::vector<double> random_polynomial(std::uint64_t seed, int degree);

/// Horner evaluation of sum c_k t^k.
double eval_polynomial(std::span<const double> coefficients, double t);

/// sum c_k int t^k w, accumulated in double-double.
double polynomial_integral(const JacobiExponents& e, std::span<const double> coefficients);

}  // namespace gjl
