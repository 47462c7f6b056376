#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gjl/jacobi.hpp"
#include "gjl/oracle.hpp"

namespace gjl {

/// Normalized Lobatto weights. With dt_k = t_{k+1} - t_k,
///   interior_ratios[k-1] = w_k / (dt_k w(t_k))        for k = 1..n-1,
///   interior_ratios[n-1] = w_n / (dt_{n-1} w(t_n)),
///   left_end_ratio       = w_0 / (dt_0 w(t_1)),
///   right_end_ratio      = w_{n+1} / (dt_n w(t_n)).
/// The interior ratios are bounded above and below and the end ratios above,
/// all uniformly in n.
struct RatioReport {
  JacobiExponents exponents;
  int n;
  std::vector<double> interior_ratios;
  double left_end_ratio;
  double right_end_ratio;
};

RatioReport lemma1_report(const JacobiExponents& e, int n);

/// An integrand that may change with the rule size (the sharpness witness and
/// the degree-(2n+1) test polynomial do), together with its exact integral.
struct IntegrandFamily {
  std::string id;
  std::function<std::function<double(double)>(int n)> at;
  std::function<ReferenceValue(int n)> reference;
};

struct ConvergenceReport {
  JacobiExponents exponents;
  std::string integrand_id;
  int smoothness_r;
  double predicted_exponent;
  std::vector<int> n_values;
  std::vector<double> abs_errors;
  std::vector<double> references;
  /// Points whose error is within 100x of the reference accuracy; not fitted.
  std::vector<bool> excluded;
  /// Every error at round-off level relative to the integrand's quadrature mass.
  bool exact = false;
  double fitted_exponent;  ///< NaN when exact
  double bound_constant;   ///< max_i abs_errors[i] * n_i^q_pred

  /// abs_errors[i] * n_i^q_pred
  std::vector<double> scaled_errors() const;
  /// Running maximum of the scaled errors does not inflate: the max over the
  /// second half of the sweep is at most twice the max over the first half.
  bool bound_is_stable() const;
};

/// Integrates the family with lobatto_rule(e, n) for every n and fits the
/// tail decay rate. Throws ReferenceError when, outside the exact case, fewer
/// than four points have errors clear of the reference accuracy.
ConvergenceReport convergence_study(const JacobiExponents& e, const IntegrandFamily& integrand,
                                    const std::vector<int>& n_values, int smoothness_r,
                                    double predicted_exponent);

/// Negated least-squares slope of log(error) against log(n) over the last
/// half of the points (at least two). Requires four or more points with
/// positive errors.
double fit_exponent(const std::vector<int>& n_values, const std::vector<double>& abs_errors);

struct UniformBoundCheck {
  double lhs;        ///< |e_n(f)| against the tanh-sinh reference
  double rhs;        ///< 2 mu_0 * surrogate
  double surrogate;  ///< sampled uniform error of the degree-(2n+1) Chebyshev interpolant
  double slack;      ///< round-off allowance added to rhs in the comparison
  bool holds;
};

/// Compares |e_n(f)| with 2 mu_0 E_{2n+1}(f), with E replaced by the uniform
/// error of the interpolant at the 2n+2 Chebyshev extreme points, sampled at
/// 10(2n+1)+1 equispaced points. The surrogate is at least E, so the
/// comparison is only loosened by it.
UniformBoundCheck uniform_bound_check(const JacobiExponents& e,
                                      const std::function<double(double)>& f, int n);

}  // namespace gjl
