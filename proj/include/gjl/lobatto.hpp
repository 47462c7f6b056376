#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "gjl/double_double.hpp"
#include "gjl/errors.hpp"
#include "gjl/gauss.hpp"

namespace gjl {

/// (n+2)-point Gauss-Jacobi-Lobatto rule with nodes t_0 = -1 < t_1 < ... <
/// t_n < t_{n+1} = 1, exact through degree 2n+1.
///
/// The interior nodes are the zeros of p_n^{alpha+1,beta+1} and carry the
/// weights lambda_k^{alpha+1,beta+1} / (1 - t_k^2). The endpoint weights are
/// half the Christoffel function of the once-shifted weight at that endpoint,
///   w_0     = 1 / (2 sum_{j<=n} p_j^{alpha+1,beta}(-1)^2),
///   w_{n+1} = 1 / (2 sum_{j<=n} p_j^{alpha,beta+1}(+1)^2),
/// because P/P(-1), with P = p_n^{alpha+1,beta+1}, attains the minimum of
/// int g^2 (1-t) w over g in P_n with g(-1) = 1, and that minimum equals 2 w_0.
/// At t = 1 the sum telescopes,
///   sum_{j<=n} p_j^{a,b}(1)^2 = prod_{j=1}^n (j+a+b+1)(j+a+1) / (j (j+b)) / mu_0^{a,b},
/// and the product is accumulated in double-double.
QuadratureRule lobatto_rule(const JacobiExponents& e, int n);

struct EndpointWeights {
  double left;   ///< w_0 at t = -1
  double right;  ///< w_{n+1} at t = +1
};

/// Endpoint weights from the Christoffel sums evaluated term by term with the
/// three-term recurrence. Relative error grows roughly like n eps.
EndpointWeights endpoint_weights_by_christoffel_sum(const JacobiExponents& e, int n);

/// Endpoint weights from the 2x2 moment system: exactness on 1 and t after
/// removing the interior contribution from mu_0 and mu_1. Loses relative
/// accuracy once an endpoint weight drops near eps * mu_0.
EndpointWeights endpoint_weights_by_moments(const JacobiExponents& e, int n);

/// Endpoint weights from the integral representations
///   w_0     = 1/2 int P(t)/P(-1) (1-t)^{alpha+1} (1+t)^beta dt,
///   w_{n+1} = 1/2 int P(t)/P(+1) (1-t)^alpha (1+t)^{beta+1} dt,
/// each evaluated exactly by an (n+1)-point Gauss rule.
EndpointWeights endpoint_weights_by_representation(const JacobiExponents& e, int n);

/// Relative deviation between the rule's w_k and int l_k(t) w(t) dt with l_k
/// the Lagrange fundamental polynomial of the node set, integrated by an
/// (n+2)-point Gauss rule. Intended for n <= 32.
double lagrange_weight_crosscheck(const JacobiExponents& e, int n, int k);

/// Compensated sum of w_k f(t_k). A non-finite f(t_k) raises EvaluationError
/// naming the node.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  DoubleDouble sum;
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double value = f(nodes[k]);
    if (!std::isfinite(value)) {
      throw EvaluationError("integrand is not finite at node " + std::to_string(k) +
                                " (t = " + std::to_string(nodes[k]) + ")",
                            nodes[k]);
    }
    sum += DoubleDouble::two_prod(weights[k], value);
  }
  return static_cast<double>(sum);
}

}  // namespace gjl
