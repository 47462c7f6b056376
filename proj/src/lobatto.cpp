#include "gjl/lobatto.hpp"

#include <cmath>
#include <vector>

#include "gjl/errors.hpp"

namespace gjl {

namespace {

double christoffel_at(const JacobiExponents& e, int degree, double t) {
  const RecurrenceData r(e, degree);
  double sum = 0.0;
  for (double p : eval_orthonormal_all(r, degree, t)) sum += p * p;
  return 1.0 / sum;
}

// 1 / sum_{j<=n} p_j^{a,b}(1)^2
double christoffel_at_one(double a, double b, int n) {
  DoubleDouble prod(1.0);
  for (int j = 1; j <= n; ++j) {
    prod = prod * ((j + a + b + 1.0) * (j + a + 1.0));
    prod = prod / (static_cast<double>(j) * (j + b));
  }
  return zeroth_moment(JacobiExponents(a, b)) / static_cast<double>(prod);
}

}  // namespace

QuadratureRule lobatto_rule(const JacobiExponents& e, int n) {
  if (n < 1) throw DomainError("lobatto_rule: interior node count must be >= 1");
  const auto inner = gauss_rule(e.shifted(1.0, 1.0), n);

  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<std::size_t>(n) + 2);
  weights.reserve(static_cast<std::size_t>(n) + 2);

  nodes.push_back(-1.0);
  weights.push_back(0.5 * christoffel_at_one(e.beta(), e.alpha() + 1.0, n));
  for (int k = 0; k < n; ++k) {
    const double t = inner.nodes()[k];
    nodes.push_back(t);
    weights.push_back(inner.weights()[k] / ((1.0 - t) * (1.0 + t)));
  }
  nodes.push_back(1.0);
  weights.push_back(0.5 * christoffel_at_one(e.alpha(), e.beta() + 1.0, n));

  return {e, RuleKind::lobatto, std::move(nodes), std::move(weights), 2 * n + 1};
}

EndpointWeights endpoint_weights_by_christoffel_sum(const JacobiExponents& e, int n) {
  if (n < 1) throw DomainError("endpoint_weights_by_christoffel_sum: n must be >= 1");
  return {0.5 * christoffel_at(e.shifted(1.0, 0.0), n, -1.0),
          0.5 * christoffel_at(e.shifted(0.0, 1.0), n, 1.0)};
}

EndpointWeights endpoint_weights_by_moments(const JacobiExponents& e, int n) {
  if (n < 1) throw DomainError("endpoint_weights_by_moments: n must be >= 1");
  const auto inner = gauss_rule(e.shifted(1.0, 1.0), n);
  const auto moments = monomial_moments(e, 1);
  DoubleDouble r0 = moments[0];
  DoubleDouble r1 = moments[1];
  for (int k = 0; k < n; ++k) {
    const double t = inner.nodes()[k];
    const double w = inner.weights()[k] / ((1.0 - t) * (1.0 + t));
    r0 += -w;
    r1 += -DoubleDouble::two_prod(w, t);
  }
  // [ 1  1 ] [w_0    ]   [r0]
  // [-1  1 ] [w_{n+1}] = [r1]
  // The determinant is 2 for any pair of distinct endpoints.
  return {0.5 * static_cast<double>(r0 - r1), 0.5 * static_cast<double>(r0 + r1)};
}

EndpointWeights endpoint_weights_by_representation(const JacobiExponents& e, int n) {
  if (n < 1) throw DomainError("endpoint_weights_by_representation: n must be >= 1");
  const RecurrenceData shifted(e.shifted(1.0, 1.0), n);
  const double p_left = eval_orthonormal(shifted, n, -1.0).value;
  const double p_right = eval_orthonormal(shifted, n, 1.0).value;

  const auto left_rule = gauss_rule(e.shifted(1.0, 0.0), n + 1);
  const auto right_rule = gauss_rule(e.shifted(0.0, 1.0), n + 1);
  const double left = integrate(left_rule, [&](double t) {
    return eval_orthonormal(shifted, n, t).value / p_left;
  });
  const double right = integrate(right_rule, [&](double t) {
    return eval_orthonormal(shifted, n, t).value / p_right;
  });
  return {0.5 * left, 0.5 * right};
}

double lagrange_weight_crosscheck(const JacobiExponents& e, int n, int k) {
  if (n < 1) throw DomainError("lagrange_weight_crosscheck: n must be >= 1");
  if (k < 0 || k > n + 1) throw DomainError("lagrange_weight_crosscheck: k out of range");
  const auto rule = lobatto_rule(e, n);
  const auto t = rule.nodes();
  const auto fundamental = [&](double x) {
    double value = 1.0;
    for (int j = 0; j < n + 2; ++j) {
      if (j != k) value *= (x - t[j]) / (t[k] - t[j]);
    }
    return value;
  };
  const double independent = integrate(gauss_rule(e, n + 2), fundamental);
  return std::fabs(independent - rule.weights()[k]) / rule.weights()[k];
}

}  // namespace gjl
