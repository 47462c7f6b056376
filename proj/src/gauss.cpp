#include "gjl/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gjl/double_double.hpp"
#include "gjl/errors.hpp"
#include "gjl/tridiagonal_eigen.hpp"

namespace gjl {

std::string_view to_string(RuleKind kind) {
  return kind == RuleKind::gauss ? "gauss" : "lobatto";
}

QuadratureRule::QuadratureRule(JacobiExponents exponents, RuleKind kind,
                               std::vector<double> nodes, std::vector<double> weights,
                               int exactness_degree)
    : exponents_(exponents),
      kind_(kind),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      exactness_degree_(exactness_degree) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw DomainError("QuadratureRule: nodes and weights must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(nodes_[i] >= -1.0 && nodes_[i] <= 1.0)) {
      throw DomainError("QuadratureRule: node outside [-1, 1]");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw DomainError("QuadratureRule: nodes must be strictly increasing");
    }
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw DomainError("QuadratureRule: weight " + std::to_string(i) +
                        " is not positive and finite");
    }
  }
  if (kind_ == RuleKind::gauss &&
      (nodes_.front() == -1.0 || nodes_.back() == 1.0)) {
    throw DomainError("QuadratureRule: gauss nodes must be interior");
  }
  if (kind_ == RuleKind::lobatto &&
      (nodes_.size() < 3 || nodes_.front() != -1.0 || nodes_.back() != 1.0)) {
    throw DomainError("QuadratureRule: lobatto rule must contain both endpoints");
  }
}

int QuadratureRule::interior_count() const noexcept {
  const int total = static_cast<int>(nodes_.size());
  return kind_ == RuleKind::lobatto ? total - 2 : total;
}

namespace {

double christoffel_number(const RecurrenceData& r, int m, double x) {
  const auto p = eval_orthonormal_all(r, m - 1, x);
  double sum = 0.0;
  for (double v : p) sum += v * v;
  return 1.0 / sum;
}

// p_n(x) by the same recurrence as eval_orthonormal, carried in double-double.
DoubleDouble eval_orthonormal_dd(const RecurrenceData& r, int n, const DoubleDouble& x) {
  const auto& a = r.diag();
  const auto& b = r.offdiag_sq();
  DoubleDouble p_prev;
  DoubleDouble p(1.0 / std::sqrt(b[0]));
  double root_b = 0.0;
  for (int k = 0; k < n; ++k) {
    const double root_next = std::sqrt(b[k + 1]);
    const DoubleDouble p_next = ((x - DoubleDouble(a[k])) * p - p_prev * root_b) / root_next;
    p_prev = p;
    p = p_next;
    root_b = root_next;
  }
  return p;
}

}  // namespace

QuadratureRule gauss_rule(const JacobiExponents& e, int m, GaussOptions options) {
  if (m < 1) throw DomainError("gauss_rule: number of points must be >= 1");
  const RecurrenceData r(e, m);

  std::vector<double> diag(r.diag().begin(), r.diag().begin() + m);
  std::vector<double> offdiag(static_cast<std::size_t>(m) - 1);
  for (int k = 1; k < m; ++k) offdiag[k - 1] = std::sqrt(r.offdiag_sq()[k]);
  const auto eig = tridiagonal_eigen(diag, offdiag, options.max_sweeps);

  std::vector<double> nodes = eig.eigenvalues;
  std::vector<double> weights(static_cast<std::size_t>(m));
  if (!options.polish) {
    const double mu0 = r.offdiag_sq()[0];
    for (int k = 0; k < m; ++k) {
      const double z = eig.first_components[k];
      weights[k] = mu0 * z * z;
    }
    return {e, RuleKind::gauss, std::move(nodes), std::move(weights), 2 * m - 1};
  }

  const std::vector<double> raw = nodes;
  for (int k = 0; k < m; ++k) {
    const double lo = k == 0 ? -1.0 : 0.5 * (raw[k - 1] + raw[k]);
    const double hi = k + 1 == m ? 1.0 : 0.5 * (raw[k] + raw[k + 1]);
    double x = raw[k];
    for (int step = 0; step < 2; ++step) {
      const auto pv = eval_orthonormal(r, m, x);
      if (pv.derivative == 0.0 || !std::isfinite(pv.value)) break;
      const double next = x - pv.value / pv.derivative;
      if (!(next > lo && next < hi)) break;
      x = next;
    }
    nodes[k] = x;
  }
  for (int k = 0; k < m; ++k) weights[k] = christoffel_number(r, m, nodes[k]);
  return {e, RuleKind::gauss, std::move(nodes), std::move(weights), 2 * m - 1};
}

SpacingReport christoffel_spacing_report(const JacobiExponents& e, int m) {
  if (m < 3) throw DomainError("christoffel_spacing_report: requires m >= 3");
  const auto rule = gauss_rule(e, m);
  const auto x = rule.nodes();
  const auto lambda = rule.weights();
  SpacingReport report{e, m, {}, {}};
  report.christoffel.reserve(static_cast<std::size_t>(m));
  report.spacing.reserve(static_cast<std::size_t>(m) - 1);
  for (int k = 0; k < m; ++k) {
    const double phi = std::sqrt((1.0 - x[k]) * (1.0 + x[k]));
    report.christoffel.push_back(lambda[k] * m / (phi * weight_value(e, x[k])));
  }
  for (int k = 0; k + 1 < m; ++k) {
    const double mid = 0.5 * (x[k] + x[k + 1]);
    const double phi = std::sqrt((1.0 - mid) * (1.0 + mid));
    report.spacing.push_back((x[k + 1] - x[k]) * m / phi);
  }
  return report;
}

double nevai_identity_residual(const JacobiExponents& e, int m) {
  if (m < 2) throw DomainError("nevai_identity_residual: requires m >= 2");
  const auto rule = gauss_rule(e, m);
  const RecurrenceData r(e, m);
  const double inverse_ratio = 1.0 / r.leading_ratio(m);
  double worst = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    // Near a clustered endpoint a zero of p_{m-1} sits within a few hundred
    // ulps of x_k, so both sides are formed at the zero itself in double-double.
    const double xd = rule.nodes()[k];
    const auto at_node = eval_orthonormal(r, m, xd);
    const double step = -static_cast<double>(eval_orthonormal_dd(r, m, xd)) / at_node.derivative;
    const DoubleDouble x = DoubleDouble::two_sum(xd, step);
    const double lhs = 1.0 / static_cast<double>(eval_orthonormal_dd(r, m - 1, x));
    const double rhs = inverse_ratio * rule.weights()[k] * at_node.derivative;
    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
  }
  return worst;
}

}  // namespace gjl
