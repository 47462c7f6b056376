#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gjl/jacobi.hpp"

namespace gjl {

enum class RuleKind { gauss, lobatto };

std::string_view to_string(RuleKind kind);

/// Immutable node/weight table for integrating f(t) w(t) over [-1, 1].
///
/// Construction checks the structural invariants: nodes strictly increasing
/// and inside [-1, 1], all weights positive, gauss rules strictly interior,
/// lobatto rules anchored at -1 and +1.
class QuadratureRule {
 public:
  QuadratureRule(JacobiExponents exponents, RuleKind kind, std::vector<double> nodes,
                 std::vector<double> weights, int exactness_degree);

  const JacobiExponents& exponents() const noexcept { return exponents_; }
  RuleKind kind() const noexcept { return kind_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  int exactness_degree() const noexcept { return exactness_degree_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Number of nodes strictly inside (-1, 1): n for an (n+2)-point lobatto rule.
  int interior_count() const noexcept;

 private:
  JacobiExponents exponents_;
  RuleKind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int exactness_degree_;
};

struct GaussOptions {
  /// Newton-refine each eigenvalue on p_m and recompute the Christoffel
  /// numbers as 1 / sum_j p_j(x_k)^2. With polishing off the rule is the
  /// plain eigenvalue/first-component construction.
  bool polish = true;
  int max_sweeps = 60;
};

/// m-point Gauss-Jacobi rule, exact through degree 2m-1.
QuadratureRule gauss_rule(const JacobiExponents& e, int m, GaussOptions options = {});

/// Normalized node spacing and Christoffel numbers of an m-point Gauss rule:
///   christoffel[k] = lambda_k m / (sqrt(1-x_k^2) w(x_k)),       k = 0..m-1
///   spacing[k]     = (x_{k+1}-x_k) m / sqrt(1-xbar_k^2),         k = 0..m-2
/// with xbar_k the midpoint of the gap. Both stay bounded above and below
/// uniformly in k and m.
struct SpacingReport {
  JacobiExponents exponents;
  int m;
  std::vector<double> christoffel;
  std::vector<double> spacing;
};

SpacingReport christoffel_spacing_report(const JacobiExponents& e, int m);

/// Max over nodes of the relative residual of
///   1 / p_{m-1}(x_k) = (gamma_{m-1}/gamma_m) lambda_k p_m'(x_k).
double nevai_identity_residual(const JacobiExponents& e, int m);

}  // namespace gjl
