#include "gjl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gjl/analysis.hpp"
#include "gjl/gauss.hpp"
#include "gjl/integrands.hpp"
#include "gjl/lobatto.hpp"

namespace gjl {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

std::vector<int> doubling(int from, int to) {
  std::vector<int> out;
  for (int n = from; n <= to; n *= 2) out.push_back(n);
  return out;
}

double coefficient_scale(const std::vector<double>& c) {
  double s = 0.0;
  for (double v : c) s += std::fabs(v);
  return s;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const JacobiExponents& e, int n_max,
                                          std::uint64_t seed) {
  std::vector<CheckResult> out;
  const double mu0 = zeroth_moment(e);
  const auto sizes = doubling(1, n_max);

  {
    double worst = 0.0;
    for (int n : sizes) {
      const auto rule = lobatto_rule(e, n);
      double sum = 0.0;
      for (double w : rule.weights()) sum += w;
      worst = std::max(worst, std::fabs(sum - mu0) / mu0);
    }
    out.push_back({"lobatto_weight_sum", worst <= 1e-12, fmt("max_rel=%.3e", worst)});
  }

  {
    double worst = 0.0;
    for (int n : sizes) {
      const auto rule = lobatto_rule(e, n);
      for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_polynomial(seed + static_cast<std::uint64_t>(trial), 2 * n + 1);
        const double q = integrate(rule, [&](double t) { return eval_polynomial(c, t); });
        const double exact = polynomial_integral(e, c);
        worst = std::max(worst, std::fabs(q - exact) / (coefficient_scale(c) * mu0));
      }
    }
    out.push_back({"lobatto_exactness", worst <= 1e-10, fmt("max_rel=%.3e", worst)});
  }

  {
    double worst = 0.0;
    const auto sharp = make_family({IntegrandName::sharpness, {}}, e, seed);
    for (int n : sizes) {
      const double q = integrate(lobatto_rule(e, n), sharp.at(n));
      worst = std::max(worst, std::fabs((1.0 - q) - 1.0));
    }
    out.push_back({"sharpness_identity", worst <= 1e-8, fmt("max_abs=%.3e", worst)});
  }

  {
    double worst_sum = 0.0;
    double worst_exact = 0.0;
    bool interlaced = true;
    for (int m : sizes) {
      const auto rule = gauss_rule(e, m);
      double sum = 0.0;
      for (double w : rule.weights()) sum += w;
      worst_sum = std::max(worst_sum, std::fabs(sum - mu0) / mu0);
      for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_polynomial(seed + 1000 + static_cast<std::uint64_t>(trial), 2 * m - 1);
        const double q = integrate(rule, [&](double t) { return eval_polynomial(c, t); });
        worst_exact = std::max(
            worst_exact, std::fabs(q - polynomial_integral(e, c)) / (coefficient_scale(c) * mu0));
      }
      const auto next = gauss_rule(e, m + 1);
      for (int k = 0; k < m; ++k) {
        if (!(next.nodes()[k] < rule.nodes()[k] && rule.nodes()[k] < next.nodes()[k + 1])) {
          interlaced = false;
        }
      }
    }
    out.push_back({"gauss_weight_sum", worst_sum <= 1e-12, fmt("max_rel=%.3e", worst_sum)});
    out.push_back({"gauss_exactness", worst_exact <= 1e-11, fmt("max_rel=%.3e", worst_exact)});
    out.push_back({"gauss_interlacing", interlaced, interlaced ? "strict" : "violated"});
  }

  {
    double worst = 0.0;
    for (int m : doubling(2, std::min(n_max, 256))) {
      worst = std::max(worst, nevai_identity_residual(e, m));
    }
    out.push_back({"nevai_identity", worst <= 1e-9, fmt("max_rel=%.3e", worst)});
  }

  {
    bool same = true;
    for (int n : sizes) {
      const auto lob = lobatto_rule(e, n);
      const auto inner = gauss_rule(e.shifted(1.0, 1.0), n);
      same = same && std::equal(inner.nodes().begin(), inner.nodes().end(),
                                lob.nodes().begin() + 1);
    }
    out.push_back({"interior_nodes_match_shifted_gauss", same, same ? "bitwise" : "differ"});
  }

  if (n_max >= 8) {
    double lo = INFINITY;
    double hi = 0.0;
    double end = 0.0;
    for (int n : doubling(8, n_max)) {
      const auto report = lemma1_report(e, n);
      for (double r : report.interior_ratios) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      end = std::max({end, report.left_end_ratio, report.right_end_ratio});
    }
    out.push_back({"lemma1_interior_spread", hi / lo <= kInteriorRatioSpread,
                   fmt("max/min=%.4f", hi / lo)});
    out.push_back({"lemma1_endpoint_bound", end <= kEndpointRatioBound, fmt("max=%.4f", end)});
  }

  {
    double worst = 0.0;
    for (int n : doubling(1, std::min(n_max, 32))) {
      for (int k = 0; k <= n + 1; ++k) {
        worst = std::max(worst, lagrange_weight_crosscheck(e, n, k));
      }
    }
    out.push_back({"lagrange_weights", worst <= 1e-9, fmt("max_rel=%.3e", worst)});
  }

  {
    double worst = 0.0;
    for (int n : doubling(1, std::min(n_max, 128))) {
      const auto rule = lobatto_rule(e, n);
      const auto rep = endpoint_weights_by_representation(e, n);
      worst = std::max({worst, std::fabs(rep.left / rule.weights().front() - 1.0),
                        std::fabs(rep.right / rule.weights().back() - 1.0)});
    }
    out.push_back({"endpoint_representation", worst <= 1e-9, fmt("max_rel=%.3e", worst)});
  }

  return out;
}

}  // namespace gjl
