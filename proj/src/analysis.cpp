#include "gjl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gjl/errors.hpp"
#include "gjl/lobatto.hpp"

namespace gjl {

RatioReport lemma1_report(const JacobiExponents& e, int n) {
  if (n < 3) throw DomainError("lemma1_report: requires n >= 3");
  const auto rule = lobatto_rule(e, n);
  const auto t = rule.nodes();
  const auto w = rule.weights();
  const auto dt = [&](int k) { return t[k + 1] - t[k]; };

  RatioReport report{e, n, {}, 0.0, 0.0};
  report.interior_ratios.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    report.interior_ratios.push_back(w[k] / (dt(k) * weight_value(e, t[k])));
  }
  report.interior_ratios.push_back(w[n] / (dt(n - 1) * weight_value(e, t[n])));
  report.left_end_ratio = w[0] / (dt(0) * weight_value(e, t[1]));
  report.right_end_ratio = w[n + 1] / (dt(n) * weight_value(e, t[n]));
  return report;
}

std::vector<double> ConvergenceReport::scaled_errors() const {
  std::vector<double> out(abs_errors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = abs_errors[i] * std::pow(static_cast<double>(n_values[i]), predicted_exponent);
  }
  return out;
}

bool ConvergenceReport::bound_is_stable() const {
  if (exact) return true;
  const auto scaled = scaled_errors();
  const std::size_t half = scaled.size() / 2;
  const double first = *std::max_element(scaled.begin(), scaled.begin() + half);
  const double second = *std::max_element(scaled.begin() + half, scaled.end());
  return second <= 2.0 * first;
}

double fit_exponent(const std::vector<int>& n_values, const std::vector<double>& abs_errors) {
  if (n_values.size() != abs_errors.size()) {
    throw DomainError("fit_exponent: n_values and abs_errors differ in length");
  }
  if (n_values.size() < 4) throw DomainError("fit_exponent: need at least 4 points");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (!(abs_errors[i] > 0.0) || n_values[i] < 1) {
      throw DomainError("fit_exponent: errors must be positive and n >= 1");
    }
  }
  const std::size_t count = std::max<std::size_t>(2, (n_values.size() + 1) / 2);
  const std::size_t start = n_values.size() - count;
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = start; i < n_values.size(); ++i) {
    mean_x += std::log(static_cast<double>(n_values[i]));
    mean_y += std::log(abs_errors[i]);
  }
  mean_x /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = start; i < n_values.size(); ++i) {
    const double dx = std::log(static_cast<double>(n_values[i])) - mean_x;
    sxy += dx * (std::log(abs_errors[i]) - mean_y);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DomainError("fit_exponent: n values in the tail are not distinct");
  const double slope = -sxy / sxx;
  return slope == 0.0 ? 0.0 : slope;  // no negative zero
}

ConvergenceReport convergence_study(const JacobiExponents& e, const IntegrandFamily& integrand,
                                    const std::vector<int>& n_values, int smoothness_r,
                                    double predicted_exponent) {
  if (n_values.size() < 4) throw DomainError("convergence_study: need at least 4 n values");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1 || (i > 0 && n_values[i] <= n_values[i - 1])) {
      throw DomainError("convergence_study: n values must be positive and strictly increasing");
    }
  }
  if (smoothness_r < 1) throw DomainError("convergence_study: smoothness r must be >= 1");

  ConvergenceReport report{e, integrand.id, smoothness_r, predicted_exponent,
                           n_values,  {},   {},           {},
                           false,     std::numeric_limits<double>::quiet_NaN(), 0.0};
  bool all_roundoff = true;
  std::vector<int> fit_n;
  std::vector<double> fit_err;
  for (int n : n_values) {
    const auto rule = lobatto_rule(e, n);
    const auto f = integrand.at(n);
    const auto reference = integrand.reference(n);
    const double value = integrate(rule, f);
    double mass = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      mass += rule.weights()[k] * std::fabs(f(rule.nodes()[k]));
    }
    const double error = std::fabs(value - reference.value);
    const bool excluded = error < 100.0 * reference.estimated_accuracy;
    if (error > 1e-11 * std::max({mass, std::fabs(reference.value), 1e-300})) {
      all_roundoff = false;
    }
    report.abs_errors.push_back(error);
    report.references.push_back(reference.value);
    report.excluded.push_back(excluded);
    if (!excluded) {
      fit_n.push_back(n);
      fit_err.push_back(error);
    }
  }

  report.exact = all_roundoff;
  const auto scaled = report.scaled_errors();
  report.bound_constant = *std::max_element(scaled.begin(), scaled.end());
  if (report.exact) return report;
  if (fit_n.size() < 4) {
    throw ReferenceError("convergence_study: only " + std::to_string(fit_n.size()) +
                         " errors exceed 100x the reference accuracy for '" + integrand.id +
                         "'; the reference is too coarse to fit a rate");
  }
  report.fitted_exponent = fit_exponent(fit_n, fit_err);
  return report;
}

UniformBoundCheck uniform_bound_check(const JacobiExponents& e,
                                      const std::function<double(double)>& f, int n) {
  if (n < 1) throw DomainError("uniform_bound_check: n must be >= 1");
  const auto rule = lobatto_rule(e, n);
  const auto reference = reference_integral(e, f, {.max_level = 10, .breakpoints = {}});
  const double lhs = std::fabs(integrate(rule, f) - reference.value);

  // Barycentric interpolation at x_j = cos(j pi / d), j = 0..d, d = 2n+1.
  const int degree = 2 * n + 1;
  std::vector<double> x(static_cast<std::size_t>(degree) + 1);
  std::vector<double> fx(x.size());
  std::vector<double> bw(x.size());
  for (int j = 0; j <= degree; ++j) {
    x[j] = std::cos(j * std::numbers::pi / degree);
    fx[j] = f(x[j]);
    bw[j] = (j % 2 == 0 ? 1.0 : -1.0) * ((j == 0 || j == degree) ? 0.5 : 1.0);
  }
  const auto interpolant = [&](double t) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double diff = t - x[j];
      if (diff == 0.0) return fx[j];
      const double c = bw[j] / diff;
      num += c * fx[j];
      den += c;
    }
    return num / den;
  };

  const int samples = 10 * degree;
  double surrogate = 0.0;
  double f_max = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = -1.0 + 2.0 * i / samples;
    const double ft = f(t);
    f_max = std::max(f_max, std::fabs(ft));
    surrogate = std::max(surrogate, std::fabs(ft - interpolant(t)));
  }
  const double mu0 = zeroth_moment(e);
  UniformBoundCheck out{};
  out.lhs = lhs;
  out.surrogate = surrogate;
  out.rhs = 2.0 * mu0 * surrogate;
  out.slack = 64.0 * std::numeric_limits<double>::epsilon() * mu0 * f_max +
              reference.estimated_accuracy;
  out.holds = out.lhs <= out.rhs + out.slack;
  return out;
}

}  // namespace gjl
