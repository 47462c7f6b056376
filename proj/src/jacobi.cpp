#include "gjl/jacobi.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "gjl/errors.hpp"

namespace gjl {

namespace {

std::string shortest(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  for (int digits = 1; digits < 17; ++digits) {
    char trial[32];
    std::snprintf(trial, sizeof trial, "%.*g", digits, x);
    if (std::strtod(trial, nullptr) == x) return trial;
  }
  return buf;
}

}  // namespace

JacobiExponents::JacobiExponents(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("Jacobi exponents must be finite");
  }
  if (!(alpha > -1.0)) {
    throw DomainError("Jacobi exponent alpha must satisfy alpha > -1 (got " +
                      shortest(alpha) + ")");
  }
  if (!(beta > -1.0)) {
    throw DomainError("Jacobi exponent beta must satisfy beta > -1 (got " +
                      shortest(beta) + ")");
  }
}

namespace {

// d^p for a distance d >= 0, with the conventions 0^0 = 1 and 0^{-p} = inf.
double endpoint_factor(double distance, double power) {
  if (power == 0.0) return 1.0;
  if (distance == 0.0) {
    return power > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::pow(distance, power);
}

}  // namespace

double weight_from_distances(const JacobiExponents& e, double one_minus_t,
                             double one_plus_t) {
  const double value =
      endpoint_factor(one_minus_t, e.alpha()) * endpoint_factor(one_plus_t, e.beta());
  // inf * 0 arises only when both distances degenerate, which no caller produces.
  return std::isnan(value) ? std::numeric_limits<double>::infinity() : value;
}

double weight_value(const JacobiExponents& e, double t) {
  if (!(t > -1.0 && t < 1.0)) {
    throw DomainError("weight_value: t must lie in the open interval (-1, 1)");
  }
  return weight_from_distances(e, 1.0 - t, 1.0 + t);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("log_beta: arguments must be positive");
  }
  // Arguments are positive, so every Gamma value is positive and the sign
  // reported by lgamma_r is always +1.
  int sign = 0;
  const double la = ::lgamma_r(a, &sign);
  const double lb = ::lgamma_r(b, &sign);
  const double lab = ::lgamma_r(a + b, &sign);
  return la + lb - lab;
}

double zeroth_moment(const JacobiExponents& e) {
  const double a = e.alpha();
  const double b = e.beta();
  return std::exp((a + b + 1.0) * std::log(2.0) + log_beta(a + 1.0, b + 1.0));
}

double endpoint_power_moment(const JacobiExponents& e, double sigma) {
  const double a = e.alpha();
  const double b = e.beta();
  if (!(sigma + b > -1.0)) {
    throw DomainError("endpoint_power_moment: requires sigma + beta > -1");
  }
  return std::exp((sigma + a + b + 1.0) * std::log(2.0) +
                  log_beta(a + 1.0, sigma + b + 1.0));
}

std::vector<double> monomial_moments(const JacobiExponents& e, int max_k) {
  if (max_k < 0) throw DomainError("monomial_moments: max_k must be nonnegative");
  const double a = e.alpha();
  const double b = e.beta();
  // Integrating d/dt [t^k (1-t)^{a+1} (1+t)^{b+1}] over [-1,1] gives
  //   (k + a + b + 2) M_{k+1} = k M_{k-1} + (b - a) M_k.
  std::vector<double> m(static_cast<std::size_t>(max_k) + 1);
  m[0] = zeroth_moment(e);
  if (max_k >= 1) m[1] = (b - a) * m[0] / (a + b + 2.0);
  for (int k = 1; k < max_k; ++k) {
    m[k + 1] = (k * m[k - 1] + (b - a) * m[k]) / (k + a + b + 2.0);
  }
  return m;
}

double monomial_moment(const JacobiExponents& e, int k) {
  return monomial_moments(e, k).back();
}

RecurrenceData::RecurrenceData(const JacobiExponents& e, int degree_cap)
    : exponents_(e), degree_cap_(degree_cap) {
  if (degree_cap < 1) throw DomainError("recurrence: degree cap must be >= 1");
  const double a = e.alpha();
  const double b = e.beta();
  const double ab = a + b;
  const auto size = static_cast<std::size_t>(degree_cap) + 1;
  diag_.resize(size);
  offdiag_sq_.resize(size);

  diag_[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k <= degree_cap; ++k) {
    const double s = 2.0 * k + ab;
    diag_[k] = (b - a) * (b + a) / (s * (s + 2.0));
  }

  offdiag_sq_[0] = zeroth_moment(e);
  offdiag_sq_[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
  for (int k = 2; k <= degree_cap; ++k) {
    const double s = 2.0 * k + ab;
    offdiag_sq_[k] =
        4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
  }
}

double RecurrenceData::leading_ratio(int n) const {
  if (n < 1 || n > degree_cap_) throw DomainError("leading_ratio: degree out of range");
  return 1.0 / std::sqrt(offdiag_sq_[n]);
}

double RecurrenceData::leading_coefficient(int n) const {
  if (n < 0 || n > degree_cap_) throw DomainError("leading_coefficient: degree out of range");
  double log_gamma = 0.0;
  for (int k = 0; k <= n; ++k) log_gamma -= 0.5 * std::log(offdiag_sq_[k]);
  return std::exp(log_gamma);
}

RecurrenceData recurrence(const JacobiExponents& e, int degree_cap) {
  return RecurrenceData(e, degree_cap);
}

PolyValue eval_orthonormal(const RecurrenceData& r, int n, double t) {
  if (n < 0 || n > r.degree_cap()) {
    throw DomainError("eval_orthonormal: degree " + std::to_string(n) +
                      " exceeds recurrence cap " + std::to_string(r.degree_cap()));
  }
  const auto& a = r.diag();
  const auto& b = r.offdiag_sq();
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(b[0]);
  double d_prev = 0.0;
  double d = 0.0;
  double root_b = 0.0;  // sqrt(b_k); the k = 0 term multiplies p_{-1} = 0
  for (int k = 0; k < n; ++k) {
    const double root_next = std::sqrt(b[k + 1]);
    const double p_next = ((t - a[k]) * p - root_b * p_prev) / root_next;
    const double d_next = ((t - a[k]) * d + p - root_b * d_prev) / root_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    root_b = root_next;
  }
  return {p, d};
}

std::vector<double> eval_orthonormal_all(const RecurrenceData& r, int n, double t) {
  if (n < 0 || n > r.degree_cap()) {
    throw DomainError("eval_orthonormal_all: degree exceeds recurrence cap");
  }
  const auto& a = r.diag();
  const auto& b = r.offdiag_sq();
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0 / std::sqrt(b[0]);
  if (n >= 1) p[1] = (t - a[0]) * p[0] / std::sqrt(b[1]);
  for (int k = 1; k < n; ++k) {
    p[k + 1] = ((t - a[k]) * p[k] - std::sqrt(b[k]) * p[k - 1]) / std::sqrt(b[k + 1]);
  }
  return p;
}

}  // namespace gjl
