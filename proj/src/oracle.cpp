#include "gjl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gjl/double_double.hpp"
#include "gjl/errors.hpp"

namespace gjl {

std::string_view to_string(ReferenceMethod method) {
  return method == ReferenceMethod::closed_form ? "closed_form" : "tanh_sinh";
}

namespace {

constexpr double kLogTruncation = -92.1;  // ln(1e-40)
constexpr double kMaxAbscissa = 10.0;

// log(d^p) with the conventions used by weight_from_distances.
double log_endpoint_factor(double log_distance, double power) {
  return power == 0.0 ? 0.0 : power * log_distance;
}

struct Sample {
  double term;       // f * w * dx/du
  double log_mag;    // log(w * dx/du)
};

// One subinterval [a, b] of [-1, 1] under x = c + hw tanh((pi/2) sinh u).
class MappedInterval {
 public:
  MappedInterval(const JacobiExponents& e, const OracleIntegrand& f, double a, double b)
      : e_(e), f_(f), a_(a), b_(b), half_width_(0.5 * (b - a)) {}

  Sample at(double u) const {
    const double v = 0.5 * std::numbers::pi * std::sinh(u);
    const double log_q = -2.0 * std::fabs(v);
    const double q = std::exp(log_q);
    const double log1p_q = std::log1p(q);
    // Distance to the nearer endpoint of [a, b] and to the farther one.
    const double log_near = std::log(2.0 * half_width_) + log_q - log1p_q;
    const double near = std::exp(log_near);
    const double far = 2.0 * half_width_ / (1.0 + q);

    OraclePoint pt{};
    double log_one_minus;
    double log_one_plus;
    if (v >= 0.0) {
      pt.t = b_ - near;
      pt.one_minus_t = (1.0 - b_) + near;
      pt.one_plus_t = (1.0 + a_) + far;
      log_one_minus = b_ == 1.0 ? log_near : std::log(pt.one_minus_t);
      log_one_plus = std::log(pt.one_plus_t);
    } else {
      pt.t = a_ + near;
      pt.one_plus_t = (1.0 + a_) + near;
      pt.one_minus_t = (1.0 - b_) + far;
      log_one_plus = a_ == -1.0 ? log_near : std::log(pt.one_plus_t);
      log_one_minus = std::log(pt.one_minus_t);
    }

    const double log_weight = log_endpoint_factor(log_one_minus, e_.alpha()) +
                              log_endpoint_factor(log_one_plus, e_.beta());
    // dx/du = hw (pi/2) cosh(u) sech^2(v), sech^2(v) = 4q / (1+q)^2
    const double log_jacobian = std::log(half_width_ * 0.5 * std::numbers::pi) +
                                std::log(std::cosh(u)) + std::log(4.0) + log_q -
                                2.0 * log1p_q;
    const double log_mag = log_weight + log_jacobian;
    const double mag = std::exp(log_mag);
    if (mag == 0.0) return {0.0, log_mag};
    const double value = f_(pt);
    if (!std::isfinite(value)) {
      throw EvaluationError("oracle integrand is not finite", pt.t);
    }
    return {value * mag, log_mag};
  }

  // Sum of samples at u = offset + j * stride and their mirror images, j >= 0,
  // until the weight factor falls below 1e-40 of its running maximum.
  void accumulate(double offset, double stride, DoubleDouble& sum, double& abs_sum,
                  double& log_max) const {
    for (double sign : {1.0, -1.0}) {
      if (offset == 0.0 && sign < 0.0) {
        // u = 0 already counted; continue from the first nonzero abscissa.
        march(sign, stride, stride, sum, abs_sum, log_max);
      } else {
        march(sign, offset, stride, sum, abs_sum, log_max);
      }
    }
  }

 private:
  void march(double sign, double start, double stride, DoubleDouble& sum,
             double& abs_sum, double& log_max) const {
    for (double u = start; u <= kMaxAbscissa; u += stride) {
      const Sample s = at(sign * u);
      log_max = std::max(log_max, s.log_mag);
      sum += s.term;
      abs_sum += std::fabs(s.term);
      if (u > 1.0 && s.log_mag - log_max < kLogTruncation) break;
    }
  }

  const JacobiExponents& e_;
  const OracleIntegrand& f_;
  double a_;
  double b_;
  double half_width_;
};

}  // namespace

ReferenceValue reference_integral(const JacobiExponents& e, const OracleIntegrand& f,
                                  const TanhSinhOptions& options) {
  if (options.max_level < 4 || options.max_level > 12) {
    throw DomainError("reference_integral: max_level must lie in [4, 12]");
  }
  std::vector<double> cuts{-1.0};
  std::vector<double> interior = options.breakpoints;
  std::sort(interior.begin(), interior.end());
  for (double p : interior) {
    if (!(p > -1.0 && p < 1.0)) throw DomainError("reference_integral: breakpoint outside (-1, 1)");
    if (p > cuts.back()) cuts.push_back(p);
  }
  cuts.push_back(1.0);

  std::vector<MappedInterval> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) pieces.emplace_back(e, f, cuts[i], cuts[i + 1]);

  std::vector<DoubleDouble> sums(pieces.size());
  std::vector<double> abs_sums(pieces.size(), 0.0);
  std::vector<double> log_max(pieces.size(), -std::numeric_limits<double>::infinity());

  ReferenceValue out;
  out.method = ReferenceMethod::tanh_sinh;
  out.converged = false;
  double previous = 0.0;
  for (int level = 0; level <= options.max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    DoubleDouble total;
    double l1 = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (level == 0) {
        pieces[i].accumulate(0.0, 1.0, sums[i], abs_sums[i], log_max[i]);
      } else {
        pieces[i].accumulate(h, 2.0 * h, sums[i], abs_sums[i], log_max[i]);
      }
      total += sums[i] * h;
      l1 += abs_sums[i] * h;
    }
    const double current = static_cast<double>(total);
    out.value = current;
    out.levels_used = level;
    if (level > 0) {
      const double diff = std::fabs(current - previous);
      out.level_differences.push_back(diff);
      const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(l1, 1e-300);
      if (level >= 3 && diff <= floor) {
        out.converged = true;
        out.estimated_accuracy = floor;
        break;
      }
      out.estimated_accuracy = diff;
    }
    previous = current;
  }
  return out;
}

ReferenceValue reference_integral(const JacobiExponents& e,
                                  const std::function<double(double)>& f,
                                  const TanhSinhOptions& options) {
  const OracleIntegrand wrapped = [&f](const OraclePoint& p) { return f(p.t); };
  return reference_integral(e, wrapped, options);
}

ReferenceValue closed_form_reference(ClosedForm name, const JacobiExponents& e,
                                     double parameter) {
  ReferenceValue out;
  out.method = ReferenceMethod::closed_form;
  switch (name) {
    case ClosedForm::abs_pow_symmetric:
      if (e.alpha() != e.beta()) {
        throw DomainError("abs_pow_symmetric reference requires alpha == beta");
      }
      if (!(parameter > -1.0)) throw DomainError("abs_pow_symmetric reference requires s > -1");
      out.value = std::exp(log_beta(0.5 * (parameter + 1.0), e.alpha() + 1.0));
      break;
    case ClosedForm::endpoint_pow:
      out.value = endpoint_power_moment(e, parameter);
      break;
    case ClosedForm::monomial: {
      const int k = static_cast<int>(parameter);
      if (k < 0 || k != parameter) throw DomainError("monomial reference requires integer k >= 0");
      out.value = monomial_moment(e, k);
      break;
    }
  }
  // lgamma/exp round-off: a few ulps of the value.
  out.estimated_accuracy = 16.0 * std::numeric_limits<double>::epsilon() * std::fabs(out.value);
  return out;
}

}  // namespace gjl
