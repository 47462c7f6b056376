#include "gjl/integrands.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <set>

#include "gjl/double_double.hpp"
#include "gjl/errors.hpp"

namespace gjl {

namespace {

struct Entry {
  IntegrandName name;
  std::string_view text;
  std::set<std::string, std::less<>> required;
  std::set<std::string, std::less<>> optional;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {IntegrandName::poly, "poly", {}, {"degree"}},
      {IntegrandName::abs_pow, "abs_pow", {"s"}, {}},
      {IntegrandName::endpoint_pow, "endpoint_pow", {"sigma"}, {}},
      {IntegrandName::runge, "runge", {}, {"c"}},
      {IntegrandName::exp_t, "exp_t", {}, {}},
      {IntegrandName::sharpness, "sharpness", {}, {}},
  };
  return entries;
}

const Entry& entry_for(IntegrandName name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown integrand");
}

double param_or(const IntegrandSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : it->second;
}

std::string format_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

ReferenceValue exact_one() {
  ReferenceValue r;
  r.value = 1.0;
  r.method = ReferenceMethod::closed_form;
  r.estimated_accuracy = std::numeric_limits<double>::epsilon();
  return r;
}

}  // namespace

std::string_view to_string(IntegrandName name) { return entry_for(name).text; }

IntegrandSpec parse_integrand(std::string_view name, std::span<const std::string> params) {
  const Entry* entry = nullptr;
  for (const auto& e : registry()) {
    if (e.text == name) entry = &e;
  }
  if (entry == nullptr) {
    throw DomainError("unknown integrand '" + std::string(name) +
                      "' (expected poly, abs_pow, endpoint_pow, runge, exp_t or sharpness)");
  }
  IntegrandSpec spec{entry->name, {}};
  for (const auto& item : params) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DomainError("parameter '" + item + "' is not of the form key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    if (!entry->required.contains(key) && !entry->optional.contains(key)) {
      throw DomainError("integrand " + std::string(name) + " has no parameter '" + key + "'");
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
      throw DomainError("parameter " + key + " has invalid value '" + text + "'");
    }
    spec.parameters[key] = value;
  }
  for (const auto& key : entry->required) {
    if (!spec.parameters.contains(key)) {
      throw DomainError("integrand " + std::string(name) + " requires --param " + key + "=<value>");
    }
  }
  switch (spec.name) {
    case IntegrandName::poly:
      if (spec.parameters.contains("degree")) {
        const double d = spec.parameters["degree"];
        if (d < 0 || d != std::floor(d) || d > 4096) {
          throw DomainError("poly degree must be an integer in [0, 4096]");
        }
      }
      break;
    case IntegrandName::abs_pow:
      if (!(spec.parameters["s"] > 0.0)) throw DomainError("abs_pow requires s > 0");
      break;
    case IntegrandName::endpoint_pow:
      if (!(spec.parameters["sigma"] > 0.0)) throw DomainError("endpoint_pow requires sigma > 0");
      break;
    case IntegrandName::runge:
      if (!(param_or(spec, "c", 25.0) > 0.0)) throw DomainError("runge requires c > 0");
      break;
    default:
      break;
  }
  return spec;
}

std::string integrand_id(const IntegrandSpec& spec) {
  std::string id(to_string(spec.name));
  if (spec.parameters.empty()) return id;
  id += '(';
  bool first = true;
  for (const auto& [key, value] : spec.parameters) {
    if (!first) id += ',';
    first = false;
    id += key + '=' + format_number(value);
  }
  id += ')';
  return id;
}

std::vector<double> random_polynomial(std::uint64_t seed, int degree) {
  if (degree < 0) throw DomainError("random_polynomial: degree must be nonnegative");
  std::mt19937_64 engine(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(degree));
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) {
    // 53 random bits mapped onto [-1, 1); distribution objects are not
    // specified bit-for-bit across standard libraries.
    v = std::ldexp(static_cast<double>(engine() >> 11), -52) - 1.0;
  }
  return c;
}

double eval_polynomial(std::span<const double> coefficients, double t) {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double polynomial_integral(const JacobiExponents& e, std::span<const double> coefficients) {
  if (coefficients.empty()) return 0.0;
  const auto moments = monomial_moments(e, static_cast<int>(coefficients.size()) - 1);
  DoubleDouble sum;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    sum += DoubleDouble::two_prod(coefficients[k], moments[k]);
  }
  return static_cast<double>(sum);
}

IntegrandFamily make_family(const IntegrandSpec& spec, const JacobiExponents& e,
                            std::uint64_t seed) {
  IntegrandFamily family;
  family.id = integrand_id(spec);
  switch (spec.name) {
    case IntegrandName::poly: {
      const int fixed_degree = static_cast<int>(param_or(spec, "degree", -1.0));
      const auto degree_for = [fixed_degree](int n) {
        return fixed_degree >= 0 ? fixed_degree : 2 * n + 1;
      };
      family.at = [=](int n) {
        auto c = random_polynomial(seed, degree_for(n));
        return std::function<double(double)>(
            [c = std::move(c)](double t) { return eval_polynomial(c, t); });
      };
      family.reference = [=](int n) {
        const auto c = random_polynomial(seed, degree_for(n));
        ReferenceValue r;
        r.method = ReferenceMethod::closed_form;
        r.value = polynomial_integral(e, c);
        double scale = 0.0;
        for (double v : c) scale += std::fabs(v);
        r.estimated_accuracy = 4.0 * static_cast<double>(c.size()) *
                               std::numeric_limits<double>::epsilon() * scale *
                               zeroth_moment(e);
        return r;
      };
      break;
    }
    case IntegrandName::abs_pow: {
      const double s = spec.parameters.at("s");
      family.at = [s](int) {
        return std::function<double(double)>([s](double t) { return std::pow(std::fabs(t), s); });
      };
      ReferenceValue ref = e.alpha() == e.beta()
                               ? closed_form_reference(ClosedForm::abs_pow_symmetric, e, s)
                               : reference_integral(
                                     e, [s](double t) { return std::pow(std::fabs(t), s); },
                                     {.max_level = 12, .breakpoints = {0.0}});
      family.reference = [ref](int) { return ref; };
      break;
    }
    case IntegrandName::endpoint_pow: {
      const double sigma = spec.parameters.at("sigma");
      family.at = [sigma](int) {
        return std::function<double(double)>(
            [sigma](double t) { return std::pow(1.0 + t, sigma); });
      };
      const auto ref = closed_form_reference(ClosedForm::endpoint_pow, e, sigma);
      family.reference = [ref](int) { return ref; };
      break;
    }
    case IntegrandName::runge: {
      const double c = param_or(spec, "c", 25.0);
      const auto f = [c](double t) { return 1.0 / (1.0 + c * t * t); };
      family.at = [f](int) { return std::function<double(double)>(f); };
      const auto ref = reference_integral(e, f, {.max_level = 12, .breakpoints = {}});
      family.reference = [ref](int) { return ref; };
      break;
    }
    case IntegrandName::exp_t: {
      const auto f = [](double t) { return std::exp(t); };
      family.at = [f](int) { return std::function<double(double)>(f); };
      const auto ref = reference_integral(e, f, {.max_level = 12, .breakpoints = {}});
      family.reference = [ref](int) { return ref; };
      break;
    }
    case IntegrandName::sharpness: {
      family.at = [e](int n) {
        auto r = std::make_shared<const RecurrenceData>(e.shifted(1.0, 1.0), n);
        return std::function<double(double)>([r, n](double t) {
          const double p = eval_orthonormal(*r, n, t).value;
          return (1.0 - t) * (1.0 + t) * p * p;
        });
      };
      family.reference = [](int) { return exact_one(); };
      break;
    }
  }
  return family;
}

}  // namespace gjl
