#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gjl/analysis.hpp"
#include "gjl/errors.hpp"
#include "gjl/integrands.hpp"
#include "gjl/lobatto.hpp"
#include "gjl/verify.hpp"
#include "test_support.hpp"

using namespace gjl;
using gjl::testing::kGrid;

TEST_CASE("fit_exponent on synthetic power laws") {
  const std::vector<int> n{8, 16, 32, 64, 128, 256, 512};
  std::vector<double> exact;
  std::vector<double> wobble;
  std::vector<double> flat;
  for (std::size_t i = 0; i < n.size(); ++i) {
    exact.push_back(3.7 * std::pow(n[i], -2.0));
    wobble.push_back(3.7 * std::pow(n[i], -2.0) * (1 + 0.1 * (i % 2 == 0 ? 1 : -1)));
    flat.push_back(0.25);
  }
  CHECK(std::fabs(fit_exponent(n, exact) - 2.0) <= 1e-10);
  CHECK(std::fabs(fit_exponent(n, wobble) - 2.0) <= 0.1);
  CHECK(fit_exponent(n, flat) == 0.0);

  CHECK_THROWS_AS(fit_exponent({8, 16, 32}, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(fit_exponent({8, 16, 32, 64}, {1, 0, 1, 1}), DomainError);
}

TEST_CASE("lemma1_report") {
  CHECK_THROWS_AS(lemma1_report({0, 0}, 2), DomainError);

  const auto legendre = lemma1_report({0, 0}, 16);
  CHECK(legendre.interior_ratios.size() == 16);
  for (double r : legendre.interior_ratios) {
    CHECK(r >= 0.5);
    CHECK(r <= 2.0);
  }

  SUBCASE("matches the Chebyshev-Lobatto closed form") {
    for (int n : {32, 64, 128}) {
      const auto report = lemma1_report({-0.5, -0.5}, n);
      const auto t = [n](int k) { return -std::cos(k * std::numbers::pi / (n + 1)); };
      const auto w = [](double x) { return 1.0 / std::sqrt((1 - x) * (1 + x)); };
      const double h = std::numbers::pi / (n + 1);
      for (int k = 1; k < n; ++k) {
        const double want = h / ((t(k + 1) - t(k)) * w(t(k)));
        CHECK(std::fabs(report.interior_ratios[k - 1] - want) <= 1e-10 * want);
      }
      const double last = h / ((t(n) - t(n - 1)) * w(t(n)));
      CHECK(std::fabs(report.interior_ratios[n - 1] - last) <= 1e-10 * last);
      const double left = 0.5 * h / ((t(1) - t(0)) * w(t(1)));
      CHECK(std::fabs(report.left_end_ratio - left) <= 1e-10 * left);
      // Interior ratios span [2/3, 4/3] up to O(1/n^2): near the ends the gap
      // grows like 3h^2/2 against sqrt(1-t^2) ~ h.
      const auto [lo, hi] = std::minmax_element(report.interior_ratios.begin(),
                                                report.interior_ratios.end());
      CHECK(*lo == doctest::Approx(2.0 / 3.0).epsilon(0.01));
      CHECK(*hi == doctest::Approx(4.0 / 3.0).epsilon(0.01));
    }
  }

  SUBCASE("ratios are uniformly bounded in n over the grid") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        double lo = INFINITY;
        double hi = 0.0;
        std::vector<double> ends;
        for (int n = 8; n <= 512; n *= 2) {
          const auto r = lemma1_report({a, b}, n);
          for (double v : r.interior_ratios) {
            CHECK((std::isfinite(v) && v > 0));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
          }
          CHECK(r.left_end_ratio > 0);
          CHECK(r.right_end_ratio > 0);
          ends.push_back(std::max(r.left_end_ratio, r.right_end_ratio));
        }
        CAPTURE(a);
        CAPTURE(b);
        CHECK(hi / lo <= kInteriorRatioSpread);
        CHECK(*std::max_element(ends.begin(), ends.end()) <= kEndpointRatioBound);
        // No drift: the largest endpoint ratio over n = 64..512 stays within
        // 10% of the largest over n = 8..32.
        const double early = *std::max_element(ends.begin(), ends.begin() + 3);
        const double late = *std::max_element(ends.begin() + 3, ends.end());
        CHECK(late <= 1.1 * early);
      }
    }
  }
}

TEST_CASE("convergence_study") {
  const JacobiExponents legendre(0, 0);
  const std::vector<int> sweep{8, 16, 32, 64, 128, 256, 512};

  SUBCASE("polynomial of degree 2n+1 is integrated exactly") {
    const auto family = make_family({IntegrandName::poly, {}}, legendre, 3);
    const auto report = convergence_study(legendre, family, sweep, 1, 0.0);
    CHECK(report.exact);
    CHECK(std::isnan(report.fitted_exponent));
    CHECK(report.bound_is_stable());
    for (double err : report.abs_errors) CHECK(err <= 1e-11 * 2.0 * 1024);
  }

  SUBCASE("sharpness witness has error exactly one") {
    for (double a : {-0.9, 0.5, 2.5}) {
      const JacobiExponents e(a, -0.5);
      const auto family = make_family({IntegrandName::sharpness, {}}, e, 0);
      const auto report = convergence_study(e, family, {4, 8, 16, 32, 64}, 1, 0.0);
      CHECK_FALSE(report.exact);
      for (double err : report.abs_errors) CHECK(std::fabs(err - 1.0) <= 1e-9);
      CHECK(std::fabs(report.fitted_exponent) < 1e-9);
    }
  }

  SUBCASE("|t|^{1/2} decays at least like n^{-3/2}") {
    const auto family = make_family({IntegrandName::abs_pow, {{"s", 0.5}}}, legendre, 0);
    CHECK(family.reference(8).value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    const auto report = convergence_study(legendre, family, sweep, 1, 1.5);
    CHECK(report.bound_is_stable());
    // First run: fitted 1.4857, bound constant 0.6751.
    CHECK(report.fitted_exponent >= 1.35);
    CHECK(report.fitted_exponent == doctest::Approx(1.4857).epsilon(1e-3));
    CHECK(report.bound_constant == doctest::Approx(0.6751).epsilon(1e-3));
  }

  SUBCASE("reference accuracy is enforced") {
    IntegrandFamily coarse;
    coarse.id = "coarse";
    coarse.at = [](int) { return std::function<double(double)>([](double t) { return std::sqrt(std::fabs(t)); }); };
    coarse.reference = [](int) {
      return ReferenceValue{4.0 / 3.0, ReferenceMethod::tanh_sinh, 1e-3, false, 4, {}};
    };
    CHECK_THROWS_AS(convergence_study(legendre, coarse, {8, 16, 32, 64, 128}, 1, 1.5), ReferenceError);

    const auto smooth = make_family({IntegrandName::exp_t, {}}, legendre, 0);
    CHECK(convergence_study(legendre, smooth, {8, 16, 32, 64}, 3, 6.0).exact);
  }

  SUBCASE("argument validation") {
    const auto family = make_family({IntegrandName::exp_t, {}}, legendre, 0);
    CHECK_THROWS_AS(convergence_study(legendre, family, {8, 16, 32}, 1, 1.0), DomainError);
    CHECK_THROWS_AS(convergence_study(legendre, family, {8, 16, 16, 32}, 1, 1.0), DomainError);
    CHECK_THROWS_AS(convergence_study(legendre, family, {1, 2, 3, 4}, 0, 1.0), DomainError);
  }

  SUBCASE("inflating scaled errors are detected") {
    ConvergenceReport report{legendre, "synthetic", 1, 2.0, {8, 16, 32, 64}, {1e-2, 1e-3, 1e-3, 1e-3},
                             {}, {}, false, 1.0, 0.0};
    CHECK_FALSE(report.bound_is_stable());
  }
}

TEST_CASE("uniform_bound_check") {
  const JacobiExponents legendre(0, 0);
  for (int n : {2, 5}) {
    const auto c = random_polynomial(11, 2 * n + 1);
    const auto check = uniform_bound_check(legendre, [&](double t) { return eval_polynomial(c, t); }, n);
    CHECK(check.holds);
    CHECK(check.lhs < 1e-13);
    CHECK(check.rhs < 1e-12);
  }

  const auto exp_check = uniform_bound_check(legendre, [](double t) { return std::exp(t); }, 4);
  CHECK(exp_check.holds);
  // First run: lhs 9.90e-10, rhs 4.40e-9.
  CHECK(exp_check.rhs >= 4.0 * exp_check.lhs);

  for (int n : {4, 8, 16}) {
    const auto runge = uniform_bound_check(legendre, [](double t) { return 1 / (1 + 25 * t * t); }, n);
    CHECK(runge.holds);
    CHECK(runge.lhs <= runge.rhs);
  }
}

TEST_CASE("integrand registry") {
  const std::vector<std::string> s_half{"s=0.5"};
  const auto spec = parse_integrand("abs_pow", s_half);
  CHECK(spec.name == IntegrandName::abs_pow);
  CHECK(integrand_id(spec) == "abs_pow(s=0.5)");

  const std::vector<std::string> none;
  const std::vector<std::string> bad_key{"q=1"};
  const std::vector<std::string> bad_value{"s=abc"};
  const std::vector<std::string> negative{"s=-1"};
  const std::vector<std::string> no_eq{"s"};
  CHECK_THROWS_AS(parse_integrand("sin", none), DomainError);
  CHECK_THROWS_AS(parse_integrand("abs_pow", none), DomainError);
  CHECK_THROWS_AS(parse_integrand("abs_pow", bad_key), DomainError);
  CHECK_THROWS_AS(parse_integrand("abs_pow", bad_value), DomainError);
  CHECK_THROWS_AS(parse_integrand("abs_pow", negative), DomainError);
  CHECK_THROWS_AS(parse_integrand("abs_pow", no_eq), DomainError);
  CHECK_THROWS_AS(parse_integrand("endpoint_pow", std::vector<std::string>{"sigma=0"}), DomainError);
  CHECK_THROWS_AS(parse_integrand("poly", std::vector<std::string>{"degree=2.5"}), DomainError);
  CHECK(parse_integrand("runge", none).parameters.empty());

  CHECK(random_polynomial(5, 7) == random_polynomial(5, 7));
  CHECK(random_polynomial(5, 7) != random_polynomial(6, 7));
  for (double c : random_polynomial(1, 200)) {
    CHECK(c >= -1.0);
    CHECK(c < 1.0);
  }

  const auto runge = make_family(parse_integrand("runge", none), JacobiExponents(0, 0), 0);
  CHECK(runge.reference(4).value == doctest::Approx(0.4 * std::atan(5.0)).epsilon(1e-14));
}
