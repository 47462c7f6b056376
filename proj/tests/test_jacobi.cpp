#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gjl/errors.hpp"
#include "gjl/gauss.hpp"
#include "gjl/jacobi.hpp"
#include "gjl/oracle.hpp"
#include "test_support.hpp"

using namespace gjl;
using gjl::testing::kGrid;
using gjl::testing::rel_err;

TEST_CASE("exponents are validated") {
  CHECK_THROWS_AS(JacobiExponents(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(JacobiExponents(0.0, -1.5), DomainError);
  CHECK_THROWS_AS(JacobiExponents(NAN, 0.0), DomainError);
  CHECK_THROWS_AS(JacobiExponents(0.0, INFINITY), DomainError);
  CHECK_NOTHROW(JacobiExponents(-0.999, 100.0));
  const JacobiExponents e(0.25, -0.5);
  CHECK(e.shifted(1, 1) == JacobiExponents(1.25, 0.5));
}

TEST_CASE("weight_value") {
  CHECK(weight_value({0, 0}, 0.5) == 1.0);
  CHECK(weight_value({1, 1}, 0.0) == 1.0);
  CHECK(weight_value({-0.5, -0.5}, 0.0) == 1.0);
  CHECK(weight_value({-0.5, -0.5}, 0.6) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK_THROWS_AS(weight_value({0, 0}, 1.0), DomainError);
  CHECK_THROWS_AS(weight_value({0, 0}, -1.2), DomainError);
  // Increases toward an endpoint carrying a negative exponent, decreases toward a positive one.
  CHECK(weight_value({-0.5, 2.0}, 0.999) > weight_value({-0.5, 2.0}, 0.99));
  CHECK(weight_value({-0.5, 2.0}, -0.999) < weight_value({-0.5, 2.0}, -0.99));
  CHECK(std::isinf(weight_from_distances({-0.9, 0}, 0.0, 2.0)));
  CHECK(weight_from_distances({0.5, 0}, 0.0, 2.0) == 0.0);
}

TEST_CASE("zeroth_moment") {
  CHECK(zeroth_moment({0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(zeroth_moment({-0.5, -0.5}) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  const auto oracle = reference_integral({1, 0}, [](double) { return 1.0; });
  CHECK(std::fabs(oracle.value - 2.0) < 1e-14);
  CHECK(rel_err(zeroth_moment({1, 0}), oracle.value) < 1e-14);

  SUBCASE("agrees with tanh-sinh across the grid") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const JacobiExponents e(a, b);
        const auto ref = reference_integral(e, [](double) { return 1.0; });
        CAPTURE(a);
        CAPTURE(b);
        CHECK(std::fabs(zeroth_moment(e) - ref.value) <= 1e-13 * ref.value);
      }
    }
  }
}

TEST_CASE("monomial_moment") {
  CHECK(monomial_moment({0, 0}, 1) == 0.0);
  CHECK(monomial_moment({0, 0}, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // Oracle value -1.5707963267948966 from tanh-sinh, equal to -pi/2.
  const auto oracle = reference_integral({0.5, -0.5}, [](double t) { return t; });
  CHECK(std::fabs(oracle.value + std::numbers::pi / 2) < 1e-14);
  CHECK(rel_err(monomial_moment({0.5, -0.5}, 1), -std::numbers::pi / 2) < 1e-15);

  SUBCASE("k <= 8 against tanh-sinh on the grid") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const JacobiExponents e(a, b);
        const auto m = monomial_moments(e, 8);
        for (int k = 0; k <= 8; ++k) {
          const auto ref = reference_integral(e, [k](double t) { return std::pow(t, k); });
          // Relative to int |t|^k w, since odd moments may vanish.
          const auto scale = reference_integral(
              e, [k](double t) { return std::pow(std::fabs(t), k); }, {.breakpoints = {0.0}});
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(k);
          CHECK(std::fabs(m[k] - ref.value) <= 1e-13 * scale.value);
        }
      }
    }
  }
}

TEST_CASE("recurrence closed forms match the moment-based Stieltjes procedure") {
  const auto legendre = recurrence({0, 0}, 10);
  for (double a : legendre.diag()) CHECK(a == 0.0);
  CHECK(legendre.offdiag_sq()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  for (double a : kGrid) {
    for (double b : kGrid) {
      const JacobiExponents e(a, b);
      std::vector<long double> moments;
      for (int k = 0; k <= 7; ++k) {
        moments.push_back(reference_integral(e, [k](double t) { return std::pow(t, k); }).value);
      }
      const auto brute = gjl::testing::recurrence_from_moments(moments, 4);
      const auto r = recurrence(e, 3);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(r.offdiag_sq()[0] == doctest::Approx(zeroth_moment(e)).epsilon(1e-13));
      for (int k = 0; k <= 3; ++k) {
        CHECK(std::fabs(r.diag()[k] - static_cast<double>(brute.a[k])) < 1e-12);
        CHECK(rel_err(r.offdiag_sq()[k], static_cast<double>(brute.b[k])) < 1e-12);
      }
      for (int k = 1; k <= 3; ++k) CHECK(r.offdiag_sq()[k] > 0.0);
    }
  }
}

TEST_CASE("leading coefficient ratios stay bounded") {
  for (double a : kGrid) {
    for (double b : kGrid) {
      const auto r = recurrence({a + 1, b + 1}, 600);
      for (int n = 16; n <= 600; ++n) {
        const double ratio = r.leading_ratio(n);
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 2.5);
      }
      CHECK(r.leading_ratio(5) == doctest::Approx(r.leading_coefficient(5) / r.leading_coefficient(4)));
    }
  }
  CHECK_THROWS_AS(recurrence({0, 0}, 4).leading_ratio(5), DomainError);
}

TEST_CASE("eval_orthonormal") {
  const auto legendre = recurrence({0, 0}, 20);
  for (double t : {-1.0, -0.3, 0.0, 0.7}) {
    CHECK(eval_orthonormal(legendre, 0, t).value == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(eval_orthonormal(legendre, 0, t).derivative == 0.0);
    CHECK(eval_orthonormal(legendre, 1, t).value ==
          doctest::Approx(std::sqrt(1.5) * t).epsilon(1e-15));
  }
  CHECK_THROWS_AS(eval_orthonormal(legendre, 21, 0.0), DomainError);

  SUBCASE("positive at t = 1") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const auto r = recurrence({a, b}, 128);
        for (int n = 0; n <= 128; ++n) CHECK(eval_orthonormal(r, n, 1.0).value > 0.0);
      }
    }
  }

  SUBCASE("orthonormal under a sufficiently large Gauss rule") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const JacobiExponents e(a, b);
        const auto r = recurrence(e, 20);
        const auto rule = gauss_rule(e, 21);
        double worst = 0.0;
        for (int n = 0; n <= 20; ++n) {
          for (int m = 0; m <= n; ++m) {
            double s = 0.0;
            for (std::size_t k = 0; k < rule.size(); ++k) {
              const double x = rule.nodes()[k];
              s += rule.weights()[k] * eval_orthonormal(r, n, x).value *
                   eval_orthonormal(r, m, x).value;
            }
            worst = std::max(worst, std::fabs(s - (n == m ? 1.0 : 0.0)));
          }
        }
        CAPTURE(a);
        CAPTURE(b);
        CHECK(worst <= 1e-11);
      }
    }
  }

  SUBCASE("derivative matches central differences") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const auto r = recurrence({a, b}, 30);
        for (int n : {1, 5, 17, 30}) {
          for (double t : {-0.83, -0.2, 0.31, 0.9}) {
            const double h = 1e-6;
            const double fd = (eval_orthonormal(r, n, t + h).value -
                               eval_orthonormal(r, n, t - h).value) / (2 * h);
            const double d = eval_orthonormal(r, n, t).derivative;
            CHECK(std::fabs(d - fd) <= 1e-5 * std::max(std::fabs(d), 1.0));
          }
        }
      }
    }
  }

  SUBCASE("eval_orthonormal_all agrees with single-degree evaluation") {
    const auto r = recurrence({0.5, 2.5}, 40);
    const auto all = eval_orthonormal_all(r, 40, 0.37);
    for (int n = 0; n <= 40; ++n) CHECK(all[n] == eval_orthonormal(r, n, 0.37).value);
  }
}

TEST_CASE("endpoint values grow like n^{gamma+1/2} and n^{delta+1/2}") {
  // Brackets of p_n(1)/n^{gamma+1/2} and |p_n(-1)|/n^{delta+1/2} observed
  // over n = 8..512 and widened by 5%.
  struct Case {
    double gamma, delta, lo_right, hi_right, lo_left, hi_left;
  };
  const Case cases[] = {
      {-0.5, -0.5, 0.797885, 0.797885, 0.797885, 0.797885},
      {0.0, 0.1, 0.966455, 0.998589, 1.015986, 1.056715},
      {1.0, -0.5, 0.842745, 0.961484, 0.474425, 0.474715},
      {1.5, 3.5, 0.134542, 0.246457, 0.015557, 0.053142},
      {3.5, 3.5, 0.007839, 0.036599, 0.007839, 0.036599},
  };
  for (const auto& c : cases) {
    const auto r = recurrence({c.gamma, c.delta}, 512);
    for (int n = 8; n <= 512; n *= 2) {
      const double right = eval_orthonormal(r, n, 1.0).value / std::pow(n, c.gamma + 0.5);
      const double left = std::fabs(eval_orthonormal(r, n, -1.0).value) / std::pow(n, c.delta + 0.5);
      CAPTURE(c.gamma);
      CAPTURE(c.delta);
      CAPTURE(n);
      CHECK(right >= 0.95 * c.lo_right);
      CHECK(right <= 1.05 * c.hi_right);
      CHECK(left >= 0.95 * c.lo_left);
      CHECK(left <= 1.05 * c.hi_left);
    }
  }
}
