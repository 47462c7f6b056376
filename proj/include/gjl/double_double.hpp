#pragma once

#include <cmath>

namespace gjl {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, about 32 significant digits.
/// Only the operations the quadrature code needs are provided.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT(implicit)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  static DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }

  static DoubleDouble fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
  }

  static DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  DoubleDouble& operator+=(double x) {
    DoubleDouble s = two_sum(hi, x);
    s.lo += lo;
    *this = fast_two_sum(s.hi, s.lo);
    return *this;
  }

  DoubleDouble& operator+=(const DoubleDouble& x) {
    DoubleDouble s = two_sum(hi, x.hi);
    const DoubleDouble t = two_sum(lo, x.lo);
    s.lo += t.hi;
    s = fast_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    *this = fast_two_sum(s.hi, s.lo);
    return *this;
  }

  DoubleDouble operator-() const { return {-hi, -lo}; }

  friend DoubleDouble operator+(DoubleDouble a, const DoubleDouble& b) { return a += b; }
  friend DoubleDouble operator-(DoubleDouble a, const DoubleDouble& b) { return a += -b; }

  /// double-double times double.
  friend DoubleDouble operator*(const DoubleDouble& a, double b) {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return fast_two_sum(p.hi, p.lo);
  }

  friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return fast_two_sum(p.hi, p.lo);
  }

  /// double-double divided by double.
  friend DoubleDouble operator/(const DoubleDouble& a, double b) {
    const double q1 = a.hi / b;
    const DoubleDouble r = a - two_prod(q1, b);
    const double q2 = r.hi / b;
    return fast_two_sum(q1, q2);
  }

  explicit operator double() const { return hi + lo; }
};

}  // namespace gjl
