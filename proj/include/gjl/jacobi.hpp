#pragma once

#include <cstddef>
#include <vector>

namespace gjl {

/// Exponents (alpha, beta) of the Jacobi weight (1-t)^alpha (1+t)^beta.
/// Construction validates alpha, beta > -1 and finiteness.
class JacobiExponents {
 public:
  JacobiExponents(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Exponents of (1-t)^da (1+t)^db w(t).
  JacobiExponents shifted(double da, double db) const {
    return {alpha_ + da, beta_ + db};
  }

  friend bool operator==(const JacobiExponents&, const JacobiExponents&) = default;

 private:
  double alpha_;
  double beta_;
};

/// (1-t)^alpha (1+t)^beta for t in the open interval (-1, 1).
/// Returns +inf when a negative exponent overflows near an endpoint.
double weight_value(const JacobiExponents& e, double t);

/// Same weight evaluated from the endpoint distances 1-t and 1+t, which the
/// caller may know more accurately than t itself.
double weight_from_distances(const JacobiExponents& e, double one_minus_t,
                             double one_plus_t);

/// log Beta(a, b) for a, b > 0.
double log_beta(double a, double b);

/// mu_0 = 2^{alpha+beta+1} B(alpha+1, beta+1), the total mass of the weight.
double zeroth_moment(const JacobiExponents& e);

/// Integral of t^k w(t) over [-1, 1].
double monomial_moment(const JacobiExponents& e, int k);

/// Moments t^0 .. t^max_k in one pass of the moment recurrence.
std::vector<double> monomial_moments(const JacobiExponents& e, int max_k);

/// Integral of (1+t)^sigma w(t) over [-1, 1] for sigma > -beta-1.
double endpoint_power_moment(const JacobiExponents& e, double sigma);

/// Three-term recurrence for the monic Jacobi polynomials,
///   pi_{k+1}(t) = (t - diag[k]) pi_k(t) - offdiag_sq[k] pi_{k-1}(t),
/// with offdiag_sq[0] = mu_0. Coefficients are stored for k = 0..degree_cap,
/// so orthonormal polynomials up to degree_cap and Gauss rules with up to
/// degree_cap points can be formed.
class RecurrenceData {
 public:
  RecurrenceData(const JacobiExponents& e, int degree_cap);

  const JacobiExponents& exponents() const noexcept { return exponents_; }
  int degree_cap() const noexcept { return degree_cap_; }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag_sq() const noexcept { return offdiag_sq_; }

  /// gamma_n / gamma_{n-1} for the orthonormal family, 1 <= n <= degree_cap.
  double leading_ratio(int n) const;

  /// Leading coefficient gamma_n of p_n.
  double leading_coefficient(int n) const;

 private:
  JacobiExponents exponents_;
  int degree_cap_;
  std::vector<double> diag_;
  std::vector<double> offdiag_sq_;
};

RecurrenceData recurrence(const JacobiExponents& e, int degree_cap);

struct PolyValue {
  double value;
  double derivative;
};

/// Orthonormal p_n(t) and p_n'(t) by the forward recurrence.
PolyValue eval_orthonormal(const RecurrenceData& r, int n, double t);

/// p_0(t) .. p_n(t) in one sweep.
std::vector<double> eval_orthonormal_all(const RecurrenceData& r, int n, double t);

}  // namespace gjl
