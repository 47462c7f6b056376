#pragma once

#include <cmath>
#include <vector>

namespace gjl::testing {

inline const std::vector<double> kGrid{-0.9, -0.5, 0.0, 0.5, 2.5};

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

/// Monic orthogonal recurrence from raw moments by Stieltjes' procedure with
/// long double inner products <p, q> = sum p_i q_j M_{i+j}. Independent of
/// the closed-form coefficients; only usable for small degrees.
struct MomentRecurrence {
  std::vector<long double> a;
  std::vector<long double> b;
};

inline MomentRecurrence recurrence_from_moments(const std::vector<long double>& moments,
                                                int count) {
  const auto inner = [&](const std::vector<long double>& p, const std::vector<long double>& q) {
    long double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) s += p[i] * q[j] * moments[i + j];
    return s;
  };
  const auto times_t = [](const std::vector<long double>& p) {
    std::vector<long double> out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
    return out;
  };
  MomentRecurrence r;
  std::vector<long double> prev{};
  std::vector<long double> cur{1};
  long double prev_norm = 0;
  for (int k = 0; k < count; ++k) {
    const long double norm = inner(cur, cur);
    const long double ak = inner(times_t(cur), cur) / norm;
    r.a.push_back(ak);
    r.b.push_back(k == 0 ? norm : norm / prev_norm);
    auto next = times_t(cur);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] -= ak * cur[i];
    if (k > 0) {
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= r.b.back() * prev[i];
    }
    prev = cur;
    prev_norm = norm;
    cur = next;
  }
  return r;
}

}  // namespace gjl::testing
