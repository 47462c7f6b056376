#include "gjl/tridiagonal_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gjl/errors.hpp"

namespace gjl {

TridiagonalEigen tridiagonal_eigen(std::span<const double> diag,
                                   std::span<const double> offdiag, int max_sweeps) {
  const std::size_t m = diag.size();
  if (m == 0) throw DomainError("tridiagonal_eigen: empty matrix");
  if (offdiag.size() + 1 != m) {
    throw DomainError("tridiagonal_eigen: off-diagonal must have m-1 entries");
  }

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(m, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  // First row of the accumulated rotation matrix, starting from the identity.
  std::vector<double> z(m, 0.0);
  z[0] = 1.0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < m; ++l) {
    int sweeps = 0;
    std::size_t split = l;
    do {
      for (split = l; split + 1 < m; ++split) {
        const double dd = std::fabs(d[split]) + std::fabs(d[split + 1]);
        if (std::fabs(e[split]) <= eps * dd) break;
      }
      if (split == l) break;
      if (++sweeps > max_sweeps) {
        throw ConvergenceError("tridiagonal_eigen: eigenvalue " + std::to_string(l) +
                               " not converged after " + std::to_string(max_sweeps) +
                               " QL sweeps");
      }

      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[split] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = split; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Recover from underflow: deflate and restart this eigenvalue.
          d[i + 1] -= p;
          e[split] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;

        const double zf = z[i + 1];
        z[i + 1] = s * z[i] + c * zf;
        z[i] = c * z[i] - s * zf;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[split] = 0.0;
    } while (true);
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  TridiagonalEigen out;
  out.eigenvalues.reserve(m);
  out.first_components.reserve(m);
  for (auto i : order) {
    out.eigenvalues.push_back(d[i]);
    out.first_components.push_back(z[i]);
  }
  return out;
}

}  // namespace gjl
