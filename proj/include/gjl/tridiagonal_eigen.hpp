#pragma once

#include <span>
#include <vector>

namespace gjl {

struct TridiagonalEigen {
  std::vector<double> eigenvalues;       ///< ascending
  std::vector<double> first_components;  ///< first row of the eigenvector matrix, same order
};

/// Symmetric tridiagonal eigenproblem by implicit-shift QL. Only the first
/// component of each normalized eigenvector is accumulated.
///
/// diag has m entries, offdiag has m-1 (offdiag[i] couples rows i and i+1).
/// Throws ConvergenceError when an eigenvalue needs more than
/// max_sweeps implicit QL sweeps.
TridiagonalEigen tridiagonal_eigen(std::span<const double> diag,
                                   std::span<const double> offdiag,
                                   int max_sweeps = 60);

}  // namespace gjl
