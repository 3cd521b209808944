#pragma once

#include <vector>

#include "supergraph/matrix.hpp"
#include "supergraph/spectrum.hpp"

namespace supergraph {

struct JacobiOptions {
  double symmetry_tol = 1e-12;     // relative to the largest |entry|
  double convergence_tol = 1e-12;  // off-diagonal Frobenius norm relative to ||M||_F
  double negligible_tol = 1e-14;   // entries below this times ||M||_F are zeroed, not rotated
  double grouping_tol = 1e-8;      // scaled by max(1, ||M||_F)
  int max_sweeps = 100;
};

// Every eigenvalue of a real symmetric matrix by cyclic Jacobi rotations,
// ascending. Throws NotSymmetric or NoConvergence.
std::vector<double> jacobi_eigenvalues_sorted(const RealMatrix& m, const JacobiOptions& opts = {});
// Same, grouped into multiplicities; a group whose value is within the
// grouping tolerance of an integer is reported as that integer.
Spectrum jacobi_eigenvalues(const RealMatrix& m, const JacobiOptions& opts = {});

double frobenius_norm(const RealMatrix& m);

// Cauchy interlacing: with full eigenvalues l_1 <= ... <= l_n and those of
// an m x m principal submatrix b_1 <= ... <= b_m, checks
// l_k <= b_k <= l_{k+n-m} for every k, allowing `slack`.
bool interlacing_check(const std::vector<double>& full, const std::vector<double>& sub, double slack = 1e-9);

}  // namespace supergraph
