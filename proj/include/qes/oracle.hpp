#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qes/model.hpp"
#include "qes/spectrum.hpp"

namespace qes {

struct TridiagonalSymmetric {
  Eigen::VectorXd diag;     // n entries
  Eigen::VectorXd offdiag;  // n-1 entries
};

/// Number of eigenvalues strictly below sigma (Sturm sequence / LDL^T pivots).
int sturm_count_below(const TridiagonalSymmetric& T, double sigma);

/// k smallest eigenvalues by Sturm bisection. abs_tol bounds the arithmetic
/// bisection error; the O(h^2) discretization error of a finite-difference
/// operator is the caller's concern.
std::vector<double> tridiagonal_smallest(const TridiagonalSymmetric& T, int k,
                                         double abs_tol = 1e-12);

/// Matrix of the gauged operator
///   G = -Q d^2/dz^2 + (2P - Q'/2) d/dz - 2 A2 N z
/// on the basis {1, z, ..., z^N}. Upper Hessenberg; the degree-raising entry
/// of column j is 2 A2 (j - N), which vanishes at j = N so the basis spans an
/// invariant subspace.
Eigen::MatrixXcd gauged_matrix(const ModelSpec& spec, int n_levels);

/// Eigenvalues of gauged_matrix shifted by -S0: the complete algebraic energy
/// set. Computed via the characteristic polynomial (banded Hessenberg
/// recurrence) rooted by the Aberth iteration; sorted by (Re, Im).
Eigen::VectorXcd gauged_energies(const ModelSpec& spec, int n_levels);

/// Characteristic polynomial det(z I - M) of an upper Hessenberg matrix.
Poly characteristic_poly(const Eigen::MatrixXcd& hessenberg);

/// k smallest Dirichlet eigenvalues of -d^2/dx^2 + V on the grid, with the
/// standard (-1, 2, -1)/h^2 second-difference stencil.
std::vector<double> fd_spectrum(const std::function<double(double)>& potential,
                                const GridSpec& grid, int k);

/// Relative L2 norm of (-D2 phi + V phi - E phi) over interior grid points,
/// with D2 the fourth-order five-point stencil. Normalized by
/// ||phi|| * max(1, |E|, max|V| over the support of phi).
double schrodinger_residual(const std::function<Complex(double)>& potential, Complex E,
                            const QesState& state);

enum class ClassicalKind { kHermite, kLaguerre };

/// Zeros of H_n or L_n^{(alpha)} via Sturm bisection on the Jacobi matrix of
/// the three-term recurrence. Ascending.
std::vector<double> classical_zeros(ClassicalKind kind, int n, double alpha = 0.0);

}  // namespace qes
