#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qes/model.hpp"

namespace qes {

/// One Bethe-ansatz solution: a canonically ordered set of simple roots.
struct RootSet {
  Eigen::VectorXcd roots;  // sorted lexicographically by rounded (Re, Im)
  double residual_norm = std::numeric_limits<double>::infinity();
  int seed_index = -1;

  Complex sum() const { return roots.size() ? roots.sum() : Complex(0.0); }
};

/// Lexicographic (Re, Im) order after rounding to 1e-9.
Eigen::VectorXcd canonical_order(Eigen::VectorXcd roots);

/// Residual of the pole-cancellation conditions, component k:
///   A2 z_k^2 + (A1 - q2/2) z_k + A0 - q1/4 - sum_{l != k} Q(z_k)/(z_k - z_l).
/// Throws std::invalid_argument on coincident roots (closer than 1e-9).
Eigen::VectorXcd bae_residual(const ModelSpec& spec, const Eigen::VectorXcd& roots);

/// Analytic Jacobian d residual_k / d z_l.
Eigen::MatrixXcd bae_jacobian(const ModelSpec& spec, const Eigen::VectorXcd& roots);

struct SolveOutcome {
  bool converged = false;
  RootSet solution;  // on failure: last iterate with its residual
  int iterations = 0;
  std::string message;
};

/// Damped Newton iteration from a pairwise-distinct seed. Steps are halved
/// while the residual norm does not decrease, and additionally capped so no
/// root pair approaches closer than 1e-6 in a single step. Success means
/// inf-norm residual <= 1e-12 within 200 iterations; 50 consecutive
/// collision-guard hits abort.
SolveOutcome solve_from(const ModelSpec& spec, const Eigen::VectorXcd& seed);

struct Enumeration {
  std::vector<RootSet> solutions;   // sorted by (Re E, Im E)
  std::vector<Complex> energies;    // parallel to solutions
  int expected = 0;                 // N+1 for QES, 1 for ES
  int starts = 0;
  std::uint64_t rng_seed = 0;
};

/// Multi-start search for all root sets. Seeds come from scaled classical
/// zeros (Hermite / Laguerre, matched to the coordinate kind) and from random
/// complex clouds of radius growing with the start index. Deterministic for
/// fixed (starts, rng_seed). starts < 0 selects the default 64*(N+1).
Enumeration enumerate_solutions(const ModelSpec& spec, int starts = -1,
                                std::uint64_t rng_seed = 0);

/// One branch of the N=2 reduction in symmetric variables p = z1 + z2,
/// q = z1 - z2 for the sextic-form spec P = 2a z^2 + 2b z, Q = 4z.
struct SymmetricReduction {
  Complex p;
  Complex q_squared;
  Complex z1, z2;
  bool degenerate = false;  // inconsistent branch, excluded from reconstruction
  double residual = std::numeric_limits<double>::infinity();
  std::string note;
};

/// Solves the cubic  a^2 p^3 + 3ab p^2 + (2b^2 - 4a) p - 6b = 0 and
/// reconstructs the root pairs via q^2 = 2p/(ap + b). The branch with
/// ap + b = 0 is recovered from the symmetric-sum equation when p = 0 is
/// consistent, otherwise flagged degenerate and excluded. Requires a != 0.
std::vector<SymmetricReduction> reduce_n2(Complex a, Complex b);

}  // namespace qes
