#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qes/bae.hpp"
#include "qes/model.hpp"

namespace qes {

/// Uniform discretization of a finite window of the physical domain.
/// Units: hbar = 2m = 1.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  int points = 0;

  double h() const { return (x_max - x_min) / (points - 1); }
  Eigen::ArrayXd nodes() const;
  void validate() const;  // x_min < x_max, points >= 3

  /// Parses "min:max:points".
  static GridSpec parse(const std::string& text);
};

/// Default windows: full line [-10, 10] x 20001; half line [1e-8, 12] x 24001.
GridSpec default_grid(const CoordinateMap& map);

/// A solved level: energy plus the sampled, normalized eigenfunction.
struct QesState {
  Complex energy;
  GridSpec grid;
  Eigen::ArrayXcd samples;  // normalized unless built with normalize = false
  double norm = 0.0;        // sqrt(integral |phi_raw|^2) before normalization
  int nodes = -1;           // sign changes of Re phi; -1 for complex states
  RootSet source;
};

/// Simpson quadrature of |f|^2 on the grid.
double norm_squared(const Eigen::ArrayXcd& f, double h);

/// Assembles a state from raw samples: optionally normalizes, counts nodes,
/// and (when strict) enforces truncation adequacy: the tail endpoint values
/// must be below 1e-10 * max|phi|, and for a finite natural boundary the
/// omitted strip [domain_min, x_min] must carry less than 1e-8 of the norm.
QesState finalize_state(const GridSpec& grid, Eigen::ArrayXcd raw, Complex energy,
                        double domain_min, bool normalize, bool strict);

/// Samples phi for a converged root set and normalizes (strict checks on).
QesState build_state(const ModelSpec& spec, const RootSet& roots, const GridSpec& grid);

/// As build_state but without normalization or truncation checks; for
/// non-normalizable (quasinormal) states verified by residual only.
QesState sample_state(const ModelSpec& spec, const RootSet& roots, const GridSpec& grid);

/// Gram matrix integral conj(phi_i) phi_j dx; states must share a grid.
Eigen::MatrixXcd orthogonality(const std::vector<QesState>& states);

}  // namespace qes
