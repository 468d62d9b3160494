#pragma once

#include "qes/poly.hpp"
#include "qes/spectrum.hpp"

namespace qes {

/// Rationally extended radial oscillator: the potential and eigenfunctions
/// are deformed by xi(z) = L_ell^{(alpha)}(z) with z = x^2 on (0, inf).
/// alpha < -ell keeps xi free of zeros on the physical half-line.
struct ExtendedSpec {
  int ell = 1;
  double alpha = -2.5;
};

/// Throws std::invalid_argument unless ell >= 1 and alpha < -ell.
void validate(const ExtendedSpec& spec);

/// The deforming polynomial L_ell^{(alpha)}. Verifies by root finding that it
/// has no zeros on [0, inf); throws std::domain_error if one is found.
Poly xi(const ExtendedSpec& spec);

/// Shared evaluator: the deformed radial-oscillator potential for an
/// arbitrary deforming polynomial,
///   V(x) = x^2 + (alpha+1/2)(alpha+3/2)/x^2
///          + 8 L [z (L - 1) + alpha + 1/2] + 2 (2 ell - alpha),
/// with z = x^2 and L = xi'(z)/xi(z).
double deformed_potential(const Poly& xi_poly, int ell, double alpha, double x);

double extended_potential(const ExtendedSpec& spec, double x);

/// Numerator polynomial of the n-th eigenfunction,
///   p_{ell,n}(z) = (alpha - n) L_n^{(-alpha-1)}(z) xi(z)
///                  + z L_n^{(-alpha)}(z) xi'(z),
/// of degree ell + n.
Poly p_ln(const ExtendedSpec& spec, int n);

/// E_{ell,n} = 4 (n - alpha - ell).
double extended_energy(const ExtendedSpec& spec, int n);

/// Normalized eigenfunction samples of
///   phi_{ell,n}(x) ~ exp(-x^2/2) x^{-(alpha+1/2)} p_{ell,n}(z) / xi(z)
/// paired with E_{ell,n}.
QesState extended_state(const ExtendedSpec& spec, int n, const GridSpec& grid);

}  // namespace qes
