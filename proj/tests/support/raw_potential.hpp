#pragma once

// Test-only reference evaluator: the potential in its raw sum-over-roots form
//   V_N = V0(z) - (2 P(z) - Q'(z)/2) sum_k 1/(z - z_k)
//         + sum_{k != l} Q(z)/((z - z_k)(z - z_l)),
// with V0 = (P^2 - Q P' + P Q'/2)/Q. Independent of the pole-free split in
// the library; the two must agree whenever the roots satisfy the Bethe
// conditions.

#include <Eigen/Dense>

#include "qes/model.hpp"

namespace qes::testing {

inline Complex raw_potential(const ModelSpec& spec, const Eigen::VectorXcd& roots, Complex z) {
  const Poly dP = derivative(spec.P);
  const Poly dQ = derivative(spec.Q);
  const Complex p = spec.P(z), q = spec.Q(z);
  Complex v = (p * p - q * dP(z) + 0.5 * p * dQ(z)) / q;
  Complex pole_sum = 0.0;
  for (Eigen::Index k = 0; k < roots.size(); ++k) pole_sum += 1.0 / (z - roots[k]);
  v -= (2.0 * p - 0.5 * dQ(z)) * pole_sum;
  for (Eigen::Index k = 0; k < roots.size(); ++k)
    for (Eigen::Index l = 0; l < roots.size(); ++l)
      if (k != l) v += q / ((z - roots[k]) * (z - roots[l]));
  return v;
}

/// The same quantity from the library's pole-free split.
inline Complex split_potential(const ModelSpec& spec, const Eigen::VectorXcd& roots, Complex z) {
  const RationalPotential pot = potential_core(spec);
  return pot.rational_part(z) + pot.n_constant(roots.size() ? roots.sum() : Complex(0.0)) +
         pot.linear_n_coeff * z;
}

}  // namespace qes::testing
