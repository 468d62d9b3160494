#include "qes/xrational.hpp"

#include <cmath>
#include <stdexcept>

namespace qes {

void validate(const ExtendedSpec& spec) {
  if (spec.ell < 1) throw std::invalid_argument("ExtendedSpec: ell must be a positive integer");
  if (!(spec.alpha < -double(spec.ell)))
    throw std::invalid_argument("ExtendedSpec: requires alpha < -ell");
}

Poly xi(const ExtendedSpec& spec) {
  validate(spec);
  Poly x = laguerre(spec.ell, spec.alpha);
  const Eigen::VectorXcd zs = roots(x);
  for (Eigen::Index i = 0; i < zs.size(); ++i)
    if (std::abs(zs[i].imag()) <= 1e-10 && zs[i].real() >= -1e-10)
      throw std::domain_error("xi: deforming polynomial has a zero on the physical half-line");
  return x;
}

double deformed_potential(const Poly& xi_poly, int ell, double alpha, double x) {
  const double z = x * x;
  const Poly dxi = derivative(xi_poly);
  const double L = (dxi(z) / xi_poly(z)).real();
  return z + (alpha + 0.5) * (alpha + 1.5) / z + 8.0 * L * (z * (L - 1.0) + alpha + 0.5) +
         2.0 * (2.0 * ell - alpha);
}

double extended_potential(const ExtendedSpec& spec, double x) {
  if (!(x > 0.0)) throw std::domain_error("extended_potential: requires x > 0");
  return deformed_potential(xi(spec), spec.ell, spec.alpha, x);
}

Poly p_ln(const ExtendedSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("p_ln: n must be >= 0");
  const Poly xi_poly = laguerre(spec.ell, spec.alpha);
  const Poly z = Poly::monomial(1);
  return Complex(spec.alpha - n) * laguerre(n, -spec.alpha - 1.0) * xi_poly +
         z * laguerre(n, -spec.alpha) * derivative(xi_poly);
}

double extended_energy(const ExtendedSpec& spec, int n) {
  return 4.0 * (n - spec.alpha - spec.ell);
}

QesState extended_state(const ExtendedSpec& spec, int n, const GridSpec& grid) {
  const Poly xi_poly = xi(spec);
  const Poly num = p_ln(spec, n);
  const double expo = -(spec.alpha + 0.5);

  Eigen::ArrayXd x = grid.nodes();
  if (x[0] <= 0.0) throw std::invalid_argument("extended_state: grid must start at x > 0");
  Eigen::ArrayXcd raw(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double z = x[i] * x[i];
    raw[i] = std::exp(-0.5 * z) * std::pow(x[i], expo) * num(z) / xi_poly(z);
  }
  return finalize_state(grid, std::move(raw), extended_energy(spec, n), 0.0, true, true);
}

}  // namespace qes
