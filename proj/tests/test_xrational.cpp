#include <doctest.h>

#include <cmath>

#include "qes/oracle.hpp"
#include "qes/xrational.hpp"

using namespace qes;

TEST_CASE("xi: deforming polynomial and zero-freeness") {
  // ell=1, alpha=-5/2: -3/2 - z with its only zero at -3/2
  Poly x1 = xi({1, -2.5});
  CHECK(std::abs(x1.coeff(0) - Complex(-1.5)) < 1e-14);
  CHECK(std::abs(x1.coeff(1) - Complex(-1.0)) < 1e-14);

  // ell=2, alpha=-7/2: both zeros have negative real part
  Poly x2 = xi({2, -3.5});
  auto r = roots(x2);
  for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(r[i].real() < 0.0);

  // alpha >= -ell violates the spec precondition outright
  CHECK_THROWS_AS(xi({1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate({1, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(validate({0, -2.5}), std::invalid_argument);
}

TEST_CASE("extended_potential: closed-form behaviors") {
  // large x: L = xi'/xi ~ ell/z, so the deformation term tends to -8 ell and
  // V - x^2 -> -8 ell + 2(2 ell - alpha) = -4 ell - 2 alpha
  for (ExtendedSpec spec : {ExtendedSpec{1, -2.5}, ExtendedSpec{2, -3.5}}) {
    double v = extended_potential(spec, 25.0);
    double limit = -4.0 * spec.ell - 2.0 * spec.alpha;
    CHECK(std::abs(v - 25.0 * 25.0 - limit) < 3e-2);
  }
  const ExtendedSpec spec{1, -2.5};

  // finite and smooth away from 0
  for (double x = 0.1; x < 6.0; x += 0.1) CHECK(std::isfinite(extended_potential(spec, x)));
  CHECK_THROWS_AS(extended_potential(spec, -1.0), std::domain_error);

  // ell -> 0 reduction: with xi = 1 the potential is the plain radial
  // oscillator x^2 + (alpha+1/2)(alpha+3/2)/x^2 - 2 alpha
  for (double alpha : {-2.5, -3.5}) {
    for (int i = 1; i <= 100; ++i) {
      double x = 0.1 * i;
      double expect = x * x + (alpha + 0.5) * (alpha + 1.5) / (x * x) - 2.0 * alpha;
      CHECK(std::abs(deformed_potential(Poly::one(), 0, alpha, x) - expect) <= 1e-12);
    }
  }
}

TEST_CASE("p_ln: numerator polynomials") {
  // degree = ell + n
  CHECK(p_ln({2, -3.5}, 3).degree() == 5);
  for (int n = 0; n <= 4; ++n) {
    CHECK(p_ln({1, -2.5}, n).degree() == 1 + n);
    CHECK(p_ln({2, -3.5}, n).degree() == 2 + n);
  }

  // n=0 closed form: alpha*xi + z*xi'; for ell=1, alpha=-5/2: 15/4 + 3z/2
  Poly p0 = p_ln({1, -2.5}, 0);
  CHECK(std::abs(p0.coeff(0) - Complex(3.75)) < 1e-14);
  CHECK(std::abs(p0.coeff(1) - Complex(1.5)) < 1e-14);
}

TEST_CASE("extended_state: energies and residuals") {
  const GridSpec grid{1e-8, 12.0, 24001};
  for (ExtendedSpec spec : {ExtendedSpec{1, -2.5}, ExtendedSpec{2, -3.5}}) {
    // E = 4(n - alpha - ell); for both test points this is 4n + 6
    for (int n = 0; n <= 4; ++n) {
      CHECK(extended_energy(spec, n) == 4.0 * (n - spec.alpha - spec.ell));
      CHECK(extended_energy(spec, n + 1) - extended_energy(spec, n) == 4.0);
    }
    const Poly xp = xi(spec);
    std::vector<QesState> states;
    for (int n = 0; n <= 4; ++n) {
      QesState st = extended_state(spec, n, grid);
      states.push_back(st);
      double r = schrodinger_residual(
          [&](double x) { return Complex(deformed_potential(xp, spec.ell, spec.alpha, x)); },
          st.energy, st);
      CHECK(r <= 1e-6);
      CHECK(st.nodes == n);  // node count orders the tower
    }
    Eigen::MatrixXcd gram = orthogonality(states);
    for (Eigen::Index i = 0; i < 5; ++i)
      for (Eigen::Index j = 0; j < 5; ++j)
        if (i != j) CHECK(std::abs(gram(i, j)) <= 1e-6);
  }
}

TEST_CASE("extended_state: residuals across alpha choices") {
  const GridSpec grid{1e-8, 12.0, 24001};
  for (int ell : {1, 2}) {
    for (double alpha : {-ell - 1.5, -ell - 2.5}) {
      ExtendedSpec spec{ell, alpha};
      const Poly xp = xi(spec);
      for (int n = 0; n <= 4; ++n) {
        QesState st = extended_state(spec, n, grid);
        double r = schrodinger_residual(
            [&](double x) { return Complex(deformed_potential(xp, ell, alpha, x)); },
            st.energy, st);
        CHECK(r <= 1e-6);
      }
    }
  }
}
