#include <doctest.h>

#include <cmath>
#include <random>

#include "qes/oracle.hpp"
#include "qes/presets.hpp"

using namespace qes;

TEST_CASE("gauged_matrix entries") {
  // sextic, N=1: [[0, -2], [-4a, 4b]]
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}}) {
    Eigen::MatrixXcd m = gauged_matrix(make_sextic(a, b, 1), 1);
    CHECK(m(0, 0) == Complex(0.0));
    CHECK(m(0, 1) == Complex(-2.0));
    CHECK(m(1, 0) == Complex(-4.0 * a));
    CHECK(m(1, 1) == Complex(4.0 * b));
  }

  // harmonic: upper triangular with diagonal {2bj}
  Eigen::MatrixXcd h = gauged_matrix(make_harmonic(1.5, 4), 4);
  for (int j = 0; j <= 4; ++j) {
    CHECK(std::abs(h(j, j) - Complex(3.0 * j)) < 1e-14);
    if (j + 1 <= 4) CHECK(h(j + 1, j) == Complex(0.0));
  }

  // radial: diagonal {4aj}
  Eigen::MatrixXcd r = gauged_matrix(make_radial(2.0, 2.0, 3), 3);
  for (int j = 0; j <= 3; ++j) CHECK(std::abs(r(j, j) - Complex(8.0 * j)) < 1e-14);
}

TEST_CASE("gauged_matrix columns match the operator applied to monomials") {
  // column j of the matrix must equal G z^j expanded in the monomial basis,
  // and the invariant-subspace condition makes deg(G z^N) <= N exactly
  for (const ModelSpec& spec : {make_sextic(1.0, 1.0, 3), make_radial(1.0, 2.0, 2),
                                make_pt_quartic(1.0, 2.0, 1.0, 2), make_harmonic(1.0, 4)}) {
    const int n = spec.levels;
    Eigen::MatrixXcd m = gauged_matrix(spec, n);
    for (int j = 0; j <= n; ++j) {
      Poly zj = Poly::monomial(j);
      Poly gz = -(spec.Q * derivative(derivative(zj))) +
                (Complex(2.0) * spec.P - Complex(0.5) * derivative(spec.Q)) * derivative(zj) -
                Complex(2.0) * spec.a2() * double(n) * Poly::monomial(1) * zj;
      CHECK(gz.degree() <= std::max(j + 1, n));
      if (j == n) CHECK(gz.degree() <= n);  // degree-raising entry exactly zero
      for (int i = 0; i <= n; ++i)
        CHECK(std::abs(m(i, j) - gz.coeff(i)) <= 1e-13 * std::max(1.0, std::abs(gz.coeff(i))));
    }
  }
}

TEST_CASE("characteristic_poly: Hessenberg recurrence vs hand expansion") {
  Eigen::MatrixXcd m(3, 3);
  m << Complex(1.0), Complex(2.0), Complex(-1.0),
       Complex(0.5), Complex(-1.0), Complex(3.0),
       Complex(0.0), Complex(2.0), Complex(0.5);
  Poly chi = characteristic_poly(m);
  // det(zI - M) sampled against direct 3x3 determinants
  for (Complex z : {Complex(0.3, 0.2), Complex(-1.0, 1.0), Complex(2.0)}) {
    Eigen::MatrixXcd a = z * Eigen::MatrixXcd::Identity(3, 3) - m;
    Complex det = a.determinant();
    CHECK(std::abs(chi(z) - det) <= 1e-12 * std::max(1.0, std::abs(det)));
  }
  Eigen::MatrixXcd bad(3, 3);
  bad.setOnes();
  CHECK_THROWS_AS(characteristic_poly(bad), std::invalid_argument);
}

TEST_CASE("gauged_energies: known algebraic sets") {
  // sextic a=b=1, N=2: {-3, 9 - 4 sqrt2, 9 + 4 sqrt2}
  Eigen::VectorXcd e = gauged_energies(make_sextic(1.0, 1.0, 2), 2);
  REQUIRE(e.size() == 3);
  CHECK(std::abs(e[0] - Complex(-3.0)) < 1e-10);
  CHECK(std::abs(e[1] - Complex(9.0 - 4.0 * std::sqrt(2.0))) < 1e-10);
  CHECK(std::abs(e[2] - Complex(9.0 + 4.0 * std::sqrt(2.0))) < 1e-10);

  // sextic N=1: 3b +- 2 sqrt(b^2 + 2a)
  Eigen::VectorXcd e1 = gauged_energies(make_sextic(1.0, 1.0, 1), 1);
  REQUIRE(e1.size() == 2);
  CHECK(std::abs(e1[0] - Complex(3.0 - 2.0 * std::sqrt(3.0))) < 1e-11);
  CHECK(std::abs(e1[1] - Complex(3.0 + 2.0 * std::sqrt(3.0))) < 1e-11);

  // sextic a=1, b=0, N=2: {-8, 0, 8}
  Eigen::VectorXcd e0 = gauged_energies(make_sextic(1.0, 0.0, 2), 2);
  CHECK(std::abs(e0[0] - Complex(-8.0)) < 1e-10);
  CHECK(std::abs(e0[1] - Complex(0.0)) < 1e-10);
  CHECK(std::abs(e0[2] - Complex(8.0)) < 1e-10);

  // harmonic b=1, N=4: ladder {1,3,5,7,9}
  Eigen::VectorXcd eh = gauged_energies(make_harmonic(1.0, 4), 4);
  REQUIRE(eh.size() == 5);
  for (int j = 0; j <= 4; ++j) CHECK(std::abs(eh[j] - Complex(2.0 * j + 1.0)) < 1e-10);

  // radial a=1, ell=2, N=3: ladder a(4j + 2 ell + 1) = {5, 9, 13, 17}
  Eigen::VectorXcd er = gauged_energies(make_radial(1.0, 2.0, 3), 3);
  for (int j = 0; j <= 3; ++j) CHECK(std::abs(er[j] - Complex(4.0 * j + 5.0)) < 1e-10);
}

TEST_CASE("sturm bisection on small tridiagonals") {
  // 2x2 [[0, c], [c, 0]]: eigenvalues +-c
  TridiagonalSymmetric t;
  t.diag = Eigen::VectorXd::Zero(2);
  t.offdiag = Eigen::VectorXd::Constant(1, std::sqrt(0.5));
  auto ev = tridiagonal_smallest(t, 2, 1e-13);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(sturm_count_below(t, 0.0) == 1);
  CHECK(sturm_count_below(t, 1.0) == 2);
}

TEST_CASE("fd_spectrum: harmonic, box, sextic") {
  // V = x^2 on [-10, 10]: {1, 3, 5} within 5e-4
  auto eh = fd_spectrum([](double x) { return x * x; }, GridSpec{-10.0, 10.0, 20001}, 3);
  CHECK(std::abs(eh[0] - 1.0) <= 5e-4);
  CHECK(std::abs(eh[1] - 3.0) <= 5e-4);
  CHECK(std::abs(eh[2] - 5.0) <= 5e-4);

  // particle in a box on [0, pi]: lowest eigenvalue 1
  auto eb = fd_spectrum([](double) { return 0.0; }, GridSpec{0.0, M_PI, 4001}, 1);
  CHECK(std::abs(eb[0] - 1.0) <= 1e-3);

  // sextic a=b=1, N=2 potential contains the three algebraic levels
  CompiledModel cm(make_sextic(1.0, 1.0, 2));
  auto es = fd_spectrum([&](double x) { return cm.potential(x).real(); },
                        GridSpec{-10.0, 10.0, 20001}, 6);
  for (double target : {-3.0, 9.0 - 4.0 * std::sqrt(2.0), 9.0 + 4.0 * std::sqrt(2.0)}) {
    double best = 1e9;
    for (double f : es) best = std::min(best, std::abs(f - target));
    CHECK(best <= 2e-3);
  }

  CHECK_THROWS_AS(fd_spectrum([](double) { return 0.0; }, GridSpec{0.0, 1.0, 5}, 10),
                  std::invalid_argument);
}

TEST_CASE("schrodinger_residual: exact eigenpairs") {
  // harmonic ground state, exact to stencil error
  ModelSpec h = make_harmonic(1.0, 0);
  RootSet empty;
  empty.roots = Eigen::VectorXcd();
  QesState st = build_state(h, empty, GridSpec{-10.0, 10.0, 20001});
  CompiledModel cm(h);
  double r = schrodinger_residual([&](double x) { return cm.potential(x); }, st.energy, st);
  CHECK(r <= 1e-8);

  // quasinormal harmonic c=2, N=1: phi = exp(i x^2/2) x, E = -3i
  ModelSpec q = make_qnm_harmonic(2.0, 1);
  Enumeration en = enumerate_solutions(q, -1, 1);
  REQUIRE(en.solutions.size() == 1);
  CHECK(std::abs(en.energies[0] - Complex(0.0, -3.0)) < 1e-12);
  QesState qs = sample_state(q, en.solutions[0], GridSpec{-8.0, 8.0, 16001});
  CompiledModel cq(q);
  double rq = schrodinger_residual([&](double x) { return cq.potential(x); }, qs.energy, qs);
  CHECK(rq <= 1e-7);

  // PT quartic (1,2,1), N=1: both states
  ModelSpec pt = make_pt_quartic(1.0, 2.0, 1.0, 1);
  Enumeration ep = enumerate_solutions(pt, -1, 1);
  REQUIRE(ep.solutions.size() == 2);
  CompiledModel cp(pt);
  for (const auto& rs : ep.solutions) {
    QesState ps = build_state(pt, rs, GridSpec{-10.0, 10.0, 20001});
    double rp = schrodinger_residual([&](double x) { return cp.potential(x); }, ps.energy, ps);
    CHECK(rp <= 1e-7);
  }
}

TEST_CASE("classical_zeros: Jacobi matrices") {
  auto h2 = classical_zeros(ClassicalKind::kHermite, 2);
  CHECK(h2[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(h2[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  auto h1 = classical_zeros(ClassicalKind::kHermite, 1);
  CHECK(std::abs(h1[0]) < 1e-13);

  auto l1 = classical_zeros(ClassicalKind::kLaguerre, 1, 1.5);
  CHECK(l1[0] == doctest::Approx(2.5).epsilon(1e-12));

  // agree with the Aberth roots of the generated polynomials
  for (int n : {3, 5, 8}) {
    auto zh = classical_zeros(ClassicalKind::kHermite, n);
    auto rh = roots(hermite(n));
    for (int i = 0; i < n; ++i) CHECK(std::abs(zh[i] - rh[i].real()) <= 1e-10);
    auto zl = classical_zeros(ClassicalKind::kLaguerre, n, 0.5);
    auto rl = roots(laguerre(n, 0.5));
    for (int i = 0; i < n; ++i) CHECK(std::abs(zl[i] - rl[i].real()) <= 1e-10);
  }
}

TEST_CASE("oracle agreement: algebraic energies vs gauged vs finite differences") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{1.0, 0.0}, std::pair{2.0, 3.0}}) {
    for (int n = 1; n <= 4; ++n) {
      ModelSpec spec = make_sextic(a, b, n);
      Enumeration en = enumerate_solutions(spec, -1, 17);
      REQUIRE(int(en.solutions.size()) == n + 1);
      Eigen::VectorXcd ge = gauged_energies(spec, n);
      REQUIRE(ge.size() == n + 1);
      for (int i = 0; i <= n; ++i) CHECK(std::abs(en.energies[i] - ge[i]) <= 1e-9);
    }
  }
  // finite differences, second-order tolerance (the slowest check: one family)
  ModelSpec spec = make_sextic(2.0, 3.0, 2);
  Enumeration en = enumerate_solutions(spec, -1, 17);
  CompiledModel cm(spec);
  auto fd = fd_spectrum([&](double x) { return cm.potential(x).real(); },
                        GridSpec{-10.0, 10.0, 20001}, 7);
  for (const auto& e : en.energies) {
    double best = 1e9;
    for (double f : fd) best = std::min(best, std::abs(f - e.real()));
    CHECK(best <= 5e-3);
  }
}

TEST_CASE("oracle agreement: harmonic and radial roots vs classical zeros, N <= 8") {
  for (int n = 1; n <= 8; ++n) {
    Enumeration eh = enumerate_solutions(make_harmonic(1.0, n), -1, 2);
    REQUIRE(eh.solutions.size() == 1);
    auto hz = classical_zeros(ClassicalKind::kHermite, n);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(eh.solutions[0].roots[i] - Complex(hz[i])) <= 1e-10);

    Enumeration er = enumerate_solutions(make_radial(1.0, 2.0, n), -1, 2);
    REQUIRE(er.solutions.size() == 1);
    auto lz = classical_zeros(ClassicalKind::kLaguerre, n, 1.5);  // alpha = ell - 1/2
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(er.solutions[0].roots[i] - Complex(lz[i])) <= 1e-10);
  }
}
