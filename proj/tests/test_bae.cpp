#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qes/bae.hpp"
#include "qes/presets.hpp"

using namespace qes;

TEST_CASE("residual: closed-form values") {
  ModelSpec h = make_harmonic(1.0, 1);
  Eigen::VectorXcd z0(1);
  z0 << 0.0;
  CHECK(bae_residual(h, z0)[0] == Complex(0.0));
  Eigen::VectorXcd z1(1);
  z1 << 1.0;
  CHECK(bae_residual(h, z1)[0] == Complex(1.0));

  ModelSpec s = make_sextic(1.0, 1.0, 1);
  Eigen::VectorXcd zs(1);
  zs << Complex((-1.0 + std::sqrt(3.0)) / 2.0);
  CHECK(std::abs(bae_residual(s, zs)[0]) < 1e-14);

  Eigen::VectorXcd coincident(2);
  coincident << 0.5, 0.5 + 1e-12;
  CHECK_THROWS_AS(bae_residual(h, coincident), std::invalid_argument);
}

TEST_CASE("jacobian: closed forms and finite differences") {
  ModelSpec h = make_harmonic(1.0, 1);
  Eigen::VectorXcd z0(1);
  z0 << 0.0;
  CHECK(bae_jacobian(h, z0)(0, 0) == Complex(1.0));

  // harmonic N=2: off-diagonal is -1/(x1-x2)^2 (the finite-difference checks
  // below pin the sign)
  ModelSpec h2 = make_harmonic(1.0, 2);
  Eigen::VectorXcd z2(2);
  z2 << -0.4, 0.9;
  Eigen::MatrixXcd J = bae_jacobian(h2, z2);
  Complex expect = -1.0 / ((z2[0] - z2[1]) * (z2[0] - z2[1]));
  CHECK(std::abs(J(0, 1) - expect) < 1e-14);
  CHECK(std::abs(J(1, 0) - expect) < 1e-14);

  // finite-difference agreement across spec families
  std::mt19937_64 eng(5150);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  const double h_fd = 1e-6;
  for (const ModelSpec& spec : {make_sextic(1.0, 1.0, 3), make_radial(1.0, 2.0, 3),
                                make_pt_quartic(1.0, 2.0, 1.0, 3)}) {
    Eigen::VectorXcd z(3);
    do {
      for (int i = 0; i < 3; ++i) z[i] = Complex(unif(eng), unif(eng));
    } while (std::abs(z[0] - z[1]) < 0.3 || std::abs(z[1] - z[2]) < 0.3 ||
             std::abs(z[0] - z[2]) < 0.3);
    Eigen::MatrixXcd jac = bae_jacobian(spec, z);
    for (int l = 0; l < 3; ++l) {
      Eigen::VectorXcd zp = z, zm = z;
      zp[l] += h_fd;
      zm[l] -= h_fd;
      Eigen::VectorXcd col = (bae_residual(spec, zp) - bae_residual(spec, zm)) / (2.0 * h_fd);
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(jac(k, l) - col[k]) <= 1e-6 * std::max(1.0, std::abs(col[k])));
    }
  }
}

TEST_CASE("residual permutation covariance") {
  ModelSpec spec = make_sextic(1.0, 1.0, 4);
  Eigen::VectorXcd z(4);
  z << Complex(0.3, 0.1), Complex(-1.2, 0.0), Complex(0.9, -0.4), Complex(-0.1, 0.8);
  Eigen::VectorXcd r = bae_residual(spec, z);
  std::vector<int> perm = {2, 0, 3, 1};
  Eigen::VectorXcd zp(4), rp_expect(4);
  for (int i = 0; i < 4; ++i) {
    zp[i] = z[perm[i]];
    rp_expect[i] = r[perm[i]];
  }
  Eigen::VectorXcd rp = bae_residual(spec, zp);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(rp[i] - rp_expect[i]) <= 1e-13);
}

TEST_CASE("solve_from: damped Newton") {
  // harmonic N=2 converges to the Hermite H_2 zeros +-1/sqrt(2)
  ModelSpec h2 = make_harmonic(1.0, 2);
  Eigen::VectorXcd seed(2);
  seed << -0.6, 0.6;
  SolveOutcome oc = solve_from(h2, seed);
  REQUIRE(oc.converged);
  CHECK(std::abs(oc.solution.roots[0] + 1.0 / std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(oc.solution.roots[1] - 1.0 / std::sqrt(2.0)) < 1e-10);
  CHECK(oc.solution.residual_norm <= 1e-10);

  // sextic N=1: basin selection by seed
  ModelSpec s = make_sextic(1.0, 1.0, 1);
  Eigen::VectorXcd s1(1), s2(1);
  s1 << 0.3;
  s2 << -1.3;
  SolveOutcome a = solve_from(s, s1);
  SolveOutcome b = solve_from(s, s2);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK(std::abs(a.solution.roots[0] - Complex((-1.0 + std::sqrt(3.0)) / 2.0)) < 1e-10);
  CHECK(std::abs(b.solution.roots[0] - Complex((-1.0 - std::sqrt(3.0)) / 2.0)) < 1e-10);
}

TEST_CASE("enumerate_solutions: sextic root-set families") {
  // a=b=1, N=2: three solutions with z1+z2 in {-3, +sqrt2, -sqrt2}
  Enumeration en = enumerate_solutions(make_sextic(1.0, 1.0, 2), -1, 1);
  REQUIRE(en.expected == 3);
  REQUIRE(en.solutions.size() == 3);
  std::vector<double> sums;
  for (const auto& rs : en.solutions) sums.push_back(rs.sum().real());
  std::sort(sums.begin(), sums.end());
  CHECK(std::abs(sums[0] + 3.0) < 1e-9);
  CHECK(std::abs(sums[1] + std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(sums[2] - std::sqrt(2.0)) < 1e-9);

  // a=1, b=0, N=2: energies {-8, 0, 8}
  Enumeration e0 = enumerate_solutions(make_sextic(1.0, 0.0, 2), -1, 1);
  REQUIRE(e0.solutions.size() == 3);
  CHECK(std::abs(e0.energies[0] - Complex(-8.0)) < 1e-9);
  CHECK(std::abs(e0.energies[1] - Complex(0.0)) < 1e-9);
  CHECK(std::abs(e0.energies[2] - Complex(8.0)) < 1e-9);

  // harmonic N=3 is exactly solvable: a single root set (Hermite zeros)
  Enumeration eh = enumerate_solutions(make_harmonic(1.0, 3), -1, 1);
  CHECK(eh.expected == 1);
  REQUIRE(eh.solutions.size() == 1);
  CHECK(std::abs(eh.solutions[0].roots[1]) < 1e-10);  // middle zero of H_3
}

TEST_CASE("enumerate_solutions: sextic expected counts and real spectra, N = 1..4") {
  for (int n = 1; n <= 4; ++n) {
    Enumeration en = enumerate_solutions(make_sextic(1.0, 1.0, n), -1, 11);
    CHECK(en.expected == n + 1);
    REQUIRE(int(en.solutions.size()) == n + 1);
    for (const auto& e : en.energies) CHECK(std::abs(e.imag()) <= 1e-10);
    // Hermitian root sets are closed under conjugation
    for (const auto& rs : en.solutions) {
      for (Eigen::Index k = 0; k < rs.roots.size(); ++k) {
        double best = 1e9;
        for (Eigen::Index l = 0; l < rs.roots.size(); ++l)
          best = std::min(best, std::abs(std::conj(rs.roots[k]) - rs.roots[l]));
        CHECK(best <= 1e-8);
      }
    }
  }
}

TEST_CASE("enumerate_solutions: determinism for fixed (starts, rng_seed)") {
  ModelSpec spec = make_sextic(1.0, 1.0, 3);
  Enumeration a = enumerate_solutions(spec, 128, 42);
  Enumeration b = enumerate_solutions(spec, 128, 42);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) {
    CHECK(a.solutions[i].seed_index == b.solutions[i].seed_index);
    for (Eigen::Index k = 0; k < a.solutions[i].roots.size(); ++k)
      CHECK(a.solutions[i].roots[k] == b.solutions[i].roots[k]);
  }
}

TEST_CASE("reduce_n2: symmetric-variable reduction") {
  // a=b=1: p in {-3, -sqrt2, +sqrt2}; q^2 = 4 - 2 sqrt2 at p = sqrt2
  auto r11 = reduce_n2(1.0, 1.0);
  REQUIRE(r11.size() == 3);
  std::vector<double> ps;
  for (const auto& br : r11) {
    CHECK_FALSE(br.degenerate);
    CHECK(br.residual <= 1e-10);
    ps.push_back(br.p.real());
    if (std::abs(br.p - Complex(std::sqrt(2.0))) < 1e-9)
      CHECK(std::abs(br.q_squared - Complex(4.0 - 2.0 * std::sqrt(2.0))) < 1e-9);
  }
  std::sort(ps.begin(), ps.end());
  CHECK(std::abs(ps[0] + 3.0) < 1e-9);
  CHECK(std::abs(ps[1] + std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(ps[2] - std::sqrt(2.0)) < 1e-9);

  // a=1, b=0: p in {0, +2, -2}; the p=0 branch needs the symmetric-sum fallback
  auto r10 = reduce_n2(1.0, 0.0);
  REQUIRE(r10.size() == 3);
  std::vector<double> ps0;
  for (const auto& br : r10) {
    CHECK_FALSE(br.degenerate);
    ps0.push_back(br.p.real());
  }
  std::sort(ps0.begin(), ps0.end());
  CHECK(std::abs(ps0[0] + 2.0) < 1e-9);
  CHECK(std::abs(ps0[1]) < 1e-9);
  CHECK(std::abs(ps0[2] - 2.0) < 1e-9);

  // a=1, b=-1 maps to the b=1 set under p -> -p
  auto rm = reduce_n2(1.0, -1.0);
  std::vector<double> psm;
  for (const auto& br : rm) psm.push_back(-br.p.real());
  std::sort(psm.begin(), psm.end());
  CHECK(std::abs(psm[0] + 3.0) < 1e-9);
  CHECK(std::abs(psm[1] + std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(psm[2] - std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("reduce_n2 agrees with enumerate_solutions on energies") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{1.0, 0.0}, std::pair{2.0, 3.0}}) {
    auto red = reduce_n2(a, b);
    std::vector<double> e_red;
    for (const auto& br : red)
      if (!br.degenerate) e_red.push_back(9.0 * b + 4.0 * a * br.p.real());
    Enumeration en = enumerate_solutions(make_sextic(a, b, 2), -1, 5);
    std::vector<double> e_en;
    for (const auto& e : en.energies) e_en.push_back(e.real());
    std::sort(e_red.begin(), e_red.end());
    std::sort(e_en.begin(), e_en.end());
    REQUIRE(e_red.size() == e_en.size());
    for (std::size_t i = 0; i < e_red.size(); ++i) CHECK(std::abs(e_red[i] - e_en[i]) <= 1e-9);
  }
}
