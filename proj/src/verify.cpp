#include "qes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qes/oracle.hpp"

namespace qes {

namespace {

bool is_real_poly(const Poly& p) {
  const double scale = std::max(1.0, p.max_abs_coeff());
  for (int i = 0; i <= p.degree(); ++i)
    if (std::abs(p.coeff(i).imag()) > 1e-12 * scale) return false;
  return true;
}

double set_distance(std::vector<Complex> a, std::vector<Complex> b) {
  // max over greedy nearest-neighbour matching; adequate for well-separated sets
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    worst = std::max(worst, best);
    b.erase(b.begin() + arg);
  }
  return worst;
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

VerifyReport verify_model(const ModelSpec& spec, const VerifyOptions& options) {
  VerifyReport rep;
  const CompiledModel cm(spec);
  rep.solvability = cm.solvability;
  rep.is_normalizable = normalizable(spec);
  const bool hermitian = is_real_poly(spec.P) && is_real_poly(spec.Q);

  auto add = [&rep](std::string name, double value, double tol, std::string detail = "") {
    rep.checks.push_back({std::move(name), value <= tol, value, tol, std::move(detail)});
  };

  if (cm.solvability == Solvability::kSingleState) {
    rep.notes.push_back("deg P or deg Q out of the solvable range: classification only");
    return rep;
  }

  // --- Bethe root enumeration -------------------------------------------
  rep.enumeration = enumerate_solutions(spec, options.starts, options.rng_seed);
  const auto& en = rep.enumeration;
  rep.checks.push_back({"enumeration_count",
                        int(en.solutions.size()) == en.expected,
                        double(en.solutions.size()), double(en.expected),
                        "root sets found vs expected"});

  double max_residual = 0.0;
  for (const auto& rs : en.solutions) max_residual = std::max(max_residual, rs.residual_norm);
  add("bae_residuals", max_residual, 1e-10, "max inf-norm of the root conditions");

  // --- pole-free split of V0 --------------------------------------------
  {
    std::mt19937_64 eng(12345);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    const Poly U = spec.P * spec.P - spec.Q * derivative(spec.P) +
                   Complex(0.5) * spec.P * derivative(spec.Q);
    double worst = 0.0;
    int taken = 0;
    while (taken < 20) {
      Complex z(unif(eng), unif(eng));
      if (std::abs(spec.Q(z)) < 0.3) continue;
      ++taken;
      Complex direct = U(z) / spec.Q(z);
      Complex split = cm.pot.rational_part(z);
      worst = std::max(worst, std::abs(direct - split) / std::max(1.0, std::abs(direct)));
    }
    add("potential_split", worst, 1e-10, "S + poles vs (P^2 - Q P' + P Q'/2)/Q");
  }

  // --- gauged-operator spectrum -----------------------------------------
  {
    const Eigen::VectorXcd ge = gauged_energies(spec, spec.levels);
    std::vector<Complex> gauged(ge.begin(), ge.end());
    double dev = 0.0;
    if (cm.solvability == Solvability::kQuasiExactlySolvable) {
      dev = set_distance(en.energies, gauged);
    } else {
      for (const Complex& e : en.energies) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& g : gauged) best = std::min(best, std::abs(e - g));
        dev = std::max(dev, best);
      }
    }
    add("gauged_agreement", dev, 1e-9, "algebraic energies vs gauged-operator eigenvalues");
  }

  // --- classical zeros (Hermitian exactly solvable) ----------------------
  if (cm.solvability == Solvability::kExactlySolvable && hermitian && spec.levels >= 1 &&
      !en.solutions.empty()) {
    const double a1 = spec.a1().real(), a0 = spec.a0().real();
    bool applicable = a1 > 0.0;
    Eigen::VectorXcd expect(spec.levels);
    if (applicable && cm.map.kind == CoordKind::kLinear) {
      const double g = cm.map.gamma;
      auto t = classical_zeros(ClassicalKind::kHermite, spec.levels);
      for (int i = 0; i < spec.levels; ++i) expect[i] = std::sqrt(g / a1) * t[i] - a0 / a1;
    } else if (applicable && cm.map.kind == CoordKind::kQuadratic) {
      const double beta = cm.map.beta;
      const double alpha = -2.0 * a0 / beta - 0.5;
      if (alpha > -1.0) {
        auto t = classical_zeros(ClassicalKind::kLaguerre, spec.levels, alpha);
        for (int i = 0; i < spec.levels; ++i) expect[i] = beta / (2.0 * a1) * t[i];
      } else {
        applicable = false;
      }
    } else {
      applicable = false;
    }
    if (applicable) {
      const Eigen::VectorXcd got = en.solutions.front().roots;
      double dev = 0.0;
      Eigen::VectorXcd sorted = canonical_order(expect);
      for (int i = 0; i < spec.levels; ++i) dev = std::max(dev, std::abs(sorted[i] - got[i]));
      add("classical_zero_agreement", dev, 1e-10,
          "Bethe roots vs Jacobi-matrix zeros of the classical polynomial");
    }
  }

  // --- spectrum reality / conjugation ------------------------------------
  if (hermitian && rep.is_normalizable) {
    double im = 0.0;
    for (const Complex& e : en.energies) im = std::max(im, std::abs(e.imag()));
    add("real_energies", im, 1e-10, "Hermitian normalizable spectra are real");
  }
  if (!hermitian) {
    std::vector<Complex> conj;
    for (const Complex& e : en.energies) conj.push_back(std::conj(e));
    const double dev = set_distance(en.energies, conj);
    bool all_real = true;
    for (const Complex& e : en.energies)
      if (std::abs(e.imag()) > 1e-10) all_real = false;
    if (dev <= 1e-10)
      rep.notes.push_back(all_real ? "spectrum real: PT symmetry unbroken"
                                   : "complex-conjugate energy pairs: PT broken");
  }

  // --- states: normalization, orthogonality, Schroedinger residual -------
  {
    const GridSpec grid = options.grid ? *options.grid : default_grid(cm.map);
    std::vector<QesState> states;
    bool built_ok = true;
    for (const auto& rs : en.solutions) {
      try {
        states.push_back(rep.is_normalizable ? build_state(spec, rs, grid)
                                             : sample_state(spec, rs, grid));
      } catch (const std::exception& e) {
        built_ok = false;
        rep.notes.push_back(std::string("state sampling failed: ") + e.what());
        break;
      }
    }
    if (built_ok) {
      double resid = 0.0;
      for (const auto& st : states)
        resid = std::max(resid,
                         schrodinger_residual([&](double x) { return cm.potential(x); },
                                              st.energy, st));
      add("schrodinger_residual", resid, 1e-6, "pointwise operator residual per state");

      if (hermitian && rep.is_normalizable && states.size() > 1) {
        const Eigen::MatrixXcd gram = orthogonality(states);
        double off = 0.0;
        for (Eigen::Index i = 0; i < gram.rows(); ++i)
          for (Eigen::Index j = 0; j < gram.cols(); ++j)
            if (i != j) off = std::max(off, std::abs(gram(i, j)));
        add("orthogonality", off, 1e-6, "max |Gram off-diagonal|");
      }
    }
  }

  // --- finite-difference containment (Hermitian, confining) --------------
  if (hermitian && rep.is_normalizable) {
    GridSpec fd_grid{-10.0, 10.0, 20001};
    bool applicable = true;
    if (cm.map.kind == CoordKind::kQuadratic) {
      bool pole_free = true;
      for (const auto& p : cm.pot.poles)
        if (std::abs(p.coeff) > 1e-12) pole_free = false;
      // pole-free half-line potentials extend evenly across 0; otherwise keep
      // the natural Dirichlet wall at the origin
      if (!pole_free) fd_grid = GridSpec{0.0, 12.0, 24001};
    } else if (cm.map.kind == CoordKind::kQuadratic2) {
      applicable = false;  // no preset coverage; spectra untested here
    }
    if (applicable) {
      const int k = std::min(2 * spec.levels + 3, fd_grid.points - 2);
      const auto fd = fd_spectrum([&](double x) { return cm.potential(x).real(); }, fd_grid, k);
      double dev = 0.0;
      for (const Complex& e : en.energies) {
        double best = std::numeric_limits<double>::infinity();
        for (double f : fd) best = std::min(best, std::abs(e.real() - f));
        dev = std::max(dev, best);
      }
      add("fd_containment", dev, 5e-3,
          "each algebraic energy appears among the lowest finite-difference eigenvalues");
    }
  }

  // --- convention notes ----------------------------------------------------
  if (cm.map.kind == CoordKind::kQuadratic && std::abs(spec.a2()) < 1e-14 &&
      std::abs(spec.a0()) > 1e-14) {
    rep.notes.push_back(
        "radial-class root conditions are implemented as "
        "A1 z_k + A0 - q1/4 - q1 sum_{l!=k} z_k/(z_k - z_l) = 0 "
        "(for the radial oscillator: 2a z_k - (2 ell + 1) - 4 sum z_k/(z_k - z_l) = 0), "
        "the sign pattern consistent with Laguerre-zero electrostatics; a sometimes-printed "
        "variant with '+(2 ell + 1) + 4 sum' is a suspected sign typo and is not used");
  }
  if (!rep.is_normalizable)
    rep.notes.push_back(
        "exp(-W0) is not square-integrable: quasinormal spectrum, verified by operator "
        "residual only (no outgoing-wave boundary analysis)");

  return rep;
}

}  // namespace qes
