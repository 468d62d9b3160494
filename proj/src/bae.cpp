#include "qes/bae.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qes/oracle.hpp"

namespace qes {

namespace {

constexpr double kConvergedTol = 1e-12;
constexpr double kStepCollisionDist = 1e-6;
constexpr double kCoincidentDist = 1e-9;
constexpr int kMaxIterations = 200;
constexpr int kMaxConsecutiveCollisions = 50;

double min_pair_distance(const Eigen::VectorXcd& z) {
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < z.size(); ++k)
    for (Eigen::Index l = k + 1; l < z.size(); ++l) m = std::min(m, std::abs(z[k] - z[l]));
  return m;
}

void require_distinct(const Eigen::VectorXcd& z, const char* who) {
  if (z.size() > 1 && min_pair_distance(z) <= kCoincidentDist)
    throw std::invalid_argument(std::string(who) + ": coincident roots");
}

double inf_norm(const Eigen::VectorXcd& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Eigen::VectorXcd canonical_order(Eigen::VectorXcd roots) {
  auto key = [](Complex c) {
    return std::pair<double, double>(std::nearbyint(c.real() * 1e9),
                                     std::nearbyint(c.imag() * 1e9));
  };
  std::sort(roots.begin(), roots.end(),
            [&](Complex a, Complex b) { return key(a) < key(b); });
  return roots;
}

Eigen::VectorXcd bae_residual(const ModelSpec& spec, const Eigen::VectorXcd& roots) {
  require_distinct(roots, "bae_residual");
  const Complex a2 = spec.a2(), a1 = spec.a1(), a0 = spec.a0();
  const Complex q2 = spec.q2(), q1 = spec.q1();
  Eigen::VectorXcd r(roots.size());
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    const Complex zk = roots[k];
    Complex acc = a2 * zk * zk + (a1 - 0.5 * q2) * zk + a0 - 0.25 * q1;
    const Complex qzk = spec.Q(zk);
    for (Eigen::Index l = 0; l < roots.size(); ++l)
      if (l != k) acc -= qzk / (zk - roots[l]);
    r[k] = acc;
  }
  return r;
}

Eigen::MatrixXcd bae_jacobian(const ModelSpec& spec, const Eigen::VectorXcd& roots) {
  require_distinct(roots, "bae_jacobian");
  const Complex a2 = spec.a2(), a1 = spec.a1();
  const Complex q2 = spec.q2();
  const Poly dQ = derivative(spec.Q);
  const Eigen::Index n = roots.size();
  Eigen::MatrixXcd J(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex zk = roots[k];
    Complex diag = 2.0 * a2 * zk + (a1 - 0.5 * q2);
    const Complex qzk = spec.Q(zk), dqzk = dQ(zk);
    for (Eigen::Index l = 0; l < n; ++l) {
      if (l == k) continue;
      const Complex d = zk - roots[l];
      diag -= (dqzk * d - qzk) / (d * d);
      J(k, l) = -qzk / (d * d);
    }
    J(k, k) = diag;
  }
  return J;
}

SolveOutcome solve_from(const ModelSpec& spec, const Eigen::VectorXcd& seed) {
  require_distinct(seed, "solve_from");
  SolveOutcome out;
  Eigen::VectorXcd z = seed;

  if (z.size() == 0) {  // N = 0: the empty root set satisfies everything
    out.converged = true;
    out.solution.roots = z;
    out.solution.residual_norm = 0.0;
    return out;
  }

  Eigen::VectorXcd res = bae_residual(spec, z);
  double rnorm = inf_norm(res);
  int consecutive_collisions = 0;

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    out.iterations = iter;
    if (rnorm <= kConvergedTol) {
      out.converged = true;
      out.solution.roots = canonical_order(z);
      out.solution.residual_norm = inf_norm(bae_residual(spec, out.solution.roots));
      return out;
    }
    Eigen::MatrixXcd J = bae_jacobian(spec, z);
    Eigen::VectorXcd step = J.fullPivLu().solve(-res);
    if (!step.allFinite()) {
      out.message = "singular Jacobian";
      break;
    }

    double lambda = 1.0;
    bool collided = false;
    while (lambda > 1e-14 && min_pair_distance(z + lambda * step) < kStepCollisionDist) {
      lambda *= 0.5;
      collided = true;
    }
    consecutive_collisions = collided ? consecutive_collisions + 1 : 0;
    if (consecutive_collisions >= kMaxConsecutiveCollisions) {
      out.message = "collision guard";
      break;
    }

    double new_norm = rnorm;
    Eigen::VectorXcd z_new = z;
    while (lambda > 1e-14) {
      Eigen::VectorXcd trial = z + lambda * step;
      double trial_norm = inf_norm(bae_residual(spec, trial));
      if (trial_norm < rnorm) {
        z_new = std::move(trial);
        new_norm = trial_norm;
        break;
      }
      lambda *= 0.5;
    }
    if (new_norm >= rnorm) {
      out.message = "stalled";
      break;
    }
    z = std::move(z_new);
    res = bae_residual(spec, z);
    rnorm = inf_norm(res);
  }

  if (rnorm <= kConvergedTol) {
    out.converged = true;
    out.solution.roots = canonical_order(z);
    out.solution.residual_norm = inf_norm(bae_residual(spec, out.solution.roots));
    return out;
  }
  out.solution.roots = z;
  out.solution.residual_norm = rnorm;
  if (out.message.empty()) out.message = "iteration cap reached";
  return out;
}

namespace {

/// Classical-zero seed family matched to the coordinate kind.
Eigen::VectorXcd classical_seed(const ModelSpec& spec, int n) {
  std::vector<double> zeros;
  try {
    const CoordinateMap m = coordinate_map(spec.Q);
    if (m.kind == CoordKind::kQuadratic) {
      // Laguerre electrostatics: alpha = -A0/2 - 1/2, argument scaled by A1/2.
      double alpha = -spec.a0().real() / 2.0 - 0.5;
      if (alpha <= -1.0) alpha = 0.0;
      zeros = classical_zeros(ClassicalKind::kLaguerre, n, alpha);
      double a = spec.a1().real() / 2.0;
      double s = (std::abs(a) > 1e-12) ? 1.0 / a : 1.0;
      for (double& t : zeros) t *= s;
    } else {
      zeros = classical_zeros(ClassicalKind::kHermite, n);
      double b = spec.a1().real();
      double s = (b > 1e-12) ? 1.0 / std::sqrt(b) : 1.0;
      for (double& t : zeros) t *= s;
    }
  } catch (const std::exception&) {
    zeros.assign(n, 0.0);
    for (int i = 0; i < n; ++i) zeros[i] = -1.0 + 2.0 * (i + 0.5) / n;
  }
  Eigen::VectorXcd seed(n);
  for (int i = 0; i < n; ++i) seed[i] = zeros[i];
  // break exact coincidences (e.g. all-zero scaling fallbacks)
  for (int i = 0; i < n; ++i) seed[i] += Complex(0.0, 1e-3 * (i + 1));
  return seed;
}

bool same_root_set(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) >= 1e-8) return false;
  return true;
}

}  // namespace

Enumeration enumerate_solutions(const ModelSpec& spec, int starts, std::uint64_t rng_seed) {
  const int n = spec.levels;
  const Solvability sv = classify(spec);
  Enumeration en;
  en.expected = (sv == Solvability::kQuasiExactlySolvable) ? n + 1 : 1;
  en.starts = (starts < 0) ? 64 * (n + 1) : starts;
  en.rng_seed = rng_seed;

  const RationalPotential pot = potential_core(spec);

  if (n == 0) {
    RootSet rs;
    rs.roots = Eigen::VectorXcd();
    rs.residual_norm = 0.0;
    rs.seed_index = 0;
    en.solutions.push_back(rs);
    en.energies.push_back(pot.energy(0.0));
    return en;
  }

  const Eigen::VectorXcd base = classical_seed(spec, n);
  double scale = 1.0;
  for (Eigen::Index i = 0; i < base.size(); ++i) scale = std::max(scale, std::abs(base[i]));

  for (int s = 0; s < en.starts; ++s) {
    Eigen::VectorXcd seed(n);
    if (s == 0) {
      seed = base;
    } else if (s == 1) {
      seed = Complex(0.0, 1.0) * base;  // rotated family for complex spectra
    } else {
      std::uint64_t state = rng_seed ^ (0xA0761D6478BD642FULL * std::uint64_t(s + 1));
      std::mt19937_64 eng(splitmix64(state));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double radius = scale * (0.25 + 3.0 * double(s) / double(en.starts));
      for (int i = 0; i < n; ++i) {
        double rho = radius * (0.2 + 0.8 * unif(eng));
        double theta = 2.0 * M_PI * unif(eng);
        seed[i] = Complex(rho * std::cos(theta), rho * std::sin(theta));
      }
      if (min_pair_distance(seed) < 10 * kStepCollisionDist) continue;
    }

    SolveOutcome oc = solve_from(spec, seed);
    if (!oc.converged) continue;
    bool duplicate = false;
    for (const RootSet& have : en.solutions)
      if (same_root_set(have.roots, oc.solution.roots)) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    oc.solution.seed_index = s;
    en.solutions.push_back(std::move(oc.solution));
  }

  en.energies.resize(en.solutions.size());
  for (std::size_t i = 0; i < en.solutions.size(); ++i)
    en.energies[i] = pot.energy(en.solutions[i].sum());

  std::vector<std::size_t> order(en.solutions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (en.energies[i].real() != en.energies[j].real())
      return en.energies[i].real() < en.energies[j].real();
    return en.energies[i].imag() < en.energies[j].imag();
  });
  std::vector<RootSet> sols;
  std::vector<Complex> es;
  for (std::size_t i : order) {
    sols.push_back(std::move(en.solutions[i]));
    es.push_back(en.energies[i]);
  }
  en.solutions = std::move(sols);
  en.energies = std::move(es);
  return en;
}

std::vector<SymmetricReduction> reduce_n2(Complex a, Complex b) {
  if (std::abs(a) < 1e-14) throw std::invalid_argument("reduce_n2: requires a != 0");
  ModelSpec spec;
  spec.P = Poly({Complex(0.0), 2.0 * b, 2.0 * a});
  spec.Q = Poly({Complex(0.0), Complex(4.0)});
  spec.levels = 2;

  const Poly cubic({-6.0 * b, 2.0 * b * b - 4.0 * a, 3.0 * a * b, a * a});
  const Eigen::VectorXcd ps = roots(cubic);

  std::vector<SymmetricReduction> out;
  for (Eigen::Index i = 0; i < ps.size(); ++i) {
    SymmetricReduction br;
    br.p = ps[i];
    const Complex denom = a * br.p + b;
    if (std::abs(denom) > 1e-10) {
      br.q_squared = 2.0 * br.p / denom;
    } else if (std::abs(br.p) <= 1e-10) {
      // (ap+b) q^2 = 2p is vacuous at p = 0, b = 0; fall back to the
      // symmetric-sum equation a(p^2 + q^2) + 2bp - 6 = 0.
      br.q_squared = (6.0 - 2.0 * b * br.p - a * br.p * br.p) / a;
      br.note = "q^2 recovered from the symmetric-sum equation";
    } else {
      br.degenerate = true;
      br.note = "ap + b = 0 with p != 0: no consistent q^2; branch excluded";
      out.push_back(br);
      continue;
    }
    const Complex q = std::sqrt(br.q_squared);
    br.z1 = 0.5 * (br.p + q);
    br.z2 = 0.5 * (br.p - q);
    Eigen::VectorXcd z(2);
    z << br.z1, br.z2;
    br.residual = inf_norm(bae_residual(spec, z));
    if (br.residual > 1e-10) {
      br.degenerate = true;
      br.note = "reconstruction failed the residual cross-check";
    }
    out.push_back(br);
  }
  return out;
}

}  // namespace qes
