#include "qes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qes {

int sturm_count_below(const TridiagonalSymmetric& T, double sigma) {
  const Eigen::Index n = T.diag.size();
  int count = 0;
  double d = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double off2 = (i > 0) ? T.offdiag[i - 1] * T.offdiag[i - 1] : 0.0;
    d = T.diag[i] - sigma - off2 / d;
    if (d == 0.0) d = -1e-300;  // pivot exactly at sigma: count it below
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiagonal_smallest(const TridiagonalSymmetric& T, int k, double abs_tol) {
  const Eigen::Index n = T.diag.size();
  if (k < 1 || k > n) throw std::invalid_argument("tridiagonal_smallest: need 1 <= k <= n");
  // Gershgorin bounds
  double lo = T.diag[0], hi = T.diag[0];
  for (Eigen::Index i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(T.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(T.offdiag[i]);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  std::vector<double> out(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200 && (b - a) > abs_tol; ++iter) {
      double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (sturm_count_below(T, mid) >= j + 1)
        b = mid;
      else
        a = mid;
    }
    out[j] = 0.5 * (a + b);
  }
  return out;
}

Eigen::MatrixXcd gauged_matrix(const ModelSpec& spec, int n_levels) {
  const Solvability sv = classify(spec);
  if (sv == Solvability::kSingleState)
    throw std::invalid_argument("gauged_matrix: spec has no invariant polynomial subspace");
  const int n = n_levels + 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  const Complex a2 = spec.a2(), a1 = spec.a1(), a0 = spec.a0();
  const Complex q2 = spec.q2(), q1 = spec.q1(), q0 = spec.q0();
  for (int j = 0; j < n; ++j) {
    const double dj = j;
    if (j + 1 < n) M(j + 1, j) = 2.0 * a2 * (dj - n_levels);
    M(j, j) = dj * (2.0 * a1 - q2 * dj);
    if (j >= 1) M(j - 1, j) = dj * (2.0 * a0 - q1 * (dj - 0.5));
    if (j >= 2) M(j - 2, j) = -q0 * dj * (dj - 1.0);
  }
  return M;
}

Poly characteristic_poly(const Eigen::MatrixXcd& M) {
  const Eigen::Index n = M.rows();
  if (M.cols() != n) throw std::invalid_argument("characteristic_poly: matrix must be square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j + 1 < i; ++j)
      if (M(i, j) != Complex(0.0))
        throw std::invalid_argument("characteristic_poly: matrix must be upper Hessenberg");

  // Leading principal minor recurrence for det(z I - M):
  //   p_k = (z - M_{k-1,k-1}) p_{k-1}
  //         - sum_j M_{j,k-1} (prod_{r=j+1}^{k-1} M_{r,r-1}) p_j
  std::vector<Poly> p(n + 1);
  p[0] = Poly::one();
  for (Eigen::Index k = 1; k <= n; ++k) {
    Poly acc = Poly({-M(k - 1, k - 1), Complex(1.0)}) * p[k - 1];
    Complex subprod = 1.0;
    for (Eigen::Index j = k - 2; j >= 0; --j) {
      subprod *= M(j + 1, j);
      if (M(j, k - 1) != Complex(0.0)) acc -= M(j, k - 1) * subprod * p[j];
      if (subprod == Complex(0.0)) break;
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

Eigen::VectorXcd gauged_energies(const ModelSpec& spec, int n_levels) {
  const Eigen::MatrixXcd M = gauged_matrix(spec, n_levels);
  const Poly chi = characteristic_poly(M);
  Eigen::VectorXcd lam = roots(chi);
  const Complex s0 = potential_core(spec).S0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] -= s0;
  std::sort(lam.begin(), lam.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return lam;
}

std::vector<double> fd_spectrum(const std::function<double(double)>& potential,
                                const GridSpec& grid, int k) {
  grid.validate();
  const int interior = grid.points - 2;
  if (k > interior) throw std::invalid_argument("fd_spectrum: k exceeds the grid size");
  const double h = grid.h();
  const double w = 1.0 / (h * h);
  TridiagonalSymmetric T;
  T.diag.resize(interior);
  T.offdiag = Eigen::VectorXd::Constant(interior - 1, -w);
  for (int i = 0; i < interior; ++i) T.diag[i] = 2.0 * w + potential(grid.x_min + (i + 1) * h);
  return tridiagonal_smallest(T, k, 1e-10);
}

double schrodinger_residual(const std::function<Complex(double)>& potential, Complex E,
                            const QesState& state) {
  const Eigen::ArrayXcd& f = state.samples;
  const Eigen::Index n = f.size();
  if (n < 5) throw std::invalid_argument("schrodinger_residual: grid too small");
  const double h = state.grid.h();
  const double inv12h2 = 1.0 / (12.0 * h * h);

  double peak = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) peak = std::max(peak, std::abs(f[i]));

  double vmax = 0.0;
  double phi2 = 0.0, res2 = 0.0;
  for (Eigen::Index i = 2; i + 2 < n; ++i) {
    const double x = state.grid.x_min + i * h;
    const Complex v = potential(x);
    const Complex d2 =
        (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv12h2;
    const Complex r = -d2 + (v - E) * f[i];
    res2 += std::norm(r);
    phi2 += std::norm(f[i]);
    if (std::abs(f[i]) > 1e-10 * peak) vmax = std::max(vmax, std::abs(v));
  }
  const double denom = std::sqrt(phi2) * std::max({1.0, std::abs(E), vmax});
  return std::sqrt(res2) / denom;
}

std::vector<double> classical_zeros(ClassicalKind kind, int n, double alpha) {
  if (n < 1) throw std::invalid_argument("classical_zeros: n must be >= 1");
  TridiagonalSymmetric J;
  J.diag.resize(n);
  J.offdiag.resize(n - 1);
  if (kind == ClassicalKind::kHermite) {
    J.diag.setZero();
    for (int i = 1; i < n; ++i) J.offdiag[i - 1] = std::sqrt(0.5 * i);
  } else {
    if (alpha <= -1.0) throw std::invalid_argument("classical_zeros: Laguerre needs alpha > -1");
    for (int i = 0; i < n; ++i) J.diag[i] = 2.0 * i + 1.0 + alpha;
    for (int i = 1; i < n; ++i) J.offdiag[i - 1] = std::sqrt(i * (i + alpha));
  }
  return tridiagonal_smallest(J, n, 1e-13);
}

}  // namespace qes
