#include "qes/poly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qes {

namespace {
constexpr double kRootResidualTol = 1e-12;
constexpr int kAberthMaxIter = 400;
}  // namespace

Poly::Poly(std::initializer_list<Complex> ascending) {
  coeffs_.resize(static_cast<Eigen::Index>(ascending.size()));
  Eigen::Index i = 0;
  for (Complex c : ascending) coeffs_[i++] = c;
  strip();
}

Poly Poly::monomial(int power, Complex coeff) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(power + 1);
  c[power] = coeff;
  return Poly(std::move(c));
}

Complex Poly::leading() const {
  if (is_zero()) return 0.0;
  return coeffs_[coeffs_.size() - 1];
}

Complex Poly::operator()(Complex z) const {
  Complex acc = 0.0;
  for (Eigen::Index i = coeffs_.size() - 1; i >= 0; --i) acc = acc * z + coeffs_[i];
  return acc;
}

void Poly::strip() {
  Eigen::Index n = coeffs_.size();
  while (n > 0 && coeffs_[n - 1] == Complex(0.0)) --n;
  coeffs_.conservativeResize(n);
}

Poly& Poly::operator+=(const Poly& rhs) {
  Eigen::Index n = std::max(coeffs_.size(), rhs.coeffs_.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  out.head(coeffs_.size()) = coeffs_;
  out.head(rhs.coeffs_.size()) += rhs.coeffs_;
  coeffs_ = std::move(out);
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += Complex(-1.0) * rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.resize(0);
    return *this;
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    for (Eigen::Index j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  strip();
  return *this;
}

Poly& Poly::operator*=(Complex s) {
  coeffs_ *= s;
  strip();
  return *this;
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) m = std::max(m, std::abs(coeffs_[i]));
  return m;
}

Poly derivative(const Poly& p) {
  if (p.degree() <= 0) return Poly();
  Eigen::VectorXcd d(p.degree());
  for (int i = 1; i <= p.degree(); ++i) d[i - 1] = p.coeff(i) * double(i);
  return Poly(std::move(d));
}

DivModResult divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: zero divisor");
  if (num.degree() < den.degree()) return {Poly(), num};
  Eigen::VectorXcd rem = num.coeffs();
  const int dq = num.degree() - den.degree();
  Eigen::VectorXcd quot = Eigen::VectorXcd::Zero(dq + 1);
  const Complex lead = den.leading();
  for (int k = dq; k >= 0; --k) {
    Complex f = rem[k + den.degree()] / lead;
    quot[k] = f;
    for (int j = 0; j <= den.degree(); ++j) rem[k + j] -= f * den.coeff(j);
  }
  // positions >= deg(den) are zero by construction; drop cancellation residue
  rem.conservativeResize(den.degree());
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

bool aberth_converged(const Poly& p, const Eigen::VectorXcd& r, double max_coeff) {
  const int deg = p.degree();
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    double bound = kRootResidualTol * max_coeff * std::pow(std::max(1.0, std::abs(r[k])), deg);
    if (std::abs(p(r[k])) > bound) return false;
  }
  return true;
}

}  // namespace

Eigen::VectorXcd roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("roots: degree must be >= 1");
  const Poly dp = derivative(p);
  const double max_coeff = p.max_abs_coeff();

  // Cauchy bound on root moduli.
  double cauchy = 0.0;
  for (int i = 0; i < n; ++i)
    cauchy = std::max(cauchy, std::abs(p.coeff(i)) / std::abs(p.leading()));
  const double radius = 1.0 + cauchy;

  Eigen::VectorXcd r(n);
  for (int k = 0; k < n; ++k) {
    double theta = 2.0 * M_PI * k / n + 0.7;
    double rho = radius * (0.75 + 0.10 * std::sin(2.4 * k + 1.0));
    r[k] = Complex(rho * std::cos(theta), rho * std::sin(theta));
  }

  // Iterate past the acceptance threshold until the sweep stalls, so simple
  // roots come out at machine accuracy rather than at the bare target.
  for (int iter = 0; iter < kAberthMaxIter; ++iter) {
    double max_update = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex pv = p(r[k]);
      Complex dv = dp(r[k]);
      if (dv == Complex(0.0)) {  // sitting on a critical point: nudge off
        r[k] += Complex(1e-8 * (1.0 + std::abs(r[k])), 1e-8);
        max_update = std::numeric_limits<double>::infinity();
        continue;
      }
      Complex w = pv / dv;
      Complex sum = 0.0;
      for (int l = 0; l < n; ++l)
        if (l != k) sum += 1.0 / (r[k] - r[l]);
      Complex denom = 1.0 - w * sum;
      Complex step = (denom == Complex(0.0)) ? w : w / denom;
      r[k] -= step;
      max_update = std::max(max_update, std::abs(step) / (1.0 + std::abs(r[k])));
    }
    if (max_update < 1e-15 && aberth_converged(p, r, max_coeff)) break;
    if (iter == kAberthMaxIter - 1 && !aberth_converged(p, r, max_coeff))
      throw RootsError("roots: Aberth iteration did not converge", r);
  }

  std::sort(r.begin(), r.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return r;
}

Poly poly_from_roots(const Eigen::VectorXcd& rts, Complex leading) {
  Poly p({leading});
  for (Eigen::Index i = 0; i < rts.size(); ++i) p *= Poly({-rts[i], Complex(1.0)});
  return p;
}

Poly hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  Poly hk_prev = Poly::one();
  if (n == 0) return hk_prev;
  Poly hk({Complex(0.0), Complex(2.0)});
  const Poly two_z({Complex(0.0), Complex(2.0)});
  for (int k = 1; k < n; ++k) {
    Poly next = two_z * hk - Complex(2.0 * k) * hk_prev;
    hk_prev = std::move(hk);
    hk = std::move(next);
  }
  return hk;
}

Poly laguerre(int n, double alpha) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  Poly lk_prev = Poly::one();
  if (n == 0) return lk_prev;
  Poly lk({Complex(1.0 + alpha), Complex(-1.0)});
  for (int k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k+1+alpha - z) L_k - (k+alpha) L_{k-1}
    Poly next = (Poly({Complex(2.0 * k + 1.0 + alpha), Complex(-1.0)}) * lk -
                 Complex(k + alpha) * lk_prev) *
                Complex(1.0 / (k + 1.0));
    lk_prev = std::move(lk);
    lk = std::move(next);
  }
  return lk;
}

}  // namespace qes
