#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace qes {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, stored constant-first.
///
/// Trailing zero coefficients are stripped on construction, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) { strip(); }
  Poly(std::initializer_list<Complex> ascending);

  /// coeff * z^power
  static Poly monomial(int power, Complex coeff = 1.0);
  static Poly one() { return Poly({Complex(1.0)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 0; }

  /// Coefficient of z^i; zero beyond the degree.
  Complex coeff(int i) const {
    return (i >= 0 && i < coeffs_.size()) ? coeffs_[i] : Complex(0.0);
  }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Complex leading() const;

  /// Horner evaluation.
  Complex operator()(Complex z) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(Complex s);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Complex s, Poly p) { return p *= s; }
  friend Poly operator*(Poly p, Complex s) { return p *= s; }
  friend Poly operator-(const Poly& p) { return Complex(-1.0) * p; }

  /// Max |coefficient|, 0 for the zero polynomial.
  double max_abs_coeff() const;

 private:
  Eigen::VectorXcd coeffs_;
  void strip();
};

/// Coefficient-wise derivative.
Poly derivative(const Poly& p);

struct DivModResult {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division: num = quotient * den + remainder, deg(rem) < deg(den).
/// Throws std::invalid_argument on a zero divisor.
DivModResult divmod(const Poly& num, const Poly& den);

/// Thrown by roots() when the simultaneous iteration fails to reach the
/// residual target; carries the best iterate found.
struct RootsError : std::runtime_error {
  Eigen::VectorXcd best;
  explicit RootsError(const std::string& what, Eigen::VectorXcd iterate)
      : std::runtime_error(what), best(std::move(iterate)) {}
};

/// All complex roots with multiplicity via Aberth-Ehrlich simultaneous
/// iteration, starting from a perturbed circle at the Cauchy bound.
/// Residual target: |p(r)| <= 1e-12 * max|coeff| * max(1,|r|)^deg.
/// Returned sorted by (Re, Im). Requires degree >= 1.
Eigen::VectorXcd roots(const Poly& p);

/// Monic-by-default polynomial with the given roots.
Poly poly_from_roots(const Eigen::VectorXcd& rts, Complex leading = 1.0);

/// Physicists' Hermite H_n via H_{k+1} = 2z H_k - 2k H_{k-1}.
Poly hermite(int n);

/// Generalized Laguerre L_n^{(alpha)} via the three-term recurrence.
Poly laguerre(int n, double alpha);

}  // namespace qes
