#include "qes/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qes {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRealTol = 1e-12;

bool is_real(Complex c, double scale = 1.0) { return std::abs(c.imag()) <= kRealTol * std::max(1.0, scale); }
}  // namespace

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::kExactlySolvable: return "ExactlySolvable";
    case Solvability::kQuasiExactlySolvable: return "QuasiExactlySolvable";
    case Solvability::kSingleState: return "SingleState";
  }
  return "?";
}

Solvability classify(const ModelSpec& spec) {
  const int m = spec.P.degree();
  const int n = spec.Q.degree();
  if (m <= 1 && n <= 2) return Solvability::kExactlySolvable;
  if (m == 2 && n <= 2) return Solvability::kQuasiExactlySolvable;
  return Solvability::kSingleState;
}

double CoordinateMap::z_of_x(double x) const {
  switch (kind) {
    case CoordKind::kLinear: return std::sqrt(gamma) * x;
    case CoordKind::kQuadratic: return 0.25 * beta * x * x;
    case CoordKind::kQuadratic2:
      switch (family) {
        case Family::kSinh: return std::sqrt(delta) * std::sinh(std::sqrt(alpha) * x);
        case Family::kCosh: return std::sqrt(-delta) * std::cosh(std::sqrt(alpha) * x);
        case Family::kExp: return std::exp(std::sqrt(alpha) * x);
        case Family::kCos: return std::sqrt(-delta) * std::cos(std::sqrt(-alpha) * x);
        default: break;
      }
  }
  throw std::logic_error("CoordinateMap: invalid state");
}

double CoordinateMap::x_of_z(double z) const {
  switch (kind) {
    case CoordKind::kLinear: return z / std::sqrt(gamma);
    case CoordKind::kQuadratic: return 2.0 * std::sqrt(z / beta);
    case CoordKind::kQuadratic2:
      switch (family) {
        case Family::kSinh: return std::asinh(z / std::sqrt(delta)) / std::sqrt(alpha);
        case Family::kCosh: return std::acosh(z / std::sqrt(-delta)) / std::sqrt(alpha);
        case Family::kExp: return std::log(z) / std::sqrt(alpha);
        case Family::kCos: return std::acos(z / std::sqrt(-delta)) / std::sqrt(-alpha);
        default: break;
      }
  }
  throw std::logic_error("CoordinateMap: invalid state");
}

double CoordinateMap::dz_dx(double x) const {
  switch (kind) {
    case CoordKind::kLinear: return std::sqrt(gamma);
    case CoordKind::kQuadratic: return 0.5 * beta * x;
    case CoordKind::kQuadratic2: {
      double sa = std::sqrt(std::abs(alpha));
      switch (family) {
        case Family::kSinh: return std::sqrt(delta) * sa * std::cosh(sa * x);
        case Family::kCosh: return std::sqrt(-delta) * sa * std::sinh(sa * x);
        case Family::kExp: return sa * std::exp(sa * x);
        case Family::kCos: return -std::sqrt(-delta) * sa * std::sin(sa * x);
        default: break;
      }
    }
  }
  throw std::logic_error("CoordinateMap: invalid state");
}

CoordinateMap coordinate_map(const Poly& Q) {
  if (Q.is_zero()) throw std::invalid_argument("coordinate_map: Q must be nonzero");
  const double scale = Q.max_abs_coeff();
  for (int i = 0; i <= Q.degree(); ++i)
    if (!is_real(Q.coeff(i), scale))
      throw std::invalid_argument("coordinate_map: Q has complex coefficients, no canonical form");

  CoordinateMap m;
  if (Q.degree() == 0) {
    double gamma = Q.coeff(0).real();
    if (gamma <= 0.0) throw std::invalid_argument("coordinate_map: constant Q requires gamma > 0");
    m.kind = CoordKind::kLinear;
    m.gamma = gamma;
    m.x_min = -kInf;
    m.x_max = kInf;
    return m;
  }
  if (Q.degree() == 1) {
    double beta = Q.coeff(1).real();
    if (beta <= 0.0 || std::abs(Q.coeff(0)) > kRealTol * scale)
      throw std::invalid_argument("coordinate_map: degree-1 Q must be beta*z with beta > 0");
    m.kind = CoordKind::kQuadratic;
    m.beta = beta;
    m.x_min = 0.0;
    m.x_max = kInf;
    return m;
  }
  if (Q.degree() == 2) {
    if (std::abs(Q.coeff(1)) > kRealTol * scale)
      throw std::invalid_argument("coordinate_map: degree-2 Q must be alpha*(z^2 + delta)");
    double alpha = Q.coeff(2).real();
    double delta = Q.coeff(0).real() / alpha;
    m.kind = CoordKind::kQuadratic2;
    m.alpha = alpha;
    m.delta = delta;
    if (alpha > 0.0 && delta > 0.0) {
      m.family = CoordinateMap::Family::kSinh;
      m.x_min = -kInf;
      m.x_max = kInf;
    } else if (alpha > 0.0 && delta < 0.0) {
      m.family = CoordinateMap::Family::kCosh;
      m.x_min = 0.0;
      m.x_max = kInf;
    } else if (alpha > 0.0 && delta == 0.0) {
      m.family = CoordinateMap::Family::kExp;
      m.x_min = -kInf;
      m.x_max = kInf;
    } else if (alpha < 0.0 && delta < 0.0) {
      m.family = CoordinateMap::Family::kCos;
      m.x_min = 0.0;
      m.x_max = M_PI / std::sqrt(-alpha);
    } else {
      throw std::invalid_argument("coordinate_map: z'^2 = alpha*(z^2+delta) is negative on the real z-axis");
    }
    return m;
  }
  throw std::invalid_argument("coordinate_map: deg Q must be <= 2");
}

Complex Prepotential::operator()(Complex z) const {
  Complex w = antiderivative(z);
  for (const auto& t : logs) w += t.coeff * std::log(z - t.pole);
  for (const auto& t : inverses) w += t.coeff / (z - t.pole);
  return w;
}

namespace {

/// Partial fractions of R/Q for deg R < deg Q <= 2; appends log/inverse
/// antiderivative terms.
void partial_fraction_terms(const Poly& R, const Poly& Q, Prepotential& out) {
  if (R.is_zero()) return;
  const int n = Q.degree();
  if (n == 0) throw std::logic_error("partial fractions: deg Q = 0 with nonzero remainder");
  if (n == 1) {
    Complex zeta = -Q.coeff(0) / Q.coeff(1);
    out.logs.push_back({zeta, R.coeff(0) / Q.coeff(1)});
    return;
  }
  const Complex q2 = Q.coeff(2), q1 = Q.coeff(1), q0 = Q.coeff(0);
  const Complex disc = q1 * q1 - 4.0 * q2 * q0;
  const Complex sq = std::sqrt(disc);
  const Complex zp = (-q1 + sq) / (2.0 * q2);
  const Complex zm = (-q1 - sq) / (2.0 * q2);
  const double sep_scale = std::max({1.0, std::abs(zp), std::abs(zm)});
  if (std::abs(zp - zm) > 1e-9 * sep_scale) {
    const Poly dQ = derivative(Q);
    out.logs.push_back({zp, R(zp) / dQ(zp)});
    out.logs.push_back({zm, R(zm) / dQ(zm)});
  } else {
    // double root: R/Q = (r1/q2)/(z-zeta) + (R(zeta)/q2)/(z-zeta)^2
    Complex zeta = 0.5 * (zp + zm);
    Complex c1 = R.coeff(1) / q2;
    Complex c2 = R(zeta) / q2;
    if (c1 != Complex(0.0)) out.logs.push_back({zeta, c1});
    if (c2 != Complex(0.0)) out.inverses.push_back({zeta, -c2});  // d/dz [-c2/(z-zeta)]
  }
}

}  // namespace

Prepotential prepotential_w0(const ModelSpec& spec) {
  coordinate_map(spec.Q);  // validates Q
  auto [T, R] = divmod(spec.P, spec.Q);
  Prepotential w;
  // integrate the polynomial part termwise
  if (!T.is_zero()) {
    Eigen::VectorXcd anti = Eigen::VectorXcd::Zero(T.degree() + 2);
    for (int i = 0; i <= T.degree(); ++i) anti[i + 1] = T.coeff(i) / double(i + 1);
    w.antiderivative = Poly(std::move(anti));
  }
  partial_fraction_terms(R, spec.Q, w);
  return w;
}

Complex prepotential_value(const ModelSpec& spec, double x) {
  const CompiledModel cm(spec);
  return cm.w0_of_x(x);
}

namespace {

// Endpoint analysis for normalizability. sigma_z = sign of z at an infinite
// endpoint; exponential_z marks maps where |z| grows exponentially in x.
struct EndBehavior {
  double sigma_z = 1.0;
  bool exponential_z = false;
  double log_rate = 1.0;  // d ln|z| / d ln|x| when polynomial in x
};

EndBehavior infinite_end(const CoordinateMap& m, bool upper) {
  EndBehavior e;
  switch (m.kind) {
    case CoordKind::kLinear:
      e.sigma_z = upper ? 1.0 : -1.0;
      e.log_rate = 1.0;
      break;
    case CoordKind::kQuadratic:
      e.sigma_z = 1.0;
      e.log_rate = 2.0;
      break;
    case CoordKind::kQuadratic2:
      e.exponential_z = true;
      e.sigma_z = (m.family == CoordinateMap::Family::kSinh && !upper) ? -1.0 : 1.0;
      break;
  }
  return e;
}

bool normalizable_at_infinite_end(const Prepotential& w, const EndBehavior& e, double coeff_scale) {
  // Leading polynomial behavior of Re W0: first nonzero real contribution
  // (descending degree) decides; Re W0 -> +inf means exp(-W0) decays faster
  // than any power.
  for (int k = w.antiderivative.degree(); k >= 1; --k) {
    double dir = (k % 2 == 0) ? 1.0 : e.sigma_z;
    double v = (w.antiderivative.coeff(k) * dir).real();
    if (std::abs(v) > kRealTol * std::max(1.0, coeff_scale)) return v > 0.0;
  }
  // Pure power law |phi| ~ |z|^{-p}, p = sum of Re(log coefficients).
  double p = 0.0;
  for (const auto& t : w.logs) p += t.coeff.real();
  if (e.exponential_z) return p > kRealTol;  // |phi| ~ exp(-p sqrt(alpha)|x|)
  return 2.0 * p * e.log_rate > 1.0;
}

bool normalizable_at_finite_end(const CoordinateMap& m, const Prepotential& w, double x0,
                                bool upper) {
  // z - z0 ~ C (x - x0)^korder with korder = 2 when z'(x0) = 0 (the in-scope
  // quadratic map at x=0, and trigonometric interval ends).
  const double z0 = m.z_of_x(x0);
  const double h = 1e-5 * std::max(1.0, std::abs(x0));
  const double xprobe = upper ? x0 - h : x0 + h;
  const int korder = (std::abs(m.dz_dx(x0)) < 1e-9) ? 2 : 1;
  const double C = (m.z_of_x(xprobe) - z0) / std::pow(std::abs(xprobe - x0), korder);

  double s = 0.0;  // |phi| ~ |x - x0|^s
  for (const auto& t : w.inverses) {
    if (std::abs(t.pole - z0) < 1e-9) {
      // W0 contains coeff/(z-z0) ~ (coeff/C)/|x-x0|^korder: sign decides.
      double v = (t.coeff / C).real();
      if (std::abs(v) > kRealTol) return v > 0.0;
    }
  }
  for (const auto& t : w.logs)
    if (std::abs(t.pole - z0) < 1e-9) s += -double(korder) * t.coeff.real();
  return s > -0.5;
}

}  // namespace

bool normalizable(const ModelSpec& spec) {
  const CoordinateMap m = coordinate_map(spec.Q);
  const Prepotential w = prepotential_w0(spec);
  const double scale = spec.P.max_abs_coeff();

  bool lower_ok = std::isinf(m.x_min)
                      ? normalizable_at_infinite_end(w, infinite_end(m, false), scale)
                      : normalizable_at_finite_end(m, w, m.x_min, false);
  bool upper_ok = std::isinf(m.x_max)
                      ? normalizable_at_infinite_end(w, infinite_end(m, true), scale)
                      : normalizable_at_finite_end(m, w, m.x_max, true);
  return lower_ok && upper_ok;
}

Complex RationalPotential::rational_part(Complex z) const {
  Complex v = S(z);
  for (const auto& p : poles) {
    Complex d = z - p.location;
    v += (p.order == 1) ? p.coeff / d : p.coeff / (d * d);
  }
  return v;
}

Complex RationalPotential::physical(Complex z) const {
  return rational_part(z) - S0 + linear_n_coeff * z;
}

Complex RationalPotential::n_constant(Complex sum_zk) const {
  const double n = levels;
  return q2 * n * n - 2.0 * A1 * n - 2.0 * A2 * sum_zk;
}

RationalPotential potential_core(const ModelSpec& spec) {
  if (spec.P.degree() > 2 || spec.Q.degree() > 2)
    throw std::invalid_argument("potential_core: requires deg P <= 2 and deg Q <= 2");
  const Poly U = spec.P * spec.P - spec.Q * derivative(spec.P) +
                 Complex(0.5) * spec.P * derivative(spec.Q);
  auto [S, R] = divmod(U, spec.Q);

  RationalPotential rp;
  rp.S = S;
  rp.S0 = S.coeff(0);
  rp.q2 = spec.q2();
  rp.A1 = spec.a1();
  rp.A2 = spec.a2();
  rp.levels = spec.levels;
  rp.linear_n_coeff = -2.0 * spec.a2() * double(spec.levels);

  if (!R.is_zero()) {
    const int n = spec.Q.degree();
    if (n == 1) {
      Complex zeta = -spec.q0() / spec.q1();
      rp.poles.push_back({zeta, 1, R.coeff(0) / spec.q1()});
    } else if (n == 2) {
      const Complex disc = spec.q1() * spec.q1() - 4.0 * spec.q2() * spec.q0();
      const Complex sq = std::sqrt(disc);
      const Complex zp = (-spec.q1() + sq) / (2.0 * spec.q2());
      const Complex zm = (-spec.q1() - sq) / (2.0 * spec.q2());
      const double sep_scale = std::max({1.0, std::abs(zp), std::abs(zm)});
      if (std::abs(zp - zm) > 1e-9 * sep_scale) {
        const Poly dQ = derivative(spec.Q);
        rp.poles.push_back({zp, 1, R(zp) / dQ(zp)});
        rp.poles.push_back({zm, 1, R(zm) / dQ(zm)});
      } else {
        Complex zeta = 0.5 * (zp + zm);
        Complex c1 = R.coeff(1) / spec.q2();
        Complex c2 = R(zeta) / spec.q2();
        if (c1 != Complex(0.0)) rp.poles.push_back({zeta, 1, c1});
        if (c2 != Complex(0.0)) rp.poles.push_back({zeta, 2, c2});
      }
    }
  }
  return rp;
}

Complex energy(const ModelSpec& spec, const Eigen::VectorXcd& roots) {
  if (roots.size() != spec.levels)
    throw std::invalid_argument("energy: root count must equal the level count N");
  return potential_core(spec).energy(roots.sum());
}

CompiledModel::CompiledModel(const ModelSpec& s)
    : spec(s),
      solvability(classify(s)),
      map(coordinate_map(s.Q)),
      w0(prepotential_w0(s)),
      pot(potential_core(s)) {}

Complex CompiledModel::phi(const Eigen::VectorXcd& roots, double x) const {
  if (!map.contains(x)) throw std::domain_error("phi: x outside the physical domain");
  const double z = map.z_of_x(x);
  Complex value = std::exp(-w0(z));
  for (Eigen::Index k = 0; k < roots.size(); ++k) value *= (z - roots[k]);
  return value;
}

Complex phi(const ModelSpec& spec, const Eigen::VectorXcd& roots, double x) {
  return CompiledModel(spec).phi(roots, x);
}

}  // namespace qes
