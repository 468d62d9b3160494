#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qes/poly.hpp"

namespace qes {

/// A model is fully defined by two polynomials and a level count:
/// W0'(x) z'(x) = P(z), z'(x)^2 = Q(z), and the wave functions carry a
/// degree-N polynomial factor whose roots satisfy the Bethe ansatz equations.
struct ModelSpec {
  Poly P;
  Poly Q;
  int levels = 0;  // N
  std::string label;

  Complex a2() const { return P.coeff(2); }
  Complex a1() const { return P.coeff(1); }
  Complex a0() const { return P.coeff(0); }
  Complex q2() const { return Q.coeff(2); }
  Complex q1() const { return Q.coeff(1); }
  Complex q0() const { return Q.coeff(0); }
};

enum class Solvability { kExactlySolvable, kQuasiExactlySolvable, kSingleState };

std::string to_string(Solvability s);

/// Solvability is fixed by the degrees alone: ES for deg P <= 1, deg Q <= 2;
/// QES for deg P == 2, deg Q <= 2; a single algebraic state otherwise.
Solvability classify(const ModelSpec& spec);

enum class CoordKind { kLinear, kQuadratic, kQuadratic2 };

/// Invertible real coordinate z(x) with z'^2 = Q(z), together with the
/// physical x-domain fixed by the potential's root-independent singularities.
struct CoordinateMap {
  CoordKind kind = CoordKind::kLinear;
  // Sub-family of the quadratic class (z'^2 = alpha (z^2 + delta)).
  enum class Family { kNone, kSinh, kCosh, kExp, kCos };
  Family family = Family::kNone;

  double gamma = 0.0;  // kLinear:    z = sqrt(gamma) x
  double beta = 0.0;   // kQuadratic: z = (beta/4) x^2
  double alpha = 0.0;  // kQuadratic2 parameters
  double delta = 0.0;

  double x_min = 0.0;  // open interval; +-infinity allowed
  double x_max = 0.0;

  double z_of_x(double x) const;
  double x_of_z(double z) const;
  double dz_dx(double x) const;
  bool contains(double x) const { return x > x_min && x < x_max; }
};

/// Builds the canonical coordinate for real Q of degree <= 2.
/// Throws std::invalid_argument if Q has complex coefficients or does not
/// match one of the canonical forms gamma, beta*z, alpha*(z^2+delta).
CoordinateMap coordinate_map(const Poly& Q);

/// Closed form of W0(z) = integral of P/Q dz: a polynomial part plus
/// logarithmic and inverse terms from the partial fractions of P/Q.
struct Prepotential {
  Poly antiderivative;  // integral of the polynomial part of P/Q
  struct LogTerm {
    Complex pole;
    Complex coeff;  // coeff * log(z - pole)
  };
  struct InverseTerm {
    Complex pole;
    Complex coeff;  // coeff / (z - pole)
  };
  std::vector<LogTerm> logs;
  std::vector<InverseTerm> inverses;

  Complex operator()(Complex z) const;
};

Prepotential prepotential_w0(const ModelSpec& spec);

/// W0 evaluated at z(x).
Complex prepotential_value(const ModelSpec& spec, double x);

/// Decides square-integrability of exp(-W0) from the leading asymptotics of
/// Re W0 at both domain endpoints. Power-law endpoints x^s require
/// Re(s) > -1/2.
bool normalizable(const ModelSpec& spec);

/// V0 = (P^2 - Q P' + P Q'/2)/Q split into a polynomial part S(z) and pole
/// terms, plus the N-dependent data. With the Bethe conditions imposed the
/// full potential is pole-free in the roots:
///   V_N(z) = S(z) + poles + q2 N^2 - 2 A1 N - 2 A2 N z - 2 A2 sum_k z_k,
/// and the physical potential / eigenvalue convention used throughout is
///   Vt(z) = S(z) - S0 + poles - 2 A2 N z,
///   E     = -(S0 + q2 N^2 - 2 A1 N - 2 A2 sum_k z_k).
struct RationalPotential {
  struct PoleTerm {
    Complex location;
    int order = 1;  // 1 or 2
    Complex coeff;
  };

  Poly S;
  std::vector<PoleTerm> poles;
  Complex S0;              // constant term of S
  Complex linear_n_coeff;  // -2 A2 N
  // energy rule data
  Complex q2, A1, A2;
  int levels = 0;

  /// S(z) + pole terms (= V0 away from poles of Q).
  Complex rational_part(Complex z) const;
  /// Physical potential Vt(z) = S - S0 + poles - 2 A2 N z.
  Complex physical(Complex z) const;
  /// q2 N^2 - 2 A1 N - 2 A2 sum_zk (the root-dependent additive constant).
  Complex n_constant(Complex sum_zk) const;
  Complex energy(Complex sum_zk) const { return -(S0 + n_constant(sum_zk)); }
};

RationalPotential potential_core(const ModelSpec& spec);

/// E for a converged root set (roots.size() must equal spec.levels).
Complex energy(const ModelSpec& spec, const Eigen::VectorXcd& roots);

/// Unnormalized eigenfunction exp(-W0(x)) * prod_k (z(x) - z_k).
/// Throws std::domain_error for x outside the physical domain.
Complex phi(const ModelSpec& spec, const Eigen::VectorXcd& roots, double x);

/// Everything derived from a spec, built once for repeated evaluation.
struct CompiledModel {
  ModelSpec spec;
  Solvability solvability;
  CoordinateMap map;
  Prepotential w0;
  RationalPotential pot;

  explicit CompiledModel(const ModelSpec& s);

  Complex w0_of_x(double x) const { return w0(map.z_of_x(x)); }
  /// Physical potential at z(x); needs only z(x) to be defined, so callers
  /// may evaluate outside the open domain (e.g. even extension across 0).
  Complex potential(double x) const { return pot.physical(map.z_of_x(x)); }
  Complex phi(const Eigen::VectorXcd& roots, double x) const;
};

}  // namespace qes
