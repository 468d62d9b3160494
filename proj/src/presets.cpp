#include "qes/presets.hpp"

#include <stdexcept>

namespace qes {

namespace {

double get(const std::map<std::string, double>& params, const std::string& key,
           const std::string& preset) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("preset '" + preset + "' requires parameter --" + key);
  return it->second;
}

const Complex kI(0.0, 1.0);

}  // namespace

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog = {
      {"harmonic", {"b"}, "simple harmonic oscillator: V = b^2 x^2, E_N = b(2N+1)"},
      {"qnm-harmonic", {"c"}, "inverted oscillator with quasinormal levels: V = -c^2 x^2/4, E_N = -i c (N+1/2)"},
      {"radial", {"a", "ell"}, "radial oscillator: V = a^2 x^2 + ell(ell-1)/x^2, E_N = a(4N+2 ell+1)"},
      {"qnm-radial", {"a", "ell"}, "radial oscillator continued a -> -ia: V = -a^2 x^2 + ell(ell-1)/x^2, E_N = -i a(4N+2 ell+1)"},
      {"sextic", {"a", "b"}, "sextic oscillator on the half-line: V = a^2 x^6 + 2ab x^4 + (b^2-(4N+3)a) x^2; N+1 algebraic levels"},
      {"pt-quartic", {"alpha", "beta", "gamma"}, "complex quartic with PT-symmetric spectrum: V = -alpha^2 x^4 + 2i alpha beta x^3 + (beta^2-2 alpha gamma) x^2 - 2i((N+1)alpha - beta gamma) x"},
      {"sextic-imag-b", {"a", "beta"}, "sextic family with imaginary quadratic coupling b = i beta; complex spectra, residual-verified only"},
      {"x-laguerre", {"ell", "alpha"}, "rationally extended radial oscillator deformed by L_ell^{(alpha)}; E_n = 4(n - alpha - ell)"},
  };
  return catalog;
}

bool is_extended_preset(const std::string& name) { return name == "x-laguerre"; }

ModelSpec make_harmonic(double b, int levels) {
  return {Poly({0.0, b}), Poly({1.0}), levels, "harmonic"};
}

ModelSpec make_qnm_harmonic(double c, int levels) {
  return {Poly({0.0, -kI * (c / 2.0)}), Poly({1.0}), levels, "qnm-harmonic"};
}

ModelSpec make_radial(double a, double ell, int levels) {
  return {Poly({-2.0 * ell, 2.0 * a}), Poly({0.0, 4.0}), levels, "radial"};
}

ModelSpec make_qnm_radial(double a, double ell, int levels) {
  return {Poly({-2.0 * ell, -2.0 * kI * a}), Poly({0.0, 4.0}), levels, "qnm-radial"};
}

ModelSpec make_sextic(double a, double b, int levels) {
  return {Poly({0.0, 2.0 * b, 2.0 * a}), Poly({0.0, 4.0}), levels, "sextic"};
}

ModelSpec make_pt_quartic(double alpha, double beta, double gamma, int levels) {
  return {Poly({kI * gamma, beta, kI * alpha}), Poly({1.0}), levels, "pt-quartic"};
}

ModelSpec make_sextic_imag_b(double a, double beta, int levels) {
  return {Poly({0.0, 2.0 * kI * beta, 2.0 * a}), Poly({0.0, 4.0}), levels, "sextic-imag-b"};
}

ModelSpec make_preset(const std::string& name, const std::map<std::string, double>& params,
                      int levels) {
  if (levels < 0) throw std::invalid_argument("level count N must be >= 0");
  if (name == "harmonic") return make_harmonic(get(params, "b", name), levels);
  if (name == "qnm-harmonic") return make_qnm_harmonic(get(params, "c", name), levels);
  if (name == "radial")
    return make_radial(get(params, "a", name), get(params, "ell", name), levels);
  if (name == "qnm-radial")
    return make_qnm_radial(get(params, "a", name), get(params, "ell", name), levels);
  if (name == "sextic") return make_sextic(get(params, "a", name), get(params, "b", name), levels);
  if (name == "pt-quartic")
    return make_pt_quartic(get(params, "alpha", name), get(params, "beta", name),
                           get(params, "gamma", name), levels);
  if (name == "sextic-imag-b")
    return make_sextic_imag_b(get(params, "a", name), get(params, "beta", name), levels);
  throw std::invalid_argument("unknown preset '" + name + "'");
}

ExtendedSpec make_extended_preset(const std::map<std::string, double>& params) {
  ExtendedSpec spec;
  double ell = get(params, "ell", "x-laguerre");
  spec.ell = static_cast<int>(ell);
  if (spec.ell != ell) throw std::invalid_argument("x-laguerre: ell must be an integer");
  spec.alpha = get(params, "alpha", "x-laguerre");
  validate(spec);
  return spec;
}

}  // namespace qes
