#pragma once

#include <map>
#include <string>
#include <vector>

#include "qes/model.hpp"
#include "qes/xrational.hpp"

namespace qes {

struct PresetInfo {
  std::string name;
  std::vector<std::string> params;
  std::string doc;
};

/// All built-in model families, with their parameter names.
const std::vector<PresetInfo>& preset_catalog();

bool is_extended_preset(const std::string& name);

/// Builds a ModelSpec for a non-extended preset. Throws std::invalid_argument
/// for unknown names or missing parameters.
ModelSpec make_preset(const std::string& name, const std::map<std::string, double>& params,
                      int levels);

/// Builds the x-laguerre ExtendedSpec.
ExtendedSpec make_extended_preset(const std::map<std::string, double>& params);

// Direct constructors.
ModelSpec make_harmonic(double b, int levels);
ModelSpec make_qnm_harmonic(double c, int levels);
ModelSpec make_radial(double a, double ell, int levels);
ModelSpec make_qnm_radial(double a, double ell, int levels);
ModelSpec make_sextic(double a, double b, int levels);
ModelSpec make_pt_quartic(double alpha, double beta, double gamma, int levels);
ModelSpec make_sextic_imag_b(double a, double beta, int levels);

}  // namespace qes
