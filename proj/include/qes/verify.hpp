#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/bae.hpp"
#include "qes/model.hpp"
#include "qes/spectrum.hpp"

namespace qes {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured quantity (typically a max deviation)
  double tolerance = 0.0;  // declared bound; 0 when not applicable
  std::string detail;
};

struct VerifyReport {
  Solvability solvability = Solvability::kSingleState;
  bool is_normalizable = false;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  Enumeration enumeration;

  bool all_pass() const;
};

struct VerifyOptions {
  int starts = -1;
  std::uint64_t rng_seed = 0;
  std::optional<GridSpec> grid;
};

/// Runs every oracle applicable to the spec: enumeration count, residual
/// norms, gauged-operator agreement, classical-zero agreement, real-energy
/// and conjugation checks, finite-difference containment, normalization,
/// orthogonality, and pointwise Schroedinger residuals. Non-normalizable
/// (quasinormal) spectra are verified by residual only.
VerifyReport verify_model(const ModelSpec& spec, const VerifyOptions& options = {});

}  // namespace qes
