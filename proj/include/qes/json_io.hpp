#pragma once

#include <string>

#include <json.hpp>

#include "qes/bae.hpp"
#include "qes/model.hpp"
#include "qes/xrational.hpp"

namespace qes {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

Json poly_to_json(const Poly& p);          // [[re,im], ...] constant-first
Poly poly_from_json(const Json& j);

/// {"P": [[re,im],...], "Q": [[re,im],...], "N": int, "label": string}
Json to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const Json& j);

/// {"ell": int, "alpha": float}
Json to_json(const ExtendedSpec& spec);
ExtendedSpec extended_spec_from_json(const Json& j);

/// {"roots": [[re,im],...], "energy": [re,im], "residual": float, "seed_index": int}
Json solution_to_json(const RootSet& rs, Complex energy);

/// Accepts inline JSON (text starting with '{') or a path to a JSON file.
ModelSpec load_model_spec(const std::string& inline_or_path);

}  // namespace qes
