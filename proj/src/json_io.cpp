#include "qes/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qes {

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(complex_to_json(p.coeff(i)));
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
  Eigen::VectorXcd c(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) c[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  return Poly(std::move(c));
}

Json to_json(const ModelSpec& spec) {
  Json j;
  j["P"] = poly_to_json(spec.P);
  j["Q"] = poly_to_json(spec.Q);
  j["N"] = spec.levels;
  j["label"] = spec.label;
  return j;
}

ModelSpec model_spec_from_json(const Json& j) {
  ModelSpec spec;
  spec.P = poly_from_json(j.at("P"));
  spec.Q = poly_from_json(j.at("Q"));
  spec.levels = j.at("N").get<int>();
  if (spec.levels < 0) throw std::invalid_argument("N must be >= 0");
  if (j.contains("label")) spec.label = j["label"].get<std::string>();
  if (spec.Q.is_zero()) throw std::invalid_argument("Q must be nonzero");
  return spec;
}

Json to_json(const ExtendedSpec& spec) {
  Json j;
  j["ell"] = spec.ell;
  j["alpha"] = spec.alpha;
  return j;
}

ExtendedSpec extended_spec_from_json(const Json& j) {
  ExtendedSpec spec;
  spec.ell = j.at("ell").get<int>();
  spec.alpha = j.at("alpha").get<double>();
  validate(spec);
  return spec;
}

Json solution_to_json(const RootSet& rs, Complex energy) {
  Json j;
  Json roots = Json::array();
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i)
    roots.push_back(complex_to_json(rs.roots[i]));
  j["roots"] = std::move(roots);
  j["energy"] = complex_to_json(energy);
  j["residual"] = rs.residual_norm;
  j["seed_index"] = rs.seed_index;
  return j;
}

ModelSpec load_model_spec(const std::string& inline_or_path) {
  std::string text;
  const auto first = inline_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && inline_or_path[first] == '{') {
    text = inline_or_path;
  } else {
    std::ifstream in(inline_or_path);
    if (!in) throw std::invalid_argument("cannot open spec file '" + inline_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed spec JSON: ") + e.what());
  }
  return model_spec_from_json(j);
}

}  // namespace qes
