#include "qes/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qes/json_io.hpp"
#include "qes/oracle.hpp"
#include "qes/presets.hpp"
#include "qes/verify.hpp"
#include "qes/version.hpp"

namespace qes::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ModelSpec resolve_spec(const CommonArgs& args) {
  if (args.preset && args.spec_text)
    throw std::invalid_argument("give either --preset or --spec, not both");
  if (args.preset) {
    if (is_extended_preset(*args.preset))
      throw std::invalid_argument("preset '" + *args.preset +
                                  "' is handled by the 'extended' command");
    return make_preset(*args.preset, args.params, args.levels);
  }
  if (args.spec_text) return load_model_spec(*args.spec_text);
  throw std::invalid_argument("missing model: use --preset NAME or --spec FILE/JSON");
}

Json header(const CommonArgs& args, const ModelSpec& spec) {
  Json j;
  j["command"] = args.command;
  j["version"] = kVersion;
  j["spec"] = to_json(spec);
  return j;
}

Json domain_json(const CoordinateMap& map) {
  Json d;
  d["min"] = std::isinf(map.x_min) ? Json(nullptr) : Json(map.x_min);
  d["max"] = std::isinf(map.x_max) ? Json(nullptr) : Json(map.x_max);
  return d;
}

std::string coord_kind_name(const CoordinateMap& m) {
  switch (m.kind) {
    case CoordKind::kLinear: return "linear";
    case CoordKind::kQuadratic: return "quadratic";
    case CoordKind::kQuadratic2:
      switch (m.family) {
        case CoordinateMap::Family::kSinh: return "sinh";
        case CoordinateMap::Family::kCosh: return "cosh";
        case CoordinateMap::Family::kExp: return "exp";
        case CoordinateMap::Family::kCos: return "cos";
        default: break;
      }
  }
  return "?";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string states_csv(const CompiledModel& cm, const QesState& st, double magnify) {
  std::string csv = "x,V_re,V_im,phi_re,phi_im\n";
  const Eigen::ArrayXd x = st.grid.nodes();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Complex v = cm.potential(x[i]);
    const Complex f = st.samples[i] * magnify;
    csv += fmt17(x[i]) + "," + fmt17(v.real()) + "," + fmt17(v.imag()) + "," +
           fmt17(f.real()) + "," + fmt17(f.imag()) + "\n";
  }
  return csv;
}

Json check_to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["value"] = c.value;
  j["tolerance"] = c.tolerance;
  j["detail"] = c.detail;
  return j;
}

CommandResult cmd_classify(const CommonArgs& args) {
  const ModelSpec spec = resolve_spec(args);
  Json j = header(args, spec);
  j["solvability"] = to_string(classify(spec));
  j["degrees"] = {{"m", spec.P.degree()}, {"n", spec.Q.degree()}};
  try {
    j["normalizable"] = normalizable(spec);
  } catch (const std::exception& e) {
    j["normalizable"] = nullptr;
    j["normalizable_error"] = e.what();
  }
  return {kOk, j.dump(2) + "\n", {}};
}

CommandResult cmd_build(const CommonArgs& args) {
  const ModelSpec spec = resolve_spec(args);
  const CompiledModel cm(spec);
  Json j = header(args, spec);
  j["solvability"] = to_string(cm.solvability);
  j["normalizable"] = normalizable(spec);

  Json coord;
  coord["kind"] = coord_kind_name(cm.map);
  if (cm.map.kind == CoordKind::kLinear) coord["gamma"] = cm.map.gamma;
  if (cm.map.kind == CoordKind::kQuadratic) coord["beta"] = cm.map.beta;
  if (cm.map.kind == CoordKind::kQuadratic2) {
    coord["alpha"] = cm.map.alpha;
    coord["delta"] = cm.map.delta;
  }
  coord["domain"] = domain_json(cm.map);
  j["coordinate"] = std::move(coord);

  Json w0;
  w0["polynomial"] = poly_to_json(cm.w0.antiderivative);
  Json logs = Json::array();
  for (const auto& t : cm.w0.logs)
    logs.push_back({{"pole", complex_to_json(t.pole)}, {"coeff", complex_to_json(t.coeff)}});
  w0["log_terms"] = std::move(logs);
  Json invs = Json::array();
  for (const auto& t : cm.w0.inverses)
    invs.push_back({{"pole", complex_to_json(t.pole)}, {"coeff", complex_to_json(t.coeff)}});
  w0["inverse_terms"] = std::move(invs);
  j["prepotential"] = std::move(w0);

  Json pot;
  pot["S"] = poly_to_json(cm.pot.S);
  pot["S0"] = complex_to_json(cm.pot.S0);
  Json poles = Json::array();
  for (const auto& p : cm.pot.poles)
    poles.push_back({{"location", complex_to_json(p.location)},
                     {"order", p.order},
                     {"coeff", complex_to_json(p.coeff)}});
  pot["poles"] = std::move(poles);
  pot["linear_n_coeff"] = complex_to_json(cm.pot.linear_n_coeff);
  pot["energy_rule"] = {{"q2", complex_to_json(cm.pot.q2)},
                        {"A1", complex_to_json(cm.pot.A1)},
                        {"A2", complex_to_json(cm.pot.A2)},
                        {"N", cm.pot.levels}};
  j["potential"] = std::move(pot);
  return {kOk, j.dump(2) + "\n", {}};
}

Json solve_payload(const CommonArgs& args, const ModelSpec& spec, const Enumeration& en) {
  Json j = header(args, spec);
  j["classification"] = to_string(classify(spec));
  j["rng_seed"] = en.rng_seed;
  j["starts"] = en.starts;
  j["expected_solutions"] = en.expected;
  j["found_solutions"] = en.solutions.size();
  Json sols = Json::array();
  for (std::size_t i = 0; i < en.solutions.size(); ++i)
    sols.push_back(solution_to_json(en.solutions[i], en.energies[i]));
  j["solutions"] = std::move(sols);
  return j;
}

CommandResult cmd_solve(const CommonArgs& args) {
  const ModelSpec spec = resolve_spec(args);
  const Enumeration en = enumerate_solutions(spec, args.starts, args.rng_seed);
  Json j = solve_payload(args, spec, en);

  // PT-symmetry flag for complex couplings with a conjugation-closed spectrum
  bool complex_p = false;
  for (int i = 0; i <= spec.P.degree(); ++i)
    if (std::abs(spec.P.coeff(i).imag()) > 1e-14) complex_p = true;
  if (complex_p && !en.energies.empty()) {
    bool all_real = true, conj_closed = true;
    for (const Complex& e : en.energies) {
      if (std::abs(e.imag()) > 1e-10) all_real = false;
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& f : en.energies) best = std::min(best, std::abs(std::conj(e) - f));
      if (best > 1e-10) conj_closed = false;
    }
    if (all_real)
      j["pt_symmetry"] = "unbroken";
    else if (conj_closed)
      j["pt_symmetry"] = "broken";
  }

  const int code = (int(en.solutions.size()) < en.expected) ? kNoConvergence : kOk;
  return {code, j.dump(2) + "\n", {}};
}

CommandResult cmd_verify(const CommonArgs& args) {
  const ModelSpec spec = resolve_spec(args);
  VerifyOptions opt;
  opt.starts = args.starts;
  opt.rng_seed = args.rng_seed;
  opt.grid = args.grid;
  const VerifyReport rep = verify_model(spec, opt);

  Json j = header(args, spec);
  j["solvability"] = to_string(rep.solvability);
  j["normalizable"] = rep.is_normalizable;
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  j["notes"] = rep.notes;
  j["all_pass"] = rep.all_pass();
  return {rep.all_pass() ? kOk : kVerifyFailure, j.dump(2) + "\n", {}};
}

CommandResult cmd_states(const CommonArgs& args) {
  const ModelSpec spec = resolve_spec(args);
  const CompiledModel cm(spec);
  const Enumeration en = enumerate_solutions(spec, args.starts, args.rng_seed);
  const GridSpec grid = args.grid ? *args.grid : default_grid(cm.map);
  const bool norm_ok = normalizable(spec);

  CommandResult res;
  Json j = header(args, spec);
  j["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"points", grid.points}};
  j["magnify"] = args.magnify;
  Json list = Json::array();
  const std::string prefix = args.out.value_or("state");
  for (std::size_t i = 0; i < en.solutions.size(); ++i) {
    const QesState st = norm_ok ? build_state(spec, en.solutions[i], grid)
                                : sample_state(spec, en.solutions[i], grid);
    const std::string path = prefix + "_" + std::to_string(i) + ".csv";
    write_text(path, states_csv(cm, st, args.magnify));
    res.files_written.push_back(path);
    Json item;
    item["file"] = path;
    item["energy"] = complex_to_json(st.energy);
    item["nodes"] = st.nodes;
    item["norm_raw"] = st.norm;
    list.push_back(std::move(item));
  }
  j["states"] = std::move(list);
  j["expected_solutions"] = en.expected;
  j["found_solutions"] = en.solutions.size();
  res.output = j.dump(2) + "\n";
  res.exit_code = (int(en.solutions.size()) < en.expected) ? kNoConvergence : kOk;
  return res;
}

CommandResult cmd_extended(const CommonArgs& args) {
  const ExtendedSpec spec = make_extended_preset(args.params);
  const GridSpec grid = args.grid ? *args.grid : GridSpec{1e-8, 12.0, 24001};

  const Poly xi_poly = xi(spec);
  std::vector<QesState> states;
  Json report;
  report["command"] = args.command;
  report["version"] = kVersion;
  report["spec"] = to_json(spec);
  report["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"points", grid.points}};

  Json levels = Json::array();
  for (int n = 0; n <= args.n_max; ++n) {
    QesState st = extended_state(spec, n, grid);
    const double resid = schrodinger_residual(
        [&](double x) { return Complex(deformed_potential(xi_poly, spec.ell, spec.alpha, x)); },
        st.energy, st);
    Json item;
    item["n"] = n;
    item["energy"] = st.energy.real();
    item["nodes"] = st.nodes;
    item["degree"] = p_ln(spec, n).degree();
    item["schrodinger_residual"] = resid;
    levels.push_back(std::move(item));
    states.push_back(std::move(st));
  }
  report["states"] = std::move(levels);

  const Eigen::MatrixXcd gram = orthogonality(states);
  double off = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index k = 0; k < gram.cols(); ++k)
      if (i != k) off = std::max(off, std::abs(gram(i, k)));
  report["gram_max_offdiagonal"] = off;

  CommandResult res;
  if (args.out) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      std::string csv = "x,V,phi\n";
      const Eigen::ArrayXd x = grid.nodes();
      for (Eigen::Index k = 0; k < x.size(); ++k)
        csv += fmt17(x[k]) + "," +
               fmt17(deformed_potential(xi_poly, spec.ell, spec.alpha, x[k])) + "," +
               fmt17(states[i].samples[k].real() * args.magnify) + "\n";
      const std::string path = *args.out + "_n" + std::to_string(i) + ".csv";
      write_text(path, csv);
      res.files_written.push_back(path);
    }
  }
  res.output = report.dump(2) + "\n";
  return res;
}

CommandResult cmd_plot_data(const CommonArgs& args) {
  const CommonArgs* base = &args;
  CommonArgs a1 = *base;
  a1.levels = 1;
  CommonArgs a2 = *base;
  a2.levels = 2;
  const ModelSpec spec1 = resolve_spec(a1);
  const ModelSpec spec2 = resolve_spec(a2);
  if (!normalizable(spec1) || !normalizable(spec2))
    throw std::invalid_argument("plot-data requires a normalizable model");

  const CompiledModel cm1(spec1), cm2(spec2);
  const GridSpec grid = args.grid ? *args.grid : default_grid(cm1.map);

  auto states_for = [&](const ModelSpec& spec) {
    const Enumeration en = enumerate_solutions(spec, args.starts, args.rng_seed);
    if (int(en.solutions.size()) < en.expected)
      throw std::runtime_error("plot-data: enumeration found fewer root sets than expected");
    std::vector<QesState> st;
    for (const auto& rs : en.solutions) st.push_back(build_state(spec, rs, grid));
    return st;
  };
  const std::vector<QesState> s1 = states_for(spec1);
  const std::vector<QesState> s2 = states_for(spec2);

  std::string csv = "x,V1";
  for (std::size_t i = 0; i < s1.size(); ++i) csv += ",phi1_" + std::to_string(i);
  csv += ",V2";
  for (std::size_t i = 0; i < s2.size(); ++i) csv += ",phi2_" + std::to_string(i);
  csv += "\n";
  const Eigen::ArrayXd x = grid.nodes();
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    csv += fmt17(x[k]) + "," + fmt17(cm1.potential(x[k]).real());
    for (const auto& st : s1) csv += "," + fmt17(st.samples[k].real() * args.magnify);
    csv += "," + fmt17(cm2.potential(x[k]).real());
    for (const auto& st : s2) csv += "," + fmt17(st.samples[k].real() * args.magnify);
    csv += "\n";
  }

  CommandResult res;
  if (args.out) {
    write_text(*args.out, csv);
    res.files_written.push_back(*args.out);
    Json j = header(args, spec2);
    j["file"] = *args.out;
    j["magnify"] = args.magnify;
    res.output = j.dump(2) + "\n";
  } else {
    res.output = csv;
  }
  return res;
}

}  // namespace

CommandResult run_command(const CommonArgs& args) {
  if (args.command == "classify") return cmd_classify(args);
  if (args.command == "build") return cmd_build(args);
  if (args.command == "solve") return cmd_solve(args);
  if (args.command == "verify") return cmd_verify(args);
  if (args.command == "states") return cmd_states(args);
  if (args.command == "extended") return cmd_extended(args);
  if (args.command == "plot-data") return cmd_plot_data(args);
  throw std::invalid_argument("unknown command '" + args.command + "'");
}

}  // namespace qes::cli
