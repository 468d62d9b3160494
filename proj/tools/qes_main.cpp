#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qes/cli.hpp"
#include "qes/version.hpp"

namespace {

void add_model_options(CLI::App* sub, qes::cli::CommonArgs& args, std::string& grid_text) {
  sub->add_option("--preset", args.preset, "built-in model family");
  sub->add_option("--spec", args.spec_text, "model spec as inline JSON or a file path");
  sub->add_option("--N", args.levels, "level count N");
  for (const char* p : {"a", "b", "c", "alpha", "beta", "gamma", "ell"}) {
    sub->add_option_function<double>(
        std::string("--") + p, [&args, p](double v) { args.params[p] = v; },
        std::string("preset parameter ") + p);
  }
  sub->add_option("--starts", args.starts, "multi-start budget (default 64*(N+1))");
  sub->add_option("--rng-seed", args.rng_seed, "seed for the start generator");
  sub->add_option("--grid", grid_text, "sampling grid as min:max:points");
  sub->add_option("--out", args.out, "output file (or file prefix)");
  sub->add_option("--format", args.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvable one-dimensional quantum models from two polynomials"};
  app.set_version_flag("--version", qes::kVersion);
  app.require_subcommand(1);

  qes::cli::CommonArgs args;
  std::string grid_text;

  for (const char* name : {"classify", "build", "solve", "verify", "states", "extended",
                           "plot-data"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_model_options(sub, args, grid_text);
    if (std::string(name) == "states" || std::string(name) == "plot-data")
      sub->add_option("--magnify", args.magnify, "scale factor for the wave-function columns");
    if (std::string(name) == "extended")
      sub->add_option("--n-max", args.n_max, "highest level to build (default 4)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return qes::cli::kUsageError;
  }

  args.command = app.get_subcommands().front()->get_name();
  if (args.command == "plot-data" &&
      !app.get_subcommands().front()->count("--magnify"))
    args.magnify = 10.0;

  try {
    if (!grid_text.empty()) args.grid = qes::GridSpec::parse(grid_text);
    const qes::cli::CommandResult res = qes::cli::run_command(args);
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return qes::cli::kUsageError;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return qes::cli::kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return qes::cli::kUsageError;
  }
}
