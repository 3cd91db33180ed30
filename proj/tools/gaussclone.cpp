// Command line front end: gaussclone <subcommand> [options].
//
// CSV goes to --out when given, otherwise to stdout; diagnostics and the
// singlequad summary go to stderr when the CSV occupies stdout. Exit codes:
// 0 success, 1 validation failure, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gaussclone/cli.hpp"

namespace {

using gaussclone::cli::RunConfig;

struct CommandSpec {
  std::string name;
  std::string description;
  std::function<int(const RunConfig&, std::ostream&, std::ostream&)> run;
  bool uses_lambda = false;
  bool uses_sampling = false;
  bool v_grid = false;  // grid runs over v_plus instead of sigma
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian cloning, estimation, and teleportation figures"};
  app.require_subcommand(1);

  const CommandSpec specs[] = {
      {"fbar", "Optimal-gain average cloning fidelity vs sigma",
       gaussclone::cli::cmd_fbar, false, false},
      {"noclone", "No-cloning squeezing threshold vs sigma",
       gaussclone::cli::cmd_noclone, false, false},
      {"tele", "Teleportation fidelity vs the cloning bound",
       gaussclone::cli::cmd_tele, true, false},
      {"singlequad", "Single-quadrature cloner figures vs v_plus",
       gaussclone::cli::cmd_singlequad, false, false, true},
      {"estimate", "Dual-homodyne estimator mean squared errors",
       gaussclone::cli::cmd_estimate, false, true},
  };

  RunConfig config;
  std::string out_path;
  const CommandSpec* selected = nullptr;
  for (const CommandSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    if (spec.v_grid) {
      sub->add_option("--v-min", config.v_min,
                      "Squeezing grid lower edge, positive");
      sub->add_option("--v-max", config.v_max, "Squeezing grid upper edge");
    } else {
      sub->add_option("--sigma-min", config.sigma_min, "Grid lower edge");
      sub->add_option("--sigma-max", config.sigma_max, "Grid upper edge");
    }
    sub->add_option("--steps", config.steps, "Grid size");
    if (spec.uses_lambda) {
      sub->add_option("--lambda", config.lambda,
                      "Resource squeezing parameter in [0, 1)");
    }
    if (spec.uses_sampling) {
      sub->add_option("--seed", config.seed, "Monte Carlo seed");
      sub->add_option("--samples", config.samples, "Monte Carlo trials");
    }
    sub->add_option("--out", out_path, "CSV output path (default: stdout)");
    sub->add_option("--precision", config.precision,
                    "Significant digits, 6 to 17");
    sub->callback([&selected, spec_ptr = &spec]() { selected = spec_ptr; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return gaussclone::cli::kExitUsageError;
  }

  if (selected == nullptr) return gaussclone::cli::kExitUsageError;

  try {
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return gaussclone::cli::kExitUsageError;
      }
      return selected->run(config, file, std::cout);
    }
    return selected->run(config, std::cout, std::cerr);
  } catch (const std::exception& error) {
    std::cerr << selected->name << ": " << error.what() << "\n";
    return gaussclone::cli::kExitUsageError;
  }
}
