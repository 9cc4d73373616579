#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nsk/cli/commands.hpp"
#include "nsk/kernels.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nsklab: viscous-dispersive composite wave laboratory"};
  app.require_subcommand(1);
  nsk::cli::CommandOptions opts;
  std::string config, out;

  const char* subs[][2] = {
      {"riemann", "Solve the Riemann problem and print the wave pattern"},
      {"profile", "Tabulate the viscous-dispersive shock profile"},
      {"rarefaction", "Sample the smoothed rarefaction and its derivatives"},
      {"interactions", "Wave interaction norms at the sampling times"},
      {"simulate", "Run the perturbed composite wave and record diagnostics"},
      {"verify", "Run the built-in numerical checks"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s[0], s[1]);
    sub->add_option("--config", config, "TOML run configuration");
    sub->add_option("--out", out, "Output directory (overrides [output] dir)");
    sub->add_option("--seed", opts.seed, "Seed for randomized checks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nsk::cli::kInvalid;
  }

  if (const char* env = std::getenv("NSKLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) nsk::kernels::set_thread_count(n);
  }
  if (!config.empty()) opts.config = config;
  if (!out.empty()) opts.out = out;
  return nsk::cli::dispatch(app.get_subcommands().front()->get_name(), opts, std::cout, std::cerr);
}
