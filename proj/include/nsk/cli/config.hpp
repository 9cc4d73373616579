#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nsk/riemann.hpp"
#include "nsk/solver.hpp"

namespace nsk::cli {

struct GasSection {
  double gamma = 1.4;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Either the full end states (v_minus, u_minus) or the construction mode (v_m with one of
/// delta_R or v_minus); the right state is always given.
struct StatesSection {
  double v_plus = 1.0;
  double u_plus = 0.0;
  std::optional<double> v_minus, u_minus, v_m, delta_R;
};

struct OutputSection {
  std::string dir = "out";
  std::vector<std::string> formats{"csv"};
  std::size_t snapshot_every = 0;
};

struct SamplingSection {
  double t = 0.0;             // rarefaction dump time
  std::size_t points = 2001;  // rarefaction dump resolution
  std::vector<double> times{0.0, 100.0, 400.0, 1000.0};  // interaction norm times
};

struct RunConfig {
  GasSection gas;
  StatesSection states;
  Grid grid{-300.0, 300.0, 2048};
  SchemeConfig scheme;
  double strength_cap = 0.2;
  OutputSection output;
  SamplingSection sampling;
};

/// Parses the flat sectioned key = value format. Unknown sections and keys are rejected.
/// Throws ConfigError with the line number on syntax errors and with every violated
/// constraint on validation errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Constraint violations, empty when the configuration is valid.
std::vector<std::string> validate(const RunConfig& cfg);

GasModel make_model(const RunConfig& cfg);
WavePattern make_pattern(const RunConfig& cfg);

} // namespace nsk::cli
