#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace nsk::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kNumerical = 2 };

struct CommandOptions {
  std::optional<std::string> config;  // required by every subcommand except verify
  std::optional<std::string> out;     // overrides [output] dir
  std::uint64_t seed = 20240601;
};

/// Runs one of riemann, profile, rarefaction, interactions, simulate, verify.
/// Messages go to `err`, summaries to `out`.
int dispatch(const std::string& subcommand, const CommandOptions& opts, std::ostream& out,
             std::ostream& err);

} // namespace nsk::cli
