#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nsk/composite.hpp"
#include "nsk/simulation.hpp"

namespace nsk::cli {

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Header line plus one line per row, values in shortest round-trip form.
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows);

std::string timeseries_csv(const std::vector<DiagnosticsRecord>& records);
std::string timeseries_ndjson(const std::vector<DiagnosticsRecord>& records);
std::string snapshot_csv(const Snapshot& snap);

/// xi, v, u, w, v_x, u_x, w_x, v_xx, v_xxx at the table nodes.
std::string profile_csv(const ShockProfile& profile);
/// x, v, u and their derivatives up to fourth order at time t on [lo, hi].
std::string rarefaction_csv(const RarefactionWave& wave, double t, double lo, double hi,
                            std::size_t points);
std::string interactions_csv(const std::vector<InteractionNorms>& rows);

} // namespace nsk::cli
