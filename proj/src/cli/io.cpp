#include "nsk/cli/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nsk/errors.hpp"
#include "nsk/format.hpp"

namespace nsk::cli {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string timeseries_csv(const std::vector<DiagnosticsRecord>& records) {
  const auto& cols = record_columns();
  std::vector<std::string> header(cols.begin(), cols.end());
  std::vector<std::vector<double>> rows;
  rows.reserve(records.size());
  for (const DiagnosticsRecord& r : records) {
    const auto v = record_values(r);
    rows.emplace_back(v.begin(), v.end());
  }
  return csv(header, rows);
}

std::string timeseries_ndjson(const std::vector<DiagnosticsRecord>& records) {
  const auto& cols = record_columns();
  std::string out;
  for (const DiagnosticsRecord& r : records) {
    const auto v = record_values(r);
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < cols.size(); ++i) j[cols[i]] = v[i];
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string snapshot_csv(const Snapshot& s) {
  std::vector<std::vector<double>> rows(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i)
    rows[i] = {s.x[i], s.v[i], s.u[i], s.w[i], s.vbar[i], s.ubar[i], s.wbar[i], s.a[i]};
  return csv({"x", "v", "u", "w", "vbar", "ubar", "wbar", "a"}, rows);
}

std::string profile_csv(const ShockProfile& profile) {
  std::vector<std::vector<double>> rows;
  rows.reserve(profile.xi().size());
  for (double xi : profile.xi()) {
    const ProfileSample s = profile.eval(xi);
    rows.push_back({xi, s.v, s.u, s.w, s.v_x, s.u_x, s.w_x, s.v_xx, s.v_xxx});
  }
  return csv({"xi", "v", "u", "w", "v_x", "u_x", "w_x", "v_xx", "v_xxx"}, rows);
}

std::string rarefaction_csv(const RarefactionWave& wave, double t, double lo, double hi,
                            std::size_t points) {
  std::vector<std::vector<double>> rows;
  rows.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    const RarefactionSample s = wave.eval(t, x, 4);
    rows.push_back({x, s.v[0], s.u[0], s.v[1], s.u[1], s.v[2], s.u[2], s.v[3], s.u[3], s.v[4],
                    s.u[4]});
  }
  return csv({"x", "v", "u", "v_x", "u_x", "v_xx", "u_xx", "v_xxx", "u_xxx", "v_xxxx", "u_xxxx"},
             rows);
}

std::string interactions_csv(const std::vector<InteractionNorms>& rows_in) {
  std::vector<std::vector<double>> rows;
  for (const InteractionNorms& n : rows_in)
    rows.push_back({n.t, n.vSx_vR_L1, n.vSx_vR_L2, n.vRx_vSx_L1, n.vRx_vSx_L2, n.vRx_vS_L2,
                    n.Q1I_L2, n.Q2_L2});
  return csv({"t", "vSx_vR_L1", "vSx_vR_L2", "vRx_vSx_L1", "vRx_vSx_L2", "vRx_vS_L2", "Q1I_L2",
              "Q2_L2"},
             rows);
}

} // namespace nsk::cli
