#include "nsk/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "nsk/cli/config.hpp"
#include "nsk/cli/io.hpp"
#include "nsk/errors.hpp"
#include "nsk/format.hpp"
#include "nsk/verify.hpp"

namespace nsk::cli {

namespace fs = std::filesystem;

namespace {

bool wants(const RunConfig& cfg, const std::string& format) {
  return std::find(cfg.output.formats.begin(), cfg.output.formats.end(), format) !=
         cfg.output.formats.end();
}

int cmd_riemann(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
  const std::string text = format_pattern(make_pattern(cfg));
  write_atomic(dir / "pattern.txt", text);
  out << text;
  return kOk;
}

int cmd_profile(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
  const ShockProfile profile = solve_profile(make_model(cfg), make_pattern(cfg));
  write_atomic(dir / "profile.csv", profile_csv(profile));
  out << "profile: " << profile.xi().size() << " nodes on [" << format_double(profile.xi_min())
      << ", " << format_double(profile.xi_max()) << "]\n";
  return kOk;
}

int cmd_rarefaction(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
  const RarefactionWave wave(make_model(cfg), make_pattern(cfg));
  const double t = cfg.sampling.t;
  const auto [lo, hi] = wave.support(t);
  write_atomic(dir / "rarefaction.csv", rarefaction_csv(wave, t, lo, hi, cfg.sampling.points));
  out << "rarefaction: t = " << format_double(t) << ", " << cfg.sampling.points << " points\n";
  return kOk;
}

int cmd_interactions(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
  const CompositeWave wave(make_model(cfg), make_pattern(cfg));
  std::vector<InteractionNorms> rows;
  for (double t : cfg.sampling.times) rows.push_back(wave.interaction_norms(t, 0.0));
  write_atomic(dir / "interactions.csv", interactions_csv(rows));
  out << "interactions: " << rows.size() << " times\n";
  return kOk;
}

std::string summary_text(const RunResult& r, const SchemeConfig& sc) {
  std::ostringstream s;
  const DiagnosticsRecord& last = r.records.back();
  s << "t_end = " << format_double(last.t) << '\n'
    << "steps = " << r.final_state.steps << '\n'
    << "records = " << r.records.size() << '\n'
    << "X_final = " << format_double(last.X) << '\n'
    << "sup_norm_ratio = " << format_double(r.decay.sup_norm_ratio) << '\n'
    << "Xdot_ratio = " << format_double(r.decay.Xdot_ratio) << '\n'
    << "eta_ratio = " << format_double(r.decay.eta_ratio) << '\n'
    << "L2_phi_ratio = " << format_double(r.decay.L2_phi_ratio) << '\n'
    << "max_constraint_defect = " << format_double(r.max_constraint_defect) << '\n'
    << "constraint_within_ceiling = "
    << (r.max_constraint_defect < sc.constraint_ceiling ? "true" : "false") << '\n'
    << "min_volume = " << format_double(r.min_volume) << '\n'
    << "a_min = " << format_double(r.a_min) << '\n'
    << "a_max = " << format_double(r.a_max) << '\n';
  return s.str();
}

int cmd_simulate(const RunConfig& cfg, const fs::path& dir, std::ostream& out, std::ostream& err) {
  const CompositeWave wave(make_model(cfg), make_pattern(cfg));
  const Solver solver(wave, cfg.grid, cfg.scheme);
  std::vector<DiagnosticsRecord> seen;
  RunOptions opts;
  opts.snapshot_every = cfg.output.snapshot_every;
  opts.on_record = [&](const DiagnosticsRecord& r) { seen.push_back(r); };
  RunResult result;
  try {
    result = run(solver, opts);
  } catch (const NumericalError&) {
    if (!seen.empty()) {
      write_atomic(dir / "timeseries.partial.csv", timeseries_csv(seen));
      err << "partial time series written to " << (dir / "timeseries.partial.csv").string()
          << '\n';
    }
    throw;
  }
  if (wants(cfg, "csv")) write_atomic(dir / "timeseries.csv", timeseries_csv(result.records));
  if (wants(cfg, "ndjson"))
    write_atomic(dir / "timeseries.ndjson", timeseries_ndjson(result.records));
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%04zu.csv", i);
    write_atomic(dir / name, snapshot_csv(result.snapshots[i]));
  }
  const std::string summary = summary_text(result, cfg.scheme);
  write_atomic(dir / "summary.txt", summary);
  out << summary;
  if (result.max_constraint_defect >= cfg.scheme.constraint_ceiling)
    err << "warning: constraint defect " << format_double(result.max_constraint_defect)
        << " reached the ceiling " << format_double(cfg.scheme.constraint_ceiling) << '\n';
  return kOk;
}

int cmd_verify(std::uint64_t seed, std::ostream& out) {
  const std::vector<std::function<SuiteResult()>> suites{
      [&] { return relative_quantity_suite(seed); }, rarefaction_suite,  shock_profile_suite,
      interaction_suite, [&] { return hardy_legendre_suite(seed); }, scheme_suite};
  bool ok = true;
  for (const auto& suite : suites) {
    const SuiteResult r = suite();
    out << format_suite(r) << std::flush;
    ok = ok && r.pass();
  }
  return ok ? kOk : kNumerical;
}

} // namespace

int dispatch(const std::string& sub, const CommandOptions& opts, std::ostream& out,
             std::ostream& err) {
  static const std::vector<std::string> known{"riemann",      "profile",  "rarefaction",
                                              "interactions", "simulate", "verify"};
  if (std::find(known.begin(), known.end(), sub) == known.end()) {
    err << "error: unknown subcommand '" << sub << "'\n";
    return kInvalid;
  }
  try {
    if (sub == "verify") return cmd_verify(opts.seed, out);
    if (!opts.config) {
      err << "error: " << sub << " requires --config\n";
      return kInvalid;
    }
    const RunConfig cfg = load_config(*opts.config);
    const fs::path dir = opts.out ? fs::path(*opts.out) : fs::path(cfg.output.dir);
    if (sub == "riemann") return cmd_riemann(cfg, dir, out);
    if (sub == "profile") return cmd_profile(cfg, dir, out);
    if (sub == "rarefaction") return cmd_rarefaction(cfg, dir, out);
    if (sub == "interactions") return cmd_interactions(cfg, dir, out);
    return cmd_simulate(cfg, dir, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const PatternError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

} // namespace nsk::cli
