// Acceptance report: one PASS/FAIL line per criterion.
//   acceptance [--strict] [--nsklab PATH] [--workdir DIR]
// Exits 0 after printing unless --strict is given and a criterion failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nsk/cli/commands.hpp"
#include "nsk/cli/config.hpp"
#include "nsk/format.hpp"
#include "nsk/simulation.hpp"
#include "nsk/verify.hpp"

namespace fs = std::filesystem;
using namespace nsk;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  int id;
  bool pass;
  std::string text;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// A property suite within its runtime budget.
Line suite_line(int id, const std::function<SuiteResult()>& suite, double budget) {
  const SuiteResult r = suite();
  std::string failed;
  for (const Check& c : r.checks)
    if (!c.pass) failed += "; failed: " + c.name + " (" + c.detail + ")";
  const bool in_time = r.seconds < budget;
  std::string text = r.name + ": " + std::to_string(r.checks.size()) + " checks, " +
                     fmt(r.seconds) + " s (budget " + fmt(budget) + " s)" + failed;
  if (!in_time) text += "; over budget";
  return {id, r.pass() && in_time, text};
}

const char* kStability = R"(
[gas]
gamma = 1.4
alpha = 0.0
beta = 0.0

[states]
v_plus = 1.0
u_plus = 0.0
v_m = 0.95
delta_R = 0.05

[grid]
x_lo = -350.0
x_hi = 580.0
n = 4096

[scheme]
t_end = 200.0
output_stride = 500

[perturbation]
kind = "gaussian"
amplitude = 1e-3
center = 0.0
width = 2.0
field = "both"
)";

const char* kShockOnly = R"(
[states]
v_plus = 1.0
v_m = 0.95
v_minus = 0.95

[grid]
x_lo = -300.0
x_hi = 360.0
n = 2048

[scheme]
t_end = 60.0
output_stride = 200

[perturbation]
kind = "gaussian"
amplitude = 1e-3
width = 2.0
field = "both"
)";

const char* kDeterminism = R"(
[states]
v_plus = 1.0
v_m = 0.9
delta_R = 0.05

[grid]
x_lo = -150.0
x_hi = 150.0
n = 512

[scheme]
t_end = 2.0
output_stride = 10

[perturbation]
kind = "gaussian"
amplitude = 1e-3
width = 2.0
field = "both"
)";

double sup_norm(const DiagnosticsRecord& r) { return r.W1inf_phi + r.Linf_psi; }

// X at time t by linear interpolation between records.
double shift_at(const std::vector<DiagnosticsRecord>& recs, double t) {
  for (std::size_t i = 1; i < recs.size(); ++i)
    if (recs[i].t >= t) {
      const double s = (t - recs[i - 1].t) / (recs[i].t - recs[i - 1].t);
      return recs[i - 1].X + s * (recs[i].X - recs[i - 1].X);
    }
  return recs.back().X;
}

struct StabilityOutcome {
  RunResult result;
  double seconds = 0.0;
};

StabilityOutcome stability_run(const char* text) {
  const cli::RunConfig cfg = cli::parse_config(text);
  const CompositeWave wave(cli::make_model(cfg), cli::make_pattern(cfg));
  const Solver solver(wave, cfg.grid, cfg.scheme);
  const auto t0 = Clock::now();
  StabilityOutcome o;
  o.result = run(solver);
  o.seconds = seconds_since(t0);
  return o;
}

std::vector<Line> stability_lines() {
  std::vector<Line> out;
  StabilityOutcome o;
  try {
    o = stability_run(kStability);
  } catch (const std::exception& e) {
    out.push_back({7, false, std::string("stability run aborted: ") + e.what()});
    return out;
  }
  const auto& recs = o.result.records;
  const DiagnosticsRecord& first = recs.front();
  const DiagnosticsRecord& last = recs.back();
  const double T = last.t;

  const double sup0 = sup_norm(first), supT = sup_norm(last);
  const bool a = supT <= 0.5 * sup0;
  const bool b = o.result.decay.Xdot_ratio <= 0.5;
  const double X4 = shift_at(recs, 0.25 * T);
  const double trend_T = std::abs(last.X) / T, trend_4 = std::abs(X4) / (0.25 * T);
  const bool c = trend_T <= 0.5 * trend_4;
  const bool d = last.eta_weighted <= 1.1 * first.eta_weighted;
  const bool e = o.result.a_min >= 1.0 && o.result.a_max <= 2.0;
  const bool f = o.result.max_constraint_defect < 1e-4;
  const bool in_time = o.seconds <= 600.0;

  std::ostringstream s;
  s << "stability run n=4096 T=" << fmt(T) << " in " << fmt(o.seconds) << " s: "
    << "(a) " << (a ? "ok" : "fail") << " sup " << fmt(sup0) << " -> " << fmt(supT)
    << " ratio " << fmt(supT / sup0) << "; "
    << "(b) " << (b ? "ok" : "fail") << " |Xdot| late/early " << fmt(o.result.decay.Xdot_ratio)
    << "; "
    << "(c) " << (c ? "ok" : "fail") << " |X|/t at T " << fmt(trend_T) << " vs T/4 "
    << fmt(trend_4) << "; "
    << "(d) " << (d ? "ok" : "fail") << " eta " << fmt(first.eta_weighted) << " -> "
    << fmt(last.eta_weighted) << "; "
    << "(e) " << (e ? "ok" : "fail") << " a in [" << fmt(o.result.a_min) << ", "
    << fmt(o.result.a_max) << "]; "
    << "(f) " << (f ? "ok" : "fail") << " max constraint defect "
    << fmt(o.result.max_constraint_defect);
  out.push_back({7, a && b && c && d && e && f && in_time, s.str()});
  return out;
}

std::string shock_only_info() {
  try {
    const StabilityOutcome o = stability_run(kShockOnly);
    const auto& recs = o.result.records;
    std::ostringstream s;
    s << "INFO shock-only control (no rarefaction, n=2048, T=" << fmt(recs.back().t) << ", "
      << fmt(o.seconds) << " s): sup ratio " << fmt(sup_norm(recs.back()) / sup_norm(recs.front()))
      << ", |Xdot| late/early " << fmt(o.result.decay.Xdot_ratio) << ", eta "
      << fmt(recs.front().eta_weighted) << " -> " << fmt(recs.back().eta_weighted)
      << ", max constraint defect " << fmt(o.result.max_constraint_defect);
    return s.str();
  } catch (const std::exception& e) {
    return std::string("INFO shock-only control aborted: ") + e.what();
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Line determinism_line(const fs::path& work, const std::string& nsklab) {
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path cfg = work / "determinism.toml";
  std::ofstream(cfg) << kDeterminism;
  int codes[2];
  for (int k = 0; k < 2; ++k) {
    const fs::path dir = work / (k == 0 ? "first" : "second");
    if (!nsklab.empty()) {
      const std::string cmd = "\"" + nsklab + "\" simulate --config \"" + cfg.string() +
                              "\" --out \"" + dir.string() + "\" > /dev/null 2>&1";
      codes[k] = std::system(cmd.c_str());
    } else {
      cli::CommandOptions o;
      o.config = cfg.string();
      o.out = dir.string();
      std::ostringstream sink;
      codes[k] = cli::dispatch("simulate", o, sink, sink);
    }
  }
  const std::string a = slurp(work / "first" / "timeseries.csv");
  const std::string b = slurp(work / "second" / "timeseries.csv");
  const bool ok = codes[0] == 0 && codes[1] == 0 && !a.empty() && a == b;
  std::string how = nsklab.empty() ? "in-process" : "two nsklab processes";
  return {8, ok, "simulate twice (" + how + ", exit codes " + std::to_string(codes[0]) + ", " +
                     std::to_string(codes[1]) + "): timeseries.csv " + std::to_string(a.size()) +
                     " bytes, " + (a == b ? "byte-identical" : "different")};
}

} // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::string nsklab;
  fs::path work = fs::temp_directory_path() / "nsk_acceptance";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--strict") strict = true;
    else if (arg == "--nsklab" && i + 1 < argc) nsklab = argv[++i];
    else if (arg == "--workdir" && i + 1 < argc) work = argv[++i];
    else {
      std::cerr << "usage: acceptance [--strict] [--nsklab PATH] [--workdir DIR]\n";
      return 1;
    }
  }
  const std::uint64_t seed = 20240601;

  std::vector<Line> lines;
  auto emit = [&](const Line& l) {
    std::cout << (l.pass ? "PASS" : "FAIL") << " criterion " << l.id << ": " << l.text
              << std::endl;
    lines.push_back(l);
  };
  emit(suite_line(1, [&] { return relative_quantity_suite(seed); }, 5.0));
  emit(suite_line(2, rarefaction_suite, 30.0));
  emit(suite_line(3, shock_profile_suite, 30.0));
  emit(suite_line(4, interaction_suite, 60.0));
  emit(suite_line(5, [&] { return hardy_legendre_suite(seed); }, 5.0));
  emit(suite_line(6, scheme_suite, 120.0));
  for (const Line& l : stability_lines()) emit(l);
  std::cout << shock_only_info() << std::endl;
  emit(determinism_line(work, nsklab));

  int failed = 0;
  for (const Line& l : lines) failed += l.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return strict && failed > 0 ? 1 : 0;
}
