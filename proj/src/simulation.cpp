#include "nsk/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace nsk {

Snapshot take_snapshot(const Solver& solver, const SimState& s) {
  const auto bar = solver.sample_bar(s.t, s.X);
  Snapshot snap;
  snap.t = s.t;
  snap.x = solver.x();
  snap.v = s.v;
  snap.u = s.u;
  snap.w = s.w;
  const std::size_t n = bar.size();
  snap.vbar.resize(n);
  snap.ubar.resize(n);
  snap.wbar.resize(n);
  snap.a.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    snap.vbar[i] = bar[i].v;
    snap.ubar[i] = bar[i].u;
    snap.wbar[i] = bar[i].w;
    snap.a[i] = bar[i].a;
  }
  return snap;
}

namespace {

template <class F>
double window_mean(const std::vector<DiagnosticsRecord>& r, double t0, double t1, F f) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const DiagnosticsRecord& rec : r)
    if (rec.t >= t0 && rec.t <= t1) {
      sum += f(rec);
      ++count;
    }
  return count ? sum / static_cast<double>(count) : 0.0;
}

double ratio(double late, double early) { return early > 0.0 ? late / early : 0.0; }

} // namespace

DecaySummary decay_summary(const std::vector<DiagnosticsRecord>& records) {
  DecaySummary d;
  if (records.size() < 2) return d;
  const double T0 = records.front().t, T1 = records.back().t;
  const double q = 0.25 * (T1 - T0);
  auto both = [&](auto f) {
    return ratio(window_mean(records, T1 - q, T1, f), window_mean(records, T0, T0 + q, f));
  };
  d.sup_norm_ratio = both([](const DiagnosticsRecord& r) { return r.W1inf_phi + r.Linf_psi; });
  d.Xdot_ratio = both([](const DiagnosticsRecord& r) { return std::abs(r.Xdot); });
  d.L2_phi_ratio = both([](const DiagnosticsRecord& r) { return r.L2_phi; });
  d.eta_ratio = ratio(records.back().eta_weighted, records.front().eta_weighted);
  return d;
}

RunResult run(const Solver& solver, const RunOptions& opts) {
  const SchemeConfig& cfg = solver.config();
  RunResult out;
  SimState s = solver.initial_data();
  out.min_volume = *std::min_element(s.v.begin(), s.v.end());

  auto record = [&](const SimState& st) {
    DiagnosticsRecord r = diagnose(solver, st);
    if (out.records.empty()) {
      out.a_min = r.a_min;
      out.a_max = r.a_max;
    } else {
      out.a_min = std::min(out.a_min, r.a_min);
      out.a_max = std::max(out.a_max, r.a_max);
    }
    out.records.push_back(r);
    if (opts.on_record) opts.on_record(r);
    if (opts.snapshot_every > 0 && out.records.size() > 1 &&
        (out.records.size() - 1) % opts.snapshot_every == 0 && st.t < cfg.t_end)
      out.snapshots.push_back(take_snapshot(solver, st));
  };

  out.snapshots.push_back(take_snapshot(solver, s));
  out.max_constraint_defect = solver.constraint_defect(s);
  record(s);
  while (s.t < cfg.t_end) {
    const double remaining = cfg.t_end - s.t;
    double dt = solver.stable_dt(s);
    const bool last = dt >= remaining;
    if (last) dt = remaining;
    solver.step(s, dt);
    if (last) s.t = cfg.t_end;
    out.max_constraint_defect = std::max(out.max_constraint_defect, solver.constraint_defect(s));
    out.min_volume = std::min(out.min_volume, *std::min_element(s.v.begin(), s.v.end()));
    if (last) break;
    if (s.steps % cfg.output_stride == 0 && s.t < cfg.t_end) record(s);
  }
  record(s);
  out.snapshots.push_back(take_snapshot(solver, s));
  out.decay = decay_summary(out.records);
  out.final_state = std::move(s);
  return out;
}

} // namespace nsk
