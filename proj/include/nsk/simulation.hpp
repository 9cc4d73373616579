#pragma once

#include <functional>
#include <vector>

#include "nsk/diagnostics.hpp"

namespace nsk {

/// Node values of the state and of the composite wave at one time.
struct Snapshot {
  double t = 0.0;
  std::vector<double> x, v, u, w, vbar, ubar, wbar, a;
};

/// Late-window over early-window means of a few headline quantities. The windows are the
/// first and last quarter of the record times.
struct DecaySummary {
  double sup_norm_ratio = 0.0;  // W1inf_phi + Linf_psi
  double Xdot_ratio = 0.0;      // |Xdot|
  double eta_ratio = 0.0;       // eta_weighted, final over initial
  double L2_phi_ratio = 0.0;
};

struct RunOptions {
  /// Extra snapshots every this many records (0: initial and final only).
  std::size_t snapshot_every = 0;
  /// Called as each record is produced, before the run continues.
  std::function<void(const DiagnosticsRecord&)> on_record;
};

struct RunResult {
  std::vector<DiagnosticsRecord> records;
  std::vector<Snapshot> snapshots;
  DecaySummary decay;
  SimState final_state;
  double max_constraint_defect = 0.0;  // over every step, not only the records
  double min_volume = 0.0;
  double a_min = 1.0, a_max = 1.0;     // over the records
};

Snapshot take_snapshot(const Solver& solver, const SimState& s);
DecaySummary decay_summary(const std::vector<DiagnosticsRecord>& records);

/// Steps to t_end, recording every output_stride steps plus the initial and final state.
/// Solver errors propagate after the records produced so far were handed to on_record.
RunResult run(const Solver& solver, const RunOptions& opts = {});

} // namespace nsk
