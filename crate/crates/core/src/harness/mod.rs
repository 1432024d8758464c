//! Experiment runner: brute-force ground truth, parameter sweeps that check
//! achieved errors against the guarantees, and CSV reports.

mod ground_truth;
mod report;
mod sweep;

pub use ground_truth::{brute_force_min, brute_force_segment_min, segment_min};
pub use report::{summarize, write_csv, write_report, RegimeSummary, CSV_HEADER};
pub use sweep::{
    run_grm_sweep, run_square_sweep, Budget, GrmSweepConfig, NoiseRegime, SquareSweepConfig,
    TrialRecord,
};

/// Relative slack used when deciding whether a bound was violated.
pub fn numeric_slack(bound: f64) -> f64 {
    1e-9 * bound.abs().max(1.0)
}
