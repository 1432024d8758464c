use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use super::sweep::TrialRecord;

pub const CSV_HEADER: [&str; 10] = [
    "function_id",
    "noise_kind",
    "delta",
    "n_inner",
    "k_outer",
    "seed",
    "achieved_error",
    "bound",
    "comparisons",
    "violated",
];

/// 17 significant digits.
fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(records: &[TrialRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.function_id.clone(),
            r.noise_kind.clone(),
            float(r.delta),
            r.n_inner.to_string(),
            r.k_outer.to_string(),
            r.seed.to_string(),
            float(r.achieved_error),
            float(r.bound),
            r.comparisons.to_string(),
            r.violated.to_string(),
        ])?;
    }
    w.flush()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegimeSummary {
    pub function_id: String,
    pub noise_kind: String,
    pub delta: f64,
    pub trials: usize,
    pub violations: usize,
    pub warnings: usize,
    pub max_ratio: f64,
}

/// Groups records by (function, noise kind, delta) in order of first
/// appearance and reports the worst error/bound ratio of each group.
pub fn summarize(records: &[TrialRecord]) -> Vec<RegimeSummary> {
    let mut out: Vec<RegimeSummary> = Vec::new();
    for r in records {
        let idx = out.iter().position(|s| {
            s.function_id == r.function_id && s.noise_kind == r.noise_kind && s.delta == r.delta
        });
        let s = match idx {
            Some(i) => &mut out[i],
            None => {
                out.push(RegimeSummary {
                    function_id: r.function_id.clone(),
                    noise_kind: r.noise_kind.clone(),
                    delta: r.delta,
                    trials: 0,
                    violations: 0,
                    warnings: 0,
                    max_ratio: f64::NEG_INFINITY,
                });
                out.last_mut().expect("just pushed")
            }
        };
        s.trials += 1;
        s.violations += usize::from(r.violated);
        s.warnings += usize::from(r.warning.is_some());
        s.max_ratio = s.max_ratio.max(r.ratio());
    }
    out
}

/// Writes the trial CSV to `path` and the per-regime summary next to it
/// (`<stem>.summary.csv`). Returns the summary path.
pub fn write_report(records: &[TrialRecord], path: &Path) -> io::Result<PathBuf> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    write_csv(records, fs::File::create(path)?)?;

    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("report");
    let summary_path = path.with_file_name(format!("{stem}.summary.csv"));
    let mut w = csv::Writer::from_path(&summary_path)?;
    w.write_record([
        "function_id",
        "noise_kind",
        "delta",
        "trials",
        "violations",
        "warnings",
        "max_ratio",
    ])?;
    for s in summarize(records) {
        w.write_record([
            s.function_id,
            s.noise_kind,
            float(s.delta),
            s.trials.to_string(),
            s.violations.to_string(),
            s.warnings.to_string(),
            float(s.max_ratio),
        ])?;
    }
    w.flush()?;
    Ok(summary_path)
}
