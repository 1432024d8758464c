use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ground_truth::{brute_force_min, brute_force_segment_min, segment_min};
use super::numeric_slack;
use crate::bounds;
use crate::error::{Error, Result};
use crate::functions::{resolve, TestFunction};
use crate::grm::{grm_run, noiseless_iterations};
use crate::noise::{NoiseKind, NoiseModel};
use crate::problem::ProblemSpec;
use crate::square::square_run;
use crate::synthetic::SyntheticOracle;

/// Lattice resolution for the 1-D ground truth of line-search trials.
const SEGMENT_GRID: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub function_id: String,
    pub noise_kind: String,
    pub delta: f64,
    pub n_inner: u32,
    /// Zero for plain line-search trials.
    pub k_outer: u32,
    pub seed: u64,
    pub achieved_error: f64,
    pub bound: f64,
    pub comparisons: u64,
    pub violated: bool,
    /// Set when the configuration is outside the regime the bound covers.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warning: Option<String>,
}

impl TrialRecord {
    /// `achieved_error / bound`, or infinity for a zero bound.
    pub fn ratio(&self) -> f64 {
        if self.bound > 0.0 {
            self.achieved_error / self.bound
        } else {
            f64::INFINITY
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseRegime {
    pub kind: NoiseKind,
    pub delta: f64,
}

impl NoiseRegime {
    pub fn zero() -> Self {
        Self {
            kind: NoiseKind::Zero,
            delta: 0.0,
        }
    }

    pub fn new(kind: NoiseKind, delta: f64) -> Self {
        Self { kind, delta }
    }

    fn model(&self, seed: u64) -> NoiseModel {
        NoiseModel {
            kind: self.kind,
            delta: self.delta,
            seed,
        }
    }
}

/// Iteration budget: a fixed count or derived from the problem constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Budget {
    Fixed(u32),
    Auto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrmSweepConfig {
    pub function_ids: Vec<String>,
    pub noise: Vec<NoiseRegime>,
    /// `Auto` uses the noisy line-search schedule and needs `delta > 0`.
    pub n: Budget,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareSweepConfig {
    pub function_id: String,
    pub epsilon: f64,
    pub noise: NoiseRegime,
    /// `Auto`: noiseless searches get the fewest steps reaching the inner
    /// accuracy, noisy ones the noisy line-search schedule.
    pub n_inner: Budget,
    /// `Auto`: the square-halving count for `epsilon`.
    pub k_outer: Budget,
    pub trials: usize,
    pub seed: u64,
    /// Lattice resolution of the 2-D ground truth.
    pub grid_n: usize,
}

/// Per-trial seed: the function seed for random families.
fn trial_seed(base: u64, index: usize) -> u64 {
    base.wrapping_add(index as u64)
}

/// Noise seed derived from the trial seed so it differs from the function seed.
fn noise_seed(trial_seed: u64) -> u64 {
    trial_seed ^ 0x9E37_79B9_7F4A_7C15
}

fn lookup(id: &str, seed: u64) -> Result<TestFunction> {
    resolve(id, seed).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "unknown function {id:?}; available: {}",
            crate::functions::builtin_ids().join(", ")
        ))
    })
}

pub fn run_grm_sweep(config: &GrmSweepConfig) -> Result<Vec<TrialRecord>> {
    for id in &config.function_ids {
        lookup(id, config.seed)?;
    }
    let jobs: Vec<(&String, NoiseRegime, usize)> = config
        .function_ids
        .iter()
        .flat_map(|id| {
            config
                .noise
                .iter()
                .flat_map(move |n| (0..config.trials).map(move |t| (id, *n, t)))
        })
        .collect();
    jobs.par_iter()
        .map(|(id, regime, t)| grm_trial(id, *regime, config.n, trial_seed(config.seed, *t)))
        .collect()
}

fn grm_trial(id: &str, regime: NoiseRegime, n: Budget, seed: u64) -> Result<TrialRecord> {
    let f = lookup(id, seed)?;
    let segment = f.midline();
    let r = segment.length();
    let n = match n {
        Budget::Fixed(n) => n,
        Budget::Auto => bounds::theorem1_iterations(r, f.m, regime.delta)?,
    };
    let truth = segment_min(&f, &segment, SEGMENT_GRID);
    let (_, lattice) = brute_force_segment_min(&f, &segment, SEGMENT_GRID);
    if truth > lattice + 1e-12 || lattice > truth + f.m * r / SEGMENT_GRID as f64 {
        return Err(Error::GroundTruth(format!(
            "{id}: refined minimum {truth} vs lattice minimum {lattice}"
        )));
    }

    let mut oracle = SyntheticOracle::new(f.clone(), regime.model(noise_seed(seed)))?;
    let result = grm_run(segment, &mut oracle, n)?;
    let achieved_error = f.eval(result.point) - truth;
    let bound = bounds::eq3_bound(r, f.m, regime.delta, n)?;
    Ok(TrialRecord {
        function_id: f.id.clone(),
        noise_kind: regime.kind.as_str().into(),
        delta: regime.delta,
        n_inner: n,
        k_outer: 0,
        seed,
        achieved_error,
        bound,
        comparisons: u64::from(result.comparisons_used),
        violated: achieved_error > bound + numeric_slack(bound),
        warning: None,
    })
}

pub fn run_square_sweep(config: &SquareSweepConfig) -> Result<Vec<TrialRecord>> {
    crate::error::require_positive("epsilon", config.epsilon)?;
    lookup(&config.function_id, config.seed)?;
    (0..config.trials)
        .into_par_iter()
        .map(|t| square_trial(config, trial_seed(config.seed, t)))
        .collect()
}

fn square_trial(config: &SquareSweepConfig, seed: u64) -> Result<TrialRecord> {
    let f = lookup(&config.function_id, seed)?;
    let r = f.side();
    let delta = config.noise.delta;
    let mut warning = None;

    let k = match config.k_outer {
        Budget::Fixed(k) => k,
        Budget::Auto => bounds::theorem2_iterations(f.m, r, config.epsilon)?,
    };
    let n = match config.n_inner {
        Budget::Fixed(n) => n,
        Budget::Auto if delta == 0.0 => {
            let accuracy = bounds::theorem2_inner_accuracy(config.epsilon, f.l, r)?;
            noiseless_iterations(r, accuracy)?
        }
        Budget::Auto => bounds::theorem1_iterations(r, f.m, delta)?,
    };
    if delta > 0.0 {
        match f.mu {
            Some(mu) => {
                let spec = ProblemSpec::new(r, f.m, f.l, Some(mu.min(f.l)), delta, config.epsilon)?;
                if !bounds::theorem3_report(&spec)?.epsilon_feasible {
                    warning = Some("epsilon below the noisy feasibility threshold".to_string());
                }
            }
            None => {
                warning = Some("no strong convexity: noisy guarantee does not apply".to_string())
            }
        }
    }

    let (grid_point, grid_value) = brute_force_min(&f, &f.domain, config.grid_n);
    let grid_slack = f.m * f.domain.diameter() / config.grid_n.max(2) as f64;
    // Without an analytic minimum, the lattice value lowered by its worst-case
    // gap is a guaranteed lower bound on the true minimum.
    let truth = match f.analytic_min {
        Some((_, exact)) => {
            if grid_value < exact - 1e-12 || grid_value > exact + grid_slack {
                return Err(Error::GroundTruth(format!(
                    "{}: analytic minimum {exact} vs lattice minimum {grid_value} at {grid_point}",
                    f.id
                )));
            }
            exact
        }
        None => grid_value - grid_slack,
    };

    let mut oracle = SyntheticOracle::new(f.clone(), config.noise.model(noise_seed(seed)))?;
    let (center, transcript) = square_run(f.domain, &mut oracle, k, n)?;
    let achieved_error = f.eval(center) - truth;
    let bound = config.epsilon;
    Ok(TrialRecord {
        function_id: f.id.clone(),
        noise_kind: config.noise.kind.as_str().into(),
        delta,
        n_inner: n,
        k_outer: k,
        seed,
        achieved_error,
        bound,
        comparisons: transcript.comparison_count() as u64,
        violated: achieved_error > bound + numeric_slack(bound),
        warning,
    })
}
