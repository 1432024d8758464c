//! Closed-form iteration budgets and accuracy guarantees.
//!
//! Every budget used by the searches comes from here. Real-valued schedules
//! are rounded up and clamped below at one iteration; more iterations never
//! weaken a guarantee.

use std::f64::consts::{E, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::grm::PHI;
use crate::problem::ProblemSpec;

/// `2 (2 + sqrt 10)`, the factor linking inner argument accuracy to the
/// accumulated value loss of the square search.
pub fn square_loss_factor() -> f64 {
    2.0 * (2.0 + 10f64.sqrt())
}

fn ln_phi() -> f64 {
    PHI.ln()
}

fn log_phi(x: f64) -> f64 {
    x.ln() / ln_phi()
}

fn ceil_at_least_one(x: f64) -> u32 {
    if x <= 1.0 {
        1
    } else {
        x.ceil() as u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `C = e R M ln(phi) / (2 phi)`
    pub c: f64,
    /// Golden-ratio iterations per line search.
    pub n0: u32,
    /// Value error guaranteed by one line search of `n0` steps.
    pub grm_value_error: f64,
    /// Argument accuracy implied by `grm_value_error` under strong convexity.
    pub delta_arg: f64,
    /// Argument accuracy the square search needs from each line search.
    pub delta_inner: f64,
    /// Number of square-halving iterations.
    pub k_outer: u32,
    /// `4 * k_outer * n0` oracle comparisons.
    pub total_comparisons: u64,
    /// Whether `epsilon` is large enough for the noisy line searches to
    /// deliver `delta_inner`.
    pub epsilon_feasible: bool,
}

pub fn constant_c(r: f64, m: f64) -> Result<f64> {
    require_positive("R", r)?;
    require_positive("M", m)?;
    Ok(E * r * m * ln_phi() / (2.0 * PHI))
}

fn require_noise(delta: f64) -> Result<f64> {
    if delta > 0.0 && delta.is_finite() {
        Ok(delta)
    } else {
        Err(Error::InvalidParameter(
            "Delta must be positive for Theorem 1 schedule".into(),
        ))
    }
}

/// Line-search budget under noise: `ceil(log_phi(C / (e Delta)))`, at least 1.
pub fn theorem1_iterations(r: f64, m: f64, delta: f64) -> Result<u32> {
    let c = constant_c(r, m)?;
    let delta = require_noise(delta)?;
    Ok(ceil_at_least_one(log_phi(c / (E * delta))))
}

/// `phi Delta log_phi(C / Delta)`: the value error of the midpoint after the
/// real-valued optimal number of steps. When that count is below one step the
/// budget is clamped to a single step, and the error after one step is
/// returned instead.
pub fn theorem1_value_error(r: f64, m: f64, delta: f64) -> Result<f64> {
    let c = constant_c(r, m)?;
    let delta = require_noise(delta)?;
    if log_phi(c / (E * delta)) < 1.0 {
        return eq3_bound(r, m, delta, 1);
    }
    Ok(PHI * delta * log_phi(c / delta))
}

/// `R M / (2 phi^n) + n phi Delta`: value error of the midpoint after `n`
/// steps against any noise bounded by `Delta`.
pub fn eq3_bound(r: f64, m: f64, delta: f64, n: u32) -> Result<f64> {
    require_positive("R", r)?;
    require_positive("M", m)?;
    if !(delta >= 0.0 && delta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Delta must be non-negative, got {delta}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(r * m / (2.0 * PHI.powi(n as i32)) + f64::from(n) * PHI * delta)
}

/// Argument accuracy `sqrt(2 epsilon / mu)` of a point that is
/// `epsilon`-optimal in value for a `mu`-strongly convex function.
pub fn lemma1_arg_accuracy(epsilon: f64, mu: f64) -> Result<f64> {
    require_positive("epsilon", epsilon)?;
    require_positive("mu", mu)?;
    Ok((2.0 * epsilon / mu).sqrt())
}

/// Inner line-search accuracy `epsilon / (2 (2 + sqrt 10) L R)`.
pub fn theorem2_inner_accuracy(epsilon: f64, l: f64, r: f64) -> Result<f64> {
    require_positive("epsilon", epsilon)?;
    require_positive("L", l)?;
    require_positive("R", r)?;
    Ok(epsilon / (square_loss_factor() * l * r))
}

/// Square-halving iterations `ceil(log2(M R sqrt 2 / epsilon))`, at least 1.
pub fn theorem2_iterations(m: f64, r: f64, epsilon: f64) -> Result<u32> {
    require_positive("M", m)?;
    require_positive("R", r)?;
    require_positive("epsilon", epsilon)?;
    Ok(ceil_at_least_one((m * r * SQRT_2 / epsilon).log2()))
}

pub fn theorem3_report(spec: &ProblemSpec) -> Result<BoundReport> {
    let mu = spec.mu.ok_or_else(|| {
        Error::InvalidParameter("strong convexity coefficient mu is required".into())
    })?;
    let c = constant_c(spec.r, spec.m)?;
    let n0 = theorem1_iterations(spec.r, spec.m, spec.delta)?;
    let grm_value_error = theorem1_value_error(spec.r, spec.m, spec.delta)?;
    let delta_arg = lemma1_arg_accuracy(grm_value_error, mu)?;
    let delta_inner = theorem2_inner_accuracy(spec.epsilon, spec.l, spec.r)?;
    let k_outer = theorem2_iterations(spec.m, spec.r, spec.epsilon)?;
    let required_epsilon = delta_arg * square_loss_factor() * spec.l * spec.r;
    Ok(BoundReport {
        c,
        n0,
        grm_value_error,
        delta_arg,
        delta_inner,
        k_outer,
        total_comparisons: 4 * u64::from(k_outer) * u64::from(n0),
        epsilon_feasible: spec.epsilon >= required_epsilon,
    })
}
