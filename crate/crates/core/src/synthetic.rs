//! Comparison oracles backed by a known function and a noise model.

use crate::error::{Error, Result};
use crate::functions::TestFunction;
use crate::geometry::Point2;
use crate::noise::{make_noise, NoiseModel, NoiseSource};
use crate::oracle::{Oracle, OracleError, Preference};

/// Float slack allowed when checking that a query lies in the domain.
const DOMAIN_SLACK: f64 = 1e-12;

/// One noisy comparison: `Second` iff `f(p) - f(q) + noise >= 0`.
///
/// With a tie threshold `tau`, pairs whose true values differ by at most
/// `tau` are answered `Tie` instead.
pub fn synthetic_compare(
    f: &TestFunction,
    noise: &mut NoiseSource,
    p: Point2,
    q: Point2,
    tie_threshold: Option<f64>,
) -> Result<Preference> {
    for point in [p, q] {
        if !f.domain.contains_with_slack(&point, DOMAIN_SLACK) {
            return Err(Error::OutOfDomain(point));
        }
    }
    let diff = f.eval(p) - f.eval(q);
    if let Some(tau) = tie_threshold {
        if diff.abs() <= tau {
            return Ok(Preference::Tie);
        }
    }
    Ok(Preference::from_signed_difference(
        diff + noise.sample(diff),
    ))
}

#[derive(Debug, Clone)]
pub struct SyntheticOracle {
    function: TestFunction,
    noise: NoiseSource,
    tie_threshold: Option<f64>,
    queries: u64,
}

impl SyntheticOracle {
    pub fn new(function: TestFunction, noise: NoiseModel) -> Result<Self> {
        Ok(Self {
            function,
            noise: make_noise(noise)?,
            tie_threshold: None,
            queries: 0,
        })
    }

    pub fn noiseless(function: TestFunction) -> Self {
        Self::new(function, NoiseModel::zero()).expect("zero noise is always valid")
    }

    /// Answer `Tie` whenever the true values differ by at most `tau`.
    pub fn with_tie_threshold(mut self, tau: f64) -> Self {
        self.tie_threshold = Some(tau);
        self
    }

    pub fn function(&self) -> &TestFunction {
        &self.function
    }
}

impl Oracle for SyntheticOracle {
    fn compare(&mut self, p: Point2, q: Point2) -> Result<Preference, OracleError> {
        self.queries += 1;
        synthetic_compare(&self.function, &mut self.noise, p, q, self.tie_threshold).map_err(|e| {
            match e {
                Error::OutOfDomain(point) => OracleError::OutOfDomain(point.to_string()),
                other => OracleError::OutOfDomain(other.to_string()),
            }
        })
    }

    fn queries_made(&self) -> u64 {
        self.queries
    }
}
