use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};

/// Known constants of a problem instance.
///
/// * `r`: side of the square (or length of the interval),
/// * `m`: Lipschitz constant of the function value,
/// * `l`: Lipschitz constant of the gradient,
/// * `mu`: strong-convexity coefficient, when known,
/// * `delta`: bound on the oracle noise, may be zero,
/// * `epsilon`: target accuracy in function value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub r: f64,
    pub m: f64,
    pub l: f64,
    pub mu: Option<f64>,
    pub delta: f64,
    pub epsilon: f64,
}

impl ProblemSpec {
    pub fn new(r: f64, m: f64, l: f64, mu: Option<f64>, delta: f64, epsilon: f64) -> Result<Self> {
        require_positive("R", r)?;
        require_positive("M", m)?;
        require_positive("L", l)?;
        require_positive("epsilon", epsilon)?;
        if !(delta >= 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "Delta must be non-negative and finite, got {delta}"
            )));
        }
        if let Some(mu) = mu {
            require_positive("mu", mu)?;
            if mu > l {
                return Err(Error::InvalidParameter(format!(
                    "mu ({mu}) cannot exceed L ({l})"
                )));
            }
        }
        Ok(Self {
            r,
            m,
            l,
            mu,
            delta,
            epsilon,
        })
    }
}
