//! Deterministic bounded noise added to `f(p) - f(q)` before the sign is
//! taken.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    Zero,
    UniformBounded,
    AdversarialFlip,
}

impl NoiseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NoiseKind::Zero => "zero",
            NoiseKind::UniformBounded => "uniform",
            NoiseKind::AdversarialFlip => "adversarial",
        }
    }
}

impl std::str::FromStr for NoiseKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" | "none" => Ok(NoiseKind::Zero),
            "uniform" => Ok(NoiseKind::UniformBounded),
            "adversarial" => Ok(NoiseKind::AdversarialFlip),
            other => Err(format!(
                "unknown noise kind {other:?} (expected zero, uniform or adversarial)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub kind: NoiseKind,
    pub delta: f64,
    pub seed: u64,
}

impl NoiseModel {
    pub fn zero() -> Self {
        Self {
            kind: NoiseKind::Zero,
            delta: 0.0,
            seed: 0,
        }
    }

    pub fn uniform(delta: f64, seed: u64) -> Self {
        Self {
            kind: NoiseKind::UniformBounded,
            delta,
            seed,
        }
    }

    pub fn adversarial(delta: f64) -> Self {
        Self {
            kind: NoiseKind::AdversarialFlip,
            delta,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta >= 0.0 && self.delta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "noise bound must be non-negative and finite, got {}",
                self.delta
            )));
        }
        Ok(())
    }
}

/// Stateful noise generator built from a [`NoiseModel`].
///
/// Every call draws a fresh value, so repeating a pair does not repeat its
/// noise. The same model fed the same query stream replays bit-identically.
#[derive(Debug, Clone)]
pub struct NoiseSource {
    model: NoiseModel,
    rng: ChaCha8Rng,
}

pub fn make_noise(model: NoiseModel) -> Result<NoiseSource> {
    model.validate()?;
    Ok(NoiseSource {
        model,
        rng: ChaCha8Rng::seed_from_u64(model.seed),
    })
}

impl NoiseSource {
    pub fn model(&self) -> &NoiseModel {
        &self.model
    }

    /// Noise for one query whose noiseless difference is
    /// `true_diff = f(p) - f(q)`. Only the adversarial model looks at it.
    pub fn sample(&mut self, true_diff: f64) -> f64 {
        let delta = self.model.delta;
        match self.model.kind {
            NoiseKind::Zero => 0.0,
            NoiseKind::UniformBounded => {
                if delta == 0.0 {
                    0.0
                } else {
                    self.rng.gen_range(-delta..=delta)
                }
            }
            NoiseKind::AdversarialFlip => {
                if true_diff.abs() <= delta {
                    if true_diff >= 0.0 {
                        -delta
                    } else {
                        delta
                    }
                } else {
                    0.0
                }
            }
        }
    }
}
