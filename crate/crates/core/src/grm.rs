//! Golden-ratio line search driven by a comparison oracle.
//!
//! The search lives in the parameter space `[0, 1]` of a [`Segment`]. Each
//! step compares the two interior probes `s < t`, which split the residual
//! interval `[a, b]` in the golden ratio, and discards the outer piece on the
//! losing side. One probe survives into the next step, so every step costs
//! exactly one comparison.
//!
//! The residual width is tracked directly (`width = phi^-i`) instead of as
//! `b - a`, so the shrinkage law holds to a few ulps even when the interval
//! is far narrower than the spacing of floats near `a`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point2, Segment};
use crate::oracle::{Oracle, Preference};

/// `(1 + sqrt 5) / 2`
pub const PHI: f64 = 1.618_033_988_749_895;
/// `1 / phi`
pub const INV_PHI: f64 = 0.618_033_988_749_894_9;
/// `1 / phi^2 = 1 - 1 / phi`
pub const INV_PHI_SQ: f64 = 0.381_966_011_250_105_1;

/// Relative tolerance of the golden-ratio placement of carried-over probes.
const PLACEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrmState {
    segment: Segment,
    a: f64,
    width: f64,
    s: f64,
    t: f64,
    iteration: u32,
    answers: u32,
    n_total: u32,
    finished: bool,
    tie_stopped: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrmResult {
    /// Midpoint of the residual interval, in absolute coordinates.
    pub point: Point2,
    pub residual: Segment,
    pub comparisons_used: u32,
    pub tie_stopped: bool,
}

impl GrmState {
    pub fn new(segment: Segment, n_total: u32) -> Result<Self> {
        let segment = Segment::new(segment.p0, segment.p1)?;
        if n_total == 0 {
            return Err(Error::InvalidParameter(
                "line search needs at least one iteration".into(),
            ));
        }
        Ok(Self {
            segment,
            a: 0.0,
            width: 1.0,
            s: INV_PHI_SQ,
            t: INV_PHI,
            iteration: 0,
            answers: 0,
            n_total,
            finished: false,
            tie_stopped: false,
        })
    }

    pub fn segment(&self) -> &Segment {
        &self.segment
    }

    /// Lower end of the residual interval, as a segment parameter.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Upper end of the residual interval, as a segment parameter.
    pub fn b(&self) -> f64 {
        (self.a + self.width).min(1.0)
    }

    /// Parametric width of the residual interval, `phi^-i`.
    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn iteration(&self) -> u32 {
        self.iteration
    }

    /// Answers consumed so far, including a final `Tie`.
    pub fn answers(&self) -> u32 {
        self.answers
    }

    pub fn n_total(&self) -> u32 {
        self.n_total
    }

    pub fn is_finished(&self) -> bool {
        self.finished
    }

    pub fn tie_stopped(&self) -> bool {
        self.tie_stopped
    }

    /// Length of the residual interval in absolute units.
    pub fn residual_length(&self) -> f64 {
        self.width * self.segment.length()
    }

    pub fn residual(&self) -> Segment {
        self.segment.sub_segment(self.a, self.b())
    }

    pub fn midpoint(&self) -> Point2 {
        self.segment.at(self.a + 0.5 * self.width)
    }

    /// The pair of probe points to compare next.
    pub fn question(&self) -> Result<(Point2, Point2)> {
        if self.finished {
            return Err(Error::Finished);
        }
        Ok((self.segment.at(self.s), self.segment.at(self.t)))
    }

    /// Applies the answer to `compare(s, t)` and returns the next state.
    pub fn step(&self, answer: Preference) -> Result<Self> {
        if self.finished {
            return Err(Error::Finished);
        }
        let mut next = *self;
        next.answers += 1;
        match answer {
            Preference::Tie => {
                next.finished = true;
                next.tie_stopped = true;
                return Ok(next);
            }
            // f(s) >= f(t) observed: the minimum is not in [a, s].
            Preference::Second => {
                next.a = self.s;
                next.width = self.width * INV_PHI;
                next.s = self.t;
                next.t = next.a + next.width * INV_PHI;
            }
            // f(s) < f(t) observed: the minimum is not in [t, b].
            Preference::First => {
                next.width = self.width * INV_PHI;
                next.t = self.s;
                next.s = next.a + next.width * INV_PHI_SQ;
            }
        }
        if !next.probes_balanced() {
            next.s = next.a + next.width * INV_PHI_SQ;
            next.t = next.a + next.width * INV_PHI;
        }
        next.iteration += 1;
        next.finished = next.iteration >= next.n_total;
        Ok(next)
    }

    fn probes_balanced(&self) -> bool {
        let close =
            |offset: f64, expected: f64| (offset - expected).abs() <= PLACEMENT_TOL * expected;
        close(self.s - self.a, self.width * INV_PHI_SQ)
            && close(self.t - self.a, self.width * INV_PHI)
    }

    /// Result as of the current state (midpoint of the residual interval).
    pub fn result(&self) -> GrmResult {
        GrmResult {
            point: self.midpoint(),
            residual: self.residual(),
            comparisons_used: self.answers,
            tie_stopped: self.tie_stopped,
        }
    }
}

/// Runs the golden-ratio search on `segment` for `n_total` comparisons
/// (fewer if the oracle answers `Tie`).
pub fn grm_run<O: Oracle + ?Sized>(
    segment: Segment,
    oracle: &mut O,
    n_total: u32,
) -> Result<GrmResult> {
    let mut state = GrmState::new(segment, n_total)?;
    while !state.is_finished() {
        let (p, q) = state.question()?;
        let answer = oracle.compare(p, q)?;
        state = state.step(answer)?;
    }
    Ok(state.result())
}

/// Smallest `n >= 1` with `length / (2 phi^n) <= accuracy`: enough noiseless
/// steps for the residual midpoint to be within `accuracy` of the minimizer.
pub fn noiseless_iterations(length: f64, accuracy: f64) -> Result<u32> {
    crate::error::require_positive("segment length", length)?;
    crate::error::require_positive("accuracy", accuracy)?;
    let mut n = 1u32;
    let mut half_width = 0.5 * length * INV_PHI;
    while half_width > accuracy {
        n += 1;
        half_width *= INV_PHI;
    }
    Ok(n)
}
