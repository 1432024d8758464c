//! Scripted respondent that answers session questions from a known
//! preference function, for demos and end-to-end tests.

use dichotomy_core::{NoiseModel, Oracle, Preference, SyntheticOracle, TestFunction};

use crate::session::{LabeledPoint, WireAnswer};

pub struct ScriptedRespondent {
    oracle: SyntheticOracle,
}

impl ScriptedRespondent {
    /// Answers "tie" whenever the two options differ in value by at most
    /// `tie_threshold`.
    pub fn new(
        f: TestFunction,
        noise: NoiseModel,
        tie_threshold: f64,
    ) -> dichotomy_core::Result<Self> {
        Ok(Self {
            oracle: SyntheticOracle::new(f, noise)?.with_tie_threshold(tie_threshold),
        })
    }

    pub fn answer(
        &mut self,
        a: &LabeledPoint,
        b: &LabeledPoint,
    ) -> dichotomy_core::Result<WireAnswer> {
        Ok(match self.oracle.compare(a.point, b.point)? {
            Preference::First => WireAnswer::A,
            Preference::Second => WireAnswer::B,
            Preference::Tie => WireAnswer::Tie,
        })
    }

    pub fn questions_answered(&self) -> u64 {
        self.oracle.queries_made()
    }
}
