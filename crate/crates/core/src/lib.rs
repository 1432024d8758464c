//! Minimization with a comparison ("order") oracle: golden-ratio line search
//! under bounded noise, dichotomy on a square, the budgets and guarantees
//! that go with them, and an experiment harness to check those guarantees.

pub mod bounds;
pub mod error;
pub mod functions;
pub mod geometry;
pub mod grm;
pub mod harness;
pub mod noise;
pub mod oracle;
pub mod problem;
pub mod queued;
pub mod square;
pub mod synthetic;
pub mod transcript;

pub use bounds::BoundReport;
pub use error::{Error, Result};
pub use functions::TestFunction;
pub use geometry::{clamp_point, Point2, Rect, Segment};
pub use grm::{grm_run, GrmResult, GrmState, PHI};
pub use noise::{make_noise, NoiseKind, NoiseModel, NoiseSource};
pub use oracle::{Oracle, OracleError, Preference};
pub use problem::ProblemSpec;
pub use queued::{PendingQuestion, QuestionQueue, QueuedOracle};
pub use square::{square_run, LineSearch, Phase, RegionSnapshot, SquareState};
pub use synthetic::SyntheticOracle;
pub use transcript::{Transcript, TranscriptEvent};
