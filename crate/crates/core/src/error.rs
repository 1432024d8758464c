use thiserror::Error;

use crate::geometry::Point2;
use crate::oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("segment endpoints must be distinct finite points")]
    DegenerateSegment,
    #[error("search region must be a square")]
    NotSquare,
    #[error("search has already finished")]
    Finished,
    #[error("point {0} lies outside the function domain")]
    OutOfDomain(Point2),
    #[error("ground-truth witnesses disagree: {0}")]
    GroundTruth(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require_positive(name: &str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive and finite, got {value}"
        )))
    }
}
