//! The comparison oracle contract.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point2;

/// Answer of a comparison query `compare(p, q)`.
///
/// `First` means the first point was observed to be better (smaller value,
/// the "−" sign), `Second` means the second point was observed to be better
/// or equal (the "+" sign), and `Tie` means the respondent could not choose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preference {
    First,
    Second,
    Tie,
}

impl Preference {
    /// Sign convention for the noisy difference `f(p) - f(q) + noise`:
    /// non-negative prefers the second point.
    pub fn from_signed_difference(diff: f64) -> Self {
        if diff >= 0.0 {
            Preference::Second
        } else {
            Preference::First
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Preference::First => Preference::Second,
            Preference::Second => Preference::First,
            Preference::Tie => Preference::Tie,
        }
    }

    pub fn sign_symbol(self) -> &'static str {
        match self {
            Preference::First => "-",
            Preference::Second => "+",
            Preference::Tie => "0",
        }
    }
}

impl fmt::Display for Preference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Preference::First => "first",
            Preference::Second => "second",
            Preference::Tie => "tie",
        };
        f.write_str(s)
    }
}

impl FromStr for Preference {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" | "-" => Ok(Preference::First),
            "second" | "+" => Ok(Preference::Second),
            "tie" | "0" => Ok(Preference::Tie),
            other => Err(format!("unknown preference {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no answer arrived within {0:?}")]
    Timeout(std::time::Duration),
    #[error("the answer channel was closed")]
    Closed,
    #[error("query point {0} is outside the oracle domain")]
    OutOfDomain(String),
}

/// Anything that can answer "which of these two points is better?".
///
/// Implementations count every call to [`Oracle::compare`], successful or
/// not, exactly once.
pub trait Oracle {
    fn compare(&mut self, p: Point2, q: Point2) -> Result<Preference, OracleError>;

    fn queries_made(&self) -> u64;
}

impl<O: Oracle + ?Sized> Oracle for &mut O {
    fn compare(&mut self, p: Point2, q: Point2) -> Result<Preference, OracleError> {
        (**self).compare(p, q)
    }

    fn queries_made(&self) -> u64 {
        (**self).queries_made()
    }
}

impl<O: Oracle + ?Sized> Oracle for Box<O> {
    fn compare(&mut self, p: Point2, q: Point2) -> Result<Preference, OracleError> {
        (**self).compare(p, q)
    }

    fn queries_made(&self) -> u64 {
        (**self).queries_made()
    }
}

/// Wraps a closure as an oracle. Handy for scripted answers in tests.
pub struct FnOracle<F> {
    f: F,
    queries: u64,
}

impl<F> FnOracle<F>
where
    F: FnMut(Point2, Point2) -> Preference,
{
    pub fn new(f: F) -> Self {
        Self { f, queries: 0 }
    }
}

impl<F> Oracle for FnOracle<F>
where
    F: FnMut(Point2, Point2) -> Preference,
{
    fn compare(&mut self, p: Point2, q: Point2) -> Result<Preference, OracleError> {
        self.queries += 1;
        Ok((self.f)(p, q))
    }

    fn queries_made(&self) -> u64 {
        self.queries
    }
}
