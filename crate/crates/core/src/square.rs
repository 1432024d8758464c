//! Dichotomy on a square driven by golden-ratio line searches.
//!
//! One iteration runs four line searches on the current square of half-side
//! `d` centred at `(a, b)`:
//!
//! 1. along the horizontal midline, giving `A`;
//! 2. along the vertical line through `A`, giving `B`; the half (upper or
//!    lower) containing `B` is kept, leaving a `2d x d` rectangle;
//! 3. along the vertical midline of that rectangle, giving `A'`;
//! 4. along the horizontal line through `A'`, giving `B'`; the half (left or
//!    right) containing `B'` is kept, leaving a square of half-side `d / 2`.
//!
//! A point exactly on the cutting midline keeps the lower (resp. left) half.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point2, Rect, Segment};
use crate::grm::GrmState;
use crate::oracle::{Oracle, Preference};
use crate::transcript::{Transcript, TranscriptEvent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    HorizontalMidline,
    VerticalThroughA,
    VerticalMidline,
    HorizontalThroughB,
}

impl Phase {
    pub fn next(self) -> Self {
        match self {
            Phase::HorizontalMidline => Phase::VerticalThroughA,
            Phase::VerticalThroughA => Phase::VerticalMidline,
            Phase::VerticalMidline => Phase::HorizontalThroughB,
            Phase::HorizontalThroughB => Phase::HorizontalMidline,
        }
    }
}

/// A region the search has been confined to, and the phase that runs on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionSnapshot {
    pub region: Rect,
    pub next_phase: Phase,
}

/// One line search, finished or running.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineSearch {
    pub iteration: u32,
    pub phase: Phase,
    pub segment: Segment,
    pub result: Option<Point2>,
    pub tie_stopped: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareState {
    region: Rect,
    phase: Phase,
    inner: Option<GrmState>,
    pending_anchor: Option<Point2>,
    iteration: u32,
    k_total: u32,
    n_inner: u32,
    history: Vec<RegionSnapshot>,
    searches: Vec<LineSearch>,
    transcript: Transcript,
    comparisons: u64,
}

impl SquareState {
    pub fn new(square: Rect, k_total: u32, n_inner: u32) -> Result<Self> {
        let square = Rect::new(square.center, square.half_width, square.half_height)?;
        if !square.is_square() {
            return Err(Error::NotSquare);
        }
        if k_total == 0 || n_inner == 0 {
            return Err(Error::InvalidParameter(
                "square search needs at least one outer and one inner iteration".into(),
            ));
        }
        let mut state = Self {
            region: square,
            phase: Phase::HorizontalMidline,
            inner: None,
            pending_anchor: None,
            iteration: 0,
            k_total,
            n_inner,
            history: Vec::new(),
            searches: Vec::new(),
            transcript: Transcript::new(),
            comparisons: 0,
        };
        state.record_region();
        state.start_search(state.phase_segment(None)?)?;
        Ok(state)
    }

    pub fn region(&self) -> &Rect {
        &self.region
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn inner(&self) -> Option<&GrmState> {
        self.inner.as_ref()
    }

    pub fn pending_anchor(&self) -> Option<Point2> {
        self.pending_anchor
    }

    pub fn iteration(&self) -> u32 {
        self.iteration
    }

    pub fn k_total(&self) -> u32 {
        self.k_total
    }

    pub fn n_inner(&self) -> u32 {
        self.n_inner
    }

    pub fn history(&self) -> &[RegionSnapshot] {
        &self.history
    }

    pub fn searches(&self) -> &[LineSearch] {
        &self.searches
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    pub fn is_finished(&self) -> bool {
        self.iteration >= self.k_total
    }

    /// Center of the current region; the answer once finished.
    pub fn center(&self) -> Point2 {
        self.region.center
    }

    pub fn question(&self) -> Result<(Point2, Point2)> {
        match &self.inner {
            Some(inner) if !self.is_finished() => inner.question(),
            _ => Err(Error::Finished),
        }
    }

    /// Returns the state after `answer`, leaving `self` untouched.
    pub fn advance(&self, answer: Preference) -> Result<Self> {
        let mut next = self.clone();
        next.apply(answer)?;
        Ok(next)
    }

    /// Feeds `answer` to the running line search in place.
    pub fn apply(&mut self, answer: Preference) -> Result<()> {
        let inner = match &self.inner {
            Some(inner) if !self.is_finished() => inner,
            _ => return Err(Error::Finished),
        };
        let (first, second) = inner.question()?;
        let inner = inner.step(answer)?;

        self.comparisons += 1;
        self.transcript.push(TranscriptEvent::Comparison {
            iteration: self.iteration,
            phase: self.phase,
            first,
            second,
            answer,
        });
        if !inner.is_finished() {
            self.inner = Some(inner);
            return Ok(());
        }

        let found = inner.result();
        if let Some(current) = self.searches.last_mut() {
            current.result = Some(found.point);
            current.tie_stopped = found.tie_stopped;
        }
        self.finish_search(found.point)
    }

    fn finish_search(&mut self, found: Point2) -> Result<()> {
        let d = self.region.half_width;
        match self.phase {
            Phase::HorizontalMidline | Phase::VerticalMidline => {
                self.pending_anchor = Some(found);
            }
            Phase::VerticalThroughA => {
                let b = self.region.center.y;
                let b = if found.y > b {
                    b + d / 2.0
                } else {
                    b - d / 2.0
                };
                self.region = Rect::new(Point2::new(self.region.center.x, b), d, d / 2.0)?;
                self.pending_anchor = None;
            }
            Phase::HorizontalThroughB => {
                let a = self.region.center.x;
                let a = if found.x > a {
                    a + d / 2.0
                } else {
                    a - d / 2.0
                };
                self.region = Rect::square(Point2::new(a, self.region.center.y), d / 2.0)?;
                self.pending_anchor = None;
                self.iteration += 1;
            }
        }
        let pruned = matches!(
            self.phase,
            Phase::VerticalThroughA | Phase::HorizontalThroughB
        );
        self.phase = self.phase.next();
        if pruned {
            self.record_region();
        }
        if self.is_finished() {
            self.inner = None;
            return Ok(());
        }
        let segment = self.phase_segment(self.pending_anchor)?;
        self.start_search(segment)
    }

    fn phase_segment(&self, anchor: Option<Point2>) -> Result<Segment> {
        let r = &self.region;
        let (cx, cy) = (r.center.x, r.center.y);
        let anchor =
            || anchor.ok_or_else(|| Error::InvalidParameter("missing anchor point".into()));
        match self.phase {
            Phase::HorizontalMidline => {
                Segment::new(Point2::new(r.min_x(), cy), Point2::new(r.max_x(), cy))
            }
            Phase::VerticalThroughA => {
                let x = anchor()?.x;
                Segment::new(Point2::new(x, r.min_y()), Point2::new(x, r.max_y()))
            }
            Phase::VerticalMidline => {
                Segment::new(Point2::new(cx, r.min_y()), Point2::new(cx, r.max_y()))
            }
            Phase::HorizontalThroughB => {
                let y = anchor()?.y;
                Segment::new(Point2::new(r.min_x(), y), Point2::new(r.max_x(), y))
            }
        }
    }

    fn start_search(&mut self, segment: Segment) -> Result<()> {
        self.inner = Some(GrmState::new(segment, self.n_inner)?);
        self.searches.push(LineSearch {
            iteration: self.iteration,
            phase: self.phase,
            segment,
            result: None,
            tie_stopped: false,
        });
        Ok(())
    }

    fn record_region(&mut self) {
        self.history.push(RegionSnapshot {
            region: self.region,
            next_phase: self.phase,
        });
        self.transcript.push(TranscriptEvent::Region {
            iteration: self.iteration,
            region: self.region,
            next_phase: self.phase,
        });
    }

    /// Rebuilds a state by feeding recorded answers into a fresh search.
    pub fn replay<I>(square: Rect, k_total: u32, n_inner: u32, answers: I) -> Result<Self>
    where
        I: IntoIterator<Item = Preference>,
    {
        let mut state = Self::new(square, k_total, n_inner)?;
        for answer in answers {
            state.apply(answer)?;
        }
        Ok(state)
    }
}

/// Runs the square search to completion and returns the final center with
/// the full transcript.
pub fn square_run<O: Oracle + ?Sized>(
    square: Rect,
    oracle: &mut O,
    k_total: u32,
    n_inner: u32,
) -> Result<(Point2, Transcript)> {
    let state = square_run_state(square, oracle, k_total, n_inner)?;
    Ok((state.center(), state.transcript().clone()))
}

/// Like [`square_run`] but hands back the final state with its history.
pub fn square_run_state<O: Oracle + ?Sized>(
    square: Rect,
    oracle: &mut O,
    k_total: u32,
    n_inner: u32,
) -> Result<SquareState> {
    let mut state = SquareState::new(square, k_total, n_inner)?;
    while !state.is_finished() {
        let (p, q) = state.question()?;
        state.apply(oracle.compare(p, q)?)?;
    }
    Ok(state)
}
