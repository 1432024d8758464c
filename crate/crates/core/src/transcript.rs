//! Ordered log of everything a square search did: every question with its
//! answer, and every region it moved to.

use serde::{Deserialize, Serialize};

use crate::geometry::{Point2, Rect};
use crate::oracle::Preference;
use crate::square::Phase;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TranscriptEvent {
    Comparison {
        iteration: u32,
        phase: Phase,
        first: Point2,
        second: Point2,
        answer: Preference,
    },
    Region {
        iteration: u32,
        region: Rect,
        next_phase: Phase,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Transcript {
    events: Vec<TranscriptEvent>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, event: TranscriptEvent) {
        self.events.push(event);
    }

    pub fn events(&self) -> &[TranscriptEvent] {
        &self.events
    }

    pub fn comparisons(&self) -> impl Iterator<Item = (Point2, Point2, Preference)> + '_ {
        self.events.iter().filter_map(|e| match e {
            TranscriptEvent::Comparison {
                first,
                second,
                answer,
                ..
            } => Some((*first, *second, *answer)),
            TranscriptEvent::Region { .. } => None,
        })
    }

    pub fn answers(&self) -> impl Iterator<Item = Preference> + '_ {
        self.comparisons().map(|(_, _, a)| a)
    }

    pub fn comparison_count(&self) -> usize {
        self.comparisons().count()
    }

    pub fn regions(&self) -> impl Iterator<Item = &Rect> + '_ {
        self.events.iter().filter_map(|e| match e {
            TranscriptEvent::Region { region, .. } => Some(region),
            TranscriptEvent::Comparison { .. } => None,
        })
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}
