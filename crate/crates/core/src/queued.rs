//! An oracle whose answers come from somewhere else, typically a person.
//!
//! [`QueuedOracle::compare`] parks the question and blocks the calling thread
//! until the matching [`QuestionQueue::answer`] arrives. Each question gets a
//! fresh token; only that token can answer it, and only once.

use std::sync::{Arc, Condvar, Mutex, MutexGuard};
use std::time::{Duration, Instant};

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use uuid::Uuid;

use crate::geometry::Point2;
use crate::oracle::{Oracle, OracleError, Preference};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PendingQuestion {
    pub pair: (Point2, Point2),
    pub issued_at: DateTime<Utc>,
    pub token: Uuid,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueueError {
    #[error("token {0} does not match the pending question")]
    UnknownToken(Uuid),
    #[error("question {0} was already answered")]
    AlreadyAnswered(Uuid),
}

#[derive(Debug, Default)]
struct Slot {
    pending: Option<PendingQuestion>,
    answer: Option<Preference>,
    closed: bool,
}

#[derive(Debug, Default)]
struct Shared {
    slot: Mutex<Slot>,
    changed: Condvar,
}

impl Shared {
    fn lock(&self) -> MutexGuard<'_, Slot> {
        self.slot
            .lock()
            .unwrap_or_else(|poisoned| poisoned.into_inner())
    }
}

#[derive(Debug)]
pub struct QueuedOracle {
    shared: Arc<Shared>,
    timeout: Option<Duration>,
    queries: u64,
}

/// The answering side of a [`QueuedOracle`]. Cheap to clone.
#[derive(Debug, Clone)]
pub struct QuestionQueue {
    shared: Arc<Shared>,
}

/// Creates a connected oracle and queue.
pub fn queued_oracle() -> (QueuedOracle, QuestionQueue) {
    let shared = Arc::new(Shared::default());
    (
        QueuedOracle {
            shared: shared.clone(),
            timeout: None,
            queries: 0,
        },
        QuestionQueue { shared },
    )
}

impl QueuedOracle {
    pub fn new() -> (Self, QuestionQueue) {
        queued_oracle()
    }

    /// Give up on a question after `timeout` without an answer.
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }
}

impl Oracle for QueuedOracle {
    fn compare(&mut self, p: Point2, q: Point2) -> Result<Preference, OracleError> {
        self.queries += 1;
        let mut slot = self.shared.lock();
        if slot.closed {
            return Err(OracleError::Closed);
        }
        slot.pending = Some(PendingQuestion {
            pair: (p, q),
            issued_at: Utc::now(),
            token: Uuid::new_v4(),
        });
        slot.answer = None;
        self.shared.changed.notify_all();

        let deadline = self.timeout.map(|t| Instant::now() + t);
        loop {
            if let Some(answer) = slot.answer.take() {
                slot.pending = None;
                self.shared.changed.notify_all();
                return Ok(answer);
            }
            if slot.closed {
                slot.pending = None;
                return Err(OracleError::Closed);
            }
            match deadline {
                None => {
                    slot = self
                        .shared
                        .changed
                        .wait(slot)
                        .unwrap_or_else(|poisoned| poisoned.into_inner());
                }
                Some(deadline) => {
                    let now = Instant::now();
                    if now >= deadline {
                        slot.pending = None;
                        return Err(OracleError::Timeout(self.timeout.unwrap_or_default()));
                    }
                    slot = self
                        .shared
                        .changed
                        .wait_timeout(slot, deadline - now)
                        .unwrap_or_else(|poisoned| poisoned.into_inner())
                        .0;
                }
            }
        }
    }

    fn queries_made(&self) -> u64 {
        self.queries
    }
}

impl QuestionQueue {
    /// The question currently waiting for an answer, if any.
    pub fn pending(&self) -> Option<PendingQuestion> {
        let slot = self.shared.lock();
        if slot.answer.is_some() {
            return None;
        }
        slot.pending.clone()
    }

    /// Blocks until a question is pending or `timeout` elapses.
    pub fn wait_pending(&self, timeout: Duration) -> Option<PendingQuestion> {
        let deadline = Instant::now() + timeout;
        let mut slot = self.shared.lock();
        loop {
            if slot.answer.is_none() {
                if let Some(p) = &slot.pending {
                    return Some(p.clone());
                }
            }
            let now = Instant::now();
            if now >= deadline || slot.closed {
                return None;
            }
            slot = self
                .shared
                .changed
                .wait_timeout(slot, deadline - now)
                .unwrap_or_else(|poisoned| poisoned.into_inner())
                .0;
        }
    }

    pub fn answer(&self, token: Uuid, answer: Preference) -> Result<(), QueueError> {
        let mut slot = self.shared.lock();
        match &slot.pending {
            Some(p) if p.token == token => {
                if slot.answer.is_some() {
                    return Err(QueueError::AlreadyAnswered(token));
                }
                slot.answer = Some(answer);
                self.shared.changed.notify_all();
                Ok(())
            }
            _ => Err(QueueError::UnknownToken(token)),
        }
    }

    /// Wakes a blocked `compare` with [`OracleError::Closed`].
    pub fn close(&self) {
        let mut slot = self.shared.lock();
        slot.closed = true;
        self.shared.changed.notify_all();
    }
}
