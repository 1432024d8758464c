//! One respondent's search: configuration, the square-search state, and the
//! log of answered questions it was rebuilt from.

use chrono::{DateTime, Utc};
use dichotomy_core::square::{LineSearch, Phase, RegionSnapshot, SquareState};
use dichotomy_core::{Point2, Preference, Rect};
use serde::{Deserialize, Serialize};
use uuid::Uuid;

use crate::error::ServiceError;
use crate::recipe::{point_to_recipe, recipe_domain, Recipe};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelMode {
    Raw,
    Recipe,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SessionConfig {
    pub domain_square: Rect,
    pub k_total: u32,
    pub n_inner: u32,
    /// A "tie" ends the current line search. When off, a tie counts as
    /// preferring option B.
    pub tie_stop: bool,
    pub label_mode: LabelMode,
}

impl Default for SessionConfig {
    fn default() -> Self {
        Self {
            domain_square: recipe_domain(),
            k_total: 2,
            n_inner: 8,
            tie_stop: true,
            label_mode: LabelMode::Recipe,
        }
    }
}

impl SessionConfig {
    pub fn validate(&self) -> Result<(), ServiceError> {
        if self.k_total == 0 || self.n_inner == 0 {
            return Err(ServiceError::InvalidInput(
                "k_total and n_inner must be at least 1".into(),
            ));
        }
        let d = &self.domain_square;
        Rect::new(d.center, d.half_width, d.half_height)?;
        if !d.is_square() {
            return Err(ServiceError::InvalidInput(
                "domain_square must be a square".into(),
            ));
        }
        if self.label_mode == LabelMode::Recipe {
            let r = recipe_domain();
            if d.min_x() < r.min_x()
                || d.max_x() > r.max_x()
                || d.min_y() < r.min_y()
                || d.max_y() > r.max_y()
            {
                return Err(ServiceError::InvalidInput(
                    "recipe labels need a domain inside [1, 4] x [1, 4]".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Respondent answer on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WireAnswer {
    A,
    B,
    #[serde(rename = "tie")]
    Tie,
}

impl WireAnswer {
    pub fn to_preference(self, tie_stop: bool) -> Preference {
        match self {
            WireAnswer::A => Preference::First,
            WireAnswer::B => Preference::Second,
            WireAnswer::Tie if tie_stop => Preference::Tie,
            WireAnswer::Tie => Preference::Second,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnsweredQuestion {
    pub index: u64,
    pub token: String,
    pub option_a: Point2,
    pub option_b: Point2,
    pub answer: WireAnswer,
    pub answered_at: DateTime<Utc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SessionStatus {
    Active,
    Complete,
}

/// On-disk form of a session. The state is not stored, only what is needed
/// to rebuild it; `history` is kept as a check on the replay.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionRecordFile {
    pub schema_version: u32,
    pub id: Uuid,
    pub config: SessionConfig,
    pub created_at: DateTime<Utc>,
    pub transcript: Vec<AnsweredQuestion>,
    pub history: Vec<RegionSnapshot>,
    pub status: SessionStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledPoint {
    pub point: Point2,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Progress {
    pub iteration: u32,
    pub k_total: u32,
    pub phase: Phase,
    pub line_search_step: u32,
    pub n_inner: u32,
    pub comparisons: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum QuestionPayload {
    Pending {
        token: String,
        option_a: LabeledPoint,
        option_b: LabeledPoint,
        progress: Progress,
    },
    Complete {
        final_point: LabeledPoint,
        progress: Progress,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnswerRequest {
    pub token: String,
    pub preference: WireAnswer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateSummary {
    pub id: Uuid,
    pub status: SessionStatus,
    pub region: Rect,
    pub progress: Progress,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnsweredPair {
    pub option_a: Point2,
    pub option_b: Point2,
    pub answer: WireAnswer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatePayload {
    pub id: Uuid,
    pub status: SessionStatus,
    pub config: SessionConfig,
    pub region: Rect,
    pub history: Vec<RegionSnapshot>,
    pub searches: Vec<LineSearch>,
    pub answered: Vec<AnsweredPair>,
    pub tie_pairs: Vec<(Point2, Point2)>,
    pub comparisons: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_point: Option<LabeledPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionListing {
    pub id: Uuid,
    pub status: SessionStatus,
    pub created_at: DateTime<Utc>,
    pub comparisons: u64,
    pub iteration: u32,
    pub k_total: u32,
}

#[derive(Debug, Clone)]
pub struct Session {
    id: Uuid,
    config: SessionConfig,
    created_at: DateTime<Utc>,
    state: SquareState,
    transcript: Vec<AnsweredQuestion>,
}

impl Session {
    pub fn new(config: SessionConfig) -> Result<Self, ServiceError> {
        config.validate()?;
        Ok(Self {
            id: Uuid::new_v4(),
            config,
            created_at: Utc::now(),
            state: SquareState::new(config.domain_square, config.k_total, config.n_inner)?,
            transcript: Vec::new(),
        })
    }

    pub fn id(&self) -> Uuid {
        self.id
    }

    pub fn config(&self) -> &SessionConfig {
        &self.config
    }

    pub fn state(&self) -> &SquareState {
        &self.state
    }

    pub fn status(&self) -> SessionStatus {
        if self.state.is_finished() {
            SessionStatus::Complete
        } else {
            SessionStatus::Active
        }
    }

    /// Token of the question currently awaiting an answer. Stable across
    /// restarts because it only depends on how many answers came before.
    fn current_token(&self) -> String {
        format!("{}-{}", self.id, self.transcript.len())
    }

    fn label(&self, point: Point2) -> Result<LabeledPoint, ServiceError> {
        let recipe = match self.config.label_mode {
            LabelMode::Recipe => Some(point_to_recipe(point)?),
            LabelMode::Raw => None,
        };
        Ok(LabeledPoint { point, recipe })
    }

    fn progress(&self) -> Progress {
        Progress {
            iteration: self.state.iteration(),
            k_total: self.state.k_total(),
            phase: self.state.phase(),
            line_search_step: self.state.inner().map_or(0, |g| g.iteration()),
            n_inner: self.state.n_inner(),
            comparisons: self.state.comparisons(),
        }
    }

    pub fn question(&self) -> Result<QuestionPayload, ServiceError> {
        if self.state.is_finished() {
            return Ok(QuestionPayload::Complete {
                final_point: self.label(self.state.center())?,
                progress: self.progress(),
            });
        }
        let (a, b) = self.state.question()?;
        Ok(QuestionPayload::Pending {
            token: self.current_token(),
            option_a: self.label(a)?,
            option_b: self.label(b)?,
            progress: self.progress(),
        })
    }

    /// Applies an answer to a copy of the session; the caller persists the
    /// copy before committing it.
    pub fn answered(&self, req: &AnswerRequest) -> Result<Session, ServiceError> {
        if self.state.is_finished() {
            return Err(ServiceError::Conflict(
                "session is complete; no question is pending".into(),
            ));
        }
        if req.token != self.current_token() {
            return Err(ServiceError::Conflict(format!(
                "token {} does not match the pending question",
                req.token
            )));
        }
        let (a, b) = self.state.question()?;
        let mut next = self.clone();
        next.state = self
            .state
            .advance(req.preference.to_preference(self.config.tie_stop))?;
        next.transcript.push(AnsweredQuestion {
            index: self.transcript.len() as u64,
            token: req.token.clone(),
            option_a: a,
            option_b: b,
            answer: req.preference,
            answered_at: Utc::now(),
        });
        Ok(next)
    }

    pub fn summary(&self) -> StateSummary {
        StateSummary {
            id: self.id,
            status: self.status(),
            region: *self.state.region(),
            progress: self.progress(),
        }
    }

    pub fn listing(&self) -> SessionListing {
        SessionListing {
            id: self.id,
            status: self.status(),
            created_at: self.created_at,
            comparisons: self.state.comparisons(),
            iteration: self.state.iteration(),
            k_total: self.state.k_total(),
        }
    }

    pub fn payload(&self) -> Result<StatePayload, ServiceError> {
        let answered: Vec<AnsweredPair> = self
            .transcript
            .iter()
            .map(|q| AnsweredPair {
                option_a: q.option_a,
                option_b: q.option_b,
                answer: q.answer,
            })
            .collect();
        let tie_pairs = answered
            .iter()
            .filter(|p| p.answer == WireAnswer::Tie)
            .map(|p| (p.option_a, p.option_b))
            .collect();
        Ok(StatePayload {
            id: self.id,
            status: self.status(),
            config: self.config,
            region: *self.state.region(),
            history: self.state.history().to_vec(),
            searches: self.state.searches().to_vec(),
            answered,
            tie_pairs,
            comparisons: self.state.comparisons(),
            final_point: if self.state.is_finished() {
                Some(self.label(self.state.center())?)
            } else {
                None
            },
        })
    }

    pub fn to_record(&self) -> SessionRecordFile {
        SessionRecordFile {
            schema_version: SCHEMA_VERSION,
            id: self.id,
            config: self.config,
            created_at: self.created_at,
            transcript: self.transcript.clone(),
            history: self.state.history().to_vec(),
            status: self.status(),
        }
    }

    /// Rebuilds a session by replaying its answers from the configuration.
    pub fn from_record(record: SessionRecordFile) -> Result<Self, ServiceError> {
        if record.schema_version != SCHEMA_VERSION {
            return Err(ServiceError::Corrupt(format!(
                "unsupported schema version {}",
                record.schema_version
            )));
        }
        let mut session = Session {
            id: record.id,
            config: record.config,
            created_at: record.created_at,
            state: SquareState::new(
                record.config.domain_square,
                record.config.k_total,
                record.config.n_inner,
            )?,
            transcript: Vec::new(),
        };
        record.config.validate()?;
        for q in record.transcript {
            let (a, b) = session.state.question().map_err(|e| {
                ServiceError::Corrupt(format!("answer {} has no question: {e}", q.index))
            })?;
            if (a, b) != (q.option_a, q.option_b) || q.index != session.transcript.len() as u64 {
                return Err(ServiceError::Corrupt(format!(
                    "answer {} does not match the replayed question",
                    q.index
                )));
            }
            session.state = session
                .state
                .advance(q.answer.to_preference(record.config.tie_stop))?;
            session.transcript.push(q);
        }
        if session.state.history() != record.history.as_slice() {
            return Err(ServiceError::Corrupt(
                "replayed history differs from the stored one".into(),
            ));
        }
        if session.status() != record.status {
            return Err(ServiceError::Corrupt(
                "stored status differs from the replayed one".into(),
            ));
        }
        Ok(session)
    }
}
