//! HTTP service that runs square searches driven by human answers.

pub mod api;
pub mod error;
pub mod recipe;
pub mod respondent;
pub mod session;
pub mod store;

pub use api::{router, serve, serve_with_shutdown, CreatedSession};
pub use error::ServiceError;
pub use recipe::{point_to_recipe, recipe_domain, Recipe};
pub use respondent::ScriptedRespondent;
pub use session::{
    AnswerRequest, LabelMode, LabeledPoint, Progress, QuestionPayload, Session, SessionConfig,
    SessionStatus, StatePayload, StateSummary, WireAnswer,
};
pub use store::SessionStore;
