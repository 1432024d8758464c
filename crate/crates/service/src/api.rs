//! HTTP routes.

use std::future::Future;
use std::net::SocketAddr;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tokio::net::TcpListener;
use uuid::Uuid;

use crate::error::ServiceError;
use crate::session::{
    AnswerRequest, QuestionPayload, Session, SessionConfig, SessionListing, StatePayload,
    StateSummary,
};
use crate::store::SessionStore;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CreatedSession {
    pub id: Uuid,
}

pub fn router(store: SessionStore) -> Router {
    Router::new()
        .route("/sessions", post(create_session).get(list_sessions))
        .route("/sessions/{id}/question", get(question))
        .route("/sessions/{id}/answer", post(answer))
        .route("/sessions/{id}/state", get(state))
        .with_state(store)
}

fn parse_id(raw: &str) -> Result<Uuid, ServiceError> {
    Uuid::parse_str(raw).map_err(|_| ServiceError::NotFound(format!("session {raw}")))
}

async fn create_session(
    State(store): State<SessionStore>,
    body: Option<Json<SessionConfig>>,
) -> Result<(StatusCode, Json<CreatedSession>), ServiceError> {
    let config = body.map(|Json(c)| c).unwrap_or_default();
    let session = Session::new(config)?;
    let id = store.insert(session).await?;
    log::info!("created session {id}");
    Ok((StatusCode::CREATED, Json(CreatedSession { id })))
}

async fn list_sessions(State(store): State<SessionStore>) -> Json<Vec<SessionListing>> {
    let mut out = Vec::new();
    for id in store.ids().await {
        if let Ok(handle) = store.get(id).await {
            out.push(handle.lock().await.listing());
        }
    }
    out.sort_by_key(|l| l.created_at);
    Json(out)
}

async fn question(
    State(store): State<SessionStore>,
    Path(id): Path<String>,
) -> Result<Json<QuestionPayload>, ServiceError> {
    let handle = store.get(parse_id(&id)?).await?;
    let session = handle.lock().await;
    Ok(Json(session.question()?))
}

async fn answer(
    State(store): State<SessionStore>,
    Path(id): Path<String>,
    body: Result<Json<AnswerRequest>, JsonRejection>,
) -> Result<Json<StateSummary>, ServiceError> {
    let handle = store.get(parse_id(&id)?).await?;
    let Json(req) = body.map_err(|e| ServiceError::InvalidInput(e.body_text()))?;
    let mut session = handle.lock().await;
    let next = session.answered(&req)?;
    store.persist(&next)?;
    *session = next;
    Ok(Json(session.summary()))
}

async fn state(
    State(store): State<SessionStore>,
    Path(id): Path<String>,
) -> Result<Json<StatePayload>, ServiceError> {
    let handle = store.get(parse_id(&id)?).await?;
    let session = handle.lock().await;
    Ok(Json(session.payload()?))
}

/// Serves the API on an already bound listener until `shutdown` resolves.
pub async fn serve_with_shutdown<F>(
    listener: TcpListener,
    store: SessionStore,
    shutdown: F,
) -> std::io::Result<()>
where
    F: Future<Output = ()> + Send + 'static,
{
    axum::serve(listener, router(store))
        .with_graceful_shutdown(shutdown)
        .await
}

/// Binds `addr` and serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, store: SessionStore) -> std::io::Result<()> {
    let listener = TcpListener::bind(addr).await?;
    log::info!("listening on {}", listener.local_addr()?);
    serve_with_shutdown(listener, store, async {
        let _ = tokio::signal::ctrl_c().await;
    })
    .await
}
