//! Session registry backed by one JSON file per session.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use tokio::sync::{Mutex, RwLock};
use uuid::Uuid;

use crate::error::ServiceError;
use crate::session::{Session, SessionRecordFile};

pub type SessionHandle = Arc<Mutex<Session>>;

#[derive(Clone)]
pub struct SessionStore {
    dir: Option<Arc<PathBuf>>,
    sessions: Arc<RwLock<HashMap<Uuid, SessionHandle>>>,
}

impl SessionStore {
    /// Store that keeps sessions only in memory.
    pub fn in_memory() -> Self {
        Self {
            dir: None,
            sessions: Arc::default(),
        }
    }

    /// Opens a state directory, creating it if needed, and restores every
    /// readable session in it. Files that fail to parse or replay are skipped
    /// with a warning.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, ServiceError> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        let probe = dir.join(".write-probe");
        fs::write(&probe, b"")?;
        fs::remove_file(&probe)?;

        let mut sessions = HashMap::new();
        for entry in fs::read_dir(&dir)? {
            let path = entry?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            match load_session(&path) {
                Ok(s) => {
                    sessions.insert(s.id(), Arc::new(Mutex::new(s)));
                }
                Err(e) => log::warn!("skipping session file {}: {e}", path.display()),
            }
        }
        log::info!(
            "restored {} session(s) from {}",
            sessions.len(),
            dir.display()
        );
        Ok(Self {
            dir: Some(Arc::new(dir)),
            sessions: Arc::new(RwLock::new(sessions)),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref().map(PathBuf::as_path)
    }

    pub async fn insert(&self, session: Session) -> Result<Uuid, ServiceError> {
        self.persist(&session)?;
        let id = session.id();
        self.sessions
            .write()
            .await
            .insert(id, Arc::new(Mutex::new(session)));
        Ok(id)
    }

    pub async fn get(&self, id: Uuid) -> Result<SessionHandle, ServiceError> {
        self.sessions
            .read()
            .await
            .get(&id)
            .cloned()
            .ok_or_else(|| ServiceError::NotFound(format!("session {id}")))
    }

    pub async fn ids(&self) -> Vec<Uuid> {
        self.sessions.read().await.keys().copied().collect()
    }

    /// Writes the session to disk, replacing the previous file atomically.
    pub fn persist(&self, session: &Session) -> Result<(), ServiceError> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        let record = session.to_record();
        let body = serde_json::to_vec_pretty(&record)
            .map_err(|e| ServiceError::Corrupt(format!("cannot encode session: {e}")))?;
        let target = dir.join(format!("{}.json", session.id()));
        let tmp = dir.join(format!(".{}.json.tmp", session.id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&body)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)?;
        Ok(())
    }
}

fn load_session(path: &Path) -> Result<Session, ServiceError> {
    let bytes = fs::read(path)?;
    let record: SessionRecordFile =
        serde_json::from_slice(&bytes).map_err(|e| ServiceError::Corrupt(e.to_string()))?;
    if path.file_stem().and_then(|s| s.to_str()) != Some(record.id.to_string().as_str()) {
        return Err(ServiceError::Corrupt(
            "file name does not match session id".into(),
        ));
    }
    Session::from_record(record)
}
