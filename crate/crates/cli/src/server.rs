//! JSON-over-HTTP games against the engine, backed by
//! [`indicolor::session::SessionStore`].
//!
//! ```text
//! POST /games            {"matroid", "colors", "mode", "human_role"} -> 201 {"id"}
//! GET  /games/{id}       -> game view
//! POST /games/{id}/move  {"color"} | {"element"} | {"kind"} -> game view
//! ```

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use indicolor::session::{Move, MoveBody, NewGame, SessionError, SessionStore};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

struct ApiError(SessionError);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match &self.0 {
            SessionError::BadRequest { .. } => StatusCode::BAD_REQUEST,
            SessionError::OutOfTurn { .. } => StatusCode::CONFLICT,
            SessionError::NotFound(_) => StatusCode::NOT_FOUND,
            SessionError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        let mut body = json!({ "error": self.0.to_string() });
        if let SessionError::BadRequest {
            legal: Some(legal), ..
        } = &self.0
        {
            if let Value::Object(fields) =
                serde_json::to_value(legal).expect("legal set serializes")
            {
                body.as_object_mut().expect("object").extend(fields);
            }
        }
        (status, Json(body)).into_response()
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        ApiError(e)
    }
}

fn parse_body<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| {
        ApiError(SessionError::BadRequest {
            message: format!("malformed request body: {e}"),
            legal: None,
        })
    })
}

/// Runs engine work off the async executor.
async fn blocking<T: Send + 'static>(
    work: impl FnOnce() -> Result<T, SessionError> + Send + 'static,
) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(work)
        .await
        .map_err(|e| ApiError(SessionError::Internal(e.to_string())))?
        .map_err(ApiError)
}

async fn create(State(store): State<Arc<SessionStore>>, body: Bytes) -> Result<Response, ApiError> {
    let request: NewGame = parse_body(&body)?;
    let id = blocking(move || store.create(&request)).await?;
    Ok((StatusCode::CREATED, Json(json!({ "id": id }))).into_response())
}

async fn view(
    State(store): State<Arc<SessionStore>>,
    Path(id): Path<u64>,
) -> Result<Response, ApiError> {
    Ok(Json(store.view(id)?).into_response())
}

async fn submit(
    State(store): State<Arc<SessionStore>>,
    Path(id): Path<u64>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let mv = Move::try_from(parse_body::<MoveBody>(&body)?)?;
    let view = blocking(move || store.submit(id, mv)).await?;
    Ok(Json(view).into_response())
}

pub fn router(store: Arc<SessionStore>) -> Router {
    Router::new()
        .route("/games", post(create))
        .route("/games/{id}", get(view))
        .route("/games/{id}/move", post(submit))
        .with_state(store)
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(Arc::new(SessionStore::new()))).await
}
