//! JSON over HTTP. Handlers are pure functions of the request body and the
//! read-only store, so replaying a request gives a byte-identical response.

use std::sync::Arc;
use std::time::Duration;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use linepush::{Configuration, Direction, Error, PushSequence};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::solve::{self, Outcome, SolveError};
use crate::store::PuzzleStore;

/// States explored by one `/api/solve` search before giving up.
pub const SOLVE_STATES: usize = 2_000_000;

pub struct AppState {
    pub store: PuzzleStore,
    /// Wall-clock budget for one solve.
    pub timeout: Duration,
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/api/puzzles", get(list_puzzles))
        .route("/api/puzzles/{id}", get(get_puzzle))
        .route("/api/push", post(push))
        .route("/api/classify", post(classify))
        .route("/api/solve", post(solve_route))
        .route("/api/verify", post(verify))
        .with_state(state)
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, message)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::EmptyGrid | Error::IllegalChar { .. } | Error::Collision { .. } | Error::BadMove { .. } => {
                StatusCode::BAD_REQUEST
            }
            Error::Verification(_) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        Self::new(status, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        json(self.status, &serde_json::json!({ "error": self.message }))
    }
}

fn json<T: Serialize>(status: StatusCode, body: &T) -> Response {
    let bytes = serde_json::to_vec(body).expect("response types serialize");
    (status, [(header::CONTENT_TYPE, "application/json")], bytes).into_response()
}

fn ok<T: Serialize>(body: &T) -> Response {
    json(StatusCode::OK, body)
}

/// Bodies are parsed by hand so every malformed payload is a 400.
fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| ApiError::bad_request(format!("malformed request: {e}")))
}

fn grid(field: &str, text: &str) -> Result<Configuration, ApiError> {
    text.parse()
        .map_err(|e: Error| ApiError::bad_request(format!("malformed {field}grid: {e}")))
}

fn moves(text: &str) -> Result<PushSequence, ApiError> {
    text.parse().map_err(|e: Error| ApiError::bad_request(format!("malformed moves: {e}")))
}

#[derive(Serialize)]
struct PuzzleSummary<'a> {
    id: &'a str,
    kind: linepush::puzzle::PuzzleKind,
    size: usize,
}

async fn list_puzzles(State(state): State<Arc<AppState>>) -> Response {
    let list: Vec<PuzzleSummary> = state
        .store
        .iter()
        .map(|p| PuzzleSummary {
            id: &p.id,
            kind: p.kind,
            size: p.start.len(),
        })
        .collect();
    ok(&list)
}

#[derive(Serialize)]
struct PuzzleBody {
    start: String,
    goal: String,
    kind: linepush::puzzle::PuzzleKind,
}

async fn get_puzzle(State(state): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let p = state
        .store
        .get(&id)
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no puzzle {id:?}")))?;
    Ok(ok(&PuzzleBody {
        start: p.start.format_grid(),
        goal: p.goal.format_grid(),
        kind: p.kind,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PushRequest {
    grid: String,
    dir: String,
}

#[derive(Serialize)]
struct PushResponse {
    grid: String,
    changed: bool,
}

async fn push(bytes: Bytes) -> Result<Response, ApiError> {
    let req: PushRequest = body(&bytes)?;
    let c = grid("", &req.grid)?;
    let mut letters = req.dir.chars();
    let d = match (letters.next().and_then(Direction::from_letter), letters.next()) {
        (Some(d), None) => d,
        _ => return Err(ApiError::bad_request(format!("dir must be one of L, R, U, D, got {:?}", req.dir))),
    };
    let after = c.push(d);
    Ok(ok(&PushResponse {
        grid: after.format_grid(),
        changed: after != c,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassifyRequest {
    grid: String,
}

async fn classify(bytes: Bytes) -> Result<Response, ApiError> {
    let req: ClassifyRequest = body(&bytes)?;
    let c = grid("", &req.grid)?;
    Ok(ok(&solve::classify(&c)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SolveRequest {
    start: String,
    goal: String,
}

#[derive(Serialize)]
struct SolveResponse {
    solvable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    moves: Option<String>,
}

async fn solve_route(State(state): State<Arc<AppState>>, bytes: Bytes) -> Result<Response, ApiError> {
    let req: SolveRequest = body(&bytes)?;
    let start = grid("start ", &req.start)?;
    let goal = grid("goal ", &req.goal)?;
    let limit = state.timeout;
    let budget = solve::budget(SOLVE_STATES, Some(limit));
    let task = tokio::task::spawn_blocking(move || solve::solve(&start, &goal, budget));
    // the search also watches the clock; this catches the exact solver
    let overrun = || ApiError::new(StatusCode::SERVICE_UNAVAILABLE, "time budget exceeded");
    let result = tokio::time::timeout(limit + Duration::from_millis(250), task)
        .await
        .map_err(|_| overrun())?
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    let body = match result {
        Ok(Outcome::Solved(s)) => SolveResponse {
            solvable: true,
            reason: None,
            moves: Some(s.to_string()),
        },
        Ok(Outcome::Unsolvable(reason)) => SolveResponse {
            solvable: false,
            reason: Some(reason),
            moves: None,
        },
        Err(SolveError::Invalid(m)) => return Err(ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, m)),
        Err(SolveError::Budget(m)) => return Err(ApiError::new(StatusCode::SERVICE_UNAVAILABLE, m)),
        Err(SolveError::Engine(e)) => return Err(e.into()),
    };
    Ok(ok(&body))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyRequest {
    start: String,
    moves: String,
    goal: String,
}

#[derive(Serialize)]
struct VerifyResponse {
    ok: bool,
}

async fn verify(bytes: Bytes) -> Result<Response, ApiError> {
    let req: VerifyRequest = body(&bytes)?;
    let start = grid("start ", &req.start)?;
    let goal = grid("goal ", &req.goal)?;
    let s = moves(&req.moves)?;
    Ok(ok(&VerifyResponse {
        ok: solve::verify(&start, &s, &goal),
    }))
}
