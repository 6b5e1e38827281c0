//! In-memory HTTP service for playing the splitting game against the solver.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};

use axum::body::Bytes;
use axum::extract::{Path as UrlPath, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use splitting_core::game::{
    best_move, grid_board, solve_game, solve_state, GameBoard, GameState, Player,
};
use splitting_core::{Error as CoreError, Family};

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

    fn not_found() -> Self {
        Self::new(StatusCode::NOT_FOUND, "no such game")
    }

    fn conflict(message: impl Into<String>) -> Self {
        Self::new(StatusCode::CONFLICT, message)
    }

    fn unprocessable(message: impl Into<String>) -> Self {
        Self::new(StatusCode::UNPROCESSABLE_ENTITY, message)
    }
}

impl From<CoreError> for ApiError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::IllegalMove(_) => Self::conflict(e.to_string()),
            CoreError::Capacity { .. } | CoreError::Contract(_) | CoreError::Domain(_) => {
                Self::unprocessable(e.to_string())
            }
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

/// A member that some finished claim fails to split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub set: Vec<u32>,
}

/// Client view of one game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StateView {
    pub board: Family,
    pub first: Player,
    pub human_role: Player,
    pub split_claimed: Vec<u32>,
    pub skew_claimed: Vec<u32>,
    pub to_move: Option<Player>,
    pub over: bool,
    pub winner: Option<Player>,
    pub unsplit_witness: Option<Witness>,
}

struct Session {
    state: GameState,
    human: Player,
    created_at: DateTime<Utc>,
}

impl Session {
    fn view(&self) -> StateView {
        let s = &self.state;
        let family = s.board().family();
        StateView {
            board: family.clone(),
            first: s.first(),
            human_role: self.human,
            split_claimed: s.split_claimed().to_vec(),
            skew_claimed: s.skew_claimed().to_vec(),
            to_move: s.to_move(),
            over: s.is_over(),
            winner: s.outcome(),
            unsplit_witness: s.unsplit_witness().map(|index| Witness {
                index,
                set: family.sets()[index].to_vec(),
            }),
        }
    }

    /// Plays for the engine while it is the engine's turn; returns its move.
    fn engine_reply(&mut self) -> ApiResult<Option<u32>> {
        if self.state.to_move() != Some(self.human.other()) {
            return Ok(None);
        }
        let m = best_move(&self.state)?;
        self.state = self.state.apply_move(m)?;
        Ok(Some(m))
    }
}

#[derive(Default)]
pub struct AppState {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    log: Option<Mutex<File>>,
}

impl AppState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends every game event as a JSON line to `path`.
    pub fn with_event_log(path: &Path) -> std::io::Result<Self> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Self {
            sessions: RwLock::default(),
            log: Some(Mutex::new(file)),
        })
    }

    fn record(&self, event: &str, id: &str, detail: Value) {
        if let Some(log) = &self.log {
            let line = json!({ "at": Utc::now(), "event": event, "id": id, "detail": detail });
            let mut f = log.lock().unwrap_or_else(|p| p.into_inner());
            // a failed log write must not fail the game
            let _ = writeln!(f, "{line}").and_then(|_| f.flush());
        }
    }

    fn session(&self, id: &str) -> ApiResult<Arc<Mutex<Session>>> {
        let sessions = self.sessions.read().unwrap_or_else(|p| p.into_inner());
        sessions.get(id).cloned().ok_or_else(ApiError::not_found)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BoardSpec {
    Preset {
        preset: String,
        dims: Vec<u32>,
        #[serde(default)]
        diagonals: bool,
    },
    Explicit(Family),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateGame {
    board: Option<BoardSpec>,
    preset: Option<String>,
    dims: Option<Vec<u32>>,
    diagonals: Option<bool>,
    first: Player,
    human: Player,
}

impl CreateGame {
    fn board(self) -> ApiResult<GameBoard> {
        let spec = match (self.board, self.preset) {
            (Some(b), None) => b,
            (None, Some(preset)) => BoardSpec::Preset {
                preset,
                dims: self
                    .dims
                    .ok_or_else(|| ApiError::unprocessable("preset needs dims"))?,
                diagonals: self.diagonals.unwrap_or(false),
            },
            (Some(_), Some(_)) => {
                return Err(ApiError::unprocessable("give board or preset, not both"))
            }
            (None, None) => return Err(ApiError::unprocessable("missing board")),
        };
        match spec {
            BoardSpec::Explicit(f) => Ok(GameBoard::new(f)),
            BoardSpec::Preset {
                preset,
                dims,
                diagonals,
            } => match preset.as_str() {
                "grid" => Ok(grid_board(&dims, diagonals)?),
                other => Err(ApiError::unprocessable(format!("unknown preset `{other}`"))),
            },
        }
    }
}

#[derive(Deserialize)]
struct MoveBody {
    element: u32,
}

fn parse<T: for<'de> Deserialize<'de>>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body)
        .map_err(|e| ApiError::unprocessable(format!("malformed request: {e}")))
}

/// Solver work runs off the async executor.
async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> ApiResult<T> + Send + 'static,
) -> ApiResult<T> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
}

async fn create_game(
    State(app): State<Arc<AppState>>,
    body: Bytes,
) -> ApiResult<(StatusCode, Json<Value>)> {
    let req: CreateGame = parse(&body)?;
    let (first, human) = (req.first, req.human);
    let board = req.board()?;
    let (session, engine_move) = blocking(move || {
        // fail early on boards the solver cannot handle
        solve_game(&board, first)?;
        let mut session = Session {
            state: GameState::new(board, first),
            human,
            created_at: Utc::now(),
        };
        let reply = session.engine_reply()?;
        Ok((session, reply))
    })
    .await?;
    let id = uuid::Uuid::new_v4().to_string();
    let view = session.view();
    let created_at = session.created_at;
    app.record(
        "create",
        &id,
        json!({ "board": view.board, "first": first, "human": human, "engineMove": engine_move }),
    );
    app.sessions
        .write()
        .unwrap_or_else(|p| p.into_inner())
        .insert(id.clone(), Arc::new(Mutex::new(session)));
    let body =
        json!({ "id": id, "createdAt": created_at, "state": view, "engineMove": engine_move });
    Ok((StatusCode::CREATED, Json(body)))
}

async fn get_game(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<Json<StateView>> {
    let session = app.session(&id)?;
    let view = session.lock().unwrap_or_else(|p| p.into_inner()).view();
    Ok(Json(view))
}

async fn make_move(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    body: Bytes,
) -> ApiResult<Json<Value>> {
    let session = app.session(&id)?;
    let MoveBody { element } = parse(&body)?;
    let (view, engine_move) = blocking(move || {
        let mut s = session.lock().unwrap_or_else(|p| p.into_inner());
        if s.state.is_over() {
            return Err(ApiError::conflict("game is over"));
        }
        if s.state.to_move() != Some(s.human) {
            return Err(ApiError::conflict("not your turn"));
        }
        s.state = s.state.apply_move(element)?;
        let reply = s.engine_reply()?;
        Ok((s.view(), reply))
    })
    .await?;
    app.record(
        "move",
        &id,
        json!({ "element": element, "engineMove": engine_move }),
    );
    Ok(Json(
        json!({ "state": view, "move": element, "engineMove": engine_move }),
    ))
}

async fn hint(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<Json<Value>> {
    let session = app.session(&id)?;
    blocking(move || {
        let s = session.lock().unwrap_or_else(|p| p.into_inner());
        if s.state.is_over() {
            return Err(ApiError::conflict("game is over"));
        }
        let best = best_move(&s.state)?;
        let winner = solve_state(&s.state)?.winner;
        Ok(Json(
            json!({ "bestMove": best, "winnerUnderPerfectPlay": winner }),
        ))
    })
    .await
}

async fn delete_game(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<StatusCode> {
    let removed = app
        .sessions
        .write()
        .unwrap_or_else(|p| p.into_inner())
        .remove(&id);
    match removed {
        Some(_) => {
            app.record("delete", &id, Value::Null);
            Ok(StatusCode::NO_CONTENT)
        }
        None => Err(ApiError::not_found()),
    }
}

pub fn router(app: Arc<AppState>) -> Router {
    Router::new()
        .route("/games", post(create_game))
        .route("/games/{id}", get(get_game).delete(delete_game))
        .route("/games/{id}/moves", post(make_move))
        .route("/games/{id}/hint", get(hint))
        .with_state(app)
}

pub async fn serve(addr: std::net::SocketAddr, app: AppState) -> anyhow::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(Arc::new(app)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
