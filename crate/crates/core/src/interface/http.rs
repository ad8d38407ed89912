//! JSON-over-HTTP service.
//!
//! | method | path                              | body                 |
//! |--------|-----------------------------------|----------------------|
//! | GET    | `/healthz`                        |                      |
//! | GET    | `/api/kb`                         |                      |
//! | GET    | `/api/kb/graph`                   |                      |
//! | GET    | `/api/criteria`                   |                      |
//! | POST   | `/api/kb/instances`               | technique instance   |
//! | PUT    | `/api/kb/instances/{id}/values`   | `{criterion: label}` |
//! | POST   | `/api/rank`                       | scenario             |
//! | POST   | `/api/diff`                       | `{before, after}`    |
//!
//! `/api/diff` operands may each be a fixture scenario name, a scenario
//! document or a full ranking report. Errors are `{code, message, path}`.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post, put};
use axum::Router;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::Error;
use crate::canonical;
use crate::kb::{
    export_graph, family_label, CriterionDef, KbError, KbStore, KnowledgeBase, TechniqueInstance,
};
use crate::scenario::{
    diff_rankings, fixtures, run_scenario, RankingReport, Scenario, ScenarioError,
};

pub struct AppState {
    pub store: KbStore,
}

pub fn router(store: KbStore) -> Router {
    let state = Arc::new(AppState { store });
    Router::new()
        .route("/healthz", get(healthz))
        .route("/api/kb", get(get_kb))
        .route("/api/kb/graph", get(get_graph))
        .route("/api/criteria", get(get_criteria))
        .route("/api/kb/instances", post(add_instance))
        .route("/api/kb/instances/{id}/values", put(put_values))
        .route("/api/rank", post(rank))
        .route("/api/diff", post(diff))
        .with_state(state)
}

/// Binds `addr` and serves until Ctrl-C.
pub async fn serve(store: KbStore, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(store))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

struct ApiError {
    status: StatusCode,
    error: Error,
}

impl From<Error> for ApiError {
    fn from(error: Error) -> Self {
        ApiError {
            status: status_for(&error),
            error,
        }
    }
}

impl From<KbError> for ApiError {
    fn from(e: KbError) -> Self {
        Error::from(e).into()
    }
}

impl From<ScenarioError> for ApiError {
    fn from(e: ScenarioError) -> Self {
        Error::from(e).into()
    }
}

fn kb_status(e: &KbError) -> StatusCode {
    match e {
        KbError::Syntax { .. } | KbError::Schema { .. } => StatusCode::BAD_REQUEST,
        KbError::DuplicateId { .. } => StatusCode::CONFLICT,
        KbError::UnknownInstance { .. } | KbError::UnknownCriterion { .. } => StatusCode::NOT_FOUND,
        KbError::Io { .. } => StatusCode::INTERNAL_SERVER_ERROR,
        _ => StatusCode::UNPROCESSABLE_ENTITY,
    }
}

fn status_for(e: &Error) -> StatusCode {
    match e {
        Error::Kb(k) => kb_status(k),
        Error::Scenario(ScenarioError::Kb { source, .. }) => kb_status(source),
        Error::Scenario(ScenarioError::Parse { .. }) => StatusCode::BAD_REQUEST,
        Error::Scenario(_) | Error::Mcda(_) => StatusCode::UNPROCESSABLE_ENTITY,
        Error::Json { .. } => StatusCode::BAD_REQUEST,
        Error::UnknownScenario(_) => StatusCode::NOT_FOUND,
        Error::Io { .. } => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        json_response(self.status, &self.error.body())
    }
}

fn json_response<T: Serialize + ?Sized>(status: StatusCode, value: &T) -> Response {
    match canonical::to_string(value) {
        Ok(body) => (status, [(header::CONTENT_TYPE, "application/json")], body).into_response(),
        Err(e) => (
            StatusCode::INTERNAL_SERVER_ERROR,
            [(header::CONTENT_TYPE, "text/plain; charset=utf-8")],
            e.to_string(),
        )
            .into_response(),
    }
}

fn parse_body<T: DeserializeOwned>(body: &Bytes, what: &'static str) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|source| Error::Json { what, source }.into())
}

async fn healthz() -> impl IntoResponse {
    ([(header::CONTENT_TYPE, "text/plain; charset=utf-8")], "ok")
}

async fn get_kb(State(state): State<Arc<AppState>>) -> Response {
    json_response(StatusCode::OK, &*state.store.snapshot())
}

async fn get_graph(State(state): State<Arc<AppState>>) -> Response {
    json_response(StatusCode::OK, &export_graph(&state.store.snapshot()))
}

#[derive(Serialize)]
struct FamilyView<'a> {
    id: &'a str,
    label: &'a str,
    criteria: Vec<&'a CriterionDef>,
}

async fn get_criteria(State(state): State<Arc<AppState>>) -> Response {
    let kb = state.store.snapshot();
    let families: Vec<FamilyView> = kb
        .families()
        .into_iter()
        .map(|f| FamilyView {
            id: f,
            label: family_label(f).unwrap_or(f),
            criteria: kb.criteria.iter().filter(|c| c.family == f).collect(),
        })
        .collect();
    json_response(StatusCode::OK, &families)
}

// KB writes block on the writer lock and the file system.
async fn mutate<F>(state: Arc<AppState>, f: F) -> Result<Arc<KnowledgeBase>, ApiError>
where
    F: FnOnce(&KnowledgeBase) -> Result<KnowledgeBase, KbError> + Send + 'static,
{
    tokio::task::spawn_blocking(move || state.store.update(f))
        .await
        .expect("kb update task panicked")
        .map_err(ApiError::from)
}

async fn add_instance(
    State(state): State<Arc<AppState>>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let inst: TechniqueInstance = parse_body(&body, "instance")?;
    let id = inst.id.clone();
    let kb = mutate(state, move |kb| kb.add_instance(inst)).await?;
    Ok(json_response(
        StatusCode::CREATED,
        kb.instance(&id).expect("just added"),
    ))
}

async fn put_values(
    State(state): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let values: BTreeMap<String, String> = parse_body(&body, "values")?;
    let target = id.clone();
    let kb = mutate(state, move |kb| kb.set_values(&target, values)).await?;
    Ok(json_response(
        StatusCode::OK,
        kb.instance(&id).expect("instance exists"),
    ))
}

/// Rank a scenario against the KB snapshot taken when the request arrives.
pub fn rank_scenario_json(kb: &KnowledgeBase, body: &[u8]) -> Result<String, Error> {
    let scenario: Scenario = serde_json::from_slice(body).map_err(|source| Error::Json {
        what: "scenario",
        source,
    })?;
    Ok(run_scenario(kb, &scenario)?.to_canonical_json())
}

async fn rank(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let kb = state.store.snapshot();
    let json = rank_scenario_json(&kb, &body)?;
    Ok((
        StatusCode::OK,
        [(header::CONTENT_TYPE, "application/json")],
        json,
    )
        .into_response())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DiffOperand {
    Name(String),
    Report(Box<RankingReport>),
    Scenario(Scenario),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiffRequest {
    before: DiffOperand,
    after: DiffOperand,
}

fn resolve(kb: &KnowledgeBase, op: DiffOperand) -> Result<RankingReport, Error> {
    match op {
        DiffOperand::Report(r) => {
            r.verify()?;
            Ok(*r)
        }
        DiffOperand::Scenario(s) => Ok(run_scenario(kb, &s)?),
        DiffOperand::Name(name) => {
            let s = fixtures::by_name(&name).ok_or(Error::UnknownScenario(name))?;
            Ok(run_scenario(kb, &s)?)
        }
    }
}

async fn diff(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let req: DiffRequest = parse_body(&body, "diff request")?;
    let kb = state.store.snapshot();
    let before = resolve(&kb, req.before)?;
    let after = resolve(&kb, req.after)?;
    Ok(json_response(
        StatusCode::OK,
        &diff_rankings(&before, &after),
    ))
}
