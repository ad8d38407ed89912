//! Drives the HTTP API in-process, the same way the web front end does.
//!
//!     cargo run --example http_api
//!
//! To serve it for real: `cargo run --bin workbench -- serve data/default_kb.json`.

use axum::body::Body;
use axum::http::{Method, Request};
use http_body_util::BodyExt;
use mcda_workbench::interface::http::router;
use mcda_workbench::kb::{default_kb, KbStore};
use tower::ServiceExt;

async fn send(
    app: &axum::Router,
    method: Method,
    uri: &str,
    body: &str,
) -> Result<(), Box<dyn std::error::Error>> {
    let req = Request::builder()
        .method(method.clone())
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))?;
    let resp = app.clone().oneshot(req).await?;
    let status = resp.status();
    let bytes = resp.into_body().collect().await?.to_bytes();
    let text = String::from_utf8_lossy(&bytes);
    let preview: String = text.chars().take(160).collect();
    println!(
        "{method} {uri} -> {status}\n  {}",
        preview.replace('\n', " ")
    );
    Ok(())
}

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    let app = router(KbStore::in_memory(default_kb()));
    send(&app, Method::GET, "/healthz", "").await?;
    send(&app, Method::GET, "/api/criteria", "").await?;
    send(
        &app,
        Method::POST,
        "/api/kb/instances",
        r#"{"id":"IDEF0","label":"IDEF0","values":{"f11":"good","f12":"partial"}}"#,
    )
    .await?;
    send(
        &app,
        Method::PUT,
        "/api/kb/instances/IDEF0/values",
        r#"{"f12":"superb"}"#,
    )
    .await?;
    send(
        &app,
        Method::POST,
        "/api/rank",
        r#"{"name":"pair","alternatives":["PERA","IDEF0"],"criteria":["f11","f12"]}"#,
    )
    .await?;
    send(
        &app,
        Method::POST,
        "/api/diff",
        r#"{"before":"experiment-1","after":"experiment-2"}"#,
    )
    .await?;
    Ok(())
}
