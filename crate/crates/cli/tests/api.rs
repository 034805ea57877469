use std::path::Path;
use std::sync::Arc;
use std::time::Duration;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use linepush_cli::api::{router, AppState};
use linepush_cli::store::PuzzleStore;
use serde_json::{json, Value};
use tower::ServiceExt;

fn app() -> Router {
    let store = PuzzleStore::load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("puzzles")).unwrap();
    router(Arc::new(AppState {
        store,
        timeout: Duration::from_secs(20),
    }))
}

async fn send(app: &Router, req: Request<Body>) -> (StatusCode, Vec<u8>) {
    let res = app.clone().oneshot(req).await.unwrap();
    let status = res.status();
    (status, res.into_body().collect().await.unwrap().to_bytes().to_vec())
}

async fn get(app: &Router, uri: &str) -> (StatusCode, Value) {
    let (s, b) = send(app, Request::get(uri).body(Body::empty()).unwrap()).await;
    (s, serde_json::from_slice(&b).unwrap())
}

async fn post_raw(app: &Router, uri: &str, body: &str) -> (StatusCode, Vec<u8>) {
    let req = Request::post(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    send(app, req).await
}

async fn post(app: &Router, uri: &str, body: Value) -> (StatusCode, Value) {
    let (s, b) = post_raw(app, uri, &body.to_string()).await;
    (s, serde_json::from_slice(&b).unwrap())
}

#[tokio::test]
async fn lists_and_fetches_puzzles() {
    let app = app();
    let (s, list) = get(&app, "/api/puzzles").await;
    assert_eq!(s, StatusCode::OK);
    let ids: Vec<&str> = list.as_array().unwrap().iter().map(|p| p["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"five-cycle") && ids.contains(&"diagonal-3x3"));
    let five = list.as_array().unwrap().iter().find(|p| p["id"] == "five-cycle").unwrap();
    assert_eq!(five, &json!({"id": "five-cycle", "kind": "permutation", "size": 5}));

    let (s, p) = get(&app, "/api/puzzles/five-cycle").await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(p, json!({"start": "AB.\nCDE", "goal": "CA.\nDEB", "kind": "permutation"}));
    let (s, _) = get(&app, "/api/puzzles/nope").await;
    assert_eq!(s, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn push_examples() {
    let app = app();
    let (s, r) = post(&app, "/api/push", json!({"grid": "A.B", "dir": "L"})).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(r, json!({"grid": "AB", "changed": true}));
    let (_, r) = post(&app, "/api/push", json!({"grid": "AB\nCD", "dir": "U"})).await;
    assert_eq!(r, json!({"grid": "AB\nCD", "changed": false}));
}

#[tokio::test]
async fn malformed_requests_are_400() {
    let app = app();
    for body in [
        "not json",
        r#"{"grid": "A.B"}"#,
        r#"{"grid": "A?B", "dir": "L"}"#,
        r#"{"grid": "A.B", "dir": "left"}"#,
        r#"{"grid": "", "dir": "L"}"#,
        r#"{"grid": "A", "dir": "L", "extra": 1}"#,
    ] {
        let (s, b) = post_raw(&app, "/api/push", body).await;
        assert_eq!(s, StatusCode::BAD_REQUEST, "{body}");
        let v: Value = serde_json::from_slice(&b).unwrap();
        assert!(v["error"].is_string());
    }
    let (s, _) = post(&app, "/api/verify", json!({"start": "A", "moves": "LQ", "goal": "A"})).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn classify_endpoint() {
    let app = app();
    let (s, r) = post(&app, "/api/classify", json!({"grid": "AB.\nCDE"})).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(
        r,
        json!({"a": 3, "b": 2, "a_full": 2, "b_full": 1, "core_cells": 0, "class": "cyclic", "order": "5"})
    );
    let (s, _) = post(&app, "/api/classify", json!({"grid": "A.\n.B"})).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn solve_results_verify() {
    let app = app();
    let (_, list) = get(&app, "/api/puzzles").await;
    for p in list.as_array().unwrap() {
        let (_, puzzle) = get(&app, &format!("/api/puzzles/{}", p["id"].as_str().unwrap())).await;
        let (s, r) = post(&app, "/api/solve", json!({"start": puzzle["start"], "goal": puzzle["goal"]})).await;
        assert_eq!(s, StatusCode::OK, "{p}");
        if r["solvable"] == true {
            let (_, v) = post(
                &app,
                "/api/verify",
                json!({"start": puzzle["start"], "moves": r["moves"], "goal": puzzle["goal"]}),
            )
            .await;
            assert_eq!(v, json!({"ok": true}), "{p}");
        } else {
            assert!(r["reason"].is_string() && r.get("moves").is_none());
        }
    }
}

#[tokio::test]
async fn solve_reasons_and_invalid_instances() {
    let app = app();
    let (s, r) = post(&app, "/api/solve", json!({"start": "AB..\nCDEF\nGHIJ", "goal": "BA..\nCDEF\nGHIJ"})).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(r, json!({"solvable": false, "reason": "odd_permutation"}));
    let (s, _) = post(&app, "/api/solve", json!({"start": "AB", "goal": "ABC"})).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    let (s, _) = post(&app, "/api/solve", json!({"start": "AB.\nCDE", "goal": "AB.\nCDX"})).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    let (s, r) = post(&app, "/api/solve", json!({"start": "AB", "goal": "AB"})).await;
    assert_eq!((s, r), (StatusCode::OK, json!({"solvable": true, "moves": ""})));
}

#[tokio::test]
async fn slow_solves_are_503() {
    let store = PuzzleStore::default();
    let app = router(Arc::new(AppState {
        store,
        timeout: Duration::from_millis(1),
    }));
    // refuting a 4x4 box takes far longer than a millisecond
    let start = linepush::compaction::counterexample(4, 4).unwrap().format_grid();
    let (s, r) = post(&app, "/api/solve", json!({"start": start, "goal": "####\n####\n####\n####"})).await;
    assert_eq!(s, StatusCode::SERVICE_UNAVAILABLE, "{r}");
}

#[tokio::test]
async fn replies_are_byte_identical_on_replay() {
    let app = app();
    let body = json!({"start": "GO..\nLINE\nPUSH", "goal": "UP..\nSHLI\nNEOG"}).to_string();
    let (s1, b1) = post_raw(&app, "/api/solve", &body).await;
    let (s2, b2) = post_raw(&app, "/api/solve", &body).await;
    assert_eq!((s1, &b1), (s2, &b2));
}

/// What a front end does: replay a move log through /api/push and compare
/// with the goal, and follow a returned solution until it is solved.
#[tokio::test]
async fn move_log_replay_reaches_the_goal() {
    let app = app();
    let (_, puzzle) = get(&app, "/api/puzzles/words").await;
    let (_, r) = post(&app, "/api/solve", json!({"start": puzzle["start"], "goal": puzzle["goal"]})).await;
    let log = r["moves"].as_str().unwrap().to_string();
    let mut grid = puzzle["start"].as_str().unwrap().to_string();
    for d in log.chars() {
        let (_, step) = post(&app, "/api/push", json!({"grid": grid, "dir": d.to_string()})).await;
        grid = step["grid"].as_str().unwrap().to_string();
    }
    let expected = linepush::Configuration::parse_grid(puzzle["start"].as_str().unwrap())
        .unwrap()
        .apply(&log.parse().unwrap())
        .format_grid();
    assert_eq!(grid, expected);
    assert_eq!(grid, puzzle["goal"].as_str().unwrap());
    // a hint from the solved board is empty
    let (_, hint) = post(&app, "/api/solve", json!({"start": grid, "goal": puzzle["goal"]})).await;
    assert_eq!(hint, json!({"solvable": true, "moves": ""}));
}
