#![no_main]

use std::sync::{Arc, OnceLock};
use std::time::Duration;

use axum::body::Body;
use axum::http::Request;
use axum::Router;
use libfuzzer_sys::fuzz_target;
use linepush_cli::api::{router, AppState};
use linepush_cli::store::PuzzleStore;
use tower::ServiceExt;

const ROUTES: [&str; 4] = ["/api/push", "/api/classify", "/api/solve", "/api/verify"];

fn app() -> &'static (tokio::runtime::Runtime, Router) {
    static APP: OnceLock<(tokio::runtime::Runtime, Router)> = OnceLock::new();
    APP.get_or_init(|| {
        let rt = tokio::runtime::Builder::new_current_thread().enable_all().build().unwrap();
        let app = router(Arc::new(AppState {
            store: PuzzleStore::default(),
            timeout: Duration::from_millis(50),
        }));
        (rt, app)
    })
}

// first byte picks the route, the rest is the body
fuzz_target!(|data: &[u8]| {
    let Some((&pick, body)) = data.split_first() else { return };
    if body.len() > 256 {
        return;
    }
    let (rt, app) = app();
    let req = Request::post(ROUTES[pick as usize % ROUTES.len()])
        .header("content-type", "application/json")
        .body(Body::from(body.to_vec()))
        .unwrap();
    let res = rt.block_on(app.clone().oneshot(req)).unwrap();
    assert!(res.status().as_u16() != 500, "internal error on {:?}", String::from_utf8_lossy(body));
});
