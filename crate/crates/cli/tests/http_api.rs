use std::collections::BTreeMap;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use indicolor::format::parse_matroid;
use indicolor::game::{GameState, Mode, Round};
use indicolor::session::SessionStore;
use indicolor::union::Palette;
use indicolor_cli::server::router;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tower::ServiceExt;

const K4: &str = "graphic 4 6\n0 2\n2 1\n0 3\n3 1\n0 1\n2 3\n";

fn app() -> Router {
    router(Arc::new(SessionStore::new()))
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<String>) -> (StatusCode, Value) {
    let request = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, Body::from))
        .unwrap();
    let response = app.clone().oneshot(request).await.unwrap();
    let status = response.status();
    let bytes = response.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes)
            .unwrap_or_else(|_| Value::String(String::from_utf8_lossy(&bytes).into()))
    };
    (status, value)
}

async fn create(app: &Router, matroid: &str, colors: usize, mode: &str) -> u64 {
    let body = json!({"matroid": matroid, "colors": colors, "mode": mode, "human_role": "bob"});
    let (status, value) = call(app, "POST", "/games", Some(body.to_string())).await;
    assert_eq!(status, StatusCode::CREATED, "{value}");
    value["id"].as_u64().unwrap()
}

async fn mv(app: &Router, id: u64, body: Value) -> (StatusCode, Value) {
    call(
        app,
        "POST",
        &format!("/games/{id}/move"),
        Some(body.to_string()),
    )
    .await
}

#[tokio::test]
async fn u12_playthrough() {
    let app = app();
    let id = create(&app, "uniform 2 1", 2, "classic").await;
    let (status, view) = call(&app, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(
        view,
        json!({
            "uncolored": [0, 1], "coloring": {}, "indicated": 0, "legal_colors": [1, 2],
            "awaiting": "human_color", "winner": null, "rounds": []
        })
    );

    let (status, view) = mv(&app, id, json!({"color": 1})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(view["indicated"], 1);
    assert_eq!(view["legal_colors"], json!([2]));

    let (status, body) = mv(&app, id, json!({"color": 1})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["legal_colors"], json!([2]));

    let (status, view) = mv(&app, id, json!({"color": 2})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(view["winner"], "alice");

    let (_, view) = call(&app, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(view["awaiting"], "finished");
    assert_eq!(view["coloring"], json!({"0": 1, "1": 2}));
    assert_eq!(
        view["rounds"][1],
        json!({"round": 2, "indicator": "alice", "element": 1, "colorist": "bob", "color": 2})
    );

    let (status, _) = mv(&app, id, json!({"color": 1})).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn error_statuses() {
    let app = app();
    assert_eq!(
        call(&app, "GET", "/games/42", None).await.0,
        StatusCode::NOT_FOUND
    );
    assert_eq!(
        mv(&app, 42, json!({"color": 1})).await.0,
        StatusCode::NOT_FOUND
    );

    for body in [
        "not json".to_string(),
        json!({"matroid": "uniform 2", "colors": 2, "mode": "classic", "human_role": "bob"})
            .to_string(),
        json!({"matroid": "uniform 2 1", "colors": 2, "mode": "sideways", "human_role": "bob"})
            .to_string(),
        json!({"matroid": "uniform 2 1", "colors": 2, "mode": "classic", "human_role": "alice"})
            .to_string(),
        json!({"matroid": "uniform 2 1", "colors": 0, "mode": "classic", "human_role": "bob"})
            .to_string(),
        json!({"colors": 2, "mode": "classic"}).to_string(),
    ] {
        let (status, value) = call(&app, "POST", "/games", Some(body.clone())).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{body}");
        assert!(value["error"].is_string());
    }

    let id = create(&app, "uniform 2 1", 2, "classic").await;
    for body in [
        "{}",
        "{\"color\": 1, \"kind\": 1}",
        "{\"colour\": 1}",
        "[1]",
        "{\"color\": -1}",
    ] {
        let (status, _) = call(
            &app,
            "POST",
            &format!("/games/{id}/move"),
            Some(body.into()),
        )
        .await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{body}");
    }
    let (status, body) = mv(&app, id, json!({"kind": 1})).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert!(body["error"].as_str().unwrap().contains("out of turn"));
    let (status, _) = mv(&app, id, json!({"element": 1})).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn modified_flow() {
    let app = app();
    let id = create(&app, K4, 2, "modified").await;
    let (_, view) = call(&app, "GET", &format!("/games/{id}"), None).await;
    assert_eq!(view["awaiting"], "human_kind");
    assert_eq!(view["indicated"], Value::Null);

    let (status, body) = mv(&app, id, json!({"kind": 3})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["legal_kinds"], json!([1, 2]));

    let (_, view) = mv(&app, id, json!({"kind": 2})).await;
    assert_eq!(view["awaiting"], "human_indication");
    let (status, body) = mv(&app, id, json!({"element": 6})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["legal_elements"], json!([0, 1, 2, 3, 4, 5]));

    let (_, view) = mv(&app, id, json!({"element": 5})).await;
    assert_eq!(view["rounds"][0]["colorist"], "alice");
    assert_eq!(view["awaiting"], "human_kind");
}

fn check_view(view: &Value, palette: &Palette, mode: Mode) {
    // The reported rounds replay through a fresh referee to the reported coloring.
    let rounds: Vec<Round> = serde_json::from_value(view["rounds"].clone()).unwrap();
    let mut state = GameState::new(palette.clone(), mode).unwrap();
    for round in &rounds {
        state.apply_round(round).unwrap();
    }
    state.check_invariants().unwrap();
    let coloring: BTreeMap<String, usize> =
        serde_json::from_value(view["coloring"].clone()).unwrap();
    let replayed: BTreeMap<String, usize> = state
        .colored()
        .iter()
        .map(|e| (e.to_string(), state.color_of(e).unwrap()))
        .collect();
    assert_eq!(coloring, replayed);
    let uncolored: Vec<usize> = serde_json::from_value(view["uncolored"].clone()).unwrap();
    assert_eq!(uncolored, state.uncolored().to_vec());
    if view["awaiting"] == "finished" {
        assert!(!view["winner"].is_null());
    } else {
        assert!(view["winner"].is_null());
    }
}

#[tokio::test]
async fn fuzzed_request_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let instances = [
        ("uniform 2 1", 2),
        ("uniform 4 2", 2),
        (K4, 2),
        (K4, 1),
        ("partition 4 2\n1 0 1\n1 2 3\n", 2),
        ("linear 2 2 3\n1 0 1\n0 1 1\n", 2),
    ];
    let app = app();
    for game in 0..60 {
        let (text, colors) = instances[game % instances.len()];
        let mode = if rng.gen_bool(0.5) {
            Mode::Modified
        } else {
            Mode::Classic
        };
        let mode_name = if mode == Mode::Modified {
            "modified"
        } else {
            "classic"
        };
        let palette = Palette::copies(&parse_matroid(text).unwrap(), colors);
        let id = create(&app, text, colors, mode_name).await;
        for _ in 0..40 {
            let body = match rng.gen_range(0..3) {
                0 => json!({"color": rng.gen_range(0..=colors + 1)}),
                1 => json!({"element": rng.gen_range(0..8)}),
                _ => json!({"kind": rng.gen_range(0..4)}),
            };
            let (status, _) = mv(&app, id, body).await;
            assert!(
                [
                    StatusCode::OK,
                    StatusCode::BAD_REQUEST,
                    StatusCode::CONFLICT
                ]
                .contains(&status),
                "{status}"
            );
            let (_, view) = call(&app, "GET", &format!("/games/{id}"), None).await;
            check_view(&view, &palette, mode);
        }
        // Finish with legal moves only; Alice wins whenever colors suffice.
        loop {
            let (_, view) = call(&app, "GET", &format!("/games/{id}"), None).await;
            let body = match view["awaiting"].as_str().unwrap() {
                "finished" => {
                    let expected = if colors >= 2 { "alice" } else { "bob" };
                    assert_eq!(view["winner"], expected, "{text} k={colors} {mode_name}");
                    break;
                }
                "human_kind" => json!({"kind": rng.gen_range(1..=2)}),
                "human_indication" => {
                    let uncolored: Vec<u64> =
                        serde_json::from_value(view["uncolored"].clone()).unwrap();
                    json!({"element": uncolored.choose(&mut rng).unwrap()})
                }
                _ => {
                    let legal: Vec<u64> =
                        serde_json::from_value(view["legal_colors"].clone()).unwrap();
                    json!({"color": legal.choose(&mut rng).unwrap()})
                }
            };
            let (status, view) = mv(&app, id, body).await;
            assert_eq!(status, StatusCode::OK, "{view}");
            check_view(&view, &palette, mode);
        }
    }
}

#[tokio::test]
async fn games_are_independent() {
    let app = app();
    let a = create(&app, "uniform 2 1", 2, "classic").await;
    let b = create(&app, "uniform 2 1", 2, "classic").await;
    mv(&app, a, json!({"color": 2})).await;
    let (_, view) = call(&app, "GET", &format!("/games/{b}"), None).await;
    assert_eq!(view["rounds"], json!([]));
}
