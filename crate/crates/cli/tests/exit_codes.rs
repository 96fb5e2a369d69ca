use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use indicolor::format::parse_matroid;
use indicolor::transcript::Transcript;
use indicolor::union::Palette;

fn matroid(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "matroids", name]
        .iter()
        .collect();
    path.to_str().unwrap().to_owned()
}

fn indicolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indicolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn replay_checked(out: &Output, file: &str, colors: usize) -> Transcript {
    let transcript = Transcript::from_json(&stdout(out)).unwrap();
    let text = std::fs::read_to_string(matroid(file)).unwrap();
    let palette = Palette::copies(&parse_matroid(&text).unwrap(), colors);
    transcript.replay(&palette).unwrap();
    transcript
}

#[test]
fn chromatic_values() {
    // Uniform values follow from ceil(n / r); the graphs from ceil(m / (n - 1)),
    // which equals arboricity for these dense graphs.
    for (file, chi) in [
        ("u13.txt", "3"),
        ("u24.txt", "2"),
        ("k4.txt", "2"),
        ("k5.txt", "3"),
        ("k33.txt", "2"),
    ] {
        let out = indicolor(&["chromatic", &matroid(file)]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert_eq!(stdout(&out), format!("{chi}\n"), "{file}");
    }
}

#[test]
fn chromatic_errors_exit_2() {
    let out = indicolor(&["chromatic", &matroid("loops.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loops"));

    let dir = std::env::temp_dir().join(format!("indicolor-bad-{}", std::process::id()));
    std::fs::write(&dir, "graphic 3 1\n0 7\n").unwrap();
    let out = indicolor(&["chromatic", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(
        indicolor(&["chromatic", "/nonexistent/file"]).status.code(),
        Some(2)
    );
}

#[test]
fn first_fit_bob_loses_on_u12() {
    let out = indicolor(&[
        "play",
        "--matroid",
        &matroid("u12.txt"),
        "--colors",
        "2",
        "--bob",
        "first-fit",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let t = replay_checked(&out, "u12.txt", 2);
    assert_eq!(t.winner.as_str(), "alice");
    assert_eq!(t.rounds.len(), 2);
}

#[test]
fn naive_alice_loses_on_k4() {
    let out = indicolor(&[
        "play",
        "--matroid",
        &matroid("k4.txt"),
        "--colors",
        "2",
        "--alice",
        "naive",
        "--bob",
        "adversarial",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let t = replay_checked(&out, "k4.txt", 2);
    assert_eq!(t.winner.as_str(), "bob");
}

#[test]
fn engine_beats_adversary_on_k4() {
    for modified in [false, true] {
        let mut args = vec![
            "play",
            "--matroid",
            &matroid("k4.txt"),
            "--colors",
            "2",
            "--bob",
            "adversarial",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        if modified {
            args.push("--modified".into());
        }
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = indicolor(&args);
        assert_eq!(out.status.code(), Some(0), "modified = {modified}");
        assert_eq!(replay_checked(&out, "k4.txt", 2).rounds.len(), 6);
    }
}

#[test]
fn seeded_games_are_identical() {
    let args = [
        "play",
        "--matroid",
        &matroid("k4.txt"),
        "--colors",
        "2",
        "--bob",
        "random",
        "--seed",
        "7",
    ];
    let first = indicolor(&args);
    let second = indicolor(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn transcript_file_matches_stdout() {
    let path =
        std::env::temp_dir().join(format!("indicolor-transcript-{}.json", std::process::id()));
    let out = indicolor(&[
        "play",
        "--matroid",
        &matroid("k5.txt"),
        "--colors",
        "3",
        "--seed",
        "3",
        "--transcript",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, out.stdout);
}

#[test]
fn too_few_colors_loses() {
    let out = indicolor(&["play", "--matroid", &matroid("u12.txt"), "--colors", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn generalized_palette() {
    let out = indicolor(&[
        "play",
        "--matroids",
        &matroid("pair_01.txt"),
        &matroid("pair_23.txt"),
        "--bob",
        "adversarial",
        "--modified",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = indicolor(&[
        "play",
        "--matroids",
        &matroid("pair_01.txt"),
        "--matroids",
        &matroid("pair_23.txt"),
        "--bob",
        "first-fit",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // Different ground sets cannot share a game.
    let out = indicolor(&[
        "play",
        "--matroids",
        &matroid("pair_01.txt"),
        &matroid("k4.txt"),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_flag_combinations_exit_2() {
    let k4 = matroid("k4.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec!["play", "--matroid", &k4],
        vec!["play", "--colors", "2"],
        vec!["play", "--matroid", &k4, "--colors", "2", "--matroids", &k4],
        vec!["play", "--matroids", &k4, "--colors", "2"],
        vec!["play", "--matroid", &k4, "--colors", "2", "--bob", "clever"],
        vec!["play", "--matroid", &k4, "--colors", "-1"],
        vec!["solve", "--matroid", &k4],
        vec!["frobnicate"],
        vec![],
    ];
    for args in cases {
        assert_eq!(indicolor(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solve_answers() {
    for (file, k, modified, winner) in [
        ("u12.txt", "1", false, "bob"),
        ("u12.txt", "2", false, "alice"),
        ("k4.txt", "2", false, "alice"),
        ("k4.txt", "1", false, "bob"),
        ("k4.txt", "2", true, "alice"),
        ("two_pairs.txt", "2", true, "alice"),
    ] {
        let path = matroid(file);
        let mut args = vec!["solve", "--matroid", &path, "--colors", k];
        if modified {
            args.push("--modified");
        }
        let out = indicolor(&args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), format!("{winner}\n"), "{args:?}");
    }
}

#[test]
fn solve_refuses_large_instances() {
    let out = indicolor(&[
        "solve",
        "--matroid",
        &matroid("petersen.txt"),
        "--colors",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

fn human(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_indicolor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn human_bob_on_u12() {
    let u12 = matroid("u12.txt");
    let out = human(
        &["play", "--matroid", &u12, "--colors", "2", "--bob", "human"],
        "banana\n2\n2\n1\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let log = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(log.contains("uncolored: 0 1"));
    assert!(log.contains("indicated: 0"));
    assert!(log.contains("legal colors: 1 2"));
    assert!(log.contains("\"banana\" is not one of: 1 2"));
    assert!(log.contains("\"2\" is not one of: 1"));
    let t = replay_checked(&out, "u12.txt", 2);
    assert_eq!(t.rounds[0].color, 2);

    let out = human(
        &["play", "--matroid", &u12, "--colors", "2", "--bob", "human"],
        "1\n",
    );
    assert_eq!(out.status.code(), Some(2), "input ends mid-game");
}

#[test]
fn human_bob_modified() {
    let u12 = matroid("u12.txt");
    // Bob indicates element 1 and Alice colors it; then Bob colors element 0
    // with whichever color remains.
    let out = human(
        &[
            "play",
            "--matroid",
            &u12,
            "--colors",
            "2",
            "--bob",
            "human",
            "--modified",
        ],
        "3\n2\n1\n1\n1\n2\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let log = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(log.contains("\"3\" is not one of: 1 2"));
    let t = replay_checked(&out, "u12.txt", 2);
    assert_eq!(t.rounds[0].indicator.as_str(), "bob");
    assert_eq!(t.rounds[1].indicator.as_str(), "alice");
}
