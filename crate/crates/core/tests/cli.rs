use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_topogame"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("topogame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_input(args: &[&str], input: &str) -> Output {
    let mut child = bin()
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

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

const SIERPINSKI: &str = r#"{"n":2,"opens":[[],[0],[0,1]]}"#;
const DISCRETE2: &str = r#"{"n":2,"opens":[[],[0],[1],[0,1]]}"#;
const DISCRETE3: &str = r#"{"n":3,"opens":[[],[0],[1],[2],[0,1],[0,2],[1,2],[0,1,2]]}"#;
const TWO_BLOCK: &str = r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#;

#[test]
fn analyze_reports_structure() {
    let out = run(&["analyze", scratch("s.json", SIERPINSKI).to_str().unwrap()]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["clopens"], 2);
    assert_eq!(v["quasi_components"], 1);
    assert_eq!(v["zero_dimensional"], false);

    let out = run(&["analyze", scratch("d3.json", DISCRETE3).to_str().unwrap()]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["clopens"], 8);
    assert_eq!(v["quasi_components"], 3);
    assert_eq!(v["zero_dimensional"], true);

    let out = run(&["analyze", "enum:n=3"]);
    assert_eq!(json_lines(&out).len(), 29);
}

#[test]
fn malformed_space_exits_two() {
    let out = run(&[
        "analyze",
        scratch("bad.json", r#"{"n":2,"opens":[[],[0],[1]]}"#)
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty set and the full set"));
    assert_eq!(run(&["analyze", "enum:n=x"]).status.code(), Some(2));
    assert_eq!(
        run(&["solve", "enum:n=2", "--game", "nope", "--horizon", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn solve_reports_winners() {
    let tb = scratch("tb.json", TWO_BLOCK);
    let d2 = scratch("d2.json", DISCRETE2);
    for (space, game, k, winner) in [
        (&tb, "mildly-rothberger", "2", "bob"),
        (&tb, "point-clopen", "1", "bob"),
        (&d2, "rothberger", "1", "alice"),
    ] {
        let out = run(&[
            "solve",
            space.to_str().unwrap(),
            "--game",
            game,
            "--horizon",
            k,
        ]);
        assert!(out.status.success());
        let v = &json_lines(&out)[0];
        assert_eq!(v["winner"], winner, "{game}");
        assert_eq!(v["witness"]["player"], winner);
    }
}

#[test]
fn cap_exceeded_exits_three() {
    let out = run(&[
        "solve",
        scratch("d3cap.json", DISCRETE3).to_str().unwrap(),
        "--game",
        "rothberger",
        "--horizon",
        "2",
        "--caps",
        "covers=2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        run(&["check", "b3", "--nmax", "2", "--caps", "depth=0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn check_all_passes_and_is_deterministic() {
    let a = bin()
        .args(["check", "all", "--nmax", "3"])
        .env("TOPOGAME_THREADS", "1")
        .output()
        .unwrap();
    let b = bin()
        .args(["check", "all", "--nmax", "3"])
        .env("TOPOGAME_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines = json_lines(&a);
    assert_eq!(lines.len(), 34 * 6 + 1);
    assert!(lines.iter().all(|l| l["pass"] == true));

    let path = scratch("report.jsonl", "");
    let out = run(&[
        "check",
        "duality",
        "--nmax",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 5);
}

#[test]
fn zerodim_records_a_divergence() {
    let out = run(&["check", "zerodim", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    let summary = lines.last().unwrap();
    assert_eq!(summary["check"], "zerodim-witness");
    assert!(summary["facts"]["divergent_spaces"].as_u64().unwrap() > 0);
}

#[test]
fn check_usage_errors_exit_two() {
    assert_eq!(
        run(&["check", "bogus", "--nmax", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["check", "all"]).status.code(), Some(2));
    let out = bin()
        .args(["check", "b3", "--nmax", "1"])
        .env("TOPOGAME_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn play_sessions() {
    let s = scratch("play-s.json", SIERPINSKI);
    let out = run_with_input(
        &[
            "play",
            s.to_str().unwrap(),
            "--game",
            "mildly-rothberger",
            "--role",
            "bob",
            "--horizon",
            "1",
        ],
        "0\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[0] {0,1}") && text.contains("winner: bob"));

    let d2 = scratch("play-d2.json", DISCRETE2);
    let transcript = scratch("t.json", "");
    let args = [
        "play",
        d2.to_str().unwrap(),
        "--game",
        "point-clopen",
        "--role",
        "alice",
        "--horizon",
        "2",
        "--transcript",
        transcript.to_str().unwrap(),
    ];
    let out = run_with_input(&args, "5\n0\n1\n");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("illegal move") && text.contains("winner: alice"));
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&transcript).unwrap()).unwrap();
    assert_eq!(t["winner"], "alice");
    assert_eq!(t["rounds"].as_array().unwrap().len(), 2);

    let out = run_with_input(&args[..8], "0\n");
    assert_eq!(out.status.code(), Some(130));
}

#[test]
fn translate_solver_witness() {
    let s = scratch("tr-s.json", SIERPINSKI);
    let out = run(&[
        "solve",
        s.to_str().unwrap(),
        "--game",
        "point-clopen",
        "--horizon",
        "1",
    ]);
    let witness = json_lines(&out)[0]["witness"].to_string();
    let strategy = scratch("witness.json", &witness);
    let out = run(&[
        "translate",
        strategy.to_str().unwrap(),
        "--direction",
        "alice-pc-to-qc",
        "--space",
        s.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = &json_lines(&out)[0];
    assert_eq!(report["preserved"], true);
    assert_eq!(report["output_winning"], true);

    let out = run(&[
        "translate",
        strategy.to_str().unwrap(),
        "--direction",
        "bob-pc-to-qc",
        "--space",
        s.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "translate",
        strategy.to_str().unwrap(),
        "--direction",
        "up",
        "--space",
        "enum:n=1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
