//! End-to-end checks of the `semiflat` binary: exit codes, output formats,
//! and byte-identical reports across repeated runs and parallelism settings.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semiflat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

static COUNTER: AtomicUsize = AtomicUsize::new(0);

/// Write a workspace file under a unique temp name; the path leaks (temp
/// dir), which keeps failures inspectable.
fn workspace_file(text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!(
        "semiflat-smoke-{}-{}.json",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::write(&path, text).expect("temp workspace written");
    path
}

const BATCH: &str = r#"{
    "semirings": [{"id": "S", "catalog": "zmod:4"}],
    "semimodules": [
        {"id": "I", "base": "S", "side": "left", "construct": "sub{0,2}"},
        {"id": "M", "base": "S", "side": "left", "construct": "self"},
        {"id": "Q", "base": "S", "side": "left", "construct": "self/{0,2}"},
        {"id": "F", "base": "S", "side": "right", "construct": "sub{0,2}"}
    ],
    "morphisms": [
        {"id": "incl", "dom": "I", "cod": "M", "map": [0, 2]},
        {"id": "proj", "dom": "M", "cod": "Q", "map": [0, 1, 0, 1]}
    ],
    "analyses": [
        {"op": "regularity", "semiring": "S"},
        {"op": "flatness", "subject": "F", "target": "M"},
        {"op": "tensor", "left": "F", "right": "I"},
        {"op": "exact-pair", "first": "incl", "second": "proj"},
        {"op": "survey", "semiring": "S", "bound": 3}
    ]
}"#;

#[test]
fn analyze_is_byte_identical_across_runs_and_parallelism() {
    let path = workspace_file(BATCH);
    let ws = path.to_str().unwrap();
    let first = run(&["analyze", "--workspace", ws]);
    let again = run(&["analyze", "--workspace", ws]);
    let sequential = run(&["analyze", "--workspace", ws, "--sequential"]);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert_eq!(stdout(&first), stdout(&again));
    assert_eq!(stdout(&first), stdout(&sequential));

    let structured = run(&["analyze", "--workspace", ws, "--format", "structured"]);
    let structured_seq = run(&[
        "analyze",
        "--workspace",
        ws,
        "--format",
        "structured",
        "--sequential",
    ]);
    assert_eq!(structured.status.code(), Some(0));
    assert_eq!(stdout(&structured), stdout(&structured_seq));
}

#[test]
fn analyze_reports_the_expected_verdicts() {
    let path = workspace_file(BATCH);
    let out = run(&["analyze", "--workspace", path.to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.starts_with("overall: ok\n"), "{text}");
    assert!(text.contains("von Neumann regular: false"), "{text}");
    assert!(text.contains("m-flat: fails at {0,2}"), "{text}");
    assert!(text.contains("classes: 2"), "{text}");
    assert!(text.contains("certified: true"), "{text}");
    assert!(text.contains("exact (proper + k-normal g): true"), "{text}");
    // Every entry names its method and the caps it ran under.
    assert_eq!(text.matches("  method: ").count(), 5, "{text}");
    assert_eq!(text.matches("  caps: tensor_cap=").count(), 5, "{text}");
    // Timings appear only on request.
    assert!(!text.contains("millis:"), "{text}");
    let timed = run(&[
        "analyze",
        "--workspace",
        path.to_str().unwrap(),
        "--timings",
    ]);
    assert!(stdout(&timed).contains("millis:"));
}

#[test]
fn structured_output_carries_the_schema() {
    let path = workspace_file(BATCH);
    let out = run(&[
        "analyze",
        "--workspace",
        path.to_str().unwrap(),
        "--format",
        "structured",
    ]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(value["schema"], "semiflat-report/1");
    assert_eq!(value["overall"], "ok");
    assert_eq!(value["entries"].as_array().unwrap().len(), 5);
    assert_eq!(value["entries"][0]["status"], "ok");
}

#[test]
fn an_empty_analysis_list_yields_an_empty_ok_report() {
    let path = workspace_file(r#"{"semirings": [{"id": "S", "catalog": "boolean"}]}"#);
    let out = run(&["analyze", "--workspace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "overall: ok\n");
}

#[test]
fn one_capped_item_turns_the_batch_inconclusive_without_aborting_it() {
    // 4^9 matrices is over the carrier cap; the regularity entry still runs.
    let out = run(&["regularity", "chain:4", "--matrix", "3"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(3), "{text}");
    assert!(text.starts_with("overall: inconclusive\n"), "{text}");
    assert!(text.contains("von Neumann regular: true"), "{text}");
    assert!(text.contains("out of caps"), "{text}");
}

#[test]
fn validate_summarises_without_running() {
    let path = workspace_file(BATCH);
    let out = run(&["validate", "--workspace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "workspace ok: 1 semirings, 4 semimodules, 2 morphisms, 5 analyses\n"
    );
}

#[test]
fn input_errors_exit_4_with_a_message() {
    // Missing file.
    let out = run(&["analyze", "--workspace", "/nonexistent/ws.json"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("cannot read"), "{}", stderr(&out));

    // Unknown reference.
    let path = workspace_file(
        r#"{
            "semirings": [{"id": "S", "catalog": "boolean"}],
            "analyses": [{"op": "regularity", "semiring": "ghost"}]
        }"#,
    );
    let out = run(&["validate", "--workspace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("unknown reference `ghost`"), "{}", stderr(&out));

    // Bad caps.
    let path = workspace_file(r#"{"caps": {"tensor_cap": -3}}"#);
    let out = run(&["validate", "--workspace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("bad caps"), "{}", stderr(&out));

    // Bad catalog id in a one-off command.
    let out = run(&["regularity", "chain:one"]);
    assert_eq!(out.status.code(), Some(4));

    // Unknown reproduction row.
    let out = run(&["reproduce-paper", "--only", "no-such-row"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("no-such-row"), "{}", stderr(&out));
}

#[test]
fn reproduce_paper_runs_single_rows_deterministically() {
    let first = run(&["reproduce-paper", "--only", "witness-chain"]);
    let sequential = run(&["reproduce-paper", "--only", "witness-chain", "--sequential"]);
    let text = stdout(&first);
    assert_eq!(first.status.code(), Some(0), "{text}");
    assert_eq!(text, stdout(&sequential));
    assert!(text.starts_with("overall: ok\n"), "{text}");
    assert!(text.contains("claim: zmod:4 is subtractive"), "{text}");
    assert!(text.contains("verdict: pass"), "{text}");

    let structured = run(&[
        "reproduce-paper",
        "--only",
        "matrix",
        "--format",
        "structured",
    ]);
    assert_eq!(structured.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_str(&stdout(&structured)).expect("valid JSON");
    assert_eq!(value["entries"][0]["label"], "matrix");
    assert_eq!(value["entries"][0]["status"], "ok");
}

#[test]
fn one_off_flatness_matches_the_workspace_route() {
    let out = run(&["flatness", "zmod:4", "--subject", "sub{0,2}", "--target", "self"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("m-flat: fails at {0,2}"), "{text}");
    assert!(text.contains("routes: m=induced-inclusion"), "{text}");

    // Without a subject the command surveys the census.
    let survey = run(&["flatness", "zmod:4", "--bound", "3"]);
    let text = stdout(&survey);
    assert_eq!(survey.status.code(), Some(0), "{text}");
    assert!(text.contains("survey zmod:4 bound=3"), "{text}");
}

#[test]
fn catalog_list_names_the_standard_semirings() {
    let out = run(&["catalog", "list"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0));
    for name in ["boolean", "chain:3", "chain:4", "truncation:3", "zmod:4", "zmod:6"] {
        assert!(text.contains(name), "missing {name} in {text}");
    }
    assert!(text.contains("sub{0,2}(2)"), "{text}");

    let structured = run(&["catalog", "list", "--format", "structured"]);
    let value: serde_json::Value =
        serde_json::from_str(&stdout(&structured)).expect("valid JSON");
    assert_eq!(value.as_array().unwrap().len(), 6);
}

#[test]
fn caps_flags_propagate_into_reports() {
    let out = run(&["tensor", "zmod:4", "--left", "sub{0,2}", "--right", "sub{0,2}", "--cap", "12"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("caps: tensor_cap=12"), "{text}");

    // A cap too small for the factors turns the entry inconclusive.
    let capped = run(&["tensor", "zmod:4", "--left", "self", "--right", "self", "--cap", "8"]);
    let text = stdout(&capped);
    assert_eq!(capped.status.code(), Some(3), "{text}");
    assert!(text.contains("out of caps"), "{text}");

    let zero = run(&["tensor", "zmod:4", "--cap", "0"]);
    assert_eq!(zero.status.code(), Some(4));
}
