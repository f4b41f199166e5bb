//! End-to-end tests of the `gallai` binary: exit codes, stream handling,
//! and the stability of machine output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gallai(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn intersect_on_the_fixture_reports_empty() {
    let out = gallai(
        &[
            "intersect",
            "--fixture",
            "walther-zamfirescu-12",
            "--format",
            "machine",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.starts_with("graph=0 order=10 count=42 method=enumeration"),
        "got: {text}"
    );
    assert!(
        !text.contains("vertex="),
        "intersection must be empty: {text}"
    );
}

#[test]
fn verify_on_generated_split_graphs_is_all_holds() {
    let gen = gallai(
        &[
            "gen",
            "--class",
            "split",
            "--n",
            "10",
            "--density",
            "0.6",
            "--seed",
            "5",
            "--count",
            "20",
        ],
        "",
    );
    assert_eq!(gen.status.code(), Some(0));
    let graphs = stdout(&gen);
    assert_eq!(graphs.lines().count(), 20);

    let verify = gallai(&["verify", "--format", "machine"], &graphs);
    assert_eq!(verify.status.code(), Some(0));
    let text = stdout(&verify);
    assert_eq!(text.lines().count(), 20);
    for line in text.lines() {
        assert!(line.contains("verdict=holds"), "unexpected line: {line}");
    }
}

#[test]
fn gen_is_deterministic() {
    let args = [
        "gen",
        "--class",
        "cochordal",
        "--n",
        "9",
        "--density",
        "0.4",
        "--seed",
        "7",
        "--count",
        "5",
    ];
    let a = gallai(&args, "");
    let b = gallai(&args, "");
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn hunt_exhaustive_small_order_finds_nothing() {
    let out = gallai(&["hunt", "--exhaustive", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "scanned=772 skipped=0 found=0");
}

#[test]
fn hunt_flags_the_counterexample_with_exit_3() {
    // fixture as graph6, between two ordinary graphs
    let fixture_g6 = {
        let g = gallai_core::fixtures::fixture("walther-zamfirescu-12").unwrap();
        gallai_core::codec::write_graph6(&g)
    };
    // "C`" is the disconnected 2K2, which gets skipped
    let input = format!("D?{{\n{fixture_g6}\nC`\n");
    let out = gallai(&["hunt"], &input);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains(&fixture_g6));
    assert!(
        text.trim_end().ends_with("scanned=2 skipped=1 found=1"),
        "got: {text}"
    );
}

#[test]
fn parse_errors_go_to_stderr_and_exit_2() {
    let out = gallai(&["longest", "--format", "machine"], "D?{\n!!!\nBw\n");
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("graph=0 order=3"));
    assert!(text.contains("graph=2 order=3"));
    assert!(stderr(&out).contains("record 2"));
}

#[test]
fn usage_errors_exit_1() {
    let out = gallai(&["intersect", "--method", "nonsense"], "");
    assert_eq!(out.status.code(), Some(1));
    // conflicting input sources
    let out = gallai(
        &[
            "intersect",
            "--fixture",
            "walther-zamfirescu-12",
            "--input",
            "x.g6",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn machine_output_is_byte_identical_across_runs() {
    let input = "D?{\nDQc\nBw\n";
    let args = ["recognize", "--format", "machine"];
    let a = gallai(&args, input);
    let b = gallai(&args, input);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn dominate_reports_evidence_on_non_2k2_free_input() {
    // P5 is the canonical non-example
    let p5 = gallai_core::codec::write_graph6(&gallai_core::graph::Graph::path_graph(5));
    let out = gallai(&["dominate", "--format", "machine"], &format!("{p5}\n"));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("status=not-2k2-free") && text.contains("witness=0,1,3,4"),
        "got: {text}"
    );
}

#[test]
fn edge_list_input_works() {
    let out = gallai(
        &["longest", "--input-format", "edges", "--format", "machine"],
        "4 3\n0 1\n1 2\n2 3\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "graph=0 order=4 count=-");
}

#[test]
fn method_and_cap_fall_back_to_deletion() {
    let out = gallai(
        &["intersect", "--cap", "2", "--format", "machine"],
        "D~{\n", // K5: 60 longest paths up to reversal
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("method=deletion"), "got: {text}");
    assert!(text.contains("count=-"), "got: {text}");
}
