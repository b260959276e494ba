use std::fs;
use std::io;
use std::path::Path;
use std::process::{Command, Output};

use cliquekern::io::save_matrix;
use cliquekern::{generate, DominanceRule, GenSpec, Graph};
use cliquekern_cli::{
    read_csv, run_graph, run_single, run_suite_sizes, RunOptions, SingleSpec, SuiteError,
    CSV_HEADER,
};

fn dominate(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dominate"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn opts() -> RunOptions {
    RunOptions {
        workers: 3,
        oracle_check: true,
        ..RunOptions::default()
    }
}

#[test]
fn generated_single_run_writes_six_records() {
    let dir = tempfile::tempdir().unwrap();
    let out = dominate(
        dir.path(),
        &[
            "40",
            "300",
            "--workers",
            "2",
            "--oracle-check",
            "--output",
            "r.csv",
        ],
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let records = read_csv(fs::File::open(dir.path().join("r.csv")).unwrap()).unwrap();
    assert_eq!(records.len(), 6);
    assert!(records
        .iter()
        .all(|r| r.vertex_count == 40 && r.edge_count == 300));
    let labels: Vec<&str> = records.iter().map(|r| r.process_type.as_str()).collect();
    assert_eq!(
        labels,
        [
            "SERIAL EdgeDom v1",
            "PARALLEL EdgeDom v1",
            "SERIAL DOM. ALG-1",
            "PARALLEL DOM. ALG-1",
            "SERIAL DOM. ALG-2",
            "PARALLEL DOM. ALG-2"
        ]
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("Process-Type"));
    assert!(stdout.contains("Amdahl bound"));
}

#[test]
fn complete_graph_file_has_nothing_to_delete() {
    let dir = tempfile::tempdir().unwrap();
    save_matrix(&Graph::complete(5), dir.path().join("k5.txt")).unwrap();
    let out = dominate(dir.path(), &["5", "k5.txt", "--output", "r.csv"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let records = read_csv(fs::File::open(dir.path().join("r.csv")).unwrap()).unwrap();
    assert_eq!(records.len(), 6);
    for r in records {
        assert_eq!(
            (r.deleted_edges, r.deleted_vertices),
            (0, 0),
            "{}",
            r.process_type
        );
        assert_eq!(r.edge_count, 10);
    }
}

#[test]
fn dimension_mismatch_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    save_matrix(&Graph::complete(4), dir.path().join("k4.txt")).unwrap();
    let out = dominate(dir.path(), &["5", "k4.txt"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("declared 5 vertices but the file holds 4"),
        "{err}"
    );
    assert!(!dir.path().join("data").exists());

    let spec = SingleSpec::File {
        n: 5,
        path: dir.path().join("k4.txt"),
    };
    assert!(matches!(
        run_single(&spec, None, &opts(), io::sink()),
        Err(SuiteError::DimensionMismatch {
            declared: 5,
            actual: 4,
            ..
        })
    ));
}

#[test]
fn malformed_arguments_print_usage() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["x", "10"][..],
        &["10", "-3"],
        &["10"],
        &["10", "missing.txt"],
        &["--workers", "0"],
    ] {
        let out = dominate(dir.path(), args);
        assert!(!out.status.success(), "{args:?} accepted");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
}

#[test]
fn infeasible_edge_count_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = dominate(dir.path(), &["5", "11"]);
    assert!(!out.status.success());
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn unreadable_input_names_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in");
    fs::create_dir(&input).unwrap();
    fs::write(input.join("bad.txt"), "0\n1\n0\n0\n").unwrap();
    let err =
        run_suite_sizes(&input, &dir.path().join("r.csv"), &[], &opts(), io::sink()).unwrap_err();
    assert!(err.to_string().contains("bad.txt"), "{err}");
}

#[test]
fn suite_generates_when_empty_and_overwrites_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("input");
    let output = dir.path().join("nested").join("result_.csv");
    fs::create_dir_all(output.parent().unwrap()).unwrap();
    fs::write(&output, "stale\n").unwrap();

    let records = run_suite_sizes(&input, &output, &[12, 20], &opts(), io::sink()).unwrap();
    assert_eq!(records.len(), 12);
    assert!(input.join("graph_0012.txt").exists());
    assert!(input.join("graph_0020.txt").exists());
    let text = fs::read_to_string(&output).unwrap();
    assert_eq!(text.lines().next(), Some(CSV_HEADER));
    assert_eq!(read_csv(text.as_bytes()).unwrap(), records);

    // Second run reuses the saved graphs.
    let again = run_suite_sizes(&input, &output, &[999], &opts(), io::sink()).unwrap();
    assert_eq!(again.len(), 12);
    for (a, b) in records.iter().zip(&again) {
        assert_eq!(
            (
                a.vertex_count,
                a.edge_count,
                a.deleted_edges,
                a.deleted_vertices
            ),
            (
                b.vertex_count,
                b.edge_count,
                b.deleted_edges,
                b.deleted_vertices
            )
        );
    }
}

#[test]
fn records_match_kernels_and_runs_are_independent() {
    let g = generate(GenSpec::with_default_edges(25, 3).unwrap()).unwrap();
    let before = g.clone();
    let runs = run_graph(&g, &opts()).unwrap();
    assert_eq!(g, before);
    for run in &runs {
        assert_eq!(
            run.record.edge_count - run.record.deleted_edges,
            run.kernel.edge_count()
        );
        assert_eq!(
            run.record.vertex_count - run.record.deleted_vertices,
            run.kernel.active_count()
        );
        assert!(run.record.duration >= 0.0);
    }
    let vertex: Vec<_> = runs
        .iter()
        .filter(|r| r.rule == DominanceRule::VertexDom)
        .collect();
    assert_eq!(vertex[0].kernel, vertex[1].kernel);
}

#[test]
fn rule_selection() {
    let dir = tempfile::tempdir().unwrap();
    let out = dominate(
        dir.path(),
        &["20", "60", "--rules", "vertex,shared", "--output", "r.csv"],
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let records = read_csv(fs::File::open(dir.path().join("r.csv")).unwrap()).unwrap();
    assert_eq!(records.len(), 4);
    assert_eq!(records[0].process_type, "SERIAL DOM. ALG-1");

    let out = dominate(dir.path(), &["20", "60", "--rules", "bogus"]);
    assert!(!out.status.success());
}
