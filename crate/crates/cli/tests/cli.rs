//! End-to-end tests of the command-line binary: output formats, exit codes
//! and file round trips.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_percoperm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

#[test]
fn compose_prints_the_published_example() {
    let out = run(&["perm", "compose", "31425", "3", "231"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3156427\n");
}

#[test]
fn separable_and_percolates_agree() {
    let sep = run(&["perm", "separable", "2413"]);
    assert_eq!(stdout(&sep), "false\n");
    let perc = run(&["perm", "percolates", "2413"]);
    assert_eq!(stdout(&perc), "false\n");
    let perc = run(&["perm", "percolates", "12345"]);
    assert_eq!(stdout(&perc), "true\n");
}

#[test]
fn chord_renders_the_cycle() {
    let out = run(&["perm", "chord", "42513"]);
    assert_eq!(stdout(&out), "0→4→2→5→1→3→0\n");
}

#[test]
fn decompose_renders_the_tree() {
    let out = run(&["perm", "decompose", "24513"]);
    assert_eq!(stdout(&out), "2413(1,+(1,1),1,1)\n");
}

#[test]
fn network_text_and_dot() {
    let out = run(&["perm", "network", "2143"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1: + -> v1\n2: v1 -> -\n3: + -> v2\n4: v2 -> -\n"
    );
    let dot = run(&["perm", "network", "2143", "--format", "dot"]);
    let text = stdout(&dot);
    assert!(text.starts_with("digraph sp {"));
    assert!(text.contains("source [label=\"+\"]"));
    // non-separable input is an input error
    let bad = run(&["perm", "network", "3142"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn family_output_round_trips_through_the_parser() {
    let out = run(&["grid", "family", "A", "--m", "2"]);
    assert!(out.status.success());
    let parsed = percoperm::grid::GridConfig::parse_text(&stdout(&out)).expect("parses back");
    assert_eq!(parsed, percoperm::grid::family_a(2).unwrap());
    assert_eq!(parsed.to_text(), stdout(&out));
}

#[test]
fn family_e_members_are_nonpercolating_permutation_grids() {
    for family in ["E", "Eprime"] {
        let out = run(&["grid", "family", family, "--m", "3"]);
        assert!(out.status.success());
        let grid = percoperm::grid::GridConfig::parse_text(&stdout(&out)).expect("parses");
        assert_eq!((grid.rows(), grid.cols()), (6, 6));
        assert_eq!(grid.red_count(), 6);
        assert!(!grid.is_percolating());
    }
    // m = 1 has no valid step
    let bad = run(&["grid", "family", "E", "--m", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn grid_run_reports_percolation_and_traces_steps() {
    let dir = std::env::temp_dir();
    let path = dir.join("percoperm_cli_diag3.grid");
    std::fs::write(&path, "3 3\n#..\n.#.\n..#\n").unwrap();
    let out = run(&["grid", "run", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with("percolating: true\n"));
    assert!(text.contains("###\n###\n###\n"));

    let traced = run(&["grid", "run", path.to_str().unwrap(), "--trace"]);
    let text = stdout(&traced);
    // diagonal of size 3 stabilizes in two productive steps: three grid
    // blocks separated by blank lines
    assert_eq!(text.matches("3 3\n").count(), 3, "trace output: {text}");
    assert!(
        text.contains("..#\n\n3 3"),
        "blocks are blank-line separated"
    );
}

#[test]
fn grid_run_svg_has_one_rect_per_cell() {
    let dir = std::env::temp_dir();
    let path = dir.join("percoperm_cli_row.grid");
    std::fs::write(&path, "1 5\n#.#..\n").unwrap();
    let out = run(&["grid", "run", path.to_str().unwrap(), "--render", "svg"]);
    let text = stdout(&out);
    assert_eq!(text.matches("<rect").count(), 5);
    assert_eq!(text.matches("#d94f4f").count(), 3); // closure fills the gap
    assert_eq!(text.matches("#4f86d9").count(), 2);
    assert!(text.contains("<!-- percolating: false -->"));
}

#[test]
fn minimal_count_values_and_budget() {
    let out = run(&["grid", "minimal-count", "--n", "3"]);
    assert_eq!(stdout(&out), "14\n");
    let out = run(&["grid", "minimal-count", "--n", "4"]);
    assert_eq!(stdout(&out), "130\n");
    let over = run(&["grid", "minimal-count", "--n", "9"]);
    assert_eq!(over.status.code(), Some(3));
}

#[test]
fn operad_simple_counts_row() {
    let out = run(&["operad", "simple-counts", "--max", "10"]);
    assert_eq!(stdout(&out), "1,2,0,2,6,46,338,2926,28146,298526\n");
    let over = run(&["operad", "simple-counts", "--max", "65"]);
    assert_eq!(over.status.code(), Some(3));
}

#[test]
#[ignore = "runs the whole quick acceptance suite through the binary"]
fn verify_quick_is_green() {
    let out = run(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.trim_end().ends_with("18 checks"));
}

#[test]
fn operad_filtration_formats() {
    let row = run(&["operad", "filtration", "--m", "4", "--max-arity", "6"]);
    assert_eq!(stdout(&row), "2,6,24,114,590\n");
    let records = run(&[
        "operad",
        "filtration",
        "--m",
        "3",
        "--max-arity",
        "4",
        "--format",
        "records",
    ]);
    assert_eq!(
        stdout(&records),
        "2\t2\t2\n2\t3\t6\n2\t4\t22\n3\t2\t2\n3\t3\t6\n3\t4\t22\n"
    );
    let table = run(&[
        "operad",
        "filtration",
        "--m",
        "4",
        "--max-arity",
        "5",
        "--format",
        "table",
    ]);
    let text = stdout(&table);
    assert!(text.starts_with("level"));
    assert!(text.contains("P_4"));
}

#[test]
fn operad_generators_listing() {
    let out = run(&["operad", "generators", "--n", "4", "--list"]);
    assert_eq!(stdout(&out), "|G_4| = 2\n2413\n3142\n");
    let over = run(&["operad", "generators", "--n", "11"]);
    assert_eq!(over.status.code(), Some(3));
}

#[test]
fn seq_bfile_format() {
    let out = run(&["seq", "schroeder", "--max", "8"]);
    assert_eq!(stdout(&out), "1 2 6 22 90 394 1806 8558\n");

    let dir = std::env::temp_dir();
    let path = dir.join("percoperm_cli_b.txt");
    let out = run(&[
        "seq",
        "minimal-percolating",
        "--max",
        "4",
        "--bfile",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let bfile = std::fs::read_to_string(&path).unwrap();
    assert_eq!(bfile, "1 1\n2 2\n3 14\n4 130\n");

    let gens = run(&["seq", "generators", "--max", "7"]);
    assert_eq!(stdout(&gens), "2 0 2 6 46 354\n");
    let simple = run(&["seq", "simple", "--max", "8"]);
    assert_eq!(stdout(&simple), "1 2 0 2 6 46 338 2926\n");
}

#[test]
fn malformed_inputs_exit_2() {
    for args in [
        vec!["perm", "separable", "2913"],
        vec!["perm", "compose", "12", "5", "21"],
        vec!["perm", "chord", ""],
        vec!["grid", "run", "/definitely/not/there.grid"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
    // unknown flags are clap errors, also exit 2
    let out = run(&["perm", "separable", "12", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_is_deterministic_apart_from_timing() {
    let a = stdout(&run(&["--json", "perm", "compose", "231", "1", "231"]));
    let b = stdout(&run(&["--json", "perm", "compose", "231", "1", "231"]));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.contains("elapsed_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    assert!(a.contains("\"result\": \"34251\""));
    assert!(a.contains("\"command\": \"perm compose\""));
}
