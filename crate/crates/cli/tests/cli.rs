use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hccrystal"))
        .args(args)
        .env_remove("CRYSTAL_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn crystal_text_small_graph() {
    let o = run(&[
        "crystal",
        "--e",
        "3",
        "--charge",
        "0,0",
        "--max-rank",
        "3",
        "--format",
        "text",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("vertices: 18  edges: 16"), "{text}");
    assert!(text.contains("rank 1 (2): -.1 1.-"));
    assert!(text.contains("  -.1 -2-> -.1^2\n"));
}

#[test]
fn crystal_rank_zero_is_one_vertex() {
    let o = run(&[
        "crystal",
        "--e",
        "3",
        "--charge",
        "0,0",
        "--max-rank",
        "0",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("\"-.-\""));
    assert!(!text.contains("\"-.1\""));
}

#[test]
fn crystal_component_of_empty() {
    let o = run(&[
        "crystal",
        "--e",
        "3",
        "--charge",
        "-1,0",
        "--max-rank",
        "3",
        "--component",
        "-.-",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("vertices: 13  edges: 12"), "{text}");
    assert!(text.contains("highest weight: -.-\n"));
}

#[test]
fn crystal_component_needs_highest_weight_root() {
    let o = run(&[
        "crystal",
        "--e",
        "3",
        "--charge",
        "0,0",
        "--max-rank",
        "2",
        "--component",
        "-.2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dot_output_is_repeatable_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    for path in [&a, &b] {
        let o = run(&[
            "crystal",
            "--e",
            "5",
            "--charge",
            "1,-2",
            "--max-rank",
            "5",
            "--format",
            "dot",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
    }
    let first = std::fs::read(&a).unwrap();
    assert!(first.starts_with(b"digraph crystal {"));
    assert_eq!(first, std::fs::read(&b).unwrap());
}

#[test]
fn vertex_guard_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hccrystal"))
        .args(["crystal", "--e", "3", "--charge", "0,0", "--max-rank", "5"])
        .env("CRYSTAL_MAX_VERTICES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("above the limit of 10"));
}

#[test]
fn hc_small_ranks() {
    let text = stdout(&run(&["hc", "--e", "3", "--n", "3"]));
    assert!(
        text.contains("predicted cuspidal at this rank: 1^3 2,1\n"),
        "{text}"
    );
    assert!(text.contains("series of 1 (n = 1, t = 1, s = 1, Q = q^3): 3\n"));

    let text = stdout(&run(&["hc", "--e", "3", "--n", "7"]));
    assert!(text.contains("labels assigned: 15\n"));

    let text = stdout(&run(&["hc", "--e", "3", "--n", "0"]));
    assert!(text.contains("series of - "));
    assert!(text.contains("labels assigned: 1\n"));
}

#[test]
fn hc_json() {
    let o = run(&["hc", "--e", "5", "--n", "4", "--format", "json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"series\""));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["hc", "--e", "4", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["hc", "--e", "3", "--n", "3", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["crystal", "--e", "3", "--charge", "0", "--max-rank", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["inspect", "phi", "--t", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["inspect", "phi", "--t", "1", "--bipartition", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn inspect_symbol_worked_example() {
    let o = run(&[
        "inspect",
        "symbol",
        "--bipartition",
        "5^3,4^2.6",
        "--charge",
        "4,0",
        "--e",
        "3",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "⋯ -2 -1 6");
    assert_eq!(lines[2], "⋯ -2 -1 4 5 7 8 9");
    assert!(text.contains("fused partition: 15,14,13,10^3,1\n"));
    assert!(text.contains("(a) at 9: 5^2,4^2.8,6 at (3, 1)\n"));
    assert!(text.contains("terminal: -.- at (2, 2), fused partition 1\n"));
}

#[test]
fn inspect_hw_and_phi() {
    let text = stdout(&run(&[
        "inspect",
        "hw",
        "--bipartition",
        "-.1^2",
        "--charge",
        "-1,0",
        "--e",
        "3",
    ]));
    assert!(
        text.starts_with("highest weight: yes (both criteria agree)\n"),
        "{text}"
    );
    let text = stdout(&run(&[
        "inspect",
        "hw",
        "--bipartition",
        "-.1",
        "--charge",
        "-1,0",
        "--e",
        "3",
    ]));
    assert!(
        text.starts_with("highest weight: no (both criteria agree)\n"),
        "{text}"
    );
    assert_eq!(
        stdout(&run(&[
            "inspect",
            "phi",
            "--t",
            "0",
            "--bipartition",
            "-.-"
        ])),
        "-\n"
    );
    assert_eq!(
        stdout(&run(&[
            "inspect",
            "phi",
            "--t",
            "5",
            "--bipartition",
            "5^3,4^2.6"
        ])),
        "15,14,13,10^3,1\n"
    );
}

#[test]
fn inspect_ecore_and_abacus() {
    let text = stdout(&run(&[
        "inspect",
        "ecore",
        "--partition",
        "15,14,13,10^3,1",
        "--e",
        "3",
    ]));
    assert!(text.contains("3-core: 1\n"), "{text}");
    assert!(text.contains("3-weight: 24\n"));
    assert!(text.contains("staircase of side 1"));
    let text = stdout(&run(&["inspect", "abacus", "--partition", "3,1"]));
    assert!(text.contains("barred 2-quotient -.2"), "{text}");
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "worked-example"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS worked-example"));
    assert_eq!(
        run(&["verify", "steinberg", "--e", "3,5,7", "--max-m", "25"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["verify", "tables", "--e", "3"]).status.code(),
        Some(0)
    );
    let o = run(&["verify", "all-ops"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample:"));
}
