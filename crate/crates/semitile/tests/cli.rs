//! End-to-end checks of the command-line binary: exit codes, report text,
//! and byte-level determinism of every emitted artifact.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use semitile::{fixture_pinwheel, save_tiling, Rational, Rect, Tiling};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semitile"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_pinwheel(dir: &Path) -> PathBuf {
    let path = dir.join("pinwheel.tiling");
    save_tiling(&fixture_pinwheel(&Rational::one()), &path).unwrap();
    path
}

#[test]
fn prove_pinwheel_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_pinwheel(dir.path());
    let out = run(&["prove", file.to_str().unwrap(), "--check-oracle"]);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("steps: 4"), "{text}");
    assert!(text.contains("final: (0, 0, 3, 3)"), "{text}");
    assert!(
        text.contains("oracle: width_integer=true height_integer=true"),
        "{text}"
    );
}

#[test]
fn validate_reports_overlap_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("overlap.tiling");
    let t = Tiling::from_size(
        Rational::one(),
        Rational::one(),
        vec![
            Rect::from_ints(0, 0, 1, 1).unwrap(),
            Rect::from_ints(0, 0, 1, 1).unwrap(),
        ],
    )
    .unwrap();
    save_tiling(&t, &path).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("Overlap(0, 1)"), "{}", stdout(&out));
}

#[test]
fn generate_then_prove_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("generated.tiling");
    let out = run(&[
        "generate",
        "--seed",
        "7",
        "--tiles",
        "20",
        "--pinwheel",
        "1/4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&["prove", path.to_str().unwrap(), "--check-oracle"]);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["prove"]);
    assert_eq!(code(&out), 2);
    let out = run(&["no-such-command"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_file_exits_1() {
    let out = run(&["validate", "/nonexistent/input.tiling"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn artifacts_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let gen = |name: &str| {
        let path = dir.path().join(name);
        let out = run(&[
            "generate",
            "--seed",
            "11",
            "--tiles",
            "24",
            "--pinwheel",
            "1/3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
        path
    };
    let a = gen("a.tiling");
    let b = gen("b.tiling");
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let trace = |name: &str| {
        let path = dir.path().join(name);
        let out = run(&[
            "prove",
            a.to_str().unwrap(),
            "--trace",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
        std::fs::read(path).unwrap()
    };
    assert_eq!(trace("t1.json"), trace("t2.json"));

    let svg = |name: &str| {
        let path = dir.path().join(name);
        let out = run(&[
            "render",
            a.to_str().unwrap(),
            "--out",
            path.to_str().unwrap(),
            "--scale",
            "30",
        ]);
        assert_eq!(code(&out), 0);
        std::fs::read(path).unwrap()
    };
    assert_eq!(svg("r1.svg"), svg("r2.svg"));
}

#[test]
fn reduce_applies_bounded_steps() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_pinwheel(dir.path());
    let out_path = dir.path().join("reduced.tiling");
    let out = run(&[
        "reduce",
        file.to_str().unwrap(),
        "--steps",
        "2",
        "--explain",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let reduced = semitile::load_tiling(&out_path).unwrap();
    assert_eq!(reduced.len(), 3);
    assert!(
        stdout(&out).contains("step 1: block surgery"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn oracle_subcommand_emits_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_pinwheel(dir.path());
    let out = run(&["oracle", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["width_integer"], true);
    assert_eq!(json["height_integer"], true);
    assert_eq!(json["tile_imbalance_sum"], "0");
}

#[test]
fn predicate_flag_accepts_half_integers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("halves.tiling");
    let half = |n: i64| Rational::new(n, 2).unwrap();
    let t = Tiling::from_size(
        Rational::one(),
        Rational::one(),
        vec![
            Rect::new(half(0), half(0), half(1), half(1)).unwrap(),
            Rect::new(half(1), half(0), half(2), half(1)).unwrap(),
            Rect::new(half(0), half(1), half(2), half(2)).unwrap(),
        ],
    )
    .unwrap();
    save_tiling(&t, &path).unwrap();

    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "quarter tiles have no integer side");

    let out = run(&[
        "validate",
        path.to_str().unwrap(),
        "--predicate",
        "multiple:1/2",
    ]);
    assert_eq!(code(&out), 0);

    let out = run(&[
        "prove",
        path.to_str().unwrap(),
        "--check-oracle",
        "--predicate",
        "multiple:1/2",
    ]);
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
