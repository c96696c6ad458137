//! CLI behaviors beyond the golden files: notices, --out, --plain,
//! tolerance overrides, determinism and report self-consistency.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_barymetric"))
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

/// Parses the leading JSON document; `gram` and `embed` append a CSV
/// payload after it when no `--out` file is given.
fn json(out: &Output) -> serde_json::Value {
    let text = stdout(out);
    let mut stream = serde_json::Deserializer::from_str(&text).into_iter();
    stream
        .next()
        .expect("stdout starts with a JSON document")
        .expect("leading JSON parses")
}

#[test]
fn auto_normalization_is_noticed_on_stderr_and_in_the_report() {
    let out = run(&[
        "dist",
        "--matrix",
        &fixture("pythagorean.csv"),
        "--p",
        "2,0,0",
        "--q",
        "0,1,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("notice: --p auto-normalized (weight sum 2)"));
    assert!(stderr(&out).contains("notice: --q auto-normalized (weight sum 2)"));
    let doc = json(&out);
    let notices = doc["notices"].as_array().unwrap();
    assert_eq!(notices.len(), 2);
    assert_eq!(doc["result"]["squared_distance"].as_f64().unwrap(), 6.25);
}

#[test]
fn normalized_input_produces_no_notice() {
    let out = run(&[
        "dist",
        "--matrix",
        &fixture("pythagorean.csv"),
        "--p",
        "1,0,0",
        "--q",
        "0,0.5,0.5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).is_empty());
    assert!(json(&out).get("notices").is_none());
}

#[test]
fn rational_entries_parse_in_files_and_flags() {
    let out = run(&[
        "dist",
        "--matrix",
        &fixture("rational.csv"),
        "--p",
        "1/3,1/3,1/3",
        "--q",
        "1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let got = json(&out)["result"]["squared_distance"].as_f64().unwrap();
    // Half-unit equilateral triangle: centroid to vertex squared is 1/6.
    assert!((got - 1.0 / 6.0).abs() <= 1e-12, "got {got}");
}

#[test]
fn out_flag_moves_the_csv_payload_into_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gram.csv");
    let out = run(&[
        "gram",
        "--matrix",
        &fixture("equilateral.csv"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(
        doc["result"]["csv_path"].as_str().unwrap(),
        path.to_str().unwrap()
    );
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 3);
    let first: f64 = csv.split([',', '\n']).next().unwrap().parse().unwrap();
    assert!((first - 1.0 / 3.0).abs() <= 1e-15);
}

#[test]
fn embed_coordinates_written_to_out_reproduce_the_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.csv");
    let out = run(&[
        "embed",
        "--matrix",
        &fixture("pythagorean.csv"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let points: Vec<Vec<f64>> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(|t| t.parse().unwrap()).collect())
        .collect();
    assert_eq!(points.len(), 3);
    let sq =
        |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum() };
    assert!((sq(&points[0], &points[1]) - 9.0).abs() <= 1e-8);
    assert!((sq(&points[0], &points[2]) - 16.0).abs() <= 1e-8);
    assert!((sq(&points[1], &points[2]) - 25.0).abs() <= 1e-8);
}

#[test]
fn plain_mode_prints_a_summary_instead_of_json() {
    let out = run(&["check-sturm", "--matrix", &fixture("tripod.csv"), "--plain"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("satisfied: false\n"));
    assert!(text.contains("vertex 1: fail"));
    assert!(text.contains("witness: -3,1,1,1"));
    assert!(text.contains("witness value: 6"));
    assert!(!text.contains('{'));
}

#[test]
fn json_and_plain_flags_conflict() {
    let out = run(&[
        "gram",
        "--matrix",
        &fixture("equilateral.csv"),
        "--json",
        "--plain",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn loose_tolerance_admits_a_slightly_asymmetric_matrix() {
    let strict = run(&["gram", "--matrix", &fixture("asymmetric.csv")]);
    assert_eq!(strict.status.code(), Some(3));
    let loose = run(&["gram", "--matrix", &fixture("asymmetric.csv"), "--tol", "1"]);
    assert_eq!(loose.status.code(), Some(0));
    assert_eq!(json(&loose)["tolerances"]["tol"].as_f64().unwrap(), 1.0);
}

#[test]
fn reported_witness_certifies_the_rejection_by_direct_evaluation() {
    let out = run(&["check-euclidean", "--matrix", &fixture("four_cycle.csv")]);
    let doc = json(&out);
    assert!(!doc["result"]["embeddable"].as_bool().unwrap());
    let witness: Vec<f64> = doc["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let rows: Vec<Vec<f64>> = std::fs::read_to_string(fixture("four_cycle.csv"))
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(|t| t.parse().unwrap()).collect())
        .collect();
    let mut value = 0.0;
    for (i, wi) in witness.iter().enumerate() {
        for (j, wj) in witness.iter().enumerate() {
            value += wi * wj * rows[i][j];
        }
    }
    let reported = doc["result"]["witness_value"].as_f64().unwrap();
    assert!((value - reported).abs() <= 1e-12 * value.abs().max(1.0));
    assert!(value > 1e-10);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["check-euclidean", "--matrix", &fixture("four_cycle.csv")];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let sampled = [
        "check-sturm",
        "--matrix",
        &fixture("tripod.csv"),
        "--samples",
        "500",
        "--seed",
        "42",
    ];
    let first = run(&sampled);
    let second = run(&sampled);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn version_field_matches_the_crate() {
    let out = run(&["gram", "--matrix", &fixture("equilateral.csv")]);
    assert_eq!(
        json(&out)["version"].as_str().unwrap(),
        env!("CARGO_PKG_VERSION")
    );
}

#[test]
fn errors_land_on_stderr_with_an_error_prefix() {
    let out = run(&["gram", "--matrix", &fixture("asymmetric.csv")]);
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).starts_with("error: "));
}

#[test]
fn sampling_rejects_zero_samples() {
    let out = run(&[
        "check-sturm",
        "--matrix",
        &fixture("tripod.csv"),
        "--samples",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn digest_pins_the_exact_input_bytes() {
    let out = run(&["gram", "--matrix", &fixture("equilateral.csv")]);
    let digest = json(&out)["input_digest"].as_str().unwrap().to_string();
    assert!(digest.starts_with("sha256:"));
    assert_eq!(digest.len(), "sha256:".len() + 64);
    let relabeled = run(&["gram", "--matrix", &fixture("labeled.csv")]);
    assert_ne!(json(&relabeled)["input_digest"].as_str().unwrap(), digest);
}
