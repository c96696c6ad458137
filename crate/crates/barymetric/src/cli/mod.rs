//! Command-line interface.
//!
//! One thin binary dispatches into this module; everything here is library
//! code so the whole surface stays testable. Exit codes follow a fixed
//! discipline:
//!
//! * 0 - success
//! * 1 - internal numerical failure (not expected in normal use)
//! * 2 - input or parse error (unreadable file, malformed number,
//!   non-square matrix, wrong list length)
//! * 3 - invariant violation in the input data (asymmetry, nonzero
//!   diagonal, bad weight sums, strict-mode triangle violations)
//! * 4 - mathematical refusal (`--sqrt` of a negative squared distance)
//! * 5 - instance too large for the exact curvature check

mod input;
mod report;

use crate::coords::{displacement_between, BarycentricCoords, DisplacementVector};
use crate::curvature::{check_sturm, sample_check};
use crate::error::Error;
use crate::metric::{tri_squared_distance, SquaredDistanceMatrix, TriangleEdges};
use crate::spectral::{check_euclidean, gram_from_distances, realize, Signature};
use crate::DEFAULT_TOL;
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{
    join_numbers, matrix_to_csv, points_to_csv, unsign_zero, CheckEuclideanResult,
    CheckSturmResult, DistResult, DotResult, EmbedResult, GramResult, Report, TriResult,
};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "barymetric",
    version,
    about = "Metric geometry on squared-distance matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scalar product of two vectors given in barycentric weights
    Dot(DotArgs),
    /// Squared distance (and optionally the distance) between two points
    Dist(DistArgs),
    /// Double-centered Gram matrix of a squared-distance matrix
    Gram(GramArgs),
    /// Coordinates realizing the matrix in a (pseudo-)Euclidean space
    Embed(EmbedArgs),
    /// Euclidean embeddability certificate with violation witness
    CheckEuclidean(CheckArgs),
    /// One-negative-weight curvature certificate, exact or sampled
    CheckSturm(SturmArgs),
    /// Distance queries inside a triangle given by its edge lengths
    Tri(TriArgs),
}

#[derive(Args)]
struct Common {
    /// Relative tolerance used by validations and zero thresholds
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Emit the JSON report (the default)
    #[arg(long, conflicts_with = "plain")]
    json: bool,
    /// Emit a human-readable summary instead of JSON
    #[arg(long)]
    plain: bool,
}

impl Common {
    fn plain(&self) -> bool {
        self.plain
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// `--u`/`--v` hold zero-sum displacement weights
    Displacement,
    /// `--u`/`--v` each hold two normalized points, "start;end"
    Points,
}

#[derive(Args)]
struct DotArgs {
    /// CSV file with the squared-distance matrix
    #[arg(long)]
    matrix: PathBuf,
    /// First vector (weights, comma-separated; see --mode)
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    /// Second vector
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, value_enum, default_value_t = Mode::Displacement)]
    mode: Mode,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long)]
    matrix: PathBuf,
    /// First point, comma-separated weights (auto-normalized with a notice)
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Second point
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Also report the square root; refused when the squared value is negative
    #[arg(long)]
    sqrt: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct GramArgs {
    #[arg(long)]
    matrix: PathBuf,
    /// Write the CSV payload here instead of appending it to stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    matrix: PathBuf,
    /// Write the coordinate CSV here instead of appending it to stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SturmArgs {
    #[arg(long)]
    matrix: PathBuf,
    /// Switch to the randomized check with this many samples
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    samples: Option<u64>,
    /// Seed for the randomized check
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TriArgs {
    /// Edge lengths l12,l13,l23 (plain lengths, not squared)
    #[arg(long)]
    edges: String,
    /// First point in triangle coordinates (auto-normalized with a notice)
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Second point
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Also report the square root; refused when the squared value is negative
    #[arg(long)]
    sqrt: bool,
    /// Additionally enforce the triangle inequality on the edges
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    common: Common,
}

enum CliError {
    Input(String),
    Data(Error),
    Refusal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refusal(_) => 4,
            CliError::Data(e) => match e {
                Error::InstanceTooLarge { .. } => 5,
                Error::Shape(_) | Error::NoConvergence { .. } => 1,
                _ => 3,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) | CliError::Refusal(m) => m.clone(),
            CliError::Data(e) => e.to_string(),
        }
    }
}

/// Parses arguments, runs the selected command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here as well; they are not errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Dot(args) => cmd_dot(args),
        Command::Dist(args) => cmd_dist(args),
        Command::Gram(args) => cmd_gram(args),
        Command::Embed(args) => cmd_embed(args),
        Command::CheckEuclidean(args) => cmd_check_euclidean(args),
        Command::CheckSturm(args) => cmd_check_sturm(args),
        Command::Tri(args) => cmd_tri(args),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn load_matrix(path: &Path, tol: f64) -> Result<(SquaredDistanceMatrix, String), CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let digest = input::digest(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Input(format!("{} is not valid UTF-8", path.display())))?;
    let matrix = input::parse_matrix_csv(&text).map_err(CliError::Input)?;
    let d = SquaredDistanceMatrix::new(matrix, tol).map_err(CliError::Data)?;
    Ok((d, digest))
}

fn parse_list(flag: &str, text: &str) -> Result<Vec<f64>, CliError> {
    input::parse_number_list(text).map_err(|e| CliError::Input(format!("--{flag}: {e}")))
}

/// Loads a point for `dist`/`tri`: arbitrary nonzero-sum weights accepted,
/// auto-normalized with a notice recorded when the sum is not one.
fn load_point(
    flag: &str,
    text: &str,
    n: usize,
    tol: f64,
    notices: &mut Vec<String>,
) -> Result<BarycentricCoords, CliError> {
    let weights = parse_list(flag, text)?;
    if weights.len() != n {
        return Err(CliError::Input(format!(
            "--{flag}: expected {n} weights, got {}",
            weights.len()
        )));
    }
    let coords = BarycentricCoords::new(weights, tol).map_err(CliError::Data)?;
    if coords.is_normalized() {
        return Ok(coords);
    }
    let sum = coords.sum();
    let notice = format!("--{flag} auto-normalized (weight sum {sum})");
    eprintln!("notice: {notice}");
    notices.push(notice);
    coords.normalize(tol).map_err(CliError::Data)
}

fn emit<T: serde::Serialize>(common: &Common, report: &Report<T>, plain: String) {
    if common.plain() {
        print!("{plain}");
    } else {
        print!("{}", report.to_json());
    }
}

fn cmd_dot(args: DotArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let (d, digest) = load_matrix(&args.matrix, tol)?;
    let n = d.n();
    let (mode_name, u, v) = match args.mode {
        Mode::Displacement => {
            let u = displacement_from_list("u", &args.u, n, tol)?;
            let v = displacement_from_list("v", &args.v, n, tol)?;
            ("displacement", u, v)
        }
        Mode::Points => {
            let u = displacement_from_pair("u", &args.u, n, tol)?;
            let v = displacement_from_pair("v", &args.v, n, tol)?;
            ("points", u, v)
        }
    };
    let value = unsign_zero(d.scalar_product(&u, &v).map_err(CliError::Data)?);
    let report = Report::new(
        "dot",
        digest,
        DotResult {
            mode: mode_name,
            scalar_product: value,
        },
        tol,
    );
    emit(&args.common, &report, format!("scalar product: {value}\n"));
    Ok(())
}

fn displacement_from_list(
    flag: &str,
    text: &str,
    n: usize,
    tol: f64,
) -> Result<DisplacementVector, CliError> {
    let weights = parse_list(flag, text)?;
    if weights.len() != n {
        return Err(CliError::Input(format!(
            "--{flag}: expected {n} weights, got {}",
            weights.len()
        )));
    }
    DisplacementVector::new(weights, tol).map_err(CliError::Data)
}

/// Points mode: "start;end", both normalized coordinate lists.
fn displacement_from_pair(
    flag: &str,
    text: &str,
    n: usize,
    tol: f64,
) -> Result<DisplacementVector, CliError> {
    let Some((start, end)) = text.split_once(';') else {
        return Err(CliError::Input(format!(
            "--{flag}: points mode expects \"start;end\", two comma-separated lists"
        )));
    };
    let mut points = Vec::with_capacity(2);
    for part in [start, end] {
        let weights = parse_list(flag, part)?;
        if weights.len() != n {
            return Err(CliError::Input(format!(
                "--{flag}: expected {n} weights per point, got {}",
                weights.len()
            )));
        }
        points.push(BarycentricCoords::normalized(weights, tol).map_err(CliError::Data)?);
    }
    displacement_between(&points[0], &points[1]).map_err(CliError::Data)
}

fn sqrt_or_refuse(squared: f64, threshold: f64) -> Result<f64, CliError> {
    if squared >= -threshold {
        Ok(squared.max(0.0).sqrt())
    } else {
        Err(CliError::Refusal(format!(
            "--sqrt refused: squared distance {squared} is negative (pseudo-Euclidean input)"
        )))
    }
}

fn cmd_dist(args: DistArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let (d, digest) = load_matrix(&args.matrix, tol)?;
    let mut notices = vec![];
    let p = load_point("p", &args.p, d.n(), tol, &mut notices)?;
    let q = load_point("q", &args.q, d.n(), tol, &mut notices)?;
    let squared = unsign_zero(d.squared_distance(&p, &q).map_err(CliError::Data)?);
    let distance = if args.sqrt {
        Some(sqrt_or_refuse(squared, tol * d.max_abs().max(1.0))?)
    } else {
        None
    };
    let mut report = Report::new(
        "dist",
        digest,
        DistResult {
            squared_distance: squared,
            distance,
        },
        tol,
    );
    report.notices = notices;
    let mut plain = format!("squared distance: {squared}\n");
    if let Some(root) = distance {
        let _ = writeln!(plain, "distance: {root}");
    }
    emit(&args.common, &report, plain);
    Ok(())
}

fn write_or_append(
    out: Option<&PathBuf>,
    csv: String,
    body: &mut String,
) -> Result<Option<String>, CliError> {
    match out {
        Some(path) => {
            fs::write(path, csv)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Some(path.display().to_string()))
        }
        None => {
            body.push_str(&csv);
            Ok(None)
        }
    }
}

fn cmd_gram(args: GramArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let (d, digest) = load_matrix(&args.matrix, tol)?;
    let g = gram_from_distances(&d);
    let csv = matrix_to_csv(g.matrix());
    let mut payload = String::new();
    let csv_path = write_or_append(args.out.as_ref(), csv, &mut payload)?;
    let report = Report::new(
        "gram",
        digest,
        GramResult {
            n: g.n(),
            csv_path: csv_path.clone(),
        },
        tol,
    );
    let mut plain = format!("gram matrix: {0}x{0}\n", g.n());
    if let Some(path) = &csv_path {
        let _ = writeln!(plain, "written to: {path}");
    }
    emit(&args.common, &report, plain);
    print!("{payload}");
    Ok(())
}

fn cmd_embed(args: EmbedArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let (d, digest) = load_matrix(&args.matrix, tol)?;
    let r = realize(&d, tol).map_err(CliError::Data)?;
    let n_pos = r.signature().iter().filter(|&&s| s > 0).count();
    let n_neg = r.dimension() - n_pos;
    let csv = points_to_csv(r.points());
    let mut payload = String::new();
    let csv_path = write_or_append(args.out.as_ref(), csv, &mut payload)?;
    let mut report = Report::new(
        "embed",
        digest,
        EmbedResult {
            n_points: r.num_points(),
            dimension: r.dimension(),
            axis_signs: r.signature().to_vec(),
            csv_path: csv_path.clone(),
        },
        tol,
    );
    report.signature = Some(Signature {
        n_pos,
        n_neg,
        n_zero: r.num_points() - r.dimension(),
    });
    let mut plain = format!(
        "realized {} points in dimension {} (signature {}+ {}-)\n",
        r.num_points(),
        r.dimension(),
        n_pos,
        n_neg
    );
    if let Some(path) = &csv_path {
        let _ = writeln!(plain, "written to: {path}");
    }
    emit(&args.common, &report, plain);
    print!("{payload}");
    Ok(())
}

fn cmd_check_euclidean(args: CheckArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let (d, digest) = load_matrix(&args.matrix, tol)?;
    let outcome = check_euclidean(&d, tol).map_err(CliError::Data)?;
    let mut report = Report::new(
        "check-euclidean",
        digest,
        CheckEuclideanResult {
            embeddable: outcome.embeddable,
            witness_value: outcome.witness_value,
        },
        tol,
    );
    report.signature = Some(outcome.signature);
    report.witness = outcome
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&x| unsign_zero(x)).collect());
    let mut plain = format!("embeddable: {}\n", outcome.embeddable);
    let _ = writeln!(
        plain,
        "signature: {} positive, {} negative, {} zero",
        outcome.signature.n_pos, outcome.signature.n_neg, outcome.signature.n_zero
    );
    if let Some(w) = &outcome.witness {
        let _ = writeln!(plain, "witness: {}", join_numbers(w));
        let _ = writeln!(plain, "witness value: {}", outcome.witness_value.unwrap());
    }
    emit(&args.common, &report, plain);
    Ok(())
}

fn cmd_check_sturm(args: SturmArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let (d, digest) = load_matrix(&args.matrix, tol)?;
    let outcome = match args.samples {
        Some(samples) => sample_check(&d, samples, args.seed, tol),
        None => check_sturm(&d, tol).map_err(CliError::Data)?,
    };
    let (method, samples, seed) = match outcome.method {
        crate::curvature::CheckMethod::FaceEnumeration => ("face-enumeration", None, None),
        crate::curvature::CheckMethod::Sampling { samples, seed } => {
            ("sampling", Some(samples), Some(seed))
        }
    };
    let mut report = Report::new(
        "check-sturm",
        digest,
        CheckSturmResult {
            satisfied: outcome.satisfied,
            method,
            samples,
            seed,
            per_vertex: outcome.per_vertex.clone(),
            witness_value: outcome.witness_value,
        },
        tol,
    );
    report.witness = outcome
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&x| unsign_zero(x)).collect());
    let mut plain = if outcome.satisfied && samples.is_some() {
        "satisfied: no violation found\n".to_string()
    } else {
        format!("satisfied: {}\n", outcome.satisfied)
    };
    let _ = writeln!(plain, "method: {method}");
    for (i, ok) in outcome.per_vertex.iter().enumerate() {
        let _ = writeln!(
            plain,
            "vertex {}: {}",
            i + 1,
            if *ok { "pass" } else { "fail" }
        );
    }
    if let Some(w) = &outcome.witness {
        let _ = writeln!(plain, "witness: {}", join_numbers(w));
        let _ = writeln!(plain, "witness value: {}", outcome.witness_value.unwrap());
    }
    emit(&args.common, &report, plain);
    Ok(())
}

fn cmd_tri(args: TriArgs) -> Result<(), CliError> {
    let tol = args.common.tol;
    let lengths = parse_list("edges", &args.edges)?;
    if lengths.len() != 3 {
        return Err(CliError::Input(format!(
            "--edges: expected 3 lengths l12,l13,l23, got {}",
            lengths.len()
        )));
    }
    let edges = TriangleEdges::new(lengths[0], lengths[1], lengths[2]).map_err(CliError::Data)?;
    if args.strict {
        edges
            .check_triangle_inequality(tol)
            .map_err(CliError::Data)?;
    }
    let digest = input::digest(args.edges.as_bytes());
    let d = edges.squared_distance_matrix();
    let mut notices = vec![];
    let p = load_point("p", &args.p, 3, tol, &mut notices)?;
    let q = load_point("q", &args.q, 3, tol, &mut notices)?;
    let squared = unsign_zero(tri_squared_distance(&edges, &p, &q).map_err(CliError::Data)?);
    let distance = if args.sqrt {
        Some(sqrt_or_refuse(squared, tol * d.max_abs().max(1.0))?)
    } else {
        None
    };
    let mut report = Report::new(
        "tri",
        digest,
        TriResult {
            squared_distance: squared,
            distance,
        },
        tol,
    );
    report.notices = notices;
    let mut plain = format!("squared distance: {squared}\n");
    if let Some(root) = distance {
        let _ = writeln!(plain, "distance: {root}");
    }
    emit(&args.common, &report, plain);
    Ok(())
}
