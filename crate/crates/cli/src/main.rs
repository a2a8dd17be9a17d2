//! `qpc`: sample chip surfaces, boundaries, correlation fields and
//! trajectories as CSV or JSON, reconstruct states from measurement pairs,
//! and run the library's invariant suites.
//!
//! Every flag has a config-file equivalent (`key=value` lines, `#` comments);
//! the file is read from the path in the `QPC_CONFIG` environment variable
//! and explicit flags win. Output is deterministic: identical inputs produce
//! byte-identical output.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical or physicality failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qpc_core::channel::{chip_image_kraus, ChannelKind};
use qpc_core::check::{self, CheckOutcome};
use qpc_core::chip::{
    boundary_q, chip_bloch, chip_membership, chip_support, chip_surface, matthews_phi_bloch,
    BoundaryBranch, ChipPoint, Membership, Orientation,
};
use qpc_core::liouvillian::{binary_entropy_bits, evolve_boundary};
use qpc_core::measurement::reconstruct_from_projective;
use qpc_core::phase_space::BasisKind;
use qpc_core::qubit::BlochVector;
use qpc_core::{Error as CoreError, TOL_PHYS};

const VERSION: &str = env!("CARGO_PKG_VERSION");
const CONFIG_ENV: &str = "QPC_CONFIG";

#[derive(Parser)]
#[command(
    name = "qpc",
    version,
    about = "Qubit phase-space geometry: chip surfaces, boundaries, channels and trajectories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a chip surface over the (p, q) parameter square
    Surface(SurfaceArgs),
    /// Sample the pure boundary curve of the chip
    Boundary(BoundaryArgs),
    /// Sample the Matthews correlation field over the Bloch ball
    PhiField(PhiFieldArgs),
    /// Reconstruct a chip state from two projective probabilities
    Reconstruct(ReconstructArgs),
    /// Apply a noise channel across the chip and emit the image points
    Channel(ChannelArgs),
    /// Integrate the boundary-confined master equation
    Evolve(EvolveArgs),
    /// Run named invariant suites
    Check(CheckArgs),
}

#[derive(Args)]
struct SurfaceArgs {
    /// Chip orientation: 1, 2 or 3
    #[arg(long)]
    chip: Option<u8>,
    /// Phase-space basis: qbism-sic or wootters
    #[arg(long)]
    basis: Option<String>,
    /// Grid points per parameter axis
    #[arg(long)]
    grid: Option<usize>,
    /// Keep only rows inside the physical chip region
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    physical: Option<bool>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundaryArgs {
    /// Phase-space basis: qbism-sic or wootters
    #[arg(long)]
    basis: Option<String>,
    /// Boundary branch: plus or minus
    #[arg(long)]
    branch: Option<String>,
    /// Number of samples along the support interval
    #[arg(long)]
    samples: Option<usize>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhiFieldArgs {
    /// Grid points per Cartesian axis
    #[arg(long)]
    grid: Option<usize>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReconstructArgs {
    /// First-outcome probability of the Pauli-Z measurement
    #[arg(long)]
    pz: Option<f64>,
    /// First-outcome probability of the Pauli-X measurement
    #[arg(long)]
    px: Option<f64>,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChannelArgs {
    /// Channel name: bit-flip, phase-flip, bit-phase-flip, depolarizing,
    /// amplitude-damping or phase-damping
    #[arg(long)]
    name: Option<String>,
    /// Error rate in [0, 1]
    #[arg(long)]
    xi: Option<f64>,
    /// Grid points per chip parameter axis
    #[arg(long)]
    grid: Option<usize>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvolveArgs {
    /// Start of the parameter sweep
    #[arg(long)]
    p0: Option<f64>,
    /// End of the parameter sweep
    #[arg(long)]
    p1: Option<f64>,
    /// Boundary branch of the initial state: plus or minus
    #[arg(long)]
    branch: Option<String>,
    /// Number of sample intervals
    #[arg(long)]
    steps: Option<usize>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite to run (or "all")
    #[arg(long)]
    suite: Option<String>,
    /// Seed for the randomized checks
    #[arg(long)]
    seed: Option<u64>,
    /// Output format: human or json
    #[arg(long)]
    format: Option<String>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::OutOfRange { .. }
            | CoreError::NotNormalized(_)
            | CoreError::OutsideSupport(_)
            | CoreError::InvalidAxisPair => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: 2,
            message: format!("i/o error: {e}"),
        }
    }
}

/// Config-file defaults for flags; explicit flags win.
struct Resolver {
    cfg: BTreeMap<String, String>,
}

impl Resolver {
    fn load() -> Result<Self, CliError> {
        let mut cfg = BTreeMap::new();
        if let Ok(path) = std::env::var(CONFIG_ENV) {
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::usage(format!("cannot read config {path}: {e}")))?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let Some((key, value)) = line.split_once('=') else {
                    return Err(CliError::usage(format!(
                        "config {path}:{}: expected key=value",
                        lineno + 1
                    )));
                };
                cfg.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
        Ok(Self { cfg })
    }

    fn value<T: FromStr>(&self, cli: Option<T>, key: &str, default: T) -> Result<T, CliError> {
        match cli {
            Some(v) => Ok(v),
            None => match self.cfg.get(key) {
                Some(raw) => raw
                    .parse::<T>()
                    .map_err(|_| CliError::usage(format!("config value {key}={raw} is invalid"))),
                None => Ok(default),
            },
        }
    }

    fn required<T: FromStr>(&self, cli: Option<T>, key: &str) -> Result<T, CliError> {
        match cli {
            Some(v) => Ok(v),
            None => match self.cfg.get(key) {
                Some(raw) => raw
                    .parse::<T>()
                    .map_err(|_| CliError::usage(format!("config value {key}={raw} is invalid"))),
                None => Err(CliError::usage(format!("missing required flag --{key}"))),
            },
        }
    }

    fn path(&self, cli: Option<PathBuf>, key: &str) -> Option<PathBuf> {
        cli.or_else(|| self.cfg.get(key).map(PathBuf::from))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutFormat {
    Csv,
    Json,
}

fn parse_format(s: &str) -> Result<OutFormat, CliError> {
    match s {
        "csv" => Ok(OutFormat::Csv),
        "json" => Ok(OutFormat::Json),
        other => Err(CliError::usage(format!(
            "unknown format {other:?} (expected csv or json)"
        ))),
    }
}

fn parse_basis(s: &str) -> Result<BasisKind, CliError> {
    match s {
        "qbism-sic" => Ok(BasisKind::QBismSic),
        "wootters" => Ok(BasisKind::Wootters),
        other => Err(CliError::usage(format!(
            "unknown basis {other:?} (expected qbism-sic or wootters)"
        ))),
    }
}

fn parse_branch(s: &str) -> Result<BoundaryBranch, CliError> {
    match s {
        "plus" => Ok(BoundaryBranch::Plus),
        "minus" => Ok(BoundaryBranch::Minus),
        other => Err(CliError::usage(format!(
            "unknown branch {other:?} (expected plus or minus)"
        ))),
    }
}

fn parse_orientation(chip: u8) -> Result<Orientation, CliError> {
    match chip {
        1 => Ok(Orientation::O1),
        2 => Ok(Orientation::O2),
        3 => Ok(Orientation::O3),
        other => Err(CliError::usage(format!(
            "unknown chip {other} (expected 1, 2 or 3)"
        ))),
    }
}

fn parse_channel(s: &str) -> Result<ChannelKind, CliError> {
    ChannelKind::ALL
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| {
            let names: Vec<&str> = ChannelKind::ALL.iter().map(|k| k.name()).collect();
            CliError::usage(format!(
                "unknown channel {s:?} (expected one of {})",
                names.join(", ")
            ))
        })
}

#[derive(Serialize)]
struct Metadata {
    command: &'static str,
    parameters: BTreeMap<&'static str, String>,
    version: &'static str,
}

impl Metadata {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            parameters: BTreeMap::new(),
            version: VERSION,
        }
    }

    fn with(mut self, key: &'static str, value: impl ToString) -> Self {
        self.parameters.insert(key, value.to_string());
        self
    }
}

#[derive(Serialize)]
struct TableDoc<'a> {
    metadata: &'a Metadata,
    columns: &'a [&'a str],
    records: &'a [Vec<f64>],
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Emit a table as CSV (metadata in a leading comment block, 17 significant
/// digits) or as a single JSON object.
fn emit_table(
    meta: &Metadata,
    columns: &[&str],
    records: &[Vec<f64>],
    format: OutFormat,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    for row in records {
        if row.iter().any(|v| !v.is_finite()) {
            return Err(CliError::numerical("non-finite value in output"));
        }
    }
    let text = match format {
        OutFormat::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "# command={}", meta.command);
            for (k, v) in &meta.parameters {
                let _ = writeln!(s, "# {k}={v}");
            }
            let _ = writeln!(s, "# version={}", meta.version);
            let _ = writeln!(s, "{}", columns.join(","));
            for row in records {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
                let _ = writeln!(s, "{}", cells.join(","));
            }
            s
        }
        OutFormat::Json => {
            let doc = TableDoc {
                metadata: meta,
                columns,
                records,
            };
            let mut s = serde_json::to_string(&doc).expect("tables serialize");
            s.push('\n');
            s
        }
    };
    write_out(out, &text)
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Physical-region test shared by surface and channel grids: p inside the
/// support interval and q between the two boundary branches.
fn in_physical_region(p: f64, q: f64, basis: BasisKind) -> bool {
    let (lo, hi) = chip_support(basis);
    if !(lo - 1e-12..=hi + 1e-12).contains(&p) {
        return false;
    }
    match (
        boundary_q(p, BoundaryBranch::Minus, basis),
        boundary_q(p, BoundaryBranch::Plus, basis),
    ) {
        (Ok(q_lo), Ok(q_hi)) => (q_lo - 1e-12..=q_hi + 1e-12).contains(&q),
        _ => false,
    }
}

fn cmd_surface(args: SurfaceArgs, cfg: &Resolver) -> Result<(), CliError> {
    let chip = cfg.value(args.chip, "chip", 1)?;
    let orientation = parse_orientation(chip)?;
    let basis = parse_basis(&cfg.value(args.basis, "basis", "qbism-sic".into())?)?;
    let grid = cfg.value(args.grid, "grid", 101)?;
    if grid < 2 {
        return Err(CliError::usage("grid must be at least 2"));
    }
    let physical = cfg.value(args.physical, "physical", false)?;
    let format = parse_format(&cfg.value(args.format, "format", "csv".into())?)?;
    let out = cfg.path(args.out, "out");

    let mut records = Vec::new();
    for &p in &linspace(0.0, 1.0, grid) {
        for &q in &linspace(0.0, 1.0, grid) {
            if physical && !in_physical_region(p, q, basis) {
                continue;
            }
            let t = chip_surface(&ChipPoint::new(p, q, orientation, basis)?);
            records.push(vec![p, q, t.u, t.v, t.w]);
        }
    }
    let meta = Metadata::new("surface")
        .with("chip", chip)
        .with("basis", basis_name(basis))
        .with("grid", grid)
        .with("physical", physical);
    emit_table(&meta, &["p", "q", "u", "v", "w"], &records, format, out.as_ref())
}

fn basis_name(b: BasisKind) -> &'static str {
    match b {
        BasisKind::QBismSic => "qbism-sic",
        BasisKind::Wootters => "wootters",
    }
}

fn branch_name(b: BoundaryBranch) -> &'static str {
    match b {
        BoundaryBranch::Plus => "plus",
        BoundaryBranch::Minus => "minus",
    }
}

fn cmd_boundary(args: BoundaryArgs, cfg: &Resolver) -> Result<(), CliError> {
    let basis = parse_basis(&cfg.value(args.basis, "basis", "qbism-sic".into())?)?;
    let branch = parse_branch(&cfg.value(args.branch, "branch", "minus".into())?)?;
    let samples = cfg.value(args.samples, "samples", 101)?;
    if samples < 2 {
        return Err(CliError::usage("samples must be at least 2"));
    }
    let format = parse_format(&cfg.value(args.format, "format", "csv".into())?)?;
    let out = cfg.path(args.out, "out");

    let (lo, hi) = chip_support(basis);
    let mut records = Vec::new();
    for &p in &linspace(lo, hi, samples) {
        let q = boundary_q(p, branch, basis)?;
        let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O1, basis)?)?;
        records.push(vec![p, q, r.x, r.y, r.z]);
    }
    let meta = Metadata::new("boundary")
        .with("basis", basis_name(basis))
        .with("branch", branch_name(branch))
        .with("samples", samples);
    emit_table(&meta, &["p", "q", "x", "y", "z"], &records, format, out.as_ref())
}

fn cmd_phi_field(args: PhiFieldArgs, cfg: &Resolver) -> Result<(), CliError> {
    let grid = cfg.value(args.grid, "grid", 101)?;
    if grid < 2 {
        return Err(CliError::usage("grid must be at least 2"));
    }
    let format = parse_format(&cfg.value(args.format, "format", "csv".into())?)?;
    let out = cfg.path(args.out, "out");

    let axis = linspace(-1.0, 1.0, grid);
    let mut records = Vec::new();
    for &x in &axis {
        for &y in &axis {
            for &z in &axis {
                let r = BlochVector::new(x, y, z);
                if r.norm() > 1.0 {
                    continue;
                }
                let phi = matthews_phi_bloch(&r).map_err(CliError::from)?;
                records.push(vec![x, y, z, phi]);
            }
        }
    }
    let meta = Metadata::new("phi-field").with("grid", grid);
    emit_table(&meta, &["x", "y", "z", "phi"], &records, format, out.as_ref())
}

#[derive(Serialize)]
struct ReconstructReport {
    pz: f64,
    px: f64,
    p: f64,
    q: f64,
    probabilities: [f64; 4],
    bloch: [f64; 3],
    physical: bool,
    membership: &'static str,
}

#[derive(Serialize)]
struct ReconstructDoc {
    metadata: Metadata,
    report: ReconstructReport,
}

fn cmd_reconstruct(args: ReconstructArgs, cfg: &Resolver) -> Result<(), CliError> {
    let pz: f64 = cfg.required(args.pz, "pz")?;
    let px: f64 = cfg.required(args.px, "px")?;
    let out = cfg.path(args.out, "out");

    let rec = reconstruct_from_projective(pz, px)?;
    let membership = match chip_membership(&rec.bloch, Orientation::O1, TOL_PHYS) {
        Membership::Interior => "interior",
        Membership::Boundary => "boundary",
        Membership::Outside => "outside",
    };
    let doc = ReconstructDoc {
        metadata: Metadata::new("reconstruct").with("pz", pz).with("px", px),
        report: ReconstructReport {
            pz,
            px,
            p: rec.p,
            q: rec.q,
            probabilities: rec.probabilities.as_array(),
            bloch: rec.bloch.as_array(),
            physical: rec.physical,
            membership,
        },
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    write_out(out.as_ref(), &text)
}

fn cmd_channel(args: ChannelArgs, cfg: &Resolver) -> Result<(), CliError> {
    let kind = parse_channel(&cfg.value(args.name, "name", "bit-flip".into())?)?;
    let xi = cfg.value(args.xi, "xi", 1.0 / 3.0)?;
    let grid = cfg.value(args.grid, "grid", 101)?;
    if grid < 2 {
        return Err(CliError::usage("grid must be at least 2"));
    }
    let format = parse_format(&cfg.value(args.format, "format", "csv".into())?)?;
    let out = cfg.path(args.out, "out");

    let (lo, hi) = chip_support(BasisKind::QBismSic);
    let mut records = Vec::new();
    for i in 0..grid {
        let p = lo + (hi - lo) * (i as f64 + 0.5) / grid as f64;
        let q_lo = boundary_q(p, BoundaryBranch::Minus, BasisKind::QBismSic)?;
        let q_hi = boundary_q(p, BoundaryBranch::Plus, BasisKind::QBismSic)?;
        for j in 0..grid {
            let q = q_lo + (q_hi - q_lo) * (j as f64 + 0.5) / grid as f64;
            let point = ChipPoint::new(p, q, Orientation::O1, BasisKind::QBismSic)?;
            let r = chip_bloch(&point)?;
            let image = chip_image_kraus(kind, xi, p, q)?;
            records.push(vec![p, q, r.x, r.y, r.z, image.x, image.y, image.z]);
        }
    }
    let meta = Metadata::new("channel")
        .with("name", kind.name())
        .with("xi", xi)
        .with("grid", grid);
    emit_table(
        &meta,
        &["p", "q", "x", "y", "z", "xe", "ye", "ze"],
        &records,
        format,
        out.as_ref(),
    )
}

fn cmd_evolve(args: EvolveArgs, cfg: &Resolver) -> Result<(), CliError> {
    let p0 = cfg.value(args.p0, "p0", 1e-3)?;
    let p1 = cfg.value(args.p1, "p1", 1.0 - 1e-3)?;
    let branch = parse_branch(&cfg.value(args.branch, "branch", "minus".into())?)?;
    let steps = cfg.value(args.steps, "steps", 1000)?;
    let format = parse_format(&cfg.value(args.format, "format", "csv".into())?)?;
    let out = cfg.path(args.out, "out");

    let trajectory = evolve_boundary(p0, p1, branch, steps)?;
    let mut records = Vec::new();
    for sample in &trajectory.samples {
        let r = sample.rho.bloch();
        let svn = sample.rho.von_neumann_entropy_bits();
        let shannon =
            binary_entropy_bits((1.0 + r.x) / 2.0) + binary_entropy_bits((1.0 + r.z) / 2.0);
        records.push(vec![sample.p, r.x, r.y, r.z, svn, shannon]);
    }
    let meta = Metadata::new("evolve")
        .with("p0", p0)
        .with("p1", p1)
        .with("branch", branch_name(branch))
        .with("steps", steps);
    emit_table(
        &meta,
        &["p", "x", "y", "z", "svn", "h"],
        &records,
        format,
        out.as_ref(),
    )
}

#[derive(Serialize)]
struct CheckResultJson {
    suite: &'static str,
    name: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct CheckDoc {
    metadata: Metadata,
    seed: u64,
    passed: bool,
    results: Vec<CheckResultJson>,
}

fn cmd_check(args: CheckArgs, cfg: &Resolver) -> Result<(), CliError> {
    let suite = cfg.value(args.suite, "suite", "all".into())?;
    let seed = cfg.value(args.seed, "seed", check::DEFAULT_SEED)?;
    let format = cfg.value(args.format, "check-format", "human".into())?;

    let outcomes = check::run_suite(&suite, seed).ok_or_else(|| {
        CliError::usage(format!(
            "unknown suite {suite:?} (expected one of {})",
            check::available_suites().join(", ")
        ))
    })?;
    let failures: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
    let passed = failures.is_empty();

    match format.as_str() {
        "human" => {
            println!("seed: {seed}");
            for o in &outcomes {
                let flag = if o.passed { "PASS" } else { "FAIL" };
                println!("[{flag}] {} :: {} ({})", o.suite, o.name, o.detail);
            }
            println!(
                "{} of {} checks passed",
                outcomes.len() - failures.len(),
                outcomes.len()
            );
        }
        "json" => {
            let doc = CheckDoc {
                metadata: Metadata::new("check").with("suite", &suite).with("seed", seed),
                seed,
                passed,
                results: outcomes
                    .iter()
                    .map(|o| CheckResultJson {
                        suite: o.suite,
                        name: o.name,
                        passed: o.passed,
                        detail: o.detail.clone(),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown check format {other:?} (expected human or json)"
            )))
        }
    }

    if !passed {
        // machine-readable failure list on the error stream
        let list: Vec<CheckResultJson> = failures
            .iter()
            .map(|o| CheckResultJson {
                suite: o.suite,
                name: o.name,
                passed: false,
                detail: o.detail.clone(),
            })
            .collect();
        eprintln!("{}", serde_json::to_string(&list).expect("serializes"));
        return Err(CliError::numerical("invariant checks failed"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = Resolver::load()?;
    match cli.command {
        Command::Surface(args) => cmd_surface(args, &cfg),
        Command::Boundary(args) => cmd_boundary(args, &cfg),
        Command::PhiField(args) => cmd_phi_field(args, &cfg),
        Command::Reconstruct(args) => cmd_reconstruct(args, &cfg),
        Command::Channel(args) => cmd_channel(args, &cfg),
        Command::Evolve(args) => cmd_evolve(args, &cfg),
        Command::Check(args) => cmd_check(args, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
