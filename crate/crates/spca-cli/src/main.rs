//! `spca` — command-line front end for the spherical PCA toolkit.
//!
//! Subcommands:
//! - `synth`: generate the two-wedge benchmark dataset.
//! - `fit`: factor a data matrix into orthonormal directions times unit-norm
//!   components, writing the factors and a per-iteration trace.
//! - `cluster-eval`: k-means on component columns plus accuracy/NMI scoring
//!   against ground-truth labels.
//! - `trace-rate`: classify the empirical convergence regime of a saved trace.
//!
//! Commands that produce files also write a `manifest.json` recording the
//! command, the full flag configuration, input and output paths, the seed,
//! a timestamp, and the software version, so any run can be reproduced.
//! Given the same flags and seed, all numeric output files are byte-identical
//! across runs; only the manifest timestamp differs.
//!
//! Exit codes: 0 success, 1 runtime/numeric failure, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use spca_core::{
    accuracy, estimate_rate, fit, gen_two_wedges, kmeans_unit_sphere, lipschitz_constant, load_coo,
    load_dense_csv, nmi, normalize_columns, render_dense_csv, tfidf, trace_from_csv, trace_to_csv,
    ClusterScores, ComponentMatrix, InitStrategy, LabelVector, SolverConfig, SolverError, StepRule,
    SyntheticSpec,
};

// ---------------------------------------------------------------------------
// Argument surface
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "spca",
    version,
    about = "Spherical PCA: factor, trace, and cluster data on the unit sphere",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the synthetic two-wedge dataset (3 x 2N, two labeled clusters).
    Synth(SynthArgs),
    /// Fit X ~ U V with orthonormal U columns and unit-norm V columns.
    Fit(FitArgs),
    /// Cluster component columns with k-means and score against truth labels.
    ClusterEval(ClusterEvalArgs),
    /// Estimate the convergence regime (linear/sublinear) of a fit trace.
    TraceRate(TraceRateArgs),
}

#[derive(Args)]
struct SynthArgs {
    /// Points per cluster (the dataset has twice this many columns).
    #[arg(long, default_value_t = 100)]
    n_per_cluster: usize,
    /// Radius range as lo:hi with 0 < lo <= hi.
    #[arg(long, default_value = "0.5:2.0")]
    radius: String,
    /// Standard deviation of the off-plane Gaussian jitter.
    #[arg(long, default_value_t = 0.02)]
    jitter: f64,
    /// Master seed; the data stream is derived from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory for data.csv, truth.labels, manifest.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct FitArgs {
    /// Input data file.
    #[arg(long)]
    data: PathBuf,
    /// Input format: dense CSV or sparse coordinate triplets.
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    format: DataFormat,
    /// Apply the tf-idf transform (input must be nonnegative counts).
    #[arg(long)]
    tfidf: bool,
    /// Normalize columns to unit Euclidean norm before fitting.
    #[arg(long)]
    normalize: bool,
    /// Number of factors; must satisfy 1 <= rank <= min(rows, cols).
    #[arg(long)]
    rank: usize,
    /// Direction-step weight; defaults to 1.1 times the Lipschitz bound.
    #[arg(long)]
    mu: Option<f64>,
    /// Component-step weight; defaults to 1.1 times the Lipschitz bound.
    #[arg(long)]
    lambda: Option<f64>,
    /// Maximum number of iterations.
    #[arg(long, default_value_t = 5000)]
    iters: usize,
    /// Stop once sqrt(du^2 + dv^2) falls below this; 0 runs all iterations.
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
    /// Master seed; the init stream is derived from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Initialization strategy.
    #[arg(long, value_enum, default_value_t = InitFlag::SvdOfData)]
    init: InitFlag,
    /// Output directory for U.csv, V.csv, trace.csv, manifest.json.
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args)]
struct ClusterEvalArgs {
    /// Component matrix CSV (unit-norm columns, e.g. V.csv from `fit`).
    #[arg(long)]
    components: PathBuf,
    /// Number of clusters; must be at least 2.
    #[arg(long)]
    k: usize,
    /// Ground-truth label file, one label per line.
    #[arg(long)]
    truth: PathBuf,
    /// Independent k-means restarts; the best objective wins.
    #[arg(long, default_value_t = 10)]
    restarts: usize,
    /// Master seed; the restart stream is derived from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory for pred.labels, scores.json, manifest.json.
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args)]
struct TraceRateArgs {
    /// Trace CSV produced by `fit`.
    #[arg(long)]
    trace: PathBuf,
    /// Optional file to write the JSON estimate to (stdout either way).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DataFormat {
    Csv,
    Coo,
}

impl DataFormat {
    fn name(self) -> &'static str {
        match self {
            DataFormat::Csv => "csv",
            DataFormat::Coo => "coo",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitFlag {
    /// Top singular subspace of the data; deterministic.
    SvdOfData,
    /// Orthonormalized Gaussian directions from the init stream.
    RandomOrthonormal,
}

impl InitFlag {
    fn strategy(self) -> InitStrategy {
        match self {
            InitFlag::SvdOfData => InitStrategy::SvdOfData,
            InitFlag::RandomOrthonormal => InitStrategy::RandomOrthonormal,
        }
    }

    fn name(self) -> &'static str {
        match self {
            InitFlag::SvdOfData => "svd-of-data",
            InitFlag::RandomOrthonormal => "random-orthonormal",
        }
    }
}

// ---------------------------------------------------------------------------
// Errors and exit codes
// ---------------------------------------------------------------------------

/// Failure classes, mapped onto the documented exit codes.
enum CliError {
    /// Bad flag values or inconsistent request: exit 2.
    Usage(String),
    /// I/O, parse, or numeric failure while executing a valid request: exit 1.
    Runtime(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn runtime(msg: impl Into<String>) -> Self {
        CliError::Runtime(msg.into())
    }
}

/// Solver misconfiguration is a usage problem; everything else from the
/// library is a runtime failure.
fn solver_error(err: SolverError) -> CliError {
    match err {
        SolverError::InvalidConfig { reason } => CliError::Usage(reason),
        other => CliError::Runtime(other.to_string()),
    }
}

fn io_error(path: &Path, err: std::io::Error) -> CliError {
    CliError::Runtime(format!("{}: {err}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Synth(args) => cmd_synth(&args),
        Command::Fit(args) => cmd_fit(&args),
        Command::ClusterEval(args) => cmd_cluster_eval(&args),
        Command::TraceRate(args) => cmd_trace_rate(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

// ---------------------------------------------------------------------------
// Seed streams
// ---------------------------------------------------------------------------

/// Derives an independent substream seed from the master seed and a stream
/// name, so data generation, initialization, and k-means restarts never share
/// randomness even under the same top-level --seed.
fn stream_seed(master: u64, name: &str) -> u64 {
    // FNV-1a over the stream name, then a splitmix64 finalizer to decorrelate
    // neighboring master seeds.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in name.bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(master ^ h)
}

fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

// ---------------------------------------------------------------------------
// Run manifests
// ---------------------------------------------------------------------------

/// Record of one command invocation: enough to reproduce the run exactly.
#[derive(Serialize)]
struct RunManifest {
    command: String,
    version: String,
    timestamp_unix_ms: u128,
    seed: u64,
    config: Value,
    inputs: Vec<String>,
    outputs: Vec<String>,
}

impl RunManifest {
    fn new(command: &str, seed: u64, config: Value) -> Self {
        let timestamp_unix_ms = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis())
            .unwrap_or(0);
        RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp_unix_ms,
            seed,
            config,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    fn input(mut self, path: &Path) -> Self {
        self.inputs.push(path.display().to_string());
        self
    }

    fn output(mut self, path: &Path) -> Self {
        self.outputs.push(path.display().to_string());
        self
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| io_error(path, e))
}

fn write_manifest(dir: &Path, manifest: &RunManifest) -> Result<PathBuf, CliError> {
    let path = dir.join("manifest.json");
    let mut text = serde_json::to_string_pretty(manifest)
        .map_err(|e| CliError::runtime(format!("manifest serialization: {e}")))?;
    text.push('\n');
    write_text(&path, &text)?;
    Ok(path)
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

fn parse_radius(text: &str) -> Result<(f64, f64), CliError> {
    let bad = || {
        CliError::usage(format!(
            "--radius expects lo:hi with 0 < lo <= hi, got {text:?}"
        ))
    };
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi >= lo) {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_synth(args: &SynthArgs) -> Result<(), CliError> {
    let radius = parse_radius(&args.radius)?;
    let data_seed = stream_seed(args.seed, "synth.data");
    let spec = SyntheticSpec::new(args.n_per_cluster, radius, args.jitter, data_seed)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let dataset = gen_two_wedges(&spec);

    ensure_dir(&args.out)?;
    let data_path = args.out.join("data.csv");
    let labels_path = args.out.join("truth.labels");
    write_text(&data_path, &render_dense_csv(dataset.x.matrix()))?;
    write_text(&labels_path, &dataset.truth.to_lines())?;

    let config = json!({
        "n_per_cluster": args.n_per_cluster,
        "radius": [radius.0, radius.1],
        "jitter": args.jitter,
        "data_stream_seed": data_seed,
        "generator": dataset.meta,
    });
    let manifest = RunManifest::new("synth", args.seed, config)
        .output(&data_path)
        .output(&labels_path);
    write_manifest(&args.out, &manifest)?;

    println!(
        "synth: wrote {} points ({} per cluster) to {}",
        dataset.x.len(),
        args.n_per_cluster,
        args.out.display()
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

fn cmd_fit(args: &FitArgs) -> Result<(), CliError> {
    let loaded = match args.format {
        DataFormat::Csv => load_dense_csv(&args.data),
        DataFormat::Coo => load_coo(&args.data),
    }
    .map_err(|e| CliError::runtime(e.to_string()))?;
    let mut x = loaded;
    if args.tfidf {
        x = tfidf(&x).map_err(|e| CliError::runtime(e.to_string()))?;
    }
    if args.normalize {
        x = normalize_columns(&x).map_err(|e| CliError::runtime(e.to_string()))?;
    }

    let (m, n) = (x.dim(), x.len());
    if args.rank < 1 || args.rank > m.min(n) {
        return Err(CliError::usage(format!(
            "--rank {} out of range for {m}x{n} data; need 1 <= rank <= {}",
            args.rank,
            m.min(n)
        )));
    }
    for (flag, value) in [("--mu", args.mu), ("--lambda", args.lambda)] {
        if let Some(w) = value {
            if !(w.is_finite() && w > 0.0) {
                return Err(CliError::usage(format!(
                    "{flag} must be finite and positive, got {w}"
                )));
            }
        }
    }

    let l_c = lipschitz_constant(&x, args.rank)
        .map_err(|e| CliError::runtime(e.to_string()))?
        .value();
    let mu = args.mu.unwrap_or(1.1 * l_c);
    let lambda = args.lambda.unwrap_or(1.1 * l_c);
    if mu < l_c || lambda < l_c {
        eprintln!(
            "warning: step size below Lipschitz bound (mu={mu}, lambda={lambda}, L_c={l_c}); \
             descent is no longer guaranteed"
        );
    }

    let init_seed = stream_seed(args.seed, "fit.init");
    let config = SolverConfig {
        rank: args.rank,
        steps: StepRule::Fixed { mu, lambda },
        max_iters: args.iters,
        stop_tol: args.tol,
        seed: init_seed,
        init: args.init.strategy(),
    };
    let result = fit(&x, &config).map_err(solver_error)?;

    ensure_dir(&args.out_dir)?;
    let u_path = args.out_dir.join("U.csv");
    let v_path = args.out_dir.join("V.csv");
    let trace_path = args.out_dir.join("trace.csv");
    write_text(&u_path, &render_dense_csv(result.u.matrix()))?;
    write_text(&v_path, &render_dense_csv(result.v.matrix()))?;
    write_text(&trace_path, &trace_to_csv(&result.trace))?;

    let config_echo = json!({
        "data_format": args.format.name(),
        "tfidf": args.tfidf,
        "normalize": args.normalize,
        "rank": args.rank,
        "mu_flag": args.mu,
        "lambda_flag": args.lambda,
        "iters": args.iters,
        "tol": args.tol,
        "init": args.init.name(),
        "init_stream_seed": init_seed,
        "resolved": {
            "mu": result.mu,
            "lambda": result.lambda,
            "lipschitz_bound": result.lipschitz,
        },
    });
    let manifest = RunManifest::new("fit", args.seed, config_echo)
        .input(&args.data)
        .output(&u_path)
        .output(&v_path)
        .output(&trace_path);
    write_manifest(&args.out_dir, &manifest)?;

    let last = result
        .trace
        .last()
        .expect("fit traces always contain the initial row");
    let mut line = format!(
        "fit: {m}x{n} rank {} | L_c {:.6e} mu {:.6e} lambda {:.6e} | {} iterations, converged: {}, f {:.6e} -> {:.6e}, final du {:.3e} dv {:.3e}",
        args.rank,
        l_c,
        mu,
        lambda,
        result.iters_run,
        result.converged,
        result.f_initial(),
        result.f_final(),
        last.du,
        last.dv
    );
    if !result.degeneracies.is_empty() {
        let _ = write!(line, " | {} degenerate updates", result.degeneracies.len());
    }
    println!("{line}");
    Ok(())
}

// ---------------------------------------------------------------------------
// cluster-eval
// ---------------------------------------------------------------------------

fn cmd_cluster_eval(args: &ClusterEvalArgs) -> Result<(), CliError> {
    if args.k < 2 {
        return Err(CliError::usage(format!(
            "--k must be at least 2, got {}",
            args.k
        )));
    }
    if args.restarts < 1 {
        return Err(CliError::usage("--restarts must be at least 1"));
    }

    let components =
        load_dense_csv(&args.components).map_err(|e| CliError::runtime(e.to_string()))?;
    let components = ComponentMatrix::new(components.matrix().clone())
        .map_err(|e| CliError::runtime(format!("{}: {e}", args.components.display())))?;
    let truth_text = fs::read_to_string(&args.truth).map_err(|e| io_error(&args.truth, e))?;
    let truth =
        LabelVector::from_lines(&truth_text).map_err(|e| CliError::runtime(e.to_string()))?;

    let restart_seed = stream_seed(args.seed, "cluster.restarts");
    let outcome = kmeans_unit_sphere(&components, args.k, args.restarts, restart_seed)
        .map_err(|e| CliError::runtime(e.to_string()))?;
    let scores = ClusterScores {
        acc: accuracy(&outcome.labels, &truth).map_err(|e| CliError::runtime(e.to_string()))?,
        nmi: nmi(&outcome.labels, &truth).map_err(|e| CliError::runtime(e.to_string()))?,
    };

    ensure_dir(&args.out_dir)?;
    let labels_path = args.out_dir.join("pred.labels");
    let scores_path = args.out_dir.join("scores.json");
    write_text(&labels_path, &outcome.labels.to_lines())?;
    let mut scores_text = serde_json::to_string_pretty(&scores)
        .map_err(|e| CliError::runtime(format!("scores serialization: {e}")))?;
    scores_text.push('\n');
    write_text(&scores_path, &scores_text)?;

    let config = json!({
        "k": args.k,
        "restarts": args.restarts,
        "restart_stream_seed": restart_seed,
        "kmeans_objective": outcome.objective,
        "chosen_restart": outcome.chosen_restart,
    });
    let manifest = RunManifest::new("cluster-eval", args.seed, config)
        .input(&args.components)
        .input(&args.truth)
        .output(&labels_path)
        .output(&scores_path);
    write_manifest(&args.out_dir, &manifest)?;

    println!(
        "cluster-eval: {} points, k={}, restarts={} | acc {:.6} nmi {:.6}",
        outcome.labels.len(),
        args.k,
        args.restarts,
        scores.acc,
        scores.nmi
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// trace-rate
// ---------------------------------------------------------------------------

fn cmd_trace_rate(args: &TraceRateArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.trace).map_err(|e| io_error(&args.trace, e))?;
    let trace = trace_from_csv(&text).map_err(|e| CliError::runtime(e.to_string()))?;
    let estimate = estimate_rate(&trace).map_err(|e| CliError::runtime(e.to_string()))?;
    let mut rendered = serde_json::to_string(&estimate)
        .map_err(|e| CliError::runtime(format!("estimate serialization: {e}")))?;
    rendered.push('\n');
    print!("{rendered}");
    if let Some(out) = &args.out {
        write_text(out, &rendered)?;
    }
    Ok(())
}
