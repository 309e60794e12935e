//! Command-line front end: argument parsing, file handling and the scaling
//! benchmark. The binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polysimp::generate::{pairwise_quantile, random_walk, rng_from_seed};
use polysimp::io::{format_ov_instance, format_polyline, parse_cell_reach, parse_ov_instance, parse_polyline};
use polysimp::{
    brute_force_min_simplification, build_hard_curve, frechet_decide_polylines, hausdorff_decide_polylines,
    simplify_global_frechet, simplify_global_frechet_reference, simplify_local, solve_cell_reachability, solve_ov_bruteforce,
    verify_gadget_properties, LocalMeasure, LpExponent, Metric, OvInstance, Polyline, SimplificationResult, Variant,
    ORACLE_MAX_SEGMENTS,
};
use serde::Serialize;
use thiserror::Error;

/// Largest curve the reference algorithm is benchmarked on.
pub const REFERENCE_BENCH_CAP: usize = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] polysimp::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// 2 for bad input or configuration, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        use polysimp::Error as E;
        match self {
            CliError::Config(_) | CliError::Read { .. } => 2,
            CliError::Core(
                E::Parse { .. }
                | E::DimensionMismatch { .. }
                | E::EmptyPolyline
                | E::NonFinite
                | E::MalformedInstance(_)
                | E::InvalidExponent(_)
                | E::UnsupportedExponent(_)
                | E::TooLarge(_),
            ) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "polysimp", version, about = "Minimum-size polyline simplification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct NormArgs {
    /// Exponent of the L_p norm: a number >= 1 or "inf".
    #[arg(long, default_value = "2", value_parser = parse_exponent)]
    pub p: LpExponent,
    /// Slack added to every distance threshold.
    #[arg(long, env = "POLYSIMP_TOLERANCE", default_value_t = polysimp::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

impl NormArgs {
    fn metric(&self) -> CliResult<Metric> {
        Metric::with_tolerance(self.p, self.tolerance).map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    LocalHausdorff,
    LocalFrechet,
    GlobalFrechet,
    GlobalFrechetRef,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Frechet,
    Hausdorff,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a minimum-size simplification of a polyline.
    Simplify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        variant: Algorithm,
        /// Measure used by the exhaustive oracle.
        #[arg(long, default_value = "global-frechet", value_parser = parse_variant)]
        measure: Variant,
        #[arg(long, value_parser = parse_delta)]
        delta: f64,
        #[command(flatten)]
        norm: NormArgs,
        /// Also write the simplified polyline here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether two polylines are within distance delta.
    Distance {
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
        #[arg(long, value_enum, default_value = "frechet")]
        measure: Measure,
        #[arg(long, value_parser = parse_delta)]
        delta: f64,
        #[command(flatten)]
        norm: NormArgs,
    },
    /// Solve a Cell Reachability instance given as JSON.
    Cellreach {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the hard curve and threshold for an orthogonal-vectors instance.
    GenHard {
        #[command(flatten)]
        source: OvSource,
        #[arg(long, value_parser = parse_exponent)]
        p: LpExponent,
        /// Curve output; the threshold is recorded in a comment line.
        #[arg(long)]
        output: PathBuf,
        /// Also write the instance (useful with --seed).
        #[arg(long)]
        ov_output: Option<PathBuf>,
    },
    /// Check the distance properties of the hard-instance gadgets.
    VerifyHard {
        #[command(flatten)]
        source: OvSource,
        #[arg(long, value_parser = parse_exponent)]
        p: LpExponent,
        #[arg(long, default_value_t = 1000)]
        grid: usize,
    },
    /// Time an algorithm on seeded random walks; prints CSV.
    Bench {
        #[arg(long, value_enum, default_value = "global-frechet")]
        algo: Algorithm,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct OvSource {
    /// Instance file: three blocks of bit strings separated by blank lines.
    #[arg(long, required_unless_present = "seed", conflicts_with = "seed")]
    input: Option<PathBuf>,
    /// Generate a random instance from this seed instead.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 3, requires = "seed")]
    n: usize,
    #[arg(long, default_value_t = 3, requires = "seed")]
    d: usize,
}

impl OvSource {
    fn load(&self) -> CliResult<OvInstance> {
        match (&self.input, self.seed) {
            (Some(path), _) => Ok(parse_ov_instance(&read(path)?)?),
            (None, Some(seed)) => Ok(OvInstance::random(self.n, self.d, 0.5, &mut rng_from_seed(seed))?),
            (None, None) => Err(CliError::Config("either --input or --seed is required".into())),
        }
    }
}

fn parse_exponent(s: &str) -> Result<LpExponent, String> {
    s.parse::<LpExponent>().map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse::<Variant>().map_err(|e| e.to_string())
}

fn parse_delta(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(d) if d.is_finite() && d >= 0.0 => Ok(d),
        _ => Err(format!("delta must be a finite number >= 0, got {s:?}")),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types always serialize") + "\n"
}

/// Runs one algorithm. The oracle uses `oracle_measure`; the others ignore it.
pub fn simplify_with(
    algo: Algorithm,
    curve: &Polyline,
    delta: f64,
    metric: Metric,
    oracle_measure: Variant,
) -> polysimp::Result<SimplificationResult> {
    match algo {
        Algorithm::LocalHausdorff => simplify_local(curve, delta, metric, LocalMeasure::Hausdorff),
        Algorithm::LocalFrechet => simplify_local(curve, delta, metric, LocalMeasure::Frechet),
        Algorithm::GlobalFrechet => simplify_global_frechet(curve, delta, metric),
        Algorithm::GlobalFrechetRef => simplify_global_frechet_reference(curve, delta, metric),
        Algorithm::Oracle => brute_force_min_simplification(curve, delta, metric, oracle_measure),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub size: usize,
    pub trial: usize,
    pub seed: u64,
    pub millis: f64,
    pub result_size: usize,
}

impl BenchRow {
    pub const HEADER: &'static str = "size,trial,seed,millis,result_size";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{:.3},{}",
            self.size, self.trial, self.seed, self.millis, self.result_size
        )
    }
}

/// Times `algo` on `trials` seeded random walks per size, with δ at the 25th
/// percentile of pairwise vertex distances.
pub fn run_scaling_bench(algo: Algorithm, sizes: &[usize], trials: usize, seed: u64) -> CliResult<Vec<BenchRow>> {
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) || sizes[0] == 0 {
        return Err(CliError::Config("sizes must be positive and strictly increasing".into()));
    }
    let cap = match algo {
        Algorithm::GlobalFrechetRef => Some(REFERENCE_BENCH_CAP),
        Algorithm::Oracle => Some(ORACLE_MAX_SEGMENTS + 1),
        _ => None,
    };
    if let Some(cap) = cap.filter(|&c| *sizes.last().unwrap() > c) {
        return Err(CliError::Config(format!("{algo:?} is limited to sizes up to {cap}")));
    }
    let metric = Metric::new(LpExponent::TWO);
    let mut rows = Vec::with_capacity(sizes.len() * trials);
    for &size in sizes {
        for trial in 0..trials {
            let instance_seed = seed
                .wrapping_mul(1_000_003)
                .wrapping_add((size as u64) << 20)
                .wrapping_add(trial as u64);
            let curve = random_walk(size, &mut rng_from_seed(instance_seed));
            let delta = pairwise_quantile(&curve, metric.p, 0.25);
            let started = Instant::now();
            let result = simplify_with(algo, &curve, delta, metric, Variant::GlobalFrechet)?;
            rows.push(BenchRow {
                size,
                trial,
                seed: instance_seed,
                millis: started.elapsed().as_secs_f64() * 1e3,
                result_size: result.size,
            });
        }
    }
    Ok(rows)
}

#[derive(Serialize)]
struct DistanceReport {
    measure: &'static str,
    delta: f64,
    p: LpExponent,
    within: bool,
}

#[derive(Serialize)]
struct HardReport {
    vertices: usize,
    dim: usize,
    delta: f64,
    p: LpExponent,
    ov_answer: bool,
    expected_size: usize,
}

/// Executes a parsed command, writing results to `out`.
pub fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let emit = |out: &mut dyn Write, text: &str| out.write_all(text.as_bytes()).map_err(|e| CliError::Failed(e.to_string()));
    match cli.command {
        Command::Simplify {
            input,
            variant,
            measure,
            delta,
            norm,
            output,
        } => {
            let metric = norm.metric()?;
            let curve = parse_polyline(&read(&input)?)?;
            let result = simplify_with(variant, &curve, delta, metric, measure)?;
            if !result.validate(&curve, metric)? {
                return Err(CliError::Failed("the computed simplification failed re-validation".into()));
            }
            if let Some(path) = output {
                write(&path, &format_polyline(&curve.select(&result.indices)?))?;
            }
            emit(out, &to_json(&result))
        }
        Command::Distance {
            first,
            second,
            measure,
            delta,
            norm,
        } => {
            let metric = norm.metric()?;
            let (a, b) = (parse_polyline(&read(&first)?)?, parse_polyline(&read(&second)?)?);
            let (name, within) = match measure {
                Measure::Frechet => ("frechet", frechet_decide_polylines(&a, &b, delta, metric)?),
                Measure::Hausdorff => ("hausdorff", hausdorff_decide_polylines(&a, &b, delta, metric)?),
            };
            emit(
                out,
                &to_json(&DistanceReport {
                    measure: name,
                    delta,
                    p: metric.p,
                    within,
                }),
            )
        }
        Command::Cellreach { input } => {
            let inst = parse_cell_reach(&read(&input)?)?;
            emit(out, &to_json(&solve_cell_reachability(&inst)))
        }
        Command::GenHard {
            source,
            p,
            output,
            ov_output,
        } => {
            let inst = source.load()?;
            let hard = build_hard_curve(&inst, p.value())?;
            let header = format!("# delta = {:?}\n# p = {p}\n", hard.delta);
            write(&output, &(header + &format_polyline(&hard.curve)))?;
            if let Some(path) = ov_output {
                write(&path, &format_ov_instance(&inst))?;
            }
            let ov_answer = solve_ov_bruteforce(&inst);
            emit(
                out,
                &to_json(&HardReport {
                    vertices: hard.curve.len(),
                    dim: hard.curve.dim(),
                    delta: hard.delta,
                    p,
                    ov_answer,
                    expected_size: if ov_answer { 5 } else { 4 },
                }),
            )
        }
        Command::VerifyHard { source, p, grid } => {
            let inst = source.load()?;
            let report = verify_gadget_properties(&inst, p.value(), grid)?;
            emit(out, &to_json(&report))?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(CliError::Failed("some gadget properties do not hold".into()))
            }
        }
        Command::Bench {
            algo,
            sizes,
            trials,
            seed,
            output,
        } => {
            let rows = run_scaling_bench(algo, &sizes, trials, seed)?;
            let mut csv = String::from(BenchRow::HEADER);
            csv.push('\n');
            for row in &rows {
                csv.push_str(&row.to_csv());
                csv.push('\n');
            }
            match output {
                Some(path) => write(&path, &csv),
                None => emit(out, &csv),
            }
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also arrive here, on stdout with status 0.
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
