//! Command-line front end: interval construction, the success-rate
//! experiments, and plot-ready data emission.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coverage_lab::bayes::TruncatedGaussianPosterior;
use coverage_lab::model::MeasurementModel;
use coverage_lab::montecarlo::{
    self, ExperimentReport, RandomStream, DEFAULT_RESAMPLE_CAP,
};
use coverage_lab::neyman::{self, BoundaryPolicy, QuantileConstraint};

#[derive(Debug, Parser)]
#[command(
    name = "covlab",
    about = "Neyman and Bayesian interval estimation for a positive Gaussian measurand, \
             with Monte Carlo success-rate experiments",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a single interval from a measured value
    Interval(IntervalArgs),
    /// Run a success-rate experiment over a grid and emit its data
    Experiment(ExperimentArgs),
    /// Emit joint (a, x) scatter draws
    Scatter(ScatterArgs),
    /// Check that a CSV file emitted by this tool parses against its schema
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IntervalKind {
    Neyman,
    Bayes,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    AllowNegative,
    Clip,
    FlipFlop,
}

impl PolicyArg {
    fn to_policy(self) -> BoundaryPolicy {
        match self {
            PolicyArg::AllowNegative => BoundaryPolicy::AllowNegative,
            PolicyArg::Clip => BoundaryPolicy::ClipToZero,
            PolicyArg::FlipFlop => BoundaryPolicy::flip_flop_default(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct QuantileArgs {
    /// Lower tail probability (default: exact Phi(-1))
    #[arg(long)]
    q_lo: Option<f64>,
    /// Upper tail probability (default: exact Phi(1))
    #[arg(long)]
    q_hi: Option<f64>,
    /// Use the two-digit rounded tails (0.16, 0.84)
    #[arg(long, conflicts_with_all = ["q_lo", "q_hi"])]
    rounded_quantiles: bool,
}

impl QuantileArgs {
    fn constraint(&self) -> Result<QuantileConstraint, coverage_lab::Error> {
        if self.rounded_quantiles {
            return Ok(QuantileConstraint::rounded_one_sigma());
        }
        let default = QuantileConstraint::central_one_sigma();
        QuantileConstraint::new(
            self.q_lo.unwrap_or(default.q_lo()),
            self.q_hi.unwrap_or(default.q_hi()),
        )
    }
}

#[derive(Debug, Args)]
struct IntervalArgs {
    #[arg(value_enum)]
    kind: IntervalKind,
    /// Measured value, in units of u
    #[arg(long, allow_hyphen_values = true)]
    x0: f64,
    #[arg(long, value_enum, default_value = "allow-negative")]
    policy: PolicyArg,
    #[command(flatten)]
    quantiles: QuantileArgs,
    /// Standard uncertainty used to rescale the output
    #[arg(long, default_value_t = 1.0)]
    u: f64,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExperimentName {
    /// Fixed-measurand coverage of confidence intervals
    Fig3,
    /// Fixed-measurand coverage with negative intervals rejected
    Fig3Reject,
    /// Fixed-result success rate of one credible interval
    Fig4,
    /// Fixed-result success rate of one confidence interval
    Fig4Neyman,
    /// Fixed-measurand success rate of credible intervals
    Fig5,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    name: ExperimentName,
    /// First grid value (a0/u or x0/u depending on the experiment)
    #[arg(long, allow_hyphen_values = true)]
    start: f64,
    /// Last grid value (inclusive)
    #[arg(long, allow_hyphen_values = true)]
    stop: f64,
    #[arg(long)]
    step: f64,
    #[arg(long, default_value_t = 1_000_000)]
    n_trials: u64,
    #[arg(long, env = "COVLAB_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "allow-negative")]
    policy: PolicyArg,
    /// Seed measurand for the shift sampler (fig4, fig4-neyman)
    #[arg(long, default_value_t = 1.0)]
    a_seed: f64,
    /// Per-trial resampling cap for the rejection experiments
    #[arg(long, default_value_t = DEFAULT_RESAMPLE_CAP)]
    cap: u64,
    #[command(flatten)]
    quantiles: QuantileArgs,
    #[arg(long, default_value_t = 1.0)]
    u: f64,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Worker threads (defaults to all cores); results do not depend on it
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct ScatterArgs {
    /// Number of (a, x) pairs
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, default_value_t = 4.0)]
    a_max: f64,
    #[arg(long, env = "COVLAB_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    u: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    /// CSV file previously emitted by `experiment` or `scatter`
    #[arg(long)]
    file: PathBuf,
}

#[derive(Debug, serde::Serialize)]
struct ExperimentRow {
    grid_value: f64,
    rate: f64,
    std_err: f64,
    n_trials: u64,
    analytic: Option<f64>,
    seed: u64,
}

pub const EXPERIMENT_HEADER: &str = "grid_value,rate,std_err,n_trials,analytic,seed";
pub const SCATTER_HEADER: &str = "a,x";

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

#[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
fn grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, String> {
    if !(step > 0.0) {
        return Err(format!("--step must be positive, got {step}"));
    }
    if start > stop {
        return Err(format!("--start {start} exceeds --stop {stop}"));
    }
    let mut points = vec![];
    let mut i = 0u64;
    loop {
        let v = start + i as f64 * step;
        if v > stop + 1e-9 * step {
            break;
        }
        points.push(v);
        i += 1;
    }
    Ok(points)
}

fn run_experiment(args: &ExperimentArgs) -> Result<(), Box<dyn std::error::Error>> {
    let points = grid(args.start, args.stop, args.step).map_err(usage_error)?;
    if args.n_trials == 0 {
        return Err(usage_error("--n-trials must be >= 1".to_string()).into());
    }
    let model = MeasurementModel::default();
    let c = args.quantiles.constraint()?;
    let policy = args.policy.to_policy();

    let run = || -> Result<Vec<ExperimentRow>, coverage_lab::Error> {
        points
            .iter()
            .enumerate()
            .map(|(i, &g)| {
                let stream = RandomStream::new(args.seed, (i as u64) << 32);
                let report: ExperimentReport = match args.name {
                    ExperimentName::Fig3 => montecarlo::run_fixed_measurand(
                        &model,
                        g,
                        &c,
                        policy,
                        args.n_trials,
                        &stream,
                    )?,
                    ExperimentName::Fig3Reject => {
                        montecarlo::run_fixed_measurand_rejecting_negative(
                            &model,
                            g,
                            &c,
                            args.n_trials,
                            args.cap,
                            &stream,
                        )?
                    }
                    ExperimentName::Fig4 => montecarlo::run_fixed_result(
                        &model,
                        g,
                        &c,
                        args.a_seed,
                        args.n_trials,
                        args.cap,
                        &stream,
                    )?,
                    ExperimentName::Fig4Neyman => montecarlo::run_fixed_result_neyman(
                        &model,
                        g,
                        &c,
                        policy,
                        args.a_seed,
                        args.n_trials,
                        args.cap,
                        &stream,
                    )?,
                    ExperimentName::Fig5 => {
                        montecarlo::run_willink(&model, g, &c, args.n_trials, &stream)?
                    }
                };
                Ok(ExperimentRow {
                    grid_value: g * args.u,
                    rate: report.rate,
                    std_err: report.std_err,
                    n_trials: report.n_trials,
                    analytic: report.analytic,
                    seed: args.seed,
                })
            })
            .collect()
    };

    let rows = match args.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()?
            .install(run),
        None => run(),
    }?;

    let body = match args.format {
        OutputFormat::Csv => {
            let mut s = String::from(EXPERIMENT_HEADER);
            s.push('\n');
            for r in &rows {
                writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.grid_value,
                    r.rate,
                    r.std_err,
                    r.n_trials,
                    fmt_opt(r.analytic),
                    r.seed
                )
                .unwrap();
            }
            s
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            s
        }
    };
    emit(&args.out, &body)
}

fn run_interval(args: &IntervalArgs) -> Result<(), Box<dyn std::error::Error>> {
    let model = MeasurementModel::default();
    let c = args.quantiles.constraint()?;
    let (lo, hi, coverage) = match args.kind {
        IntervalKind::Neyman => {
            let iv = neyman::confidence_interval(&model, args.x0, &c, args.policy.to_policy())?;
            let cov = neyman::coverage_probability_given_x0(&model, &iv, args.x0);
            (iv.lo, iv.hi, Some(cov))
        }
        IntervalKind::Bayes => {
            let posterior = TruncatedGaussianPosterior::new(args.x0, model.u())?;
            let iv = posterior.credible_interval(&c)?;
            (iv.lo, iv.hi, None)
        }
    };
    match args.format {
        Some(OutputFormat::Json) => {
            let record = serde_json::json!({
                "kind": match args.kind { IntervalKind::Neyman => "neyman", IntervalKind::Bayes => "bayes" },
                "x0": args.x0 * args.u,
                "lo": lo * args.u,
                "hi": hi * args.u,
                "coverage_given_x0": coverage,
                "q_lo": c.q_lo(),
                "q_hi": c.q_hi(),
                "alpha": c.alpha(),
            });
            println!("{record}");
        }
        _ => {
            print!("lo={} hi={}", lo * args.u, hi * args.u);
            if let Some(cov) = coverage {
                print!(" coverage_given_x0={cov}");
            }
            println!(" q_lo={} q_hi={} alpha={}", c.q_lo(), c.q_hi(), c.alpha());
        }
    }
    Ok(())
}

fn run_scatter(args: &ScatterArgs) -> Result<(), Box<dyn std::error::Error>> {
    let model = MeasurementModel::default();
    let stream = RandomStream::new(args.seed, 0);
    let pairs = montecarlo::sample_joint(&model, args.n, args.a_max, &stream)?;
    let mut s = String::from(SCATTER_HEADER);
    s.push('\n');
    for (a, x) in pairs {
        writeln!(s, "{},{}", a * args.u, x * args.u).unwrap();
    }
    emit(&args.out, &s)
}

fn run_validate(args: &ValidateArgs) -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(&args.file)?;
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty file")?;
    let mut rows = 0usize;
    match header {
        EXPERIMENT_HEADER => {
            for (i, line) in lines.enumerate() {
                let fields: Vec<&str> = line.split(',').collect();
                if fields.len() != 6 {
                    return Err(format!("row {}: expected 6 fields, got {}", i + 1, fields.len()).into());
                }
                let parse = |j: usize| -> Result<f64, String> {
                    fields[j]
                        .parse()
                        .map_err(|e| format!("row {}: field {}: {e}", i + 1, j + 1))
                };
                let rate = parse(1)?;
                let std_err = parse(2)?;
                parse(0)?;
                let n: u64 = fields[3]
                    .parse()
                    .map_err(|e| format!("row {}: n_trials: {e}", i + 1))?;
                if !fields[4].is_empty() {
                    parse(4)?;
                }
                fields[5]
                    .parse::<u64>()
                    .map_err(|e| format!("row {}: seed: {e}", i + 1))?;
                if !(0.0..=1.0).contains(&rate) || std_err < 0.0 || n == 0 {
                    return Err(format!("row {}: values violate the schema invariants", i + 1).into());
                }
                rows += 1;
            }
        }
        SCATTER_HEADER => {
            for (i, line) in lines.enumerate() {
                let fields: Vec<&str> = line.split(',').collect();
                if fields.len() != 2 {
                    return Err(format!("row {}: expected 2 fields", i + 1).into());
                }
                for f in fields {
                    f.parse::<f64>()
                        .map_err(|e| format!("row {}: {e}", i + 1))?;
                }
                rows += 1;
            }
        }
        other => return Err(format!("unrecognized header: {other}").into()),
    }
    println!("ok: {rows} rows");
    Ok(())
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Box<dyn std::error::Error>> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn usage_error(msg: String) -> clap::Error {
    clap::Error::raw(clap::error::ErrorKind::InvalidValue, format!("{msg}\n"))
}

pub fn run() -> std::process::ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Interval(args) => run_interval(args),
        Command::Experiment(args) => run_experiment(args),
        Command::Scatter(args) => run_scatter(args),
        Command::Validate(args) => run_validate(args),
    };
    match result {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            if let Some(clap_err) = e.downcast_ref::<clap::Error>() {
                clap_err.print().ok();
                std::process::ExitCode::from(2)
            } else {
                eprintln!("error: {e}");
                std::process::ExitCode::from(1)
            }
        }
    }
}
