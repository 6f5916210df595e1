//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 no common signal,
//! 3 correlations not ideal for three-signal extraction.

mod report;
mod table;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use report::Report;
pub use table::CsvTable;

use crate::error::SignalError;
use crate::synth::{self, BackgroundKind, ScenarioSpec};
use crate::three_signal::{self, DEFAULT_IDEALITY_TOL};
use crate::two_signal::{self, TwoSignalObservation};
use crate::validation::{self, ValidationConfig, PUBLISHED_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_COMMON_SIGNAL: i32 = 2;
pub const EXIT_NOT_IDEAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Signal(#[from] SignalError),
    /// Reported already; carries the ratios for the exit code.
    #[error("{0}")]
    NotIdeal(SignalError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Signal(SignalError::NoCommonSignal) => EXIT_NO_COMMON_SIGNAL,
            CliError::Signal(SignalError::NotIdeal { .. }) | CliError::NotIdeal(_) => EXIT_NOT_IDEAL,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "common-signal", version, about = "Extract the best obtainable common signal from correlated series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a synthetic scenario (sine common signal) as CSV.
    Synth(SynthArgs),
    /// Extract the common signal of two columns.
    Extract2(Extract2Args),
    /// Extract the common signal of three columns.
    Extract3(Extract3Args),
    /// Reproduce the two-signal validation table and figure data.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Cosine,
    Gaussian,
}

impl From<Kind> for BackgroundKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cosine => BackgroundKind::DoublePeriodCosine,
            Kind::Gaussian => BackgroundKind::GaussianWhiteNoise,
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SynthArgs {
    #[arg(long, default_value_t = synth::DEFAULT_SAMPLES)]
    pub n: usize,
    #[arg(long, default_value_t = synth::DEFAULT_PERIODS)]
    pub periods: f64,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub beta1: f64,
    #[arg(long)]
    pub beta2: f64,
    #[arg(long, requires = "beta3")]
    pub alpha3: Option<f64>,
    #[arg(long, requires = "alpha3")]
    pub beta3: Option<f64>,
    #[arg(long, value_enum, default_value_t = Kind::Cosine)]
    pub kind1: Kind,
    #[arg(long, value_enum, default_value_t = Kind::Gaussian)]
    pub kind2: Kind,
    #[arg(long, value_enum, default_value_t = Kind::Gaussian)]
    pub kind3: Kind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct Extract2Args {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "S1")]
    pub col1: String,
    #[arg(long, default_value = "S2")]
    pub col2: String,
    /// Assume both signals hold equal shares of common signal (default).
    #[arg(long, conflicts_with = "gamma1")]
    pub symmetric: bool,
    /// Prior correlation of the first signal with the common signal.
    #[arg(long)]
    pub gamma1: Option<f64>,
    #[arg(long, default_value_t = 1e-6)]
    pub zero_tol: f64,
    /// Write the input columns plus S_best here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Extract3Args {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "S1")]
    pub col1: String,
    #[arg(long, default_value = "S2")]
    pub col2: String,
    #[arg(long, default_value = "S3")]
    pub col3: String,
    #[arg(long, default_value_t = DEFAULT_IDEALITY_TOL)]
    pub ideality_tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub zero_tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 20)]
    pub seeds: usize,
    #[arg(long, default_value_t = synth::DEFAULT_SAMPLES)]
    pub n: usize,
    #[arg(long, default_value_t = synth::DEFAULT_PERIODS)]
    pub periods: f64,
    /// First seed; seed k of each row is `seed + k`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Figure data CSV (A, S1, S2, S_best).
    #[arg(long, default_value = "figure1.csv")]
    pub plot_out: PathBuf,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Synth(a) => cmd_synth(&a),
        Command::Extract2(a) => emit(out, &cmd_extract2(&a)?, a.json),
        Command::Extract3(a) => match cmd_extract3(&a) {
            Ok(report) => emit(out, &report, a.json),
            Err((report, e)) => {
                if let Some(report) = report {
                    emit(out, &report, a.json)?;
                }
                Err(e)
            }
        },
        Command::Validate(a) => emit(out, &cmd_validate(&a)?, a.json),
    }
}

fn emit(out: &mut dyn Write, report: &Report, json: bool) -> Result<(), CliError> {
    report.check()?;
    out.write_all(report.render(json).as_bytes()).map_err(|e| CliError::Io(e.to_string()))
}

pub fn cmd_synth(a: &SynthArgs) -> Result<(), CliError> {
    let mut spec = ScenarioSpec {
        n: a.n,
        periods: a.periods,
        alphas: vec![1.0, a.alpha],
        betas: vec![a.beta1, a.beta2],
        background_kinds: vec![a.kind1.into(), a.kind2.into()],
        seed: a.seed,
    };
    if let (Some(alpha3), Some(beta3)) = (a.alpha3, a.beta3) {
        spec.alphas.push(alpha3);
        spec.betas.push(beta3);
        spec.background_kinds.push(a.kind3.into());
    }
    let sc = synth::generate(&spec)?;
    let k = sc.signals.len();
    let b_names: Vec<String> = (1..=k).map(|j| format!("B{j}")).collect();
    let s_names: Vec<String> = (1..=k).map(|j| format!("S{j}")).collect();
    let mut named = vec![("A", &sc.a)];
    named.extend(b_names.iter().map(String::as_str).zip(&sc.backgrounds));
    named.extend(s_names.iter().map(String::as_str).zip(&sc.signals));
    CsvTable::from_series(named)?.write_path(&a.out)
}

pub fn cmd_extract2(a: &Extract2Args) -> Result<Report, CliError> {
    let mut table = CsvTable::read_path(&a.input)?;
    let obs = TwoSignalObservation::new(table.series(&a.col1)?, table.series(&a.col2)?)?;
    if obs.gamma12().abs() <= a.zero_tol {
        return Err(SignalError::NoCommonSignal.into());
    }

    let mut report = Report::new();
    report
        .text("mode", if a.gamma1.is_some() { "parametric" } else { "symmetric" })
        .int("rows", table.rows() as u64)
        .num("gamma12", obs.gamma12())
        .num("sigma1", obs.sigma1())
        .num("sigma2", obs.sigma2());

    let result = match a.gamma1 {
        Some(g1) => {
            let model = two_signal::invert_model(&obs, g1)?;
            report
                .num("alpha", model.alpha())
                .num("beta1", model.beta1())
                .num("beta2", model.beta2())
                .num("sigma", model.sigma());
            two_signal::parametric_extract(&obs, g1)?
        }
        None => two_signal::symmetric_extract(&obs)?,
    };
    report
        .num("gamma1", result.gamma1)
        .num("gamma2", result.gamma2)
        .num("w1", result.weights.w1)
        .num("w2", result.weights.w2)
        .num("gamma_best", result.gamma_best);

    if let Some(path) = &a.out {
        let best = result.s_best.expect("series-backed extraction");
        table.set_column("S_best", best.into_vec())?;
        table.write_path(path)?;
        report.text("s_best_path", path.display().to_string());
    }
    Ok(report)
}

/// On failure, returns the report to print (if any) along with the error.
pub fn cmd_extract3(a: &Extract3Args) -> Result<Report, (Option<Report>, CliError)> {
    let plain = |e: CliError| (None, e);
    let mut table = CsvTable::read_path(&a.input).map_err(plain)?;
    let cols = [&a.col1, &a.col2, &a.col3];
    let series = cols
        .iter()
        .map(|c| table.series(c))
        .collect::<Result<Vec<_>, _>>()
        .map_err(plain)?;
    let c = three_signal::pairwise_correlations(&series[0], &series[1], &series[2])
        .map_err(|e| plain(e.into()))?;
    if [c.gamma12, c.gamma13, c.gamma23].iter().any(|g| g.abs() <= a.zero_tol) {
        return Err(plain(SignalError::NoCommonSignal.into()));
    }

    let mut report = Report::new();
    report
        .int("rows", table.rows() as u64)
        .num("gamma12", c.gamma12)
        .num("gamma13", c.gamma13)
        .num("gamma23", c.gamma23)
        .num("sigma1", c.sigmas[0])
        .num("sigma2", c.sigmas[1])
        .num("sigma3", c.sigmas[2]);

    let ideality = three_signal::check_ideality(&c, a.ideality_tol);
    report.flag("ideal", ideality.ideal).flag("sign_consistent", ideality.sign_consistent);
    for (j, g) in ideality.gammas_sq.iter().enumerate() {
        report.num(format!("gamma{}_sq", j + 1), *g);
    }
    if !ideality.ideal {
        let e = SignalError::NotIdeal { gammas_sq: ideality.gammas_sq, sign_consistent: ideality.sign_consistent };
        return Err((Some(report), CliError::NotIdeal(e)));
    }

    let sol = three_signal::extract3(&series[0], &series[1], &series[2], a.ideality_tol)
        .map_err(|e| (None, e.into()))?;
    for j in 0..3 {
        report.num(format!("beta{}_sq", j + 1), sol.betas_sq[j]);
    }
    report
        .num("alpha2", sol.alphas[1])
        .num("alpha3", sol.alphas[2])
        .num("sigma", sol.sigma)
        .num("w1", sol.weights[0])
        .num("w2", sol.weights[1])
        .num("w3", sol.weights[2])
        .num("gamma_best", sol.gamma_best)
        .flag("degenerate_background", sol.degenerate_background);

    if let Some(path) = &a.out {
        let best = sol.s_best.expect("series-backed extraction");
        table.set_column("S_best", best.into_vec()).map_err(plain)?;
        table.write_path(path).map_err(plain)?;
        report.text("s_best_path", path.display().to_string());
    }
    Ok(report)
}

pub fn cmd_validate(a: &ValidateArgs) -> Result<Report, CliError> {
    if a.seeds == 0 {
        return Err(CliError::Usage("--seeds must be at least 1".into()));
    }
    let cfg = ValidationConfig { n: a.n, periods: a.periods, seeds: a.seeds, base_seed: a.seed };
    let rows = validation::run_table(&cfg)?;

    let mut report = Report::new();
    report
        .int("n", a.n as u64)
        .num("periods", a.periods)
        .int("seeds", a.seeds as u64)
        .int("base_seed", a.seed)
        .num("tolerance", PUBLISHED_TOLERANCE);
    for (i, r) in rows.iter().enumerate() {
        let p = format!("row{}.", i + 1);
        let key = |s: &str| format!("{p}{s}");
        report
            .num(key("alpha"), r.published.alpha)
            .num(key("beta1"), r.published.beta1)
            .num(key("beta2"), r.published.beta2);
        for (name, published, measured, predicted) in [
            ("gamma1", r.published.gamma1, r.measured.gamma1, r.predicted.gamma1),
            ("gamma2", r.published.gamma2, r.measured.gamma2, r.predicted.gamma2),
            ("gamma_best", r.published.gamma_best, r.measured.gamma_best, r.predicted.gamma_best),
        ] {
            report
                .num(key(&format!("{name}.published")), published)
                .num(key(&format!("{name}.measured")), measured)
                .num(key(&format!("{name}.predicted")), predicted);
        }
        report
            .flag(key("within_tolerance"), r.within(PUBLISHED_TOLERANCE))
            .int(key("seeds_worse_than_s1"), r.worse_than_s1 as u64)
            .flag(key("gamma_best_below_gamma1"), r.anomaly());
    }

    let fig = validation::figure(&cfg)?;
    CsvTable::from_series(vec![("A", &fig.a), ("S1", &fig.s1), ("S2", &fig.s2), ("S_best", &fig.s_best)])?
        .write_path(&a.plot_out)?;
    report
        .num("figure.w1", fig.weights.w1)
        .num("figure.w2", fig.weights.w2)
        .text("figure.path", a.plot_out.display().to_string());
    Ok(report)
}
