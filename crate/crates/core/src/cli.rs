//! The `esd` command-line front end.
//!
//! ```text
//! esd [curve|esd-time|selfcheck|dump-state] [--scenario qubit|qutrit|multilocal]
//!     [--x X] [--rate-a RATE] [--rate-b RATE] [--t-max T] [--steps N] [--out PATH]
//! ```
//!
//! Exit codes: 0 success, 1 usage, 2 numeric failure, 3 I/O.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::esd::{self, EsdReport, Scenario, ScenarioKind};
use crate::selfcheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;
pub const EXIT_IO: i32 = 3;

pub const CSV_HEADER: &str = "t,gamma_a,gamma_b,corner,negativity_numeric,negativity_analytic,min_pt_eigenvalue";

/// Bisection tolerance for `esd-time`.
const ESD_TIME_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Curve,
    EsdTime,
    SelfCheck,
    DumpState,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub scenario: ScenarioKind,
    pub x: f64,
    pub rate_a: f64,
    pub rate_b: f64,
    pub t_max: f64,
    pub steps: usize,
    /// `None` writes to stdout.
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Curve,
            scenario: ScenarioKind::QubitOnly,
            x: 0.25,
            rate_a: 1.0,
            rate_b: 1.0,
            t_max: 4.0,
            steps: 101,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn scenario(&self) -> Result<Scenario, Error> {
        Scenario::new(self.scenario, self.x, self.rate_a, self.rate_b)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Qubit,
    Qutrit,
    Multilocal,
}

impl From<ScenarioArg> for ScenarioKind {
    fn from(s: ScenarioArg) -> Self {
        match s {
            ScenarioArg::Qubit => ScenarioKind::QubitOnly,
            ScenarioArg::Qutrit => ScenarioKind::QutritOnly,
            ScenarioArg::Multilocal => ScenarioKind::MultiLocal,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "esd",
    version,
    allow_negative_numbers = true,
    about = "Entanglement sudden death of a qubit-qutrit state under local dephasing"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Which subsystems dephase.
    #[arg(long, value_enum, default_value = "qubit", global = true)]
    scenario: ScenarioArg,

    /// Initial corner coherence of the state family, in [0, 0.25].
    #[arg(long, default_value_t = 0.25, value_parser = parse_x, global = true)]
    x: f64,

    /// Qubit dephasing rate.
    #[arg(long = "rate-a", default_value_t = 1.0, value_parser = parse_rate, global = true)]
    rate_a: f64,

    /// Qutrit dephasing rate.
    #[arg(long = "rate-b", default_value_t = 1.0, value_parser = parse_rate, global = true)]
    rate_b: f64,

    /// Last time of the curve grid; evaluation time for dump-state.
    #[arg(long = "t-max", default_value_t = 4.0, value_parser = parse_t_max, global = true)]
    t_max: f64,

    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 101, value_parser = parse_steps, global = true)]
    steps: usize,

    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the negativity curve as CSV (default).
    Curve,
    /// Print closed-form and bisection disentanglement times.
    EsdTime,
    /// Run the numeric consistency checks.
    Selfcheck,
    /// Write the evolved state at t-max in text matrix format.
    DumpState,
}

fn parse_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("not a number: {e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err("must be finite".into())
    }
}

fn parse_x(s: &str) -> Result<f64, String> {
    let x = parse_f64(s)?;
    if (0.0..=0.25).contains(&x) {
        Ok(x)
    } else {
        Err(format!(
            "{x} is outside [0, 0.25]; the state is only positive semi-definite for 0 <= x <= 1/4"
        ))
    }
}

fn parse_rate(s: &str) -> Result<f64, String> {
    let r = parse_f64(s)?;
    if r >= 0.0 {
        Ok(r)
    } else {
        Err(format!("{r} is negative; dephasing rates must be >= 0"))
    }
}

fn parse_t_max(s: &str) -> Result<f64, String> {
    let t = parse_f64(s)?;
    if t > 0.0 {
        Ok(t)
    } else {
        Err(format!("{t} must be > 0"))
    }
}

fn parse_steps(s: &str) -> Result<usize, String> {
    let n: usize = s.trim().parse().map_err(|e| format!("not a count: {e}"))?;
    if n >= 2 {
        Ok(n)
    } else {
        Err(format!("{n} is too small; need at least 2 grid points"))
    }
}

/// Parsed command line, or the text clap produced and whether it was a
/// `--help`/`--version` request rather than an error.
#[derive(Debug)]
pub struct UsageError {
    pub message: String,
    pub is_info: bool,
}

/// Parses `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        message: e.render().to_string(),
        is_info: matches!(
            e.kind(),
            clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion
                | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
        ),
    })?;
    let mode = match cli.command {
        None | Some(Command::Curve) => Mode::Curve,
        Some(Command::EsdTime) => Mode::EsdTime,
        Some(Command::Selfcheck) => Mode::SelfCheck,
        Some(Command::DumpState) => Mode::DumpState,
    };
    Ok(RunConfig {
        mode,
        scenario: cli.scenario.into(),
        x: cli.x,
        rate_a: cli.rate_a,
        rate_b: cli.rate_b,
        t_max: cli.t_max,
        steps: cli.steps,
        out: cli.out,
    })
}

/// Formats a float with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write + ?Sized>(report: &EsdReport, w: &mut W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in &report.curve {
        let fields = [
            row.t,
            row.gamma_a,
            row.gamma_b,
            row.corner,
            row.negativity_numeric,
            row.negativity_analytic,
            row.min_pt_eigenvalue,
        ];
        let line: Vec<String> = fields.iter().map(|&v| fmt_f64(v)).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}

enum Failure {
    Numeric(Error),
    Io(io::Error),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Executes `config`, writing reports to `stdout` (or `--out`) and diagnostics
/// to `stderr`. Returns the process exit code.
pub fn run<W: Write, E: Write>(config: &RunConfig, stdout: &mut W, stderr: &mut E) -> i32 {
    match execute(config, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::ChecksFailed) => {
            let _ = writeln!(stderr, "esd: self-check failed");
            EXIT_NUMERIC
        }
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(stderr, "esd: {e}");
            EXIT_NUMERIC
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "esd: I/O error: {e}");
            EXIT_IO
        }
    }
}

fn with_output<W: Write>(
    config: &RunConfig,
    stdout: &mut W,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    match &config.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            body(&mut w)?;
            w.flush()?;
        }
        None => body(stdout)?,
    }
    Ok(())
}

fn execute<W: Write>(config: &RunConfig, stdout: &mut W) -> Result<(), Failure> {
    let scenario = config.scenario()?;
    match config.mode {
        Mode::Curve => {
            let report = esd::sweep(&scenario, &esd::uniform_grid(config.t_max, config.steps))?;
            with_output(config, stdout, |w| write_csv(&report, w))
        }
        Mode::DumpState => {
            let rho = esd::evolve(&scenario, config.t_max)?;
            with_output(config, stdout, |w| w.write_all(rho.to_text().as_bytes()))
        }
        Mode::EsdTime => {
            let analytic = esd::analytic_esd_time(&scenario);
            let numeric = esd::numeric_esd_time_default(&scenario, ESD_TIME_TOL)?;
            with_output(config, stdout, |w| {
                writeln!(w, "scenario {}", scenario.kind())?;
                writeln!(w, "analytic {analytic}")?;
                writeln!(w, "numeric {numeric}")?;
                match (analytic.time(), numeric.time()) {
                    (Some(a), Some(n)) => writeln!(w, "difference {:.3e}", (a - n).abs()),
                    _ => Ok(()),
                }
            })
        }
        Mode::SelfCheck => {
            let checks = selfcheck::run_all(config.x, config.rate_a, config.rate_b)?;
            with_output(config, stdout, |w| {
                for c in &checks {
                    writeln!(w, "{c}")?;
                }
                Ok(())
            })?;
            if checks.iter().all(|c| c.passed) {
                Ok(())
            } else {
                Err(Failure::ChecksFailed)
            }
        }
    }
}

/// Parses and runs; the body of the `esd` binary.
pub fn main_with_args<I, T, W, E>(argv: I, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    match parse_args(argv) {
        Ok(config) => run(&config, stdout, stderr),
        Err(usage) if usage.is_info => {
            let _ = write!(stdout, "{}", usage.message);
            EXIT_OK
        }
        Err(usage) => {
            let _ = write!(stderr, "{}", usage.message);
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, UsageError> {
        parse_args(std::iter::once("esd").chain(args.iter().copied()))
    }

    #[test]
    fn defaults() {
        assert_eq!(parse(&[]).unwrap(), RunConfig::default());
    }

    #[test]
    fn curve_multilocal() {
        let c = parse(&["curve", "--scenario", "multilocal", "--x", "0.25"]).unwrap();
        assert_eq!(c.mode, Mode::Curve);
        assert_eq!(c.scenario, ScenarioKind::MultiLocal);
        assert_eq!(c.x, 0.25);
    }

    #[test]
    fn flags_before_subcommand() {
        let c = parse(&["--rate-a", "2", "esd-time", "--scenario", "qutrit"]).unwrap();
        assert_eq!(c.mode, Mode::EsdTime);
        assert_eq!(c.rate_a, 2.0);
        assert_eq!(c.scenario, ScenarioKind::QutritOnly);
    }

    #[test]
    fn usage_errors_name_flag() {
        let e = parse(&["--x", "0.3"]).unwrap_err();
        assert!(!e.is_info);
        assert!(e.message.contains("--x"), "{}", e.message);
        assert!(e.message.contains("positive semi-definite"), "{}", e.message);

        for (flag, value) in [("--rate-a", "-1"), ("--t-max", "0"), ("--steps", "1")] {
            let e = parse(&[flag, value]).unwrap_err();
            assert!(e.message.contains(flag), "{}", e.message);
        }
        let e = parse(&["--bogus"]).unwrap_err();
        assert!(e.message.contains("--bogus"));
        assert!(parse(&["--scenario", "both"]).is_err());
    }

    #[test]
    fn help_is_info() {
        assert!(parse(&["--help"]).unwrap_err().is_info);
    }

    #[test]
    fn exit_codes() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(main_with_args(["esd", "--x", "0.3"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(main_with_args(["esd", "--help"], &mut out, &mut err), EXIT_OK);
    }
}
