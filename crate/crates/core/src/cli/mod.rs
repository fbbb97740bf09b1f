//! Command-line front end. [`run`] takes the argument vector and returns the
//! process exit code; the binary is a one-line wrapper around it.
//!
//! Exit codes: 0 when every check passes, 1 on a failed verification, 2 on
//! a parse or configuration error, 3 when the work budget runs out.

mod report;
mod selftest;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Budget, Error};
use crate::games::{optimal_play, verify_optimal_play, Game};
use crate::oracles::{brute_force_play, verify_ramsey_condition};
use crate::ramsey::colouring::{
    MatrixColouring, PairColouring, ParityColouring, SeededColouring, ZeroColouring,
};
use crate::ramsey::pipeline::{run_pipeline, CounterexampleSpec};
use crate::selection::{argmax_bool, argmin_bool, ConstControl, Constant, Evaluator, SelectionFamily, Selection};

pub use report::{CounterReport, SolveReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "eps-ramsey",
    version,
    about = "Finitary Ramsey witnesses from products of selection functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SelectionKind {
    Argmax,
    Argmin,
    Const0,
    Const1,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute x and F for a colouring and a counterexample functional, then verify them.
    Solve {
        /// formula:zero, formula:parity, seed:<u64> or matrix:<path>
        #[arg(long)]
        colouring: String,
        /// const:<k>, xswitch:<k0>:<k1> or fmax:<m>:<cap>
        #[arg(long)]
        eta: String,
        #[arg(long, default_value_t = Budget::DEFAULT_LIMIT)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        out: OutputFormat,
        /// Include wall-clock time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Re-check a witness written by `solve --out json`.
    Verify {
        #[arg(long)]
        witness: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        out: OutputFormat,
    },
    /// Solve a finite binary game given by its outcome table and check the play.
    Game {
        /// Outcomes of all 2^d plays of length d, first move most significant.
        #[arg(long, value_delimiter = ',', required = true)]
        outcomes: Vec<i64>,
        #[arg(long, value_enum, default_value_t = SelectionKind::Argmax)]
        selection: SelectionKind,
    },
    /// Run the oracle-equivalence and invariant checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A parsed `--colouring` argument.
#[derive(Debug)]
pub enum ColouringSpec {
    Zero(ZeroColouring),
    Parity(ParityColouring),
    Seeded(SeededColouring),
    Matrix(MatrixColouring),
}

impl ColouringSpec {
    pub fn colouring(&self) -> &dyn PairColouring {
        match self {
            ColouringSpec::Zero(c) => c,
            ColouringSpec::Parity(c) => c,
            ColouringSpec::Seeded(c) => c,
            ColouringSpec::Matrix(c) => c,
        }
    }
}

impl FromStr for ColouringSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once(':') {
            Some(("formula", "zero")) => Ok(ColouringSpec::Zero(ZeroColouring)),
            Some(("formula", "parity")) => Ok(ColouringSpec::Parity(ParityColouring)),
            Some(("seed", n)) => n
                .parse()
                .map(|seed| ColouringSpec::Seeded(SeededColouring::new(seed)))
                .map_err(|e| Error::parse(format!("bad seed {n:?}: {e}"))),
            Some(("matrix", path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("cannot read {path}: {e}")))?;
                MatrixColouring::parse(&text)
                    .map(ColouringSpec::Matrix)
                    .map_err(|e| Error::parse(format!("{path}: {e}")))
            }
            _ => Err(Error::parse(format!(
                "unknown colouring {s:?}; expected formula:zero, formula:parity, seed:<u64> or matrix:<path>"
            ))),
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve {
            colouring,
            eta,
            budget,
            out: format,
            timing,
        } => solve(&colouring, &eta, budget, format, timing, out),
        Command::Verify {
            witness,
            out: format,
        } => verify(&witness, format, out),
        Command::Game {
            outcomes,
            selection,
        } => game(&outcomes, selection, out),
        Command::Selftest { seed } => selftest::run(seed, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Parse(_) | Error::Io(_) => EXIT_CONFIG,
        _ => EXIT_FAILED,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn solve(
    colouring: &str,
    eta: &str,
    budget: u64,
    format: OutputFormat,
    timing: bool,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    if budget == 0 {
        return Err(Error::parse("--budget must be positive"));
    }
    let spec: ColouringSpec = colouring.parse()?;
    let eta_spec: CounterexampleSpec = eta.parse()?;
    let start = Instant::now();
    let (result, counters) = run_pipeline(spec.colouring(), &eta_spec, Budget::new(budget));
    let elapsed_ms = timing.then(|| start.elapsed().as_millis() as u64);
    let counters = CounterReport::new(counters, elapsed_ms);
    match result {
        Ok(w) => {
            let report = SolveReport {
                colouring: colouring.to_string(),
                eta: eta_spec.to_string(),
                budget,
                x: w.colour,
                f: w.f,
                eta_value: w.eta_value,
                verified: w.report.pass,
                first_violation: w.report.first_violation,
                checks_performed: w.report.checks_performed,
                counters,
            };
            report.write(format, out).map_err(io)?;
            Ok(if report.verified { EXIT_OK } else { EXIT_FAILED })
        }
        Err(Error::BudgetExceeded { used, limit }) => {
            report::write_partial(colouring, &eta_spec, budget, &counters, format, out).map_err(io)?;
            Err(Error::BudgetExceeded { used, limit })
        }
        Err(e) => Err(e),
    }
}

fn verify(path: &PathBuf, format: OutputFormat, out: &mut dyn Write) -> Result<i32, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    let stored: SolveReport = serde_json::from_str(&text)
        .map_err(|e| Error::parse(format!("{}: {e}", path.display())))?;
    let spec: ColouringSpec = stored.colouring.parse()?;
    let eta: CounterexampleSpec = stored.eta.parse()?;
    let report = match verify_ramsey_condition(spec.colouring(), stored.x, &stored.f, &eta) {
        Ok(r) => r,
        Err(Error::TableTooShort { index, len }) => {
            writeln!(out, "witness table has {len} entries; index {index} is required").map_err(io)?;
            return Ok(EXIT_FAILED);
        }
        Err(e) => return Err(e),
    };
    report::write_verification(&report, format, out).map_err(io)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
}

/// Selection at every position, chosen on the command line.
struct FixedFamily(SelectionKind);

impl SelectionFamily<u8, i64> for FixedFamily {
    fn select_at(&self, _s: &[u8], p: &mut Evaluator<'_, u8, i64>) -> crate::Result<u8> {
        match self.0 {
            SelectionKind::Argmax => argmax_bool().select(p),
            SelectionKind::Argmin => argmin_bool().select(p),
            SelectionKind::Const0 => Constant(0u8).select(p),
            SelectionKind::Const1 => Constant(1u8).select(p),
        }
    }
}

fn game(outcomes: &[i64], kind: SelectionKind, out: &mut dyn Write) -> Result<i32, Error> {
    let n = outcomes.len();
    if !n.is_power_of_two() || n < 2 {
        return Err(Error::parse(format!(
            "--outcomes needs 2^d values for some d >= 1, got {n}"
        )));
    }
    let depth = n.trailing_zeros() as usize;
    let table = outcomes.to_vec();
    let outcome = move |play: &[u8]| {
        let idx = (0..depth).fold(0usize, |acc, i| 2 * acc + usize::from(crate::selection::at(play, i) & 1));
        Ok(table[idx])
    };
    let g = Game::new(FixedFamily(kind), outcome, ConstControl(depth - 1));
    let budget = Budget::default();
    let play = optimal_play(&g, &budget)?;
    let check = verify_optimal_play(&g, &play, &budget)?;
    let oracle = brute_force_play(&g, depth)?;
    let value = g.outcome.outcome(&play)?;
    let agrees = oracle == play;
    let bits: String = play.iter().map(|b| char::from(b'0' + b)).collect();
    writeln!(out, "play: {bits}").map_err(io)?;
    writeln!(out, "outcome: {value}").map_err(io)?;
    writeln!(
        out,
        "equilibrium equations: {}",
        if check.passed() { "hold" } else { "FAIL" }
    )
    .map_err(io)?;
    writeln!(
        out,
        "backward induction: {}",
        if agrees { "agrees" } else { "DIFFERS" }
    )
    .map_err(io)?;
    Ok(if check.passed() && agrees { EXIT_OK } else { EXIT_FAILED })
}
