//! Command-line front end for `thermolattice`.
//!
//! Every subcommand prints one JSON document on stdout (CSV for `curve` and
//! `sweep --format csv`). Domain failures print `{"error": {...}}` and exit
//! with status 1; usage errors exit with status 2.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thermolattice::au_oracle::DEFAULT_GRID;
use thermolattice::counterexample::{
    d_level_counterexample_with_interval, no_meet_counterexample, two_level_counterexample,
};
use thermolattice::erasure::{create_futures_qubit, erase_history_qubit};
use thermolattice::majorization::join_traced;
use thermolattice::qubit::decision_gaps;
use thermolattice::rational::{format_rational, parse_rational};
use thermolattice::{
    au_oracle, beta_order, create_futures, erase_history, future_cone, gibbs_rescale, gp_exists_qubit,
    gp_matrix_exists, join_candidates, majorization_curve, majorizes, meet, meet_candidates, qubit_join, qubit_meet,
    run_sweep, same_beta_join, same_beta_meet, thermo_curve, thermo_majorizes, ContextSpec, GibbsContext, Suite,
    SweepConfig,
};

pub mod input;
pub mod svg;

use input::Pair;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "THERMOLATTICE_SEED";

#[derive(Debug)]
pub enum CliError {
    Domain(thermolattice::Error),
    Input(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.kind(),
            CliError::Input(_) => "malformed-input",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Domain(e) => e.to_string(),
            CliError::Input(m) => m.clone(),
        }
    }
}

impl From<thermolattice::Error> for CliError {
    fn from(e: thermolattice::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "thermolattice", version, about = "Thermodynamic ordering of states under Gibbs-preserving maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CounterexampleKind {
    TwoLevel,
    NoMeet,
    DLevel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    OracleAgreement,
    LatticeAxioms,
    Supermodularity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether P majorizes Q (infinite temperature).
    Majorize { p: PathBuf, q: PathBuf },
    /// Greatest lower bound; within the shared beta-ordering at finite temperature.
    Meet { p: PathBuf, q: PathBuf },
    /// Least upper bound; within the shared beta-ordering at finite temperature.
    Join { p: PathBuf, q: PathBuf },
    /// Whether P thermo-majorizes Q under the files' context.
    ThermoCheck { p: PathBuf, q: PathBuf },
    /// Beta-ordering and Gibbs-rescaled entries.
    BetaOrder { p: PathBuf },
    /// Curve breakpoints as CSV.
    Curve {
        p: PathBuf,
        /// Override the file's context: `0` or `inf` for the majorization curve.
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Join and meet candidates across all beta-orderings.
    Candidates { p: PathBuf, q: PathBuf },
    /// Pairs with no join or no meet.
    Counterexample {
        #[arg(long, value_enum)]
        kind: CounterexampleKind,
        /// Ground-state population for the two-level kinds.
        #[arg(long, default_value = "3/4")]
        gamma0: String,
        /// Comma-separated equilibrium for the d-level kind.
        #[arg(long, value_delimiter = ',')]
        gamma: Vec<String>,
    },
    /// Exact LP search for a Gibbs-preserving stochastic matrix.
    LpCheck { p: PathBuf, q: PathBuf },
    /// Qubit channel existence.
    QubitExists { rho: PathBuf, sigma: PathBuf },
    /// Future thermal cone of a qubit state.
    QubitCone {
        rho: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    QubitJoin {
        rho: PathBuf,
        sigma: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    QubitMeet {
        rho: PathBuf,
        sigma: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Sampled trace-norm check next to the closed-form decision.
    AuCheck {
        rho: PathBuf,
        sigma: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Optimal history erasure.
    Erase { p: PathBuf, q: PathBuf },
    /// Optimal future creation.
    Create { p: PathBuf, q: PathBuf },
    /// Seeded randomized sweep.
    Sweep {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        n: u64,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Output {
    Json(Value),
    Text(String),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn rationals(v: &[thermolattice::Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(format_rational(r))).collect())
}

fn execute(cmd: Command) -> Result<Output, CliError> {
    let out = match cmd {
        Command::Majorize { p, q } => {
            let (p, q, _) = input::classical_pair(&p, &q)?;
            json!({ "majorizes": majorizes(&p, &q)? })
        }
        Command::Meet { p, q } => {
            let (p, q, ctx) = input::classical_pair(&p, &q)?;
            let m = if ctx.is_uniform() { meet(&p, &q)? } else { same_beta_meet(&p, &q, &ctx)? };
            json!({ "meet": m })
        }
        Command::Join { p, q } => {
            let (p, q, ctx) = input::classical_pair(&p, &q)?;
            if ctx.is_uniform() {
                let t = join_traced(&p, &q)?;
                json!({ "join": t.join, "initial": rationals(&t.initial), "flattening_steps": t.steps })
            } else {
                json!({ "join": same_beta_join(&p, &q, &ctx)? })
            }
        }
        Command::ThermoCheck { p, q } => {
            let (p, q, ctx) = input::classical_pair(&p, &q)?;
            json!({ "thermo_majorizes": thermo_majorizes(&p, &q, &ctx)? })
        }
        Command::BetaOrder { p } => {
            let (p, ctx) = input::classical(&p)?;
            json!({
                "beta_ordering": beta_order(&p, &ctx)?,
                "rescaled": rationals(&gibbs_rescale(&p, &ctx)?),
            })
        }
        Command::Curve { p, beta, svg } => {
            let (p, ctx) = input::classical(&p)?;
            let curve = match beta.as_deref().map(str::trim) {
                None => thermo_curve(&p, &ctx)?,
                Some("inf") => majorization_curve(&p),
                Some(b) => {
                    let b = parse_rational(b)?;
                    let energies = ctx.energies().map(<[_]>::to_vec);
                    let spec = ContextSpec::Temperature { beta: format_rational(&b), energies };
                    let ctx: GibbsContext = spec.build(p.dim())?;
                    if ctx.is_uniform() {
                        majorization_curve(&p)
                    } else {
                        thermo_curve(&p, &ctx)?
                    }
                }
            };
            if let Some(path) = svg {
                write_file(&path, &svg::curves(&[&curve]))?;
            }
            let mut csv = String::from("x,y\n");
            for pt in curve.points() {
                csv.push_str(&format!("{},{}\n", format_rational(&pt.x), format_rational(&pt.y)));
            }
            return Ok(Output::Text(csv));
        }
        Command::Candidates { p, q } => {
            let (p, q, ctx) = input::classical_pair(&p, &q)?;
            json!({ "join": join_candidates(&p, &q, &ctx)?, "meet": meet_candidates(&p, &q, &ctx)? })
        }
        Command::Counterexample { kind, gamma0, gamma } => counterexample(kind, &gamma0, &gamma)?,
        Command::LpCheck { p, q } => {
            let (p, q, ctx) = input::classical_pair(&p, &q)?;
            to_value(&gp_matrix_exists(&p, &q, ctx.gamma())?)
        }
        Command::QubitExists { rho, sigma } => {
            let (r, s, g) = input::qubit_pair(&rho, &sigma)?;
            json!({ "exists": gp_exists_qubit(&r, &s, &g), "gaps": decision_gaps(&r, &s, &g) })
        }
        Command::QubitCone { rho, svg } => {
            let (r, g) = input::qubit(&rho)?;
            let cone = future_cone(&r, &g);
            if let Some(path) = svg {
                write_file(&path, &svg::cones(&[cone], &[r, g.state()]))?;
            }
            json!({ "cone": cone })
        }
        Command::QubitJoin { rho, sigma, svg } => qubit_bound(&rho, &sigma, svg.as_deref(), true)?,
        Command::QubitMeet { rho, sigma, svg } => qubit_bound(&rho, &sigma, svg.as_deref(), false)?,
        Command::AuCheck { rho, sigma, grid } => {
            let (r, s, g) = input::qubit_pair(&rho, &sigma)?;
            json!({
                "au_oracle": au_oracle(&r, &s, &g, grid)?,
                "grid": grid,
                "closed_form": gp_exists_qubit(&r, &s, &g),
            })
        }
        Command::Erase { p, q } => match input::any_pair(&p, &q)? {
            Pair::Classical(p, q, ctx) => to_value(&erase_history(&p, &q, &ctx)?),
            Pair::Qubit(r, s, g) => to_value(&erase_history_qubit(&r, &s, &g)?),
        },
        Command::Create { p, q } => match input::any_pair(&p, &q)? {
            Pair::Classical(p, q, ctx) => to_value(&create_futures(&p, &q, &ctx)?),
            Pair::Qubit(r, s, g) => to_value(&create_futures_qubit(&r, &s, &g)?),
        },
        Command::Sweep { suite, seed, n, d, format } => {
            let suite = match suite {
                SuiteArg::OracleAgreement => Suite::OracleAgreement,
                SuiteArg::LatticeAxioms => Suite::LatticeAxioms,
                SuiteArg::Supermodularity => Suite::Supermodularity,
            };
            let summary = run_sweep(&SweepConfig { suite, seed, n, d })?;
            match format {
                Format::Json => to_value(&summary),
                Format::Csv => return Ok(Output::Text(summary.to_csv())),
            }
        }
    };
    Ok(Output::Json(out))
}

fn qubit_bound(rho: &Path, sigma: &Path, svg: Option<&Path>, is_join: bool) -> Result<Value, CliError> {
    let (r, s, g) = input::qubit_pair(rho, sigma)?;
    let bound = if is_join { qubit_join(&r, &s, &g)? } else { qubit_meet(&r, &s, &g)? };
    if let Some(path) = svg {
        let cones = [future_cone(&r, &g), future_cone(&s, &g)];
        write_file(path, &svg::cones(&cones, &[r, s, bound]))?;
    }
    let key = if is_join { "join" } else { "meet" };
    Ok(json!({ key: bound.to_array() }))
}

fn counterexample(kind: CounterexampleKind, gamma0: &str, gamma: &[String]) -> Result<Value, CliError> {
    Ok(match kind {
        CounterexampleKind::TwoLevel | CounterexampleKind::NoMeet => {
            let g0 = parse_rational(gamma0)?;
            let pair = if kind == CounterexampleKind::TwoLevel {
                two_level_counterexample(&g0)?
            } else {
                no_meet_counterexample(&g0)?
            };
            let ctx = GibbsContext::two_level(g0)?;
            if kind == CounterexampleKind::TwoLevel {
                let set = join_candidates(&pair.p, &pair.q, &ctx)?;
                json!({ "p": pair.p, "q": pair.q, "context": ContextSpec::from_context(&ctx), "join_candidates": set })
            } else {
                let set = meet_candidates(&pair.p, &pair.q, &ctx)?;
                json!({ "p": pair.p, "q": pair.q, "context": ContextSpec::from_context(&ctx), "meet_candidates": set })
            }
        }
        CounterexampleKind::DLevel => {
            if gamma.is_empty() {
                return Err(CliError::Input("--gamma is required for the d-level kind".into()));
            }
            let ctx = GibbsContext::from_gamma(thermolattice::ProbVector::parse(gamma)?)?;
            let (pair, interval) = d_level_counterexample_with_interval(&ctx)?;
            json!({
                "p": pair.p,
                "q": pair.q,
                "context": ContextSpec::from_context(&ctx),
                "interval": [format_rational(&interval.lower), format_rational(&interval.upper)],
                "join_candidates": join_candidates(&pair.p, &pair.q, &ctx)?,
            })
        }
    })
}

fn emit(out: &mut dyn Write, text: &str) -> i32 {
    match out.write_all(text.as_bytes()) {
        Ok(()) => 0,
        Err(_) => 1,
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status. Regular output and error documents go to `out`, clap usage
/// messages to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return emit(out, &e.to_string());
            }
            let _ = e.print();
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(Output::Json(v)) => emit(out, &pretty(&v)),
        Ok(Output::Text(t)) => emit(out, &t),
        Err(e) => {
            emit(out, &pretty(&json!({ "error": { "kind": e.kind(), "message": e.message() } })));
            1
        }
    }
}
