//! Command-line interface: `eval`, `verify`, `sharp`, `tabulate`.
//!
//! Exit codes: 0 = success and every check passed; 1 = a mathematical
//! failure (a failing report or a falsified sign condition); 2 = a usage or
//! configuration error (bad arguments, malformed grid, unknown names).
//! Argument-syntax errors exit 2 via clap before [`run`] is reached.
//!
//! All output is deterministic: identical invocations produce byte-identical
//! stdout.  Text output prints values to 15 significant digits; JSON uses
//! shortest round-trip encoding (every f64 re-parses to the same bits); CSV
//! fields are quoted RFC-4180 style when they contain commas or quotes.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{self, sharp_constants, SharpConstant};
use crate::error::{Error, Result};
use crate::grid::{Grid, Spacing};
use crate::ineq::{builtin_registry, verify, Status, VerificationReport, VerifyOptions};
use crate::means::{mean, MeanKind, PositivePair};
use crate::param::to_param;

#[derive(Debug, Parser)]
#[command(
    name = "meancheck",
    version,
    about = "Evaluate six classical bivariate means and verify the registry \
             of inequalities between them with positive numerical margins"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Log,
    Linear,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Spacing {
        match s {
            SpacingArg::Log => Spacing::Log,
            SpacingArg::Linear => Spacing::Linear,
        }
    }
}

/// Sweep-grid flags shared by `verify` and `tabulate`.
#[derive(Debug, Args)]
pub struct GridArgs {
    /// Smallest x in the sweep
    #[arg(long, default_value_t = 1e-4)]
    pub grid_min: f64,
    /// Largest x in the sweep
    #[arg(long, default_value_t = 30.0)]
    pub grid_max: f64,
    /// Number of grid points (>= 2)
    #[arg(long, default_value_t = 2001)]
    pub grid_points: usize,
    /// Point spacing
    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    pub spacing: SpacingArg,
}

impl GridArgs {
    fn build(&self) -> Result<Grid> {
        Grid::new(
            self.grid_min,
            self.grid_max,
            self.grid_points,
            self.spacing.into(),
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the six means and every registry term at the pair (a, b)
    Eval {
        /// First argument (> 0, finite)
        #[arg(allow_negative_numbers = true)]
        a: f64,
        /// Second argument (> 0, finite)
        #[arg(allow_negative_numbers = true)]
        b: f64,
    },
    /// Sweep registry entries over a grid and report margins
    Verify {
        /// Comma-separated entry names (default: all entries)
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[command(flatten)]
        grid: GridArgs,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Residual bound for identities and Equal links
        #[arg(long, default_value_t = 1e-12)]
        tol_identity: f64,
        /// Minimum margin a strict link must exceed
        #[arg(long, default_value_t = 0.0)]
        tol_margin: f64,
        /// Evaluate pairs at this common geometric scale (affects only the
        /// term values echoed in violations; margins are scale-free)
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Skip the pinned witnesses of incomparable entries
        #[arg(long)]
        no_witnesses: bool,
    },
    /// Print the table of certified sharp constants
    Sharp {
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Print a CSV table (header `x,value`) of a named scalar function
    Tabulate {
        /// One of: f_thm1, f_lemma2, g, k, h
        func: String,
        #[command(flatten)]
        grid: GridArgs,
    },
}

/// Runs a parsed command, writing results to `out` and errors to stderr.
/// Returns the process exit code.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> i32 {
    let outcome = match cli.command {
        Command::Eval { a, b } => cmd_eval(a, b, out),
        Command::Verify {
            suite,
            grid,
            format,
            tol_identity,
            tol_margin,
            scale,
            no_witnesses,
        } => {
            let opts = VerifyOptions {
                scale,
                tol_identity,
                tol_margin,
                use_witnesses: !no_witnesses,
            };
            cmd_verify(&suite, &grid, format, &opts, out)
        }
        Command::Sharp { format } => cmd_sharp(format, out),
        Command::Tabulate { func, grid } => cmd_tabulate(&func, &grid, out),
    };
    match outcome {
        Ok(code) => code,
        Err(CmdError::Math(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(CmdError::Config(e)) => {
            eprintln!("error: {e}");
            2
        }
        // A closed pipe means the consumer stopped reading (e.g. `| head`);
        // by convention that ends the program quietly and successfully.
        Err(CmdError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CmdError::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Internal error wrapper separating exit-code classes.
enum CmdError {
    /// Exit 1: a mathematically meaningful failure.
    Math(Error),
    /// Exit 2: bad configuration or unknown names.
    Config(Error),
    /// Exit 1: stdout could not be written.
    Io(std::io::Error),
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}

/// Classifies a library error: solver failures are mathematical (exit 1),
/// everything else is a configuration problem (exit 2).
fn classify(e: Error) -> CmdError {
    match e {
        Error::NoSignChange { .. } | Error::NoConvergence(_) => CmdError::Math(e),
        _ => CmdError::Config(e),
    }
}

type CmdResult = std::result::Result<i32, CmdError>;

/// 15 significant digits.
fn sig15(v: f64) -> String {
    format!("{v:.14e}")
}

/// RFC-4180-style quoting for CSV fields.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_eval<W: Write>(a: f64, b: f64, out: &mut W) -> CmdResult {
    let p = PositivePair::new(a, b).map_err(classify)?;
    let param = to_param(&p);
    writeln!(out, "a = {}", sig15(a))?;
    writeln!(out, "b = {}", sig15(b))?;
    writeln!(out, "x = {}  (half the log-ratio)", sig15(param.x))?;
    for kind in MeanKind::ALL {
        writeln!(out, "{:<24} = {}", kind.symbol(), sig15(mean(kind, &p)))?;
    }
    // Every distinct non-primitive term that appears in the registry,
    // evaluated through the same log-domain forms the verifier uses.
    let registry = builtin_registry();
    let primitives: Vec<&str> = MeanKind::ALL.iter().map(|k| k.symbol()).collect();
    let mut seen: Vec<&str> = Vec::new();
    for spec in &registry {
        for (i, term) in spec.terms.iter().enumerate() {
            if primitives.contains(&term.label) || seen.contains(&term.label) {
                continue;
            }
            seen.push(term.label);
            let value = spec.term_value(i, param.x, param.scale);
            writeln!(out, "{:<24} = {}", term.label, sig15(value))?;
        }
    }
    Ok(0)
}

fn cmd_verify<W: Write>(
    suite: &[String],
    grid_args: &GridArgs,
    format: FormatArg,
    opts: &VerifyOptions,
    out: &mut W,
) -> CmdResult {
    let grid = grid_args.build().map_err(classify)?;
    let registry = builtin_registry();
    for name in suite {
        if !registry.iter().any(|s| s.name == name) {
            return Err(CmdError::Config(Error::UnknownSpec(name.clone())));
        }
    }
    let selected: Vec<_> = registry
        .iter()
        .filter(|s| suite.is_empty() || suite.iter().any(|n| n == s.name))
        .collect();

    let mut reports: Vec<VerificationReport> = Vec::with_capacity(selected.len());
    for spec in selected {
        reports.push(verify(spec, &grid, opts).map_err(classify)?);
    }

    match format {
        FormatArg::Json => {
            let s = serde_json::to_string_pretty(&reports)
                .expect("reports contain no non-serializable values");
            writeln!(out, "{s}")?;
        }
        FormatArg::Csv => {
            writeln!(
                out,
                "spec_name,status,min_margin,argmin_x,grid_min,grid_max,\
                 grid_points,spacing,violations"
            )?;
            for r in &reports {
                let spacing = match r.grid.spacing {
                    Spacing::Log => "log",
                    Spacing::Linear => "linear",
                };
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    csv_field(&r.spec_name),
                    status_str(r.status),
                    r.min_margin,
                    r.argmin_x,
                    r.grid.min,
                    r.grid.max,
                    r.grid.points,
                    spacing,
                    r.violations.len()
                )?;
            }
        }
        FormatArg::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "{:<30} {:<4} min_margin={:<22} argmin_x={:<22} violations={}",
                    r.spec_name,
                    status_str(r.status),
                    sig15(r.min_margin),
                    sig15(r.argmin_x),
                    r.violations.len()
                )?;
            }
            let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
            writeln!(
                out,
                "{passed}/{} passed on [{}, {}] ({} {} points)",
                reports.len(),
                grid.min,
                grid.max,
                grid.points,
                match grid.spacing {
                    Spacing::Log => "log",
                    Spacing::Linear => "linear",
                }
            )?;
        }
    }

    if reports.iter().all(|r| r.status == Status::Pass) {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

fn cmd_sharp<W: Write>(format: FormatArg, out: &mut W) -> CmdResult {
    let constants: Vec<SharpConstant> = sharp_constants().map_err(classify)?;
    match format {
        FormatArg::Json => {
            let s = serde_json::to_string_pretty(&constants)
                .expect("constants contain no non-serializable values");
            writeln!(out, "{s}")?;
        }
        FormatArg::Csv => {
            writeln!(out, "name,x_star,value,tolerance,note")?;
            for c in &constants {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    csv_field(c.name),
                    c.x_star,
                    c.value,
                    c.tolerance,
                    csv_field(c.note)
                )?;
            }
        }
        FormatArg::Text => {
            for c in &constants {
                writeln!(
                    out,
                    "{:<24} value={:<22} x_star={:<22} tol={:>7.1e}  {}",
                    c.name,
                    sig15(c.value),
                    sig15(c.x_star),
                    c.tolerance,
                    c.note
                )?;
            }
        }
    }
    Ok(0)
}

fn cmd_tabulate<W: Write>(func: &str, grid_args: &GridArgs, out: &mut W) -> CmdResult {
    // Positive finite grid points are inside every function's domain, so
    // the fallible wrappers cannot actually error here.
    let f: fn(f64) -> f64 = match func {
        "f_thm1" => |x| analysis::f_thm1(x).expect("positive finite x"),
        "f_lemma2" => |x| analysis::f_lemma2(x).expect("positive finite x"),
        "g" => analysis::g_lemma2,
        "k" => analysis::k_lemma2,
        "h" => analysis::h_crossing,
        other => return Err(CmdError::Config(Error::UnknownSpec(other.to_string()))),
    };
    let grid = grid_args.build().map_err(classify)?;
    writeln!(out, "x,value")?;
    for x in grid.iter() {
        writeln!(out, "{},{}", x, f(x))?;
    }
    Ok(0)
}
