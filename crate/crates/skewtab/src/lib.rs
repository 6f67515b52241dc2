//! Command-line front end for `skewtab-core`.
//!
//! [`run`] executes a parsed [`Cli`] and returns the exit code together with
//! everything that would be written to stdout and stderr, so the binary is
//! a thin wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 success, 1 a verdict failed, 2 usage error, 3 a resource
//! cap was exceeded.

use clap::{Parser, Subcommand};
use skewtab_core::{Caps, Error, ShapeFamily, SkewShape};

pub mod boundary;
mod commands;
pub mod render;
pub mod verify;

pub use render::Format;
pub use verify::{Case, Group, VerifySuite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Count and bound standard Young tableaux of skew shape.
///
/// Shapes are written `4,4,3,2/2,1`; families `thick-ribbon:k=4`.
#[derive(Clone, Debug, Parser)]
#[command(name = "skewtab", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "SKEWTAB_FORMAT")]
    pub format: Format,
    /// Largest number of excited diagrams to enumerate.
    #[arg(long, global = true, default_value_t = 10_000_000, env = "SKEWTAB_MAX_EXCITED")]
    pub max_excited: u64,
    /// Largest skew size for the brute-force counter.
    #[arg(long, global = true, default_value_t = 24, env = "SKEWTAB_MAX_BRUTE")]
    pub max_brute: usize,
    /// Largest |λ| for Littlewood–Richardson enumeration.
    #[arg(long, global = true, default_value_t = 16, env = "SKEWTAB_MAX_LR")]
    pub max_lr: usize,
    /// Quadrature points per unit length (at least 64).
    #[arg(long, global = true, default_value_t = 512, env = "SKEWTAB_GRID")]
    pub grid: usize,
    /// Worker threads for sweeps; 0 lets the pool decide.
    #[arg(long, global = true, default_value_t = 0, env = "SKEWTAB_THREADS")]
    pub threads: usize,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Exact count e, naive hook formula F and excited-diagram count ξ.
    Count {
        /// Shape or family spec.
        shape: String,
        /// Also count by brute force and by the excited-diagram formula.
        #[arg(long)]
        check: bool,
    },
    /// Every lower and upper bound next to the exact count.
    Bounds { shape: String },
    /// Excited diagrams of the shape.
    Excited {
        shape: String,
        /// Include the non-intersecting path family of each diagram.
        #[arg(long)]
        paths: bool,
    },
    /// Count through the excited-diagram hook formula, with its extreme terms.
    Nhlf { shape: String },
    /// Finite-scale asymptotic table for a family.
    Family {
        /// Family spec such as `thick-ribbon` or `square:k=3`.
        spec: String,
        /// Parameters: a list such as `2,4,6` or ranges `2..12:2`.
        #[arg(long, value_delimiter = ',')]
        k: Vec<String>,
    },
    /// Integral over a region bounded by piecewise-linear curves.
    Integrate {
        /// JSON boundary spec, inline or a file path.
        spec: String,
    },
    /// Littlewood–Richardson expansion of a skew count.
    Lr {
        shape: String,
        /// Only the coefficient for this partition.
        #[arg(long)]
        nu: Option<String>,
    },
    /// Cross-check all counting routes and bounds over small shapes.
    Verify {
        /// Largest |λ| in the shape corpus.
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Largest family parameter.
        #[arg(long, default_value_t = 12)]
        max_k: usize,
        /// Groups to run; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        groups: Vec<Group>,
    },
}

/// Exit code and captured output of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Cli {
    pub fn caps(&self) -> Caps {
        Caps {
            brute_force_cells: self.max_brute,
            excited_count: self.max_excited,
            lr_size: self.max_lr,
            ..Caps::default()
        }
    }

    pub fn pool(&self) -> Result<rayon::ThreadPool, rayon::ThreadPoolBuildError> {
        rayon::ThreadPoolBuilder::new().num_threads(self.threads).build()
    }
}

/// Parses a shape (`4,4,3,2/2,1`) or a family spec (`thick-ribbon:k=4`).
pub fn parse_target(text: &str) -> Result<SkewShape, Error> {
    if text.chars().any(|c| c.is_ascii_alphabetic()) {
        text.parse::<ShapeFamily>()?.generate()
    } else {
        text.parse()
    }
}

pub fn run(cli: &Cli) -> Outcome {
    run_with(cli, Vec::new())
}

/// Like [`run`]; `extra` cases are appended to a `verify` sweep.
pub fn run_with(cli: &Cli, extra: Vec<Case>) -> Outcome {
    match commands::execute(cli, extra) {
        Ok((doc, code)) => Outcome {
            code,
            stdout: doc.render(cli.format),
            stderr: String::new(),
        },
        Err(failure) => Outcome {
            code: failure.code,
            stdout: String::new(),
            stderr: failure.message,
        },
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Numeric(_) => EXIT_VERDICT,
        _ => EXIT_USAGE,
    }
}

/// Formats an error; parse errors point at the offending byte of `input`.
pub fn diagnostic(e: &Error, input: &str) -> String {
    match e {
        Error::Parse { position, message } => {
            let before = input.get(..*position).unwrap_or(input);
            let caret = " ".repeat(before.chars().count());
            format!("error: {message} (position {position})\n  {input}\n  {caret}^\n")
        }
        other => format!("error: {other}\n"),
    }
}
