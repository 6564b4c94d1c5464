//! The `gradual` command-line tool: conversions, operators, group reports,
//! directed systems, the ℤ demo and the worked-example regression run.

pub mod commands;
pub mod document;
pub mod examples;
pub mod zint;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl From<gradual_core::Error> for CliError {
    fn from(e: gradual_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "gradual", version, about = "Exact gradual subsets, fuzzy subsets and their group versions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input documents (repeatable).
    #[arg(short, long = "input", required = true)]
    pub inputs: Vec<PathBuf>,
    /// Write the resulting document here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between fuzzy and gradual subsets.
    Convert {
        #[arg(long = "to", value_enum)]
        to: Direction,
        #[command(flatten)]
        io: Io,
    },
    /// Apply an operator to gradual subsets.
    Operator {
        #[arg(value_enum)]
        op: Operator,
        #[command(flatten)]
        io: Io,
    },
    /// Fuzzy subgroup and gradual subgroup reports; the group document comes first.
    Group {
        #[arg(value_enum)]
        action: GroupAction,
        /// Use strong level sets for `to-gradual`.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Directed systems of finite sets.
    System {
        #[arg(value_enum)]
        action: SystemAction,
        #[command(flatten)]
        io: Io,
    },
    /// Evaluate a fuzzy or gradual subset at one level.
    Eval {
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        io: Io,
    },
    /// Print a group document.
    EmitGroup {
        #[arg(value_enum)]
        family: GroupFamily,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Windowed evaluation of the product of two fuzzy subgroups of ℤ.
    DemoZint {
        #[arg(long, default_value_t = 2)]
        x: i64,
        #[arg(long, default_value_t = 200)]
        window: i64,
        #[arg(long = "t-max", default_value_t = 6)]
        t_max: u32,
        #[arg(long = "search-window", default_value_t = 10_000)]
        search_window: i64,
    },
    /// Run the worked examples and compare against the expected tables.
    WorkedExamples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Level sets.
    Gradual,
    /// Strong level sets.
    GradualStrict,
    /// Inverse of `gradual`; needs a decreasing input with property (F).
    Fuzzy,
    /// Inverse of `gradual-strict`; needs a strict decreasing input with property (inf-F).
    FuzzyStrict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    Closure,
    Interior,
    Union,
    Intersection,
    ModifiedIntersection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupAction {
    CheckFuzzySubgroup,
    ToGradual,
    Product,
    Normality,
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemAction {
    Colimit,
    Interior,
    PropertyF,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupFamily {
    Symmetric,
    Cyclic,
    Dihedral,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match commands::execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
