//! Command-line front end: the spec-file format and the JSON commands.

pub mod commands;
pub mod specfile;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{parse_disk, run_command, Command, Format, Options, Outcome};
pub use specfile::{emit_group, emit_spec, parse_group, parse_spec};

/// Exit code for usage errors.
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "neat-disks", version, about = "Invariants of neat disks in 4-manifolds with a dual sphere")]
struct Cli {
    /// Coordinate window for span computations.
    #[arg(long, global = true, default_value_t = crate::diskgroup::DEFAULT_WINDOW)]
    window: usize,
    /// Word-length budget for group enumeration.
    #[arg(long, global = true, default_value_t = crate::diskgroup::DEFAULT_BUDGET)]
    budget: usize,
    /// Exit with status 2 when any verdict is unknown.
    #[arg(long, global = true)]
    strict: bool,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Structure of the Dax target Z[π∖1]^σ / dax(π₃M).
    DaxTarget { spec: PathBuf },
    /// Full structure report of the disk group.
    DkStructure { spec: PathBuf },
    /// Decide commutativity of the disk group.
    IsAbelian { spec: PathBuf },
    /// Relative Dax invariant Dax(BASE, DISK).
    RelDax { spec: PathBuf, disk: String, base: String },
    /// Freedman-Quinn invariant of a pair of disks.
    Fq { spec: PathBuf, disk: String, base: String },
    /// Finger-move realization of a polynomial in t·Z[t].
    RealizePoly {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Consistency checks of a spec file.
    CheckInvariants { spec: PathBuf },
}

/// What the binary should print and return.
#[derive(Debug, Clone)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation {
                    stdout: String::new(),
                    stderr: text,
                    exit_code: EXIT_USAGE,
                }
            } else {
                Invocation {
                    stdout: text,
                    stderr: String::new(),
                    exit_code: 0,
                }
            };
        }
    };
    let options = Options {
        window: cli.window,
        budget: cli.budget,
        strict: cli.strict,
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
    };
    let (command, input) = match cli.command {
        Sub::DaxTarget { spec } => (Command::DaxTarget, read(&spec)),
        Sub::DkStructure { spec } => (Command::DkStructure, read(&spec)),
        Sub::IsAbelian { spec } => (Command::IsAbelian, read(&spec)),
        Sub::RelDax { spec, disk, base } => (Command::RelDax { disk, base }, read(&spec)),
        Sub::Fq { spec, disk, base } => (Command::Fq { disk, base }, read(&spec)),
        Sub::RealizePoly { polynomial } => (Command::RealizePoly, Ok(polynomial)),
        Sub::CheckInvariants { spec } => (Command::CheckInvariants, read(&spec)),
    };
    let input = match input {
        Ok(t) => t,
        Err(msg) => {
            return Invocation {
                stdout: String::new(),
                stderr: format!("neat-disks: {msg}\n"),
                exit_code: 1,
            }
        }
    };
    let outcome = run_command(&command, &input, &options);
    let stderr = outcome.report["diagnostics"]
        .as_array()
        .into_iter()
        .flatten()
        .filter_map(|d| d.as_str())
        .filter(|d| d.starts_with("error:"))
        .map(|d| format!("neat-disks: {d}\n"))
        .collect();
    Invocation {
        stdout: outcome.render(options.format),
        stderr,
        exit_code: outcome.exit_code,
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}
