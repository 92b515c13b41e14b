//! The `argmon` command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds violations, 2 on
//! malformed input or flags.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::degrees::{degree_table, Convention, Degree};
use crate::graph::{ArgumentId, ArgumentationGraph, Attack};
use crate::io::{parse_graph, serialize_graph, GraphFormat};
use crate::semantics::{extensions, Semantics};
use crate::verify::{sweep, SweepConfig};

pub const THREADS_ENV: &str = "ARGMON_THREADS";

#[derive(Debug, Parser)]
#[command(name = "argmon", version, about = "Abstract argumentation semantics and monotonicity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the extensions of a graph under one semantics.
    Solve {
        #[arg(long, short)]
        semantics: Semantics,
        #[command(flatten)]
        input: Input,
    },
    /// Print the acceptability degree of every argument.
    Degrees {
        #[arg(long, short)]
        semantics: Semantics,
        #[arg(long, short, default_value = "standard")]
        convention: Convention,
        #[command(flatten)]
        input: Input,
    },
    /// Remove attacks from a graph and print the result.
    Remove {
        /// Attacks as `src>dst`, separated by `;`.
        #[arg(long, short)]
        attacks: String,
        #[arg(long = "format-out")]
        format_out: Option<GraphFormat>,
        #[command(flatten)]
        input: Input,
    },
    /// Check monotonicity and its supporting properties over many graphs.
    Verify {
        /// Check every graph with up to this many arguments.
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        /// Size of randomly sampled graphs.
        #[arg(long = "random-n", requires = "samples")]
        random_n: Option<usize>,
        #[arg(long, requires = "random_n")]
        samples: Option<u64>,
        #[arg(long, requires = "random_n", default_value_t = 0)]
        seed: u64,
        /// Comma-separated semantics to check (default: all four).
        #[arg(long, value_delimiter = ',')]
        semantics: Vec<Semantics>,
        /// Comma-separated conventions to check (default: both).
        #[arg(long, value_delimiter = ',')]
        conventions: Vec<Convention>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, short)]
    format: Option<GraphFormat>,
    /// Graph file, or `-` for standard input.
    file: PathBuf,
}

impl Input {
    fn format(&self) -> GraphFormat {
        self.format.unwrap_or_else(|| GraphFormat::from_path(&self.file))
    }

    fn read(&self, stdin: &mut dyn Read) -> Result<ArgumentationGraph, String> {
        let bytes = if self.file == Path::new("-") {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            buf
        } else {
            std::fs::read(&self.file).map_err(|e| format!("cannot read {}: {e}", self.file.display()))?
        };
        parse_graph(&bytes, self.format()).map_err(|e| format!("{}: {e}", self.file.display()))
    }
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    semantics: Semantics,
    extensions: Vec<Vec<&'a ArgumentId>>,
}

/// Parses `src>dst;src>dst`, ignoring whitespace around tokens.
pub fn parse_attack_list(spec: &str) -> Result<Vec<Attack>, String> {
    spec.split(';')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            let (s, t) = part
                .split_once('>')
                .ok_or_else(|| format!("malformed attack {part:?}, expected src>dst"))?;
            Attack::parse(s.trim(), t.trim()).map_err(|e| e.to_string())
        })
        .collect()
}

fn thread_count() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Ok(value) => match value.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, got {value:?}")),
        },
        Err(_) => Ok(None),
    }
}

enum Outcome {
    Success,
    Violations,
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<Outcome, String> {
    let io_err = |e: std::io::Error| e.to_string();
    match cli.command {
        Command::Solve { semantics, input } => {
            let graph = input.read(stdin)?;
            let exts = extensions(&graph, semantics);
            let output = SolveOutput {
                semantics,
                extensions: exts
                    .iter()
                    .map(|e| e.members().iter().map(|i| graph.argument(i)).collect())
                    .collect(),
            };
            let json = serde_json::to_string(&output).map_err(|e| e.to_string())?;
            writeln!(stdout, "{json}").map_err(io_err)?;
        }
        Command::Degrees {
            semantics,
            convention,
            input,
        } => {
            let graph = input.read(stdin)?;
            let table: BTreeMap<ArgumentId, Degree> = degree_table(&graph, semantics, convention);
            let json = serde_json::to_string(&table).map_err(|e| e.to_string())?;
            writeln!(stdout, "{json}").map_err(io_err)?;
        }
        Command::Remove {
            attacks,
            format_out,
            input,
        } => {
            let graph = input.read(stdin)?;
            let attacks = parse_attack_list(&attacks)?;
            let reduced = graph.remove_attacks(&attacks).map_err(|e| e.to_string())?;
            let format = format_out.unwrap_or_else(|| input.format());
            write!(stdout, "{}", serialize_graph(&reduced, format)).map_err(io_err)?;
        }
        Command::Verify {
            max_n,
            random_n,
            samples,
            seed,
            semantics,
            conventions,
            json,
        } => {
            let config = SweepConfig {
                max_n,
                random_n,
                samples,
                seed,
                semantics: if semantics.is_empty() { Semantics::ALL.to_vec() } else { semantics },
                conventions: if conventions.is_empty() { Convention::ALL.to_vec() } else { conventions },
                ..SweepConfig::default()
            };
            config.validate().map_err(|e| e.to_string())?;
            let report = match thread_count()? {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| e.to_string())?
                    .install(|| sweep(&config)),
                None => sweep(&config),
            }
            .map_err(|e| e.to_string())?;
            if json {
                writeln!(stdout, "{}", report.to_json()).map_err(io_err)?;
            } else {
                writeln!(stdout, "{report}").map_err(io_err)?;
            }
            if !report.is_clean() {
                return Ok(Outcome::Violations);
            }
        }
    }
    Ok(Outcome::Success)
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::Violations) => 1,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            2
        }
    }
}
