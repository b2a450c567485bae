//! The `eaqec` command line: analysis, decomposition, corpus tables,
//! statevector verification and new-from-old constructions.
//!
//! Every command writes one JSON document to stdout and a short human
//! summary to stderr. The JSON depends only on the inputs and flags.

mod commands;
mod reference;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::run_command;
pub use reference::{reference_distance, ReferenceEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_FORMAT: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "eaqec",
    version,
    about = "Entanglement-assisted quantum error-correcting codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters, distance and bounds of a code
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        distance_cap: usize,
    },
    /// Hyperbolic pairs of rowspace(H) and the standardizing map
    Decompose {
        path: PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Recomputes [[n, k-c, d]] for every code in a corpus
    Table {
        /// corpus directory; the bundled corpus when omitted
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        distance_cap: usize,
    },
    /// Encode, corrupt and decode by statevector simulation
    Verify {
        path: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        /// `weight:W` for every error of weight W, or a comma-separated list
        /// of Pauli strings
        #[arg(long, default_value = "weight:1")]
        errors: String,
        /// seed for the random message state
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// include the message, codeword and encoding unitary
        #[arg(long)]
        dump: bool,
        #[arg(long, default_value_t = 8)]
        distance_cap: usize,
    },
    /// Builds a new code from old ones
    Construct {
        #[command(subcommand)]
        op: ConstructOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructOp {
    /// Adds a qubit with all-X and all-Z checks
    Extend {
        path: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        distance_cap: usize,
    },
    /// Deletes one coordinate from the codeword space
    Puncture {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        position: usize,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        distance_cap: usize,
    },
    /// Replaces the ebits of a code by the logical qubits of a seed code
    Combine {
        path: PathBuf,
        seed: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        distance_cap: usize,
    },
}

/// Input format; by file extension when neither flag is given.
#[derive(Debug, Clone, Copy, Default, Args)]
pub struct InputArgs {
    /// read a GF(4) parity-check matrix
    #[arg(long, conflicts_with = "symplectic")]
    pub gf4: bool,
    /// read a symplectic check matrix `z|x`
    #[arg(long)]
    pub symplectic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<eaqec::Error> for CliError {
    fn from(e: eaqec::Error) -> Self {
        use eaqec::Error as E;
        let code = match e {
            E::Parse(_) => EXIT_PARSE,
            E::Format(_) | E::OddColumns(_) => EXIT_FORMAT,
            E::TooManyQubits { .. } => EXIT_RESOURCE,
            _ => EXIT_FAILURE,
        };
        CliError::new(code, e.to_string())
    }
}

/// What a command produced: the JSON document and the prose summary.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: serde_json::Value,
    pub summary: String,
    /// non-zero when the command ran but found a failure
    pub exit_code: i32,
}

impl Output {
    /// Pretty JSON with a trailing newline.
    pub fn stdout(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
        s.push('\n');
        s
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Result<Output, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::new(EXIT_PARSE, e.to_string()))?;
    run_command(&cli.command)
}
