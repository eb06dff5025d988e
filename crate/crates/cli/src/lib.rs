//! The `jordan-kit` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input (flags, files,
//! invalid groups), 3 a resource cap was hit.

pub mod commands;
pub mod files;
pub mod report;
pub mod tables;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use jordan_kit_core::{Caps, GroupError};

/// Environment variable overriding the closure cap.
pub const CAP_ENV: &str = "JORDAN_KIT_CAP";

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Cap(m) => write!(f, "resource cap: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        if e.is_cap_exceeded() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "jordan-kit", version, about = "Jordan constants of finite groups")]
pub struct Cli {
    /// Seed for sampled table validation.
    #[arg(long, global = true, default_value_t = Caps::default().seed)]
    pub seed: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group and write it as a group file.
    Construct(ConstructArgs),
    /// Compute the Jordan constant of a group file.
    Analyze(AnalyzeArgs),
    /// Run the inequality checks over a corpus.
    Verify(VerifyArgs),
    /// Print closed-form bound tables.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// The family and its parameters.
    Spec,
    /// The full multiplication table.
    Cayley,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub factors: Option<Vec<usize>>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Emit::Spec)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Default,
    Zarhin,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Default)]
    pub suite: Suite,
    /// Directory of group files (`*.json`).
    #[arg(long, conflicts_with = "manifest")]
    pub corpus: Option<PathBuf>,
    /// Corpus manifest file.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Largest `|K|` for the zarhin suite.
    #[arg(long, default_value_t = 8)]
    pub factors_max: usize,
    /// Directory receiving one record file per check.
    #[arg(long, default_value = "jordan-kit-records")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["minkowski", "collins", "symmetric"])))]
pub struct TablesArgs {
    #[arg(long)]
    pub minkowski: bool,
    #[arg(long)]
    pub collins: bool,
    #[arg(long)]
    pub symmetric: bool,
    #[arg(long, conflicts_with_all = ["min_n", "max_n"])]
    pub n: Option<u32>,
    #[arg(long)]
    pub min_n: Option<u32>,
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
    /// Fail on rows without a value instead of printing a marker.
    #[arg(long)]
    pub strict: bool,
}

fn caps_from_env(seed: u64) -> Result<Caps, CliError> {
    let caps = Caps::default().with_seed(seed);
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|c| caps.with_closure(c))
            .map_err(|_| CliError::Input(format!("{CAP_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(caps),
    }
}

/// Parse `args` (including the program name) and run the command. Output
/// goes to `out`, diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    // output is buffered and emitted once the command is done
    let mut buf: Vec<u8> = Vec::new();
    let result = caps_from_env(cli.seed).and_then(|caps| {
        let go = |buf: &mut Vec<u8>| commands::dispatch(&cli.command, &caps, buf);
        match cli.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Input(format!("cannot start {n} threads: {e}")))?
                .install(|| go(&mut buf)),
            None => go(&mut buf),
        }
    });
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "jordan-kit: {e}");
            e.exit_code()
        }
    }
}
