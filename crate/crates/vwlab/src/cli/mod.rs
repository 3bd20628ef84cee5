//! The `vwlab` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 the
//! enumeration cap was exceeded. Nothing else is ever returned.

mod grp;
mod lie;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use vwlab_core::group::{GroupError, DEFAULT_CAP};
use vwlab_core::lie::LieError;
use vwlab_core::FieldSpec;

use crate::formats::FormatError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "VW_CAP";

#[derive(Parser, Debug)]
#[command(name = "vwlab", version, about = "Exact Lie algebra and matrix group computations")]
struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the built-in counterexample checklists
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = PartArg::All)]
        part: PartArg,
        /// Field for the Lie scenarios: Q or GF(p)
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Lie algebras given by structure constants
    #[command(subcommand)]
    Lie(LieCommand),
    /// Finite matrix groups over GF(p)
    #[command(subcommand)]
    Grp(GrpCommand),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PartArg {
    Groups,
    Lie,
    Amalgam,
    All,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file
    #[arg(short, long)]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum LieCommand {
    /// Check the alternating property and the Jacobi identity
    Validate(Input),
    /// Lower central and derived series
    Series(Input),
    /// The derivation algebra
    Derive(Input),
    /// Subalgebra (or ideal) generated by vectors
    Generate {
        #[command(flatten)]
        input: Input,
        /// JSON array of coordinate vectors
        #[arg(short, long)]
        generators: PathBuf,
        /// Generate an ideal instead of a subalgebra
        #[arg(long)]
        ideal: bool,
    },
    /// Semidirect product B ⋉ X for an action of B by derivations of X
    Semidirect {
        /// The acting algebra B
        #[command(flatten)]
        input: Input,
        /// The algebra X acted on
        #[arg(long)]
        on: PathBuf,
        /// JSON array with one dim X square matrix per basis vector of B
        #[arg(long)]
        action: PathBuf,
    },
    /// Check that a linear map is a homomorphism
    HomCheck {
        /// The domain algebra
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        codomain: PathBuf,
        /// Matrix whose column j is the image of basis vector j
        #[arg(long)]
        map: PathBuf,
    },
}

#[derive(Args, Debug)]
struct GroupInput {
    /// Generator file
    #[arg(short, long)]
    input: PathBuf,
    /// Maximum number of elements to enumerate (default: $VW_CAP or 1000000)
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum GrpCommand {
    /// Order and exponent of the generated group
    Order(GroupInput),
    /// Lower central and derived series
    Series(GroupInput),
    /// Evaluate relations on the generators
    Relations {
        #[command(flatten)]
        input: GroupInput,
        /// Relation file: one word per line, '#' starts a comment
        #[arg(short, long)]
        relations: PathBuf,
    },
    /// Generator file of G ⋉ GF(p)^n acting on column vectors
    Semidirect(GroupInput),
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: vwlab_core::ExactError| e.to_string())
}

/// A failure that ends the command with a nonzero exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Cap(_) => EXIT_CAP,
        }
    }

    pub(crate) fn file(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Input(format!("{}: {e}", path.display()))
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded(_) => CliError::Cap(format!("{e} (raise it with --cap or {CAP_ENV})")),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::file(path, e))
}

/// Reads and parses a file, prefixing errors with its path.
pub(crate) fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    let text = read(path)?;
    parse(&text).map_err(|e| match e {
        FormatError::Group(g @ GroupError::CapExceeded(_)) => g.into(),
        e => CliError::file(path, e),
    })
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    let cap = match flag {
        Some(c) => c,
        None => match std::env::var(CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("{CAP_ENV}={v:?} is not a nonnegative integer")))?,
            Err(_) => DEFAULT_CAP,
        },
    };
    if cap == 0 {
        return Err(CliError::Input("the enumeration cap must be at least 1".into()));
    }
    Ok(cap)
}

pub(crate) struct Ctx<'a> {
    pub json: bool,
    pub out: &'a mut dyn Write,
}

impl Ctx<'_> {
    pub fn print(&mut self, text: &str) -> Result<(), CliError> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("cannot write output: {e}")))
    }

    pub fn print_json(&mut self, v: &serde_json::Value) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(v).expect("JSON values serialize");
        text.push('\n');
        self.print(&text)
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, out };
    let result = match cli.command {
        Command::VerifyPaper { part, field } => verify::run(&mut ctx, part, field),
        Command::Lie(cmd) => lie::run(&mut ctx, cmd),
        Command::Grp(cmd) => grp::run(&mut ctx, cmd),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

/// Superscript digits for series term names such as `L²`.
pub(crate) fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().bytes().map(|b| DIGITS[usize::from(b - b'0')]).collect()
}
