//! The `gdua` command-line tool.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 unsupported scalar form
//! (or down-up roots outside the supported domain), 3 a verification or
//! cross-check found a failure.

pub mod batch;
pub mod commands;
pub mod parse;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, DownupInput, GduaInput, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "gdua", version, about = "Factoriality of generalized down-up algebras L(f, r, s, gamma)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether L(f, r, s, gamma) is a Noetherian UFR / UFD
    Classify(BatchArgs),
    /// Classify the down-up algebra A(alpha, beta, gamma)
    ClassifyDownup(DownupArgs),
    /// Classify the Smith algebra S(f) = L(f, 1, 1, 1)
    ClassifySmith(SmithArgs),
    /// List the known height-one primes
    Inventory(BatchArgs),
    /// Run the PBW identity suite on one presentation
    Verify(VerifyArgs),
    /// Compare the master classifier with the per-regime route
    CrossCheck(BatchArgs),
}

#[derive(Args, Debug)]
struct PresentationArgs {
    /// Polynomial in h, e.g. "h^2 - 2*h + 1"
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    f: String,
    /// Positive rational times a root of unity, e.g. "-2" or "1/2*zeta(3)"
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Any cyclotomic number, e.g. "1 + zeta(4)"
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    gamma: String,
    /// Emit one JSON object instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BatchArgs {
    #[command(flatten)]
    p: PresentationArgs,
    /// JSONL file of {"f", "r", "s", "gamma"} records; output is JSONL
    #[arg(long, conflicts_with_all = ["r", "s"])]
    batch: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    p: PresentationArgs,
    /// Largest k for the d*u^k identity
    #[arg(long, default_value_t = 6)]
    max_k: u32,
}

#[derive(Args, Debug)]
struct DownupArgs {
    #[arg(long, allow_hyphen_values = true, requires = "beta", conflicts_with_all = ["r", "s"])]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "alpha")]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "s")]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "r")]
    s: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    gamma: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SmithArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    f: String,
    #[arg(long)]
    json: bool,
}

impl PresentationArgs {
    fn input(&self) -> Result<GduaInput, CliError> {
        let (Some(r), Some(s)) = (&self.r, &self.s) else {
            return Err(CliError::Usage("--r and --s are required".into()));
        };
        Ok(GduaInput {
            f: self.f.clone(),
            r: r.clone(),
            s: s.clone(),
            gamma: self.gamma.clone(),
        })
    }
}

fn emit(out: &mut dyn Write, err: &mut dyn Write, json: bool, result: Result<Report, CliError>) -> i32 {
    match result {
        Ok(report) => {
            if json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                let _ = write!(out, "{}", commands::render_text(&report));
            }
            let failed = report.agree == Some(false)
                || report.identities.iter().flatten().any(|c| c.status == "fail");
            if failed {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            if json {
                let _ = writeln!(out, "{}", e.report().to_json());
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

fn run_batch_cmd(
    out: &mut dyn Write,
    err: &mut dyn Write,
    path: &PathBuf,
    cmd: fn(&GduaInput) -> Result<Report, CliError>,
    summarise: bool,
) -> i32 {
    let contents = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let mut code = EXIT_OK;
    let mut disagreements = 0usize;
    for result in batch::run_batch(&contents, cmd) {
        if matches!(&result, Ok(r) if r.agree == Some(false)) {
            disagreements += 1;
        }
        code = code.max(emit(out, err, true, result));
    }
    if summarise {
        let _ = writeln!(err, "disagreements: {disagreements}");
    }
    code
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(err, "{e}");
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match cli.command {
        Command::Classify(a) => single_or_batch(out, err, a, commands::classify_cmd, false),
        Command::Inventory(a) => single_or_batch(out, err, a, commands::inventory_cmd, false),
        Command::CrossCheck(a) => single_or_batch(out, err, a, commands::cross_check_cmd, true),
        Command::Verify(a) => {
            let result = a.p.input().and_then(|input| commands::verify_cmd(&input, a.max_k));
            emit(out, err, a.p.json, result)
        }
        Command::ClassifySmith(a) => emit(out, err, a.json, commands::smith_cmd(&a.f)),
        Command::ClassifyDownup(a) => {
            let input = match (a.alpha, a.beta, a.r, a.s) {
                (Some(alpha), Some(beta), None, None) => DownupInput::Coefficients {
                    alpha,
                    beta,
                    gamma: a.gamma,
                },
                (None, None, Some(r), Some(s)) => DownupInput::Roots { r, s, gamma: a.gamma },
                _ => {
                    let e = CliError::Usage("give either --alpha and --beta, or --r and --s".into());
                    return emit(out, err, a.json, Err(e));
                }
            };
            emit(out, err, a.json, commands::downup_cmd(&input))
        }
    }
}

fn single_or_batch(
    out: &mut dyn Write,
    err: &mut dyn Write,
    a: BatchArgs,
    cmd: fn(&GduaInput) -> Result<Report, CliError>,
    summarise: bool,
) -> i32 {
    if let Some(path) = &a.batch {
        return run_batch_cmd(out, err, path, cmd, summarise);
    }
    let result = a.p.input().and_then(|input| cmd(&input));
    let disagreement = matches!(&result, Ok(r) if r.agree == Some(false));
    let code = emit(out, err, a.p.json, result);
    if summarise && code != commands::EXIT_USAGE && code != commands::EXIT_UNSUPPORTED {
        let line = format!("disagreements: {}", usize::from(disagreement));
        let _ = if a.p.json { writeln!(err, "{line}") } else { writeln!(out, "{line}") };
    }
    code
}
