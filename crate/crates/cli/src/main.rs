//! `implicitize`: implicit equation of a rational Bézier curve.
//!
//! Exit status: 0 on success, 1 for unreadable or invalid input, 2 for
//! degenerate or unsupported curves, 3 when a requested check fails.

mod input;
mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use implicit_core::{implicitize_with, Options, Rational};

use input::{Mode, Position};
use report::{check_oracle, check_residual, Computed, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{}{at}: {message}", file.as_deref().map(|f| format!("{f}:")).unwrap_or_default())]
    Input {
        file: Option<String>,
        at: Position,
        message: String,
    },
    #[error("{0}")]
    Unsupported(implicit_core::Error),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Input { .. } => 1,
            CliError::Unsupported(_) => 2,
            CliError::CheckFailed(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

/// Implicitize a rational Bézier curve given by Bernstein coefficients.
#[derive(Debug, Parser)]
#[command(name = "implicitize", version)]
struct Args {
    /// Curve description (JSON); `-` reads standard input.
    input: PathBuf,

    /// Arithmetic; overrides the file's `mode`.
    #[arg(long, value_enum)]
    mode: Option<Mode>,

    /// Divide by the rational content and make the first nonzero
    /// coefficient positive (float mode: scale to max |c| = 1).
    #[arg(long)]
    normalize: bool,

    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,

    /// Check F(x(t), y(t)) = 0 at N random parameters.
    #[arg(long, value_name = "N")]
    check_residual: Option<usize>,

    /// Compare against the Sylvester-resultant oracle up to scale.
    #[arg(long)]
    oracle: bool,

    /// Seed for residual sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Write the report here instead of standard output.
    #[arg(short = 'o', long = "out", value_name = "PATH")]
    out: Option<PathBuf>,
}

fn read_input(path: &PathBuf) -> Result<(String, String), CliError> {
    let name = path.display().to_string();
    let mut src = String::new();
    let res = if name == "-" {
        io::stdin().read_to_string(&mut src).map(|_| ())
    } else {
        fs::read_to_string(path).map(|s| src = s)
    };
    res.map_err(|source| CliError::Io {
        path: name.clone(),
        source,
    })?;
    Ok((name, src))
}

fn run(args: &Args) -> Result<(), CliError> {
    let (name, src) = read_input(&args.input)?;
    let parsed = input::parse(&src).map_err(|e| match e {
        CliError::Input { at, message, .. } => CliError::Input {
            file: Some(name.clone()),
            at,
            message,
        },
        other => other,
    })?;
    let mode = args.mode.or(parsed.mode).unwrap_or(Mode::Exact);
    let normalize = args.normalize || parsed.normalize.unwrap_or(false);

    let raw = match mode {
        Mode::Exact => Computed::Exact(
            implicitize_with::<Rational>(&parsed.curve, Options::default())
                .map_err(CliError::Unsupported)?
                .curve,
        ),
        Mode::Float => Computed::Float(
            implicitize_with::<f64>(&parsed.curve, Options::default())
                .map_err(CliError::Unsupported)?
                .curve,
        ),
    };
    let f = if normalize { raw.normalized() } else { raw };

    let mut report = Report::new(&f, normalize);
    let mut failures = Vec::new();
    if let Some(n) = args.check_residual {
        let r = check_residual(&f, &parsed.curve, n, args.seed);
        eprintln!("{}", r.summary());
        if !r.passed() {
            failures.push(r.summary());
        }
        report.residual = Some(r);
    }
    if args.oracle {
        let r = check_oracle(&f, &parsed.curve)?;
        eprintln!("{}", r.summary());
        if !r.proportional {
            failures.push(r.summary());
        }
        report.oracle = Some(r);
    }

    let text = match args.output {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })?,
    }

    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(failures.join("; ")))
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("implicitize: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
