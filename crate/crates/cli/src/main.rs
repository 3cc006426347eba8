use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use azumaya_core::frontend::analysis::{ErrorBody, ErrorReport, OutputFormat, SymbolRequest};
use azumaya_core::{analyze, render_text, AnalysisRequest, BaseFieldMode, Error};
use clap::{Parser, Subcommand, ValueEnum};

/// Exit statuses. Stable; scripts may rely on them.
mod exit {
    pub const OK: u8 = 0;
    // 2 is clap's usage error
    pub const PARSE: u8 = 3;
    pub const INVALID_INPUT: u8 = 4;
    pub const UNSUPPORTED_SURFACE: u8 = 5;
    pub const INAPPLICABLE_MODEL: u8 = 6;
    pub const REQUEST_FILE: u8 = 7;
    pub const INTERNAL: u8 = 8;
}

#[derive(Parser)]
#[command(name = "azumaya", version, about = "Quaternion symbols on elliptic surfaces y^2 = x(x-p)(x-q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Complex,
    Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Fiber table, invariants and symbol verdicts for one surface.
    Analyze {
        /// p(t), e.g. "3*(t+1)^3*(t-3)"
        #[arg(long, required_unless_present = "request", allow_hyphen_values = true)]
        p: Option<String>,
        /// q(t)
        #[arg(long, required_unless_present = "request", allow_hyphen_values = true)]
        q: Option<String>,
        /// A symbol <slot>:<expr> with slot x, x-p or x-q; repeatable.
        #[arg(long = "symbol", value_name = "SLOT:EXPR")]
        symbols: Vec<String>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Skip symbols; report fibers and invariants only.
        #[arg(long)]
        invariants_only: bool,
        /// JSON request file with the same fields; flags override it.
        #[arg(long, value_name = "PATH")]
        request: Option<PathBuf>,
    },
}

enum Failure {
    Analysis(Error),
    Request(String),
}

impl Failure {
    fn status(&self) -> u8 {
        match self {
            Failure::Request(_) => exit::REQUEST_FILE,
            Failure::Analysis(e) => match e {
                Error::Parse(_) => exit::PARSE,
                Error::Validation(_) | Error::DegenerateInput(_) | Error::Precondition(_) => {
                    exit::INVALID_INPUT
                }
                Error::UnstableFiber { .. } | Error::UnsupportedSurface(_) => exit::UNSUPPORTED_SURFACE,
                Error::InapplicableModel { .. } => exit::INAPPLICABLE_MODEL,
                Error::InvariantViolation(_) | Error::WrongCase(_) | Error::Anomaly(_) => exit::INTERNAL,
            },
        }
    }

    fn report(&self) -> ErrorReport {
        match self {
            Failure::Analysis(e) => ErrorReport::from(e),
            Failure::Request(msg) => ErrorReport {
                error: ErrorBody {
                    code: "request_file".into(),
                    message: msg.clone(),
                },
            },
        }
    }
}

fn build_request(cmd: Command) -> Result<AnalysisRequest, Failure> {
    let Command::Analyze {
        p,
        q,
        symbols,
        mode,
        format,
        invariants_only,
        request,
    } = cmd;
    let mut req = match &request {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Request(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::Request(format!("{}: {e}", path.display())))?
        }
        None => AnalysisRequest::new("", ""),
    };
    if let Some(p) = p {
        req.p = p;
    }
    if let Some(q) = q {
        req.q = q;
    }
    for s in &symbols {
        req.symbols.push(SymbolRequest::parse_flag(s).map_err(Failure::Analysis)?);
    }
    if let Some(mode) = mode {
        req.mode = match mode {
            Mode::Complex => BaseFieldMode::Complex,
            Mode::Rational => BaseFieldMode::Rational,
        };
    }
    if let Some(format) = format {
        req.output = match format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        };
    }
    req.invariants_only |= invariants_only;
    Ok(req)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_requested = matches!(&cli.command, Command::Analyze { format: Some(Format::Json), .. });
    let result = build_request(cli.command).and_then(|req| {
        let format = req.output;
        analyze(&req).map(|r| (r, format)).map_err(Failure::Analysis)
    });
    match result {
        Ok((report, format)) => {
            let out = match format {
                OutputFormat::Json => report.to_json() + "\n",
                OutputFormat::Text => render_text(&report),
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(exit::OK)
        }
        Err(failure) => {
            if json_requested {
                eprintln!("{}", serde_json::to_string_pretty(&failure.report()).unwrap());
            } else {
                let r = failure.report();
                eprintln!("error [{}]: {}", r.error.code, r.error.message);
            }
            ExitCode::from(failure.status())
        }
    }
}
