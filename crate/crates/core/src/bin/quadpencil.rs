use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quadpencil::cli::{self, JobConfig, RandomKind, Target, DEFAULT_BUDGET};
use quadpencil::error::{Error, Result};
use quadpencil::json::{document_from_json, parse_field, Document};

#[derive(Parser)]
#[command(name = "quadpencil", version, about = "Pencils of quadrics, etale triples and hyperelliptic descent data")]
struct Args {
    /// Base field: Q or an odd prime p.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of subspaces an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between pencil (orb), triple (gc) and curve (hec) documents.
    Convert {
        input: PathBuf,
        #[arg(long)]
        to: String,
    },
    /// Run orb→gc→orb or gc→orb→gc and report exactness.
    Roundtrip { input: PathBuf },
    /// Determinant form and discriminant.
    StableCheck { input: PathBuf },
    /// Square-class test with the exhaustive isotropic-subspace cross-check.
    Quasisplit { input: PathBuf },
    /// Moebius automorphisms of (L, θ) and the orbit of α.
    Fiber { input: PathBuf },
    /// The class of a Mumford divisor and the isotropy report.
    FromDivisor {
        #[arg(long)]
        curve: PathBuf,
        /// JSON coefficient array, e.g. "[-1, 1]".
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// The two quadrics of a triple or pencil.
    EmitQuadrics { input: PathBuf },
    /// Normalized characteristic scheme, optionally compared with another input.
    CharScheme {
        input: PathBuf,
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// A seeded random stable pencil or triple.
    Random {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value = "pencil")]
        kind: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Convert { .. } => "convert",
            Command::Roundtrip { .. } => "roundtrip",
            Command::StableCheck { .. } => "stable-check",
            Command::Quasisplit { .. } => "quasisplit",
            Command::Fiber { .. } => "fiber",
            Command::FromDivisor { .. } => "from-divisor",
            Command::EmitQuadrics { .. } => "emit-quadrics",
            Command::CharScheme { .. } => "char-scheme",
            Command::Random { .. } => "random",
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn read_doc(path: &Path, cfg: &JobConfig) -> Result<Document> {
    document_from_json(cli::unwrap_document(&read_json(path)?), cfg.field)
}

fn parse_array(s: &str) -> Result<Vec<Value>> {
    serde_json::from_str(s).map_err(|e| Error::Invalid(format!("{s:?}: {e}")))
}

const BUDGET_EXIT: u8 = 4;

enum Output {
    Json(Value),
    Text(String),
}

fn run(args: &Args, cfg: &JobConfig) -> Result<Output> {
    if args.format == Format::Text && !matches!(args.command, Command::EmitQuadrics { .. }) {
        return Err(Error::Invalid("text output is only available for emit-quadrics".into()));
    }
    let result = match &args.command {
        Command::Convert { input, to } => cli::cmd_convert(&read_doc(input, cfg)?, to.parse::<Target>()?)?,
        Command::Roundtrip { input } => cli::cmd_roundtrip(&read_doc(input, cfg)?)?,
        Command::StableCheck { input } => cli::cmd_stable_check(&read_doc(input, cfg)?)?,
        Command::Quasisplit { input } => cli::cmd_quasisplit(&read_doc(input, cfg)?, cfg.budget)?,
        Command::Fiber { input } => cli::cmd_fiber(&read_doc(input, cfg)?)?,
        Command::FromDivisor { curve, g, h } => {
            cli::cmd_from_divisor(&read_doc(curve, cfg)?, &parse_array(g)?, &parse_array(h)?, cfg.budget)?
        }
        Command::EmitQuadrics { input } => {
            let [q0, q1] = cli::cmd_emit_quadrics(&read_doc(input, cfg)?)?;
            if args.format == Format::Text {
                return Ok(Output::Text(format!("{q0}\n{q1}")));
            }
            json!({ "quadrics": [q0, q1] })
        }
        Command::CharScheme { input, against } => {
            let other = against.as_deref().map(|p| read_doc(p, cfg)).transpose()?;
            cli::cmd_char_scheme(&read_doc(input, cfg)?, other.as_ref())?
        }
        Command::Random { degree, kind } => cli::cmd_random(cfg, *degree, kind.parse::<RandomKind>()?)?,
    };
    Ok(Output::Json(cli::envelope(cfg, result)))
}

/// A closed pipe downstream (e.g. `| head`) is not an error worth a panic.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut cfg = JobConfig::new(args.command.name());
    cfg.seed = args.seed;
    cfg.budget = args.budget;
    let outcome = args
        .field
        .as_deref()
        .map(parse_field)
        .transpose()
        .and_then(|f| {
            cfg.field = f;
            run(&args, &cfg)
        });
    match outcome {
        Ok(Output::Json(v)) => {
            emit(&serde_json::to_string_pretty(&v).expect("serializable"));
            if cli::budget_exhausted(&v["result"]) {
                ExitCode::from(BUDGET_EXIT)
            } else {
                ExitCode::SUCCESS
            }
        }
        Ok(Output::Text(t)) => {
            emit(&t);
            ExitCode::SUCCESS
        }
        Err(e) => {
            emit(&serde_json::to_string_pretty(&cli::error_report(&cfg, &e)).expect("serializable"));
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
