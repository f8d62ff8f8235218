//! `congruence-lab`: Chow forms, congruence bidegrees, Schubert products and
//! oracle verification from the shell.

mod commands;
mod objects;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use congruence_core::{Error, DEFAULT_PRIME, DEFAULT_SEED};

use crate::output::Printer;

#[derive(Parser, Debug)]
#[command(name = "congruence-lab", version, about = "Enumerative geometry of lines in P^3, exactly")]
pub struct Cli {
    /// Seed for every random choice (decimal or 0x-prefixed hex).
    #[arg(long, global = true, env = "CONGRUENCE_LAB_SEED", value_parser = parse_seed)]
    seed: Option<u64>,

    /// Modulus used with `--field Fp`.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME as u64)]
    prime: u64,

    /// Coefficient field; commands pick their own default when omitted.
    #[arg(long, global = true, value_enum)]
    field: Option<FieldArg>,

    /// One JSON object per result (the default).
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,

    /// Human-readable output.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "Fp", alias = "fp")]
    Fp,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Canonical Chow form of a rational space curve.
    Chowform {
        /// twisted-cubic, rational-quartic, rational-quintic, plane-conic,
        /// monomial:<d>:<a>:<b> or forms:<coeffs>/<coeffs>/<coeffs>/<coeffs>
        curve: String,
    },
    /// Order and class of a congruence.
    Bidegree {
        #[command(subcommand)]
        kind: BidegreeKind,
    },
    /// Products in the Chow ring of the Grassmannian of lines.
    Schubert {
        #[command(subcommand)]
        op: SchubertOp,
    },
    /// Contact classification of a line against a curve or surface.
    Classify {
        #[command(subcommand)]
        what: ClassifyKind,
    },
    /// Run a counting oracle and compare it with the closed formula.
    Verify(VerifyArgs),
    /// Duality on classes.
    Dual {
        #[command(subcommand)]
        op: DualOp,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CurveParams {
    #[arg(long)]
    d: u64,
    #[arg(long, default_value_t = 0)]
    g: u64,
    /// Multiplicities of the ordinary singular points, comma separated.
    #[arg(long)]
    mults: Option<String>,
    #[arg(long)]
    planar: bool,
}

#[derive(Subcommand, Debug)]
pub enum BidegreeKind {
    /// Secant congruence of a curve.
    Sec(CurveParams),
    /// Singular locus of the Chow hypersurface.
    #[command(name = "sing-ch0")]
    SingCh0(CurveParams),
    /// Bitangent congruence of a general surface.
    Bit {
        #[arg(long)]
        d: u64,
    },
    /// Inflectional congruence of a general surface.
    Infl {
        #[arg(long)]
        d: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SchubertOp {
    /// Product of two classes, e.g. `s1` and `s1`.
    Mul { a: String, b: String },
    /// Degree of the product of two classes.
    Count { a: String, b: String },
}

#[derive(Subcommand, Debug)]
pub enum ClassifyKind {
    /// Position of a line relative to the secant variety of a curve.
    #[command(name = "line-curve")]
    LineCurve { line: String, curve: String },
    /// Contact of a line with a surface.
    #[command(name = "line-surface")]
    LineSurface { line: String, surface: String },
}

#[derive(Subcommand, Debug)]
pub enum DualOp {
    /// Image of a class under the duality of `P^3`.
    Perp { class: String },
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Oracle to run.
    #[arg(value_enum, required_unless_present = "all")]
    oracle: Option<verify::OracleName>,
    #[arg(long)]
    curve: Option<String>,
    #[arg(long)]
    surface: Option<String>,
    #[arg(long = "plane-curve")]
    plane_curve: Option<String>,
    /// Plane parametrization: conic, cuspidal-cubic, nodal-cubic or forms:...
    #[arg(long)]
    param: Option<String>,
    /// Cusp count for an explicit plane parametrization.
    #[arg(long)]
    cusps: Option<u64>,
    /// Node count for an explicit plane parametrization.
    #[arg(long)]
    nodes: Option<u64>,
    /// Run every oracle on its standard family.
    #[arg(long, conflicts_with = "oracle")]
    all: bool,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// Failure modes with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    NonGeneric(String),
    Mismatch(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::NonGeneric(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::NonGeneric(m) | Failure::Mismatch(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonGeneric { .. } => Failure::NonGeneric(e.to_string()),
            Error::Interpolation(_) => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

pub struct Ctx {
    pub seed: u64,
    pub prime: u64,
    pub field: Option<FieldArg>,
    pub out: Printer,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        prime: cli.prime,
        field: cli.field,
        out: Printer::new(!cli.plain),
    };
    let result = match cli.cmd {
        Cmd::Chowform { curve } => commands::chowform(&ctx, &curve),
        Cmd::Bidegree { kind } => commands::bidegree(&ctx, &kind),
        Cmd::Schubert { op } => commands::schubert(&ctx, &op),
        Cmd::Classify { what } => commands::classify(&ctx, &what),
        Cmd::Verify(args) => verify::verify(&ctx, &args),
        Cmd::Dual { op } => commands::dual(&ctx, &op),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("congruence-lab: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
