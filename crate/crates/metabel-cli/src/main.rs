//! Batch front end: every pipeline in the library is exposed as a
//! reproducible command with JSON or CSV artifacts on stdout (or --out) and
//! a run report on stderr.
//!
//! Exit codes: 0 success, 1 failed assertion, 2 unparseable input.

mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::Report;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "metabel",
    version,
    about = "Exact censuses, classification tables, and extension catalogs \
             for metabelian algebra structures over small prime fields"
)]
pub struct Cli {
    /// Node budget for enumerations; overrides the METABEL_BUDGET env var.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker hint for enumeration commands. Scheduling is deterministic:
    /// output is byte-identical for every value.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Artifact format where the command supports a choice.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the artifact to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    Algebra,
    Datum,
    Pair,
    Form,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ClassifyMode {
    Homothety,
    Isometry,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum CensusKind {
    #[value(name = "met_kv")]
    MetKv,
    #[value(name = "ext_k")]
    ExtK,
}

#[derive(Subcommand)]
enum Command {
    /// Check a JSON input file against every invariant of its type.
    Validate {
        #[arg(long, value_enum)]
        kind: InputKind,
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the product algebra of a datum file.
    Product {
        #[arg(long)]
        datum: PathBuf,
    },
    /// Split a metabelian algebra into a datum plus a change of basis.
    Decompose {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Search for an isomorphism between two algebra files.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// List the automorphism group of an algebra file.
    Aut {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Test the abelian-pair decomposition hypothesis on an algebra,
    /// either for two given spans or by exhaustive search.
    Ito {
        #[arg(long)]
        algebra: PathBuf,
        /// Matrix file whose rows span the first subalgebra.
        #[arg(long, requires = "second_span")]
        first_span: Option<PathBuf>,
        /// Matrix file whose rows span the second subalgebra.
        #[arg(long, requires = "first_span")]
        second_span: Option<PathBuf>,
    },
    /// Enumerate the full extension catalog for one size.
    Ext {
        #[arg(long = "dimP")]
        dim_p: usize,
        #[arg(long = "dimV")]
        dim_v: usize,
        #[arg(long)]
        p: u32,
    },
    /// Classify bilinear forms up to homothety (or isometry) and
    /// cross-check each class against algebra isomorphism.
    #[command(name = "classify-dim1")]
    ClassifyDim1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "homothety")]
        mode: ClassifyMode,
    },
    /// Instantiate a named form or algebra family.
    Catalog {
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
    },
    /// Enumerate commuting square-zero matrix pairs with their
    /// equalizer, image, and class counts.
    #[command(name = "enumerate-T")]
    EnumerateT {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
    },
    /// Build the algebra attached to a matrix pair and an equalizer vector.
    #[command(name = "build-codim1")]
    BuildCodim1 {
        #[arg(long)]
        pair: PathBuf,
        /// Coordinates of the equalizer vector, comma separated.
        #[arg(long)]
        u: String,
    },
    /// Cross-count censuses that must agree by construction.
    Census {
        #[arg(long, value_enum)]
        kind: CensusKind,
        #[arg(long = "dimV")]
        dim_v: usize,
        #[arg(long)]
        p: u32,
    },
    /// Run the full acceptance suite; exit 0 iff every criterion passes.
    Selftest,
}

/// How a command failed, which decides the exit code.
pub enum Failure {
    /// Unreadable, unparseable, or invariant-violating input.
    Parse(String),
    /// The inputs were fine but a computation-time assertion failed.
    Run(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().collect();
    let mut report = Report::new(echo.join(" "));
    let started = Instant::now();
    let outcome = commands::dispatch(&cli, &mut report);
    report.set_timing(started.elapsed().as_millis());
    let code = match outcome {
        Ok(()) => {
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Parse(msg)) => {
            report.fail("input parses", msg);
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            report.fail("run completes", msg);
            ExitCode::from(1)
        }
    };
    report.emit();
    code
}
