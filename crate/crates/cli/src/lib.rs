//! `cremona-lab`: construct, analyse, deform and scan cubic Cremona
//! transformations of P3 from the command line.

pub mod atlas;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cremona_core::idealkit::{with_budget, Budget};

use crate::error::{code, CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "cremona-lab", version, about = "Cubic Cremona transformations of P3")]
pub struct Cli {
    /// Groebner budget `pairs=N,degree=D`; overrides the CREMONA_LAB_BUDGET variable.
    #[arg(long, global = true, value_name = "SPEC")]
    pub budget: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a member of a family and write its MapDocument.
    Construct(ConstructArgs),
    /// Analyse a MapDocument and write an AnalysisReport.
    Analyze(AnalyzeArgs),
    /// Follow a deformation path and check its endpoints.
    Deform(DeformArgs),
    /// Analyse many random family members, optionally into a JSONL atlas.
    Scan(ScanArgs),
    /// Run the acceptance criteria.
    Verify(VerifyArgs),
    /// Print the encoded classification table.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Family label (E2 .. E24, E3.5, E7.5), `ruled`, a constructor name
    /// (determinantal, dejonquieres, cuboquartic, cuboquintic) or `example`.
    #[arg(long)]
    pub family: String,
    /// Second degree `d` of a ruled map.
    #[arg(long)]
    pub d: Option<u32>,
    /// Stratum for the constructor names, such as E7 for cuboquartic.
    #[arg(long)]
    pub variant: Option<String>,
    /// Name of a fixed example (with `--family example`).
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// `q` or `gf:<prime>`.
    #[arg(long, default_value = commands::DEFAULT_FIELD)]
    pub field: String,
    /// Output file; standard output if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// MapDocument file, or `-` for standard input.
    pub file: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Fiber samples of the birationality test.
    #[arg(long, default_value_t = 5)]
    pub trials: u32,
    /// Primes to try first for a rational document (repeatable).
    #[arg(long = "prime")]
    pub primes: Vec<u64>,
    /// Output file; standard output if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock time, which makes reports differ between runs.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct DeformArgs {
    /// det_to_dJ, E6_to_E7, ruled_jump or E24_to_E23.
    #[arg(long)]
    pub path: String,
    /// Parameter values, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0i64, 1, 2])]
    pub samples: Vec<i64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// `gf:<prime>`.
    #[arg(long, default_value = commands::DEFAULT_FIELD)]
    pub field: String,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Comma-separated family labels, or `all`.
    #[arg(long, default_value = "all")]
    pub families: String,
    /// Samples per family.
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    /// First seed; samples use consecutive seeds.
    #[arg(long, default_value_t = 1)]
    pub seed_start: u64,
    /// Fixed prime; by default each sample draws one in (10^6, 2^31).
    #[arg(long)]
    pub prime: Option<u64>,
    /// JSONL atlas to append to.
    #[arg(long)]
    pub atlas: Option<PathBuf>,
    /// Worker threads; all cores if absent.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = 5)]
    pub trials: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Primes to use first (repeatable); inadmissible ones are retried.
    #[arg(long = "prime")]
    pub primes: Vec<u64>,
    /// Table file to check instead of the embedded one.
    #[arg(long)]
    pub table_file: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub scan_samples: Option<usize>,
    #[arg(long)]
    pub property_cases: Option<usize>,
    /// Criteria to run, comma separated; all if absent.
    #[arg(long, value_delimiter = ',')]
    pub criteria: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// `tsv` (the encoded file) or `json`.
    #[arg(long, default_value = "tsv")]
    pub format: String,
}

fn dispatch(cli: Cli) -> CliResult<i32> {
    let budget = match &cli.budget {
        Some(spec) => Some(Budget::parse(spec).map_err(|e| CliError::usage(format!("--budget: {e}")))?),
        None => None,
    };
    let run = || match cli.command {
        Command::Construct(a) => commands::construct(&a),
        Command::Analyze(a) => commands::analyze(&a),
        Command::Deform(a) => commands::deform(&a),
        Command::Scan(a) => commands::scan(&a, budget),
        Command::Verify(a) => commands::verify(&a),
        Command::Table(a) => commands::table(&a),
    };
    match budget {
        Some(b) => with_budget(b, run),
        None => run(),
    }
}

/// Parse arguments, run the command and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { code::USAGE } else { code::OK };
        }
    };
    match dispatch(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("cremona-lab: {e}");
            e.code
        }
    }
}
