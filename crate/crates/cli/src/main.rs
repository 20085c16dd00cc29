//! Batch front end: parse algebra description files, run check suites and
//! constructions, emit deterministic reports, and generate seeded valid
//! instances.
//!
//! Exit statuses: 0 all checks pass, 1 axiom or guard failure, 2 usage or
//! parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dialgebra::document::serialize_document;
use dialgebra::error::Error;
use dialgebra::runner::{self, ReportDocument, RunOptions};

#[derive(Parser)]
#[command(
    name = "dialgebra",
    version,
    about = "Exact structure-constant toolkit for dialgebras, Leibniz algebras and Poisson dialgebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportMode::Text)]
    report: ReportMode,
    /// Hard cap on any dimension appearing in a document.
    #[arg(long, global = true, default_value_t = 32)]
    max_dim: usize,
    /// Violations shown per axiom in reports.
    #[arg(long, global = true, default_value_t = 10)]
    violations: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportMode {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full axiom suite appropriate to the document's kind.
    Check { file: PathBuf },
    /// Execute a construction and serialize its outputs.
    Construct {
        file: PathBuf,
        /// Operation name, e.g. associativization, poissonization,
        /// induced-leibniz, homotopy-pair, associated-graded, gerstenhaber.
        #[arg(long)]
        op: String,
        /// Write the constructed document(s) here (second and later outputs
        /// get a numeric suffix).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate seeded valid instances from a construction family.
    Generate {
        /// assoc-as-dialgebra | bimodule-map | differential | averaging | filtered
        #[arg(long)]
        family: String,
        /// Dimension bound.
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Evaluate the exploratory compatibility residuals between the two
    /// 2-term structures; prints residual tensors without asserting any law.
    ExploreCompat { file: PathBuf },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Guard { .. } | Error::Precondition(_) | Error::InvalidInput { .. } => 1,
        _ => 2,
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn emit(report: &ReportDocument, mode: ReportMode) {
    match mode {
        ReportMode::Text => print!("{}", report.to_text()),
        ReportMode::Json => print!("{}", report.to_json()),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let opts = RunOptions {
        max_dim: cli.max_dim,
        violation_prefix: cli.violations,
    };
    match cli.cmd {
        Cmd::Check { file } => {
            let input = read_input(&file)?;
            let report = runner::run_check(&input, &opts)?;
            emit(&report, cli.report);
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Construct { file, op, out } => {
            let input = read_input(&file)?;
            let report = runner::run_construct(&input, &op, &opts)?;
            emit(&report, cli.report);
            if let Some(out_path) = out {
                for (i, doc) in report.constructions.iter().enumerate() {
                    let path = if i == 0 {
                        out_path.clone()
                    } else {
                        let stem = out_path
                            .file_stem()
                            .and_then(|s| s.to_str())
                            .unwrap_or("out");
                        let ext = out_path
                            .extension()
                            .and_then(|s| s.to_str())
                            .unwrap_or("json");
                        out_path.with_file_name(format!("{stem}.{i}.{ext}"))
                    };
                    std::fs::write(&path, serialize_document(doc))?;
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Generate {
            family,
            dim,
            seed,
            count,
            out_dir,
        } => {
            let docs = runner::run_generate(&family, dim, seed, count, &opts)?;
            std::fs::create_dir_all(&out_dir)?;
            for doc in &docs {
                let path = out_dir.join(format!("{}.json", doc.name));
                std::fs::write(&path, serialize_document(doc))?;
                println!("wrote {}", path.display());
            }
            Ok(0)
        }
        Cmd::ExploreCompat { file } => {
            let input = read_input(&file)?;
            let report = runner::explore_compat(&input, &opts)?;
            emit(&report, cli.report);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
