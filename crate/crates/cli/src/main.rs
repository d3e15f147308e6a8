use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fracrec_cli::commands::{
    cmd_conditions, cmd_corpus, cmd_normalize, cmd_search, cmd_verify, parse_periods, Outcome, EXIT_IO, EXIT_USAGE,
};
use fracrec_cli::search::SearchOptions;
use fracrec_core::solver::SolverConfig;
use fracrec_core::verify::{DEFAULT_KMAX, DEFAULT_SEED, DEFAULT_TRIALS};

/// Exact search and certification of globally periodic fractional-linear recursions.
#[derive(Parser)]
#[command(name = "fracrec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Random starts for the numeric cross-check.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    numeric_trials: usize,
    /// Working precision in bits (numeric checks and root isolation).
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(64..=4096))]
    precision: u32,
    /// Seed for the numeric cross-check.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON instead of plain text.
    #[arg(long)]
    json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Test hook: shift every recognized root before certification.
    #[arg(long, hide = true)]
    perturb_solver: bool,
}

impl Common {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            solver: SolverConfig {
                precision: self.precision,
                perturb_candidates: self.perturb_solver,
                ..SolverConfig::default()
            },
            numeric_trials: self.numeric_trials,
            precision: self.precision,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve the periodicity conditions for one or more periods.
    Search {
        /// order2-reduced, order3-type1 or order3-type2.
        #[arg(long)]
        kind: String,
        /// A single period.
        #[arg(long, conflicts_with = "periods", required_unless_present = "periods")]
        period: Option<usize>,
        /// An inclusive range `A..B`.
        #[arg(long)]
        periods: Option<String>,
        /// Search the periods concurrently.
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Write the condition system of a kind and period.
    Conditions {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        period: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a recursion from a spec file for periodicity.
    Verify {
        spec_file: PathBuf,
        #[arg(long)]
        period: usize,
        /// Bound for the minimal-period search.
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Conjugate a general recursion to its reduced form.
    Normalize {
        spec_file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the full reproduction checklist.
    Corpus {
        #[command(flatten)]
        common: Common,
    },
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
        code: EXIT_IO,
    })
}

fn emit(out: Outcome, output: Option<&PathBuf>) -> ExitCode {
    let mut code = out.code;
    eprint!("{}", out.stderr);
    match output {
        Some(path) if !out.stdout.is_empty() => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                code = EXIT_IO;
            }
        }
        _ => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                code = EXIT_IO;
            }
        }
    }
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Search { kind, period, periods, parallel, common } => {
            let periods = match (period, periods) {
                (Some(p), _) => vec![p],
                (None, Some(r)) => match parse_periods(&r) {
                    Ok(p) => p,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_USAGE as u8);
                    }
                },
                (None, None) => unreachable!("clap requires a period"),
            };
            let out = cmd_search(&kind, &periods, &common.options(), common.json, parallel);
            emit(out, common.output.as_ref())
        }
        Command::Conditions { kind, period, output } => emit(cmd_conditions(&kind, period), output.as_ref()),
        Command::Verify { spec_file, period, kmax, common } => match read(&spec_file) {
            Ok(src) => emit(cmd_verify(&src, period, kmax, &common.options(), common.json), common.output.as_ref()),
            Err(o) => emit(o, None),
        },
        Command::Normalize { spec_file, json, output } => match read(&spec_file) {
            Ok(src) => emit(cmd_normalize(&src, json), output.as_ref()),
            Err(o) => emit(o, None),
        },
        Command::Corpus { common } => emit(cmd_corpus(&common.options(), common.json), common.output.as_ref()),
    }
}
