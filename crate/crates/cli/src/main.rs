//! `bundlesplit`: sweeps and single queries over the splitting-criteria kernel.

mod args;
mod commands;
mod output;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use args::{FlagArg, GrassArg, IntList, RangeArg};
use output::Format;

/// Exit codes: 0 completed, 1 a verification claim failed, 2 bad input,
/// 3 resource guard exceeded.
#[derive(Parser, Debug)]
#[command(name = "bundlesplit", version, about)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write results here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for sweeps (default: available cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Upper limit on enumerated cases before refusing to run
    #[arg(long, global = true, default_value_t = 100_000_000)]
    max_cases: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bott cohomology of one line or Schur bundle
    Cohomology {
        /// Flag shape `d1,...,dt:n`
        #[arg(long)]
        flag: FlagArg,
        /// Levi-dominant weight, `n` comma-separated integers
        #[arg(long, allow_hyphen_values = true)]
        weight: IntList,
    },
    /// Search for a line bundle with nonzero H^1..H^h
    Hsplit {
        #[arg(long)]
        flag: FlagArg,
        #[arg(long)]
        h: usize,
        /// Box half-width (default n*t)
        #[arg(long)]
        bound: Option<u64>,
    },
    /// H^nu vanishing on F(n, nu+n-1; nu+n) for all m >= 1
    Claim2 {
        #[arg(long, allow_hyphen_values = true)]
        nu_range: RangeArg,
        #[arg(long, allow_hyphen_values = true)]
        n_range: RangeArg,
        #[arg(long, allow_hyphen_values = true)]
        k_range: RangeArg,
    },
    /// Compare the 1-splitting search with the adjacent-singleton test
    Cohom0Verify {
        #[arg(long)]
        max_n: usize,
    },
    /// Buchsbaum-Eisenbud resolution of I_Y^m (Koszul for m = 1)
    Resolution {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        m: u32,
    },
    /// Chase H^t(O(k) ⊗ I_Y^m) through the resolution on Grs(e; d)
    Chase {
        /// `e,d`
        #[arg(long)]
        grass: GrassArg,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: usize,
    },
    /// Hypothesis gates and effective thresholds for a scenario file
    Thresholds {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Isotypical poset of V in a scenario file
    Poset {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Reduction chain down to Grs(2; 4) or 2_•
    Reduce {
        #[arg(long, conflicts_with = "flag", required_unless_present = "flag")]
        grass: Option<GrassArg>,
        #[arg(long)]
        flag: Option<FlagArg>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, commands::CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(commands::CliError::Input("--threads must be >= 1".into()));
        }
        pool = pool.num_threads(k);
    }
    let pool = pool
        .build()
        .map_err(|e| commands::CliError::Internal(e.to_string()))?;
    let report = pool.install(|| commands::dispatch(&cli.command, cli.max_cases))?;
    output::emit(&report, cli.format, cli.output.as_deref())
        .map_err(|e| commands::CliError::Input(format!("cannot write output: {e}")))?;
    Ok(if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
