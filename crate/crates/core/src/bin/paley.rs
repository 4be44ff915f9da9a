use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use paley::cli::{self, CountRequest, Outcome, OutputFormat};
use paley::cliques::{BruteForceLimits, CountMethod};
use paley::tables::RowFilter;

#[derive(Parser)]
#[command(name = "paley", version, about = "Clique counts and Jacobi sums for Paley-type graphs over Z_n")]
struct Args {
    /// Worker threads for the counting kernels (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bruteforce,
    Reduction,
    Formula,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check that n = 2^s p_1^a_1 ... p_k^a_k with s <= 1 and every p_i = 1 mod 4.
    Check { n: u64 },

    /// Count cliques of order 3 or 4 in G_n.
    Count {
        n: u64,
        #[arg(long, default_value_t = 3)]
        order: u32,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// Refuse brute force above this n (default 100000 for order 3, 20000 for order 4).
        #[arg(long)]
        bruteforce_ceiling: Option<u64>,
        /// Write the edge list of G_n ("u v" per line, u < v) to this file.
        #[arg(long)]
        emit_edges: Option<PathBuf>,
    },

    /// Jacobi sum J(psi, chi) mod p^alpha and the x^2 - y^2 identity.
    Jacobi { p: u64, alpha: u32 },

    /// Recompute the reference clique-count and Jacobi-sum tables.
    VerifyTables {
        /// Run a single row: `n=1073` or `p=37,alpha=2`.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Check { n } => cli::cmd_check(n),
        Command::Count { n, order, method, bruteforce_ceiling, emit_edges } => {
            let mut limits = BruteForceLimits::default();
            if let Some(c) = bruteforce_ceiling {
                limits = BruteForceLimits { k3_ceiling: c, k4_ceiling: c };
            }
            let method = match method {
                MethodArg::Bruteforce => Some(CountMethod::Bruteforce),
                MethodArg::Reduction => Some(CountMethod::Reduction),
                MethodArg::Formula => Some(CountMethod::Formula),
                MethodArg::All => None,
            };
            cli::cmd_count(&CountRequest { n, order, method, limits, emit_edges })
        }
        Command::Jacobi { p, alpha } => cli::cmd_jacobi(p, alpha),
        Command::VerifyTables { only, format } => {
            let format = match format {
                FormatArg::Json => OutputFormat::Json,
                FormatArg::Csv => OutputFormat::Csv,
            };
            match only.as_deref().map(str::parse::<RowFilter>).transpose() {
                Ok(only) => cli::cmd_verify_tables(only, format),
                Err(e) => cli::error_outcome(&["verify-tables".to_string(), "--only".to_string(), only.unwrap_or_default()], &e),
            }
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = match cli::with_threads(args.threads, || dispatch(args.command)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    print!("{}", outcome.stdout());
    if !outcome.summary.is_empty() {
        eprintln!("{}", outcome.summary);
    }
    ExitCode::from(outcome.exit.code() as u8)
}
