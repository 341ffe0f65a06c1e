use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use poset_ao::cli::{
    cmd_analyze, cmd_gen, cmd_table, cmd_verify, AnalyzeOptions, GenKind, TableKind,
    VerifyOptions,
};

/// Compute and verify the maximum induced union of cliques on posets and
/// graphs.
///
/// Exit codes: 0 success, 1 input/parse errors or failed verification,
/// 2 relation cycles, 3 solver node limit, 4 generator self-check failure.
#[derive(Parser)]
#[command(name = "poset-ao", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a poset or graph file: parameters, bounds, predicates.
    Analyze {
        path: PathBuf,
        /// Also run the subset-enumeration oracle.
        #[arg(long)]
        brute: bool,
        /// Print the chain-family (or cluster) witness.
        #[arg(long)]
        witness: bool,
        /// Write a DOT rendering of the Hasse diagram (or graph) here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Branch node budget for the exact solver.
        #[arg(long, default_value_t = 100_000_000)]
        node_limit: u64,
    },
    /// Generate a named construction and re-check its claims.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Construction parameters (one number, or two for lambda-h).
        params: Vec<u64>,
        /// Write the generated poset/graph file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000_000)]
        node_limit: u64,
    },
    /// Emit the lambda, x or acyclic-bracket tables.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest argument to tabulate.
        #[arg(long)]
        max: u64,
        /// CSV instead of aligned text.
        #[arg(long)]
        csv: bool,
    },
    /// Run the full desk-scale verification battery.
    Verify {
        /// Cap for the exhaustive enumeration sweeps.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Cap for the formula sweeps.
        #[arg(long, default_value_t = 4096)]
        max_a: u64,
        /// Random graphs for the oracle-equivalence suite.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Keep usage errors on exit code 1; code 2 is reserved for
            // relation cycles. --help and --version still exit 0.
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };

    let result = match cli.command {
        Command::Analyze {
            path,
            brute,
            witness,
            dot,
            node_limit,
        } => cmd_analyze(
            &path,
            &AnalyzeOptions {
                brute,
                witness,
                dot,
                node_limit,
            },
        ),
        Command::Gen {
            kind,
            params,
            out,
            node_limit,
        } => cmd_gen(kind, &params, out.as_deref(), node_limit),
        Command::Table { kind, max, csv } => cmd_table(kind, max, csv),
        Command::Verify {
            max_n,
            max_a,
            trials,
        } => {
            let (report, ok) = cmd_verify(&VerifyOptions {
                max_a,
                max_n,
                graph_trials: trials,
            });
            print!("{report}");
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };

    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
