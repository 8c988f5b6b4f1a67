//! `ordhom`: solve, analyse, reduce and generate ordered graph instances.
//!
//! Exit codes: 0 feasible (or success), 1 infeasible, 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

mod gen;
mod reduce;
mod solve;

#[derive(Debug, Parser)]
#[command(name = "ordhom", version, about = "Ordered graph homomorphism toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether G maps to H by an ordered homomorphism.
    Solve(solve::SolveArgs),
    /// Print the ordered chromatic number of G.
    Chi { graph: PathBuf },
    /// Find a minimum shifted-clique decomposition of H and its width c(H).
    Recognize { graph: PathBuf },
    /// Build ordered homomorphism instances from other problems.
    #[command(subcommand)]
    Reduce(reduce::ReduceCommand),
    /// Generate seeded instances.
    #[command(subcommand)]
    Gen(gen::GenCommand),
}

/// Output file prefix shared by the reductions.
#[derive(Debug, Args)]
struct OutPrefix {
    /// Files are written as PREFIX.g, PREFIX.h, PREFIX.lists and PREFIX.{g,h}.prov.
    #[arg(long, value_name = "PREFIX")]
    out: PathBuf,
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &PathBuf) -> Result<ordhom::OrderedGraph> {
    ordhom::io::parse_ordered_graph(&read(path)?)
        .with_context(|| format!("cannot parse {}", path.display()))
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("ORDHOM_THREADS") else {
        return Ok(());
    };
    let threads: usize = match value.trim().parse() {
        Ok(t) if t > 0 => t,
        _ => bail!("ORDHOM_THREADS must be a positive integer, got `{value}`"),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("cannot configure the thread pool")
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Solve(args) => solve::run(&args),
        Command::Chi { graph } => {
            println!("{}", ordhom::solvers::chi_less(&read_graph(&graph)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Recognize { graph } => {
            let h = read_graph(&graph)?;
            match ordhom::recognize_shifted(&h) {
                Some(d) => {
                    println!("shifted k={}", d.len());
                    let sizes: Vec<String> = d.sizes().iter().map(usize::to_string).collect();
                    println!("segments {}", sizes.join(","));
                }
                None => println!("shifted none"),
            }
            println!("c={}", ordhom::compute_c(&h));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(cmd) => reduce::run(cmd),
        Command::Gen(cmd) => gen::run(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
