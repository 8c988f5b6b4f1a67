use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Subcommand;

use ordhom::generate::{random_graph, random_partitioned, random_shifted, seeded_rng};
use ordhom::io::serialize_ordered_graph;
use ordhom::{validate_decomposition, OrderedGraph};

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Each pair of vertices is an edge with probability p.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The complete graph K_n.
    Clique {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A random target that is shifted for the given segment sizes.
    Shifted {
        #[arg(long, value_delimiter = ',', required = true, value_name = "S1,S2,...")]
        segments: Vec<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k parts of l vertices with random edges between parts.
    Partitioned {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        bail!("--p must lie in [0, 1], got {p}");
    }
    Ok(())
}

fn emit(text: String, out: Option<PathBuf>) -> Result<ExitCode> {
    match out {
        Some(path) => std::fs::write(&path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_text(header: &str, g: &OrderedGraph) -> String {
    format!("# {header}\n{}", serialize_ordered_graph(g))
}

pub fn run(cmd: GenCommand) -> Result<ExitCode> {
    match cmd {
        GenCommand::Random { n, p, seed, out } => {
            check_probability(p)?;
            let g = random_graph(n, p, &mut seeded_rng(seed));
            emit(
                graph_text(&format!("random n={n} p={p} seed={seed}"), &g),
                out,
            )
        }
        GenCommand::Clique { n, out } => emit(
            graph_text(&format!("clique n={n}"), &OrderedGraph::complete(n)),
            out,
        ),
        GenCommand::Shifted {
            segments,
            seed,
            out,
        } => {
            let (h, d) = random_shifted(&segments, &mut seeded_rng(seed))
                .context("segment sizes must be positive")?;
            assert!(validate_decomposition(&h, &d));
            let sizes: Vec<String> = segments.iter().map(usize::to_string).collect();
            let header = format!("shifted segments={} seed={seed}", sizes.join(","));
            emit(graph_text(&header, &h), out)
        }
        GenCommand::Partitioned { k, l, p, seed, out } => {
            check_probability(p)?;
            if k == 0 || l == 0 {
                bail!("--k and --l must be at least 1");
            }
            let part = random_partitioned(k, l, p, &mut seeded_rng(seed))?;
            let header = format!("partitioned parts={k} size={l} p={p} seed={seed}");
            emit(graph_text(&header, part.graph()), out)
        }
    }
}
