use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Serialize;

use ordhom::io::{parse_bounds, parse_lists, serialize_mapping};
use ordhom::recognize::check_decomposition;
use ordhom::solvers::ShiftedDecomposition;
use ordhom::{solve, Constraints, SolveOptions, SolveResult, Strategy};

use crate::{read, read_graph};

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Source graph G.
    g: PathBuf,
    /// Target graph H.
    h: PathBuf,
    /// auto, brute, shifted or dp.
    #[arg(long, default_value = "auto")]
    algo: Strategy,
    /// Per-vertex target lists (`l` lines).
    #[arg(long, value_name = "FILE")]
    lists: Option<PathBuf>,
    /// Per-vertex image bounds (`b` lines).
    #[arg(long, value_name = "FILE")]
    bounds: Option<PathBuf>,
    /// Segment sizes of a shifted-clique decomposition of H; needs `--algo shifted`.
    #[arg(long, value_delimiter = ',', value_name = "S1,S2,...")]
    segments: Option<Vec<usize>>,
    /// Print the algorithm and work counters as comments.
    #[arg(long)]
    stats: bool,
    /// Print one JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct JsonStats {
    candidates: u64,
    dp_entries: u64,
    branches: u64,
}

#[derive(Serialize)]
struct JsonResult {
    feasible: bool,
    /// 1-based targets.
    witness: Option<Vec<usize>>,
    algorithm: &'static str,
    stats: JsonStats,
}

impl From<&SolveResult> for JsonResult {
    fn from(r: &SolveResult) -> Self {
        JsonResult {
            feasible: r.feasible(),
            witness: r
                .witness
                .as_ref()
                .map(|f| f.targets().iter().map(|t| t + 1).collect()),
            algorithm: r.algorithm.name(),
            stats: JsonStats {
                candidates: r.stats.candidates,
                dp_entries: r.stats.dp_entries,
                branches: r.stats.branches,
            },
        }
    }
}

fn decomposition(
    args: &SolveArgs,
    h: &ordhom::OrderedGraph,
) -> Result<Option<ShiftedDecomposition>> {
    let Some(sizes) = &args.segments else {
        return Ok(None);
    };
    if args.algo != Strategy::Shifted {
        bail!("--segments requires --algo shifted");
    }
    let d = ShiftedDecomposition::from_sizes(sizes).context("segment sizes must be positive")?;
    if d.covered() != h.vertex_count() {
        bail!(
            "segments cover {} vertices but H has {}",
            d.covered(),
            h.vertex_count()
        );
    }
    check_decomposition(h, &d).context("H is not shifted for the given segments")?;
    Ok(Some(d))
}

pub fn run(args: &SolveArgs) -> Result<ExitCode> {
    let g = read_graph(&args.g)?;
    let h = read_graph(&args.h)?;
    let n = g.vertex_count();
    let lists = match &args.lists {
        Some(p) => Some(
            parse_lists(&read(p)?, n).with_context(|| format!("cannot parse {}", p.display()))?,
        ),
        None => None,
    };
    let bounds = match &args.bounds {
        Some(p) => Some(
            parse_bounds(&read(p)?, n).with_context(|| format!("cannot parse {}", p.display()))?,
        ),
        None => None,
    };
    let constraints = Constraints {
        lists: lists.as_ref(),
        bounds: bounds.as_ref(),
    };
    let options = SolveOptions {
        strategy: args.algo,
        decomposition: decomposition(args, &h)?,
    };
    let result = solve(&g, &h, &constraints, &options)?;

    if args.json {
        println!("{}", serde_json::to_string(&JsonResult::from(&result))?);
    } else {
        match &result.witness {
            Some(f) => print!("YES\n{}", serialize_mapping(f)),
            None => println!("NO"),
        }
        if args.stats {
            println!("# algorithm {}", result.algorithm);
            println!(
                "# candidates={} dp_entries={} branches={}",
                result.stats.candidates, result.stats.dp_entries, result.stats.branches
            );
        }
    }
    Ok(if result.feasible() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
