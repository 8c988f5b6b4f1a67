use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Subcommand;

use ordhom::io::{parse_structure, serialize_lists, serialize_ordered_graph, serialize_provenance};
use ordhom::reductions::{
    coloring_to_struct, reduce_mis_list, reduce_mis_nolist, reduce_struct_list,
    reduce_struct_nolist, PartitionedGraph,
};
use ordhom::{ListAssignment, OrderedGraph, RelationalStructure};

use crate::{read, read_graph, OutPrefix};

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Structure homomorphism GS -> HS.
    Struct {
        source: PathBuf,
        target: PathBuf,
        /// Emit the list instance instead of the plain one.
        #[arg(long)]
        lists: bool,
        #[command(flatten)]
        out: OutPrefix,
    },
    /// Proper colouring of F with the given number of colours.
    Coloring {
        graph: PathBuf,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        lists: bool,
        #[command(flatten)]
        out: OutPrefix,
    },
    /// Multicoloured independent set in F split into equal consecutive parts.
    Mis {
        graph: PathBuf,
        #[arg(long)]
        parts: usize,
        #[arg(long)]
        lists: bool,
        #[command(flatten)]
        out: OutPrefix,
    },
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write(path: PathBuf, text: String) -> Result<()> {
    std::fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn write_instance<T: Display>(
    prefix: &Path,
    g: &OrderedGraph,
    h: &OrderedGraph,
    lists: Option<&ListAssignment>,
    g_origin: &[T],
    h_origin: &[T],
) -> Result<()> {
    write(with_suffix(prefix, ".g"), serialize_ordered_graph(g))?;
    write(with_suffix(prefix, ".h"), serialize_ordered_graph(h))?;
    if let Some(l) = lists {
        write(with_suffix(prefix, ".lists"), serialize_lists(l))?;
    }
    write(
        with_suffix(prefix, ".g.prov"),
        serialize_provenance(g_origin),
    )?;
    write(
        with_suffix(prefix, ".h.prov"),
        serialize_provenance(h_origin),
    )
}

fn read_structure(path: &PathBuf) -> Result<RelationalStructure> {
    parse_structure(&read(path)?).with_context(|| format!("cannot parse {}", path.display()))
}

fn structures(
    source: &RelationalStructure,
    target: &RelationalStructure,
    lists: bool,
    prefix: &Path,
) -> Result<()> {
    let core = reduce_struct_list(source, target)?;
    let p = core.kept_elements.len();
    let q = source.tuple_count();
    let summary = format!(
        "|V(G)|={} |V(H)|={} kept elements={p} tuples={q}",
        core.g.vertex_count(),
        core.h.vertex_count()
    );
    if lists {
        println!("struct list instance {summary}");
        write_instance(
            prefix,
            &core.g,
            &core.h,
            core.lists.as_ref(),
            &core.g_origin,
            &core.h_origin,
        )
    } else {
        let out = reduce_struct_nolist(source, target)?;
        println!("struct list instance {summary}");
        println!(
            "struct plain instance |V(G)|={} |V(H)|={} path vertices={}",
            out.g.vertex_count(),
            out.h.vertex_count(),
            p + q + 3
        );
        write_instance(prefix, &out.g, &out.h, None, &out.g_origin, &out.h_origin)
    }
}

pub fn run(cmd: ReduceCommand) -> Result<ExitCode> {
    match cmd {
        ReduceCommand::Struct {
            source,
            target,
            lists,
            out,
        } => structures(
            &read_structure(&source)?,
            &read_structure(&target)?,
            lists,
            &out.out,
        )?,
        ReduceCommand::Coloring {
            graph,
            colors,
            lists,
            out,
        } => {
            if colors == 0 {
                bail!("--colors must be at least 1");
            }
            let (s, t) = coloring_to_struct(&read_graph(&graph)?, colors);
            structures(&s, &t, lists, &out.out)?;
        }
        ReduceCommand::Mis {
            graph,
            parts,
            lists,
            out,
        } => {
            if parts == 0 {
                bail!("--parts must be at least 1");
            }
            let p = PartitionedGraph::equal_parts(read_graph(&graph)?, parts)?;
            let (k, ell) = (p.parts(), p.part_size());
            let r = if lists {
                reduce_mis_list(&p)
            } else {
                reduce_mis_nolist(&p)
            };
            let name = if lists {
                "mis list instance"
            } else {
                "mis plain instance"
            };
            let prime = if lists { "" } else { "'" };
            println!(
                "{name} k={k} l={ell} |V(H{prime})|={} |V(G{prime})|={}",
                r.h.vertex_count(),
                r.g.vertex_count()
            );
            write_instance(
                &out.out,
                &r.g,
                &r.h,
                r.lists.as_ref(),
                &r.g_origin,
                &r.h_origin,
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
