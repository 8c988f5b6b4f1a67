//! Line-oriented text formats. All indices in files are 1-based; everything
//! in memory is 0-based.
//!
//! ```text
//! og <n> <m>              e <i> <j>            (1 <= i < j <= n)
//! struct <size> <rels>    rel <name> <arity> <tuples>    t <x1> ... <xk>
//! b <v> <low> <up>        (bounds, one line per vertex)
//! l <v> <t1> ... <tk>     (lists, one line per vertex)
//! map <n>                 f <v> <target>
//! prov <vertex> <tag...>
//! ```
//!
//! Blank lines and anything after `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{BoundsAssignment, ListAssignment, OrderedGraph, OrderedMapping};
use crate::structure::{Relation, RelationalStructure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; 0 when the input ended early.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.number, message)
    }

    fn expect_keyword(&self, keyword: &str) -> Result<(), ParseError> {
        if self.tokens[0] == keyword {
            Ok(())
        } else {
            Err(self.err(format!("expected `{keyword}`, found `{}`", self.tokens[0])))
        }
    }

    fn expect_len(&self, len: usize) -> Result<(), ParseError> {
        if self.tokens.len() == len {
            Ok(())
        } else {
            Err(self.err(format!(
                "`{}` line takes {} fields, found {}",
                self.tokens[0],
                len - 1,
                self.tokens.len() - 1
            )))
        }
    }

    fn number_at(&self, idx: usize) -> Result<usize, ParseError> {
        let tok = self.tokens[idx];
        tok.parse()
            .map_err(|_| self.err(format!("`{tok}` is not a non-negative integer")))
    }

    /// Parses a 1-based index in `1..=limit` and returns it 0-based.
    fn index_at(&self, idx: usize, limit: usize, what: &str) -> Result<usize, ParseError> {
        let value = self.number_at(idx)?;
        if value == 0 || value > limit {
            return Err(self.err(format!("{what} {value} out of range 1..={limit}")));
        }
        Ok(value - 1)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some(Line {
            number: i + 1,
            tokens,
        })
    })
}

fn next_line<'a>(
    it: &mut impl Iterator<Item = Line<'a>>,
    what: &str,
) -> Result<Line<'a>, ParseError> {
    it.next()
        .ok_or_else(|| ParseError::new(0, format!("unexpected end of input, expected {what}")))
}

fn expect_end<'a>(mut it: impl Iterator<Item = Line<'a>>) -> Result<(), ParseError> {
    match it.next() {
        Some(line) => Err(line.err(format!("unexpected trailing `{}` line", line.tokens[0]))),
        None => Ok(()),
    }
}

pub fn parse_ordered_graph(text: &str) -> Result<OrderedGraph, ParseError> {
    let mut it = lines(text);
    let header = next_line(&mut it, "`og` header")?;
    header.expect_keyword("og")?;
    header.expect_len(3)?;
    let n = header.number_at(1)?;
    let m = header.number_at(2)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    for _ in 0..m {
        let line = next_line(&mut it, "`e` line")?;
        line.expect_keyword("e")?;
        line.expect_len(3)?;
        let i = line.index_at(1, n, "vertex")?;
        let j = line.index_at(2, n, "vertex")?;
        if i >= j {
            return Err(line.err(format!(
                "edge endpoints must satisfy i < j, got {} {}",
                i + 1,
                j + 1
            )));
        }
        if !seen.insert((i, j)) {
            return Err(line.err(format!("duplicate edge {} {}", i + 1, j + 1)));
        }
        edges.push((i, j));
    }
    expect_end(it)?;
    Ok(OrderedGraph::new(n, edges).expect("edges validated while parsing"))
}

pub fn serialize_ordered_graph(g: &OrderedGraph) -> String {
    let mut out = format!("og {} {}\n", g.vertex_count(), g.edge_count());
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "e {} {}", i + 1, j + 1);
    }
    out
}

pub fn parse_structure(text: &str) -> Result<RelationalStructure, ParseError> {
    let mut it = lines(text);
    let header = next_line(&mut it, "`struct` header")?;
    header.expect_keyword("struct")?;
    header.expect_len(3)?;
    let universe = header.number_at(1)?;
    let count = header.number_at(2)?;

    let mut relations = Vec::with_capacity(count);
    let mut names = BTreeSet::new();
    for _ in 0..count {
        let line = next_line(&mut it, "`rel` line")?;
        line.expect_keyword("rel")?;
        line.expect_len(4)?;
        let name = line.tokens[1].to_string();
        let arity = line.number_at(2)?;
        if arity == 0 {
            return Err(line.err(format!("relation `{name}` has arity 0")));
        }
        if !names.insert(name.clone()) {
            return Err(line.err(format!("relation `{name}` declared twice")));
        }
        let tuples_expected = line.number_at(3)?;
        let mut tuples = Vec::with_capacity(tuples_expected);
        let mut seen = BTreeSet::new();
        for _ in 0..tuples_expected {
            let t = next_line(&mut it, "`t` line")?;
            t.expect_keyword("t")?;
            if t.tokens.len() != arity + 1 {
                return Err(t.err(format!(
                    "relation `{name}` has arity {arity}, tuple has {} entries",
                    t.tokens.len() - 1
                )));
            }
            let tuple = (1..=arity)
                .map(|k| t.index_at(k, universe, "element"))
                .collect::<Result<Vec<_>, _>>()?;
            if !seen.insert(tuple.clone()) {
                return Err(t.err(format!("duplicate tuple in relation `{name}`")));
            }
            tuples.push(tuple);
        }
        relations.push(Relation::new(name, arity, tuples));
    }
    expect_end(it)?;
    Ok(RelationalStructure::new(universe, relations).expect("structure validated while parsing"))
}

pub fn serialize_structure(s: &RelationalStructure) -> String {
    let mut out = format!("struct {} {}\n", s.universe_size(), s.relations().len());
    for rel in s.relations() {
        let _ = writeln!(out, "rel {} {} {}", rel.name(), rel.arity(), rel.len());
        for tuple in rel.tuples() {
            out.push('t');
            for &x in tuple {
                let _ = write!(out, " {}", x + 1);
            }
            out.push('\n');
        }
    }
    out
}

/// Collects one line per vertex of `G`, keyed by the vertex in field 1.
fn per_vertex_lines<'a>(
    text: &'a str,
    keyword: &str,
    n: usize,
) -> Result<Vec<Line<'a>>, ParseError> {
    let mut slots: Vec<Option<Line<'a>>> = (0..n).map(|_| None).collect();
    for line in lines(text) {
        line.expect_keyword(keyword)?;
        if line.tokens.len() < 2 {
            return Err(line.err(format!("`{keyword}` line needs a vertex")));
        }
        let v = line.index_at(1, n, "vertex")?;
        if slots[v].is_some() {
            return Err(line.err(format!("vertex {} listed twice", v + 1)));
        }
        slots[v] = Some(line);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(v, slot)| {
            slot.ok_or_else(|| {
                ParseError::new(0, format!("no `{keyword}` line for vertex {}", v + 1))
            })
        })
        .collect()
}

/// Parses a bounds file for a source graph on `n` vertices. Target indices
/// are checked against `H` later, when the bounds meet a target graph.
pub fn parse_bounds(text: &str, n: usize) -> Result<BoundsAssignment, ParseError> {
    let mut low = Vec::with_capacity(n);
    let mut up = Vec::with_capacity(n);
    for line in per_vertex_lines(text, "b", n)? {
        line.expect_len(4)?;
        low.push(line.index_at(2, usize::MAX, "bound")?);
        up.push(line.index_at(3, usize::MAX, "bound")?);
    }
    Ok(BoundsAssignment::new(low, up).expect("equal lengths"))
}

pub fn serialize_bounds(bounds: &BoundsAssignment) -> String {
    let mut out = String::new();
    for (v, (lo, up)) in bounds.low().iter().zip(bounds.up()).enumerate() {
        let _ = writeln!(out, "b {} {} {}", v + 1, lo + 1, up + 1);
    }
    out
}

pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ParseError> {
    let mut lists = Vec::with_capacity(n);
    for line in per_vertex_lines(text, "l", n)? {
        let list = (2..line.tokens.len())
            .map(|k| line.index_at(k, usize::MAX, "target"))
            .collect::<Result<BTreeSet<_>, _>>()?;
        lists.push(list);
    }
    Ok(ListAssignment::new(lists))
}

pub fn serialize_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, list) in lists.lists().iter().enumerate() {
        let _ = write!(out, "l {}", v + 1);
        for &t in list {
            let _ = write!(out, " {}", t + 1);
        }
        out.push('\n');
    }
    out
}

pub fn parse_mapping(text: &str) -> Result<OrderedMapping, ParseError> {
    let mut it = lines(text);
    let header = next_line(&mut it, "`map` header")?;
    header.expect_keyword("map")?;
    header.expect_len(2)?;
    let n = header.number_at(1)?;
    let mut targets = Vec::with_capacity(n);
    for v in 0..n {
        let line = next_line(&mut it, "`f` line")?;
        line.expect_keyword("f")?;
        line.expect_len(3)?;
        if line.index_at(1, n, "vertex")? != v {
            return Err(line.err(format!("expected vertex {}", v + 1)));
        }
        targets.push(line.index_at(2, usize::MAX, "target")?);
    }
    expect_end(it)?;
    Ok(OrderedMapping::new(targets))
}

pub fn serialize_mapping(f: &OrderedMapping) -> String {
    let mut out = format!("map {}\n", f.len());
    for (v, &t) in f.targets().iter().enumerate() {
        let _ = writeln!(out, "f {} {}", v + 1, t + 1);
    }
    out
}

/// Writes provenance tags, one `prov` line per vertex in order.
pub fn serialize_provenance<T: std::fmt::Display>(tags: &[T]) -> String {
    let mut out = String::new();
    for (v, tag) in tags.iter().enumerate() {
        let _ = writeln!(out, "prov {} {}", v + 1, tag);
    }
    out
}
