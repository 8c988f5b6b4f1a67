//! Instance constructions: relational-structure homomorphism and
//! multicoloured independent set into ordered homomorphism, with and without
//! lists.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{ListAssignment, OrderedGraph};
use crate::structure::StructureError;

mod coloring;
mod mis;
mod structures;

pub use coloring::coloring_to_struct;
pub use mis::{mis_exists, reduce_mis_list, reduce_mis_nolist, PartitionedGraph};
pub use structures::{reduce_struct_list, reduce_struct_nolist, struct_hom_exists};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("relation `{0}` is empty in the target structure but not in the source")]
    EmptyTargetRelation(String),
    #[error("malformed partition: {0}")]
    Partition(String),
}

/// Origin of a vertex produced by the structure reductions. Element and
/// tuple indices refer to the source structures; tags print them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StructVertex {
    /// Universe element `v` of the source structure.
    Element(usize),
    /// Tuple `tuple` of relation `relation` in the source structure.
    Incidence {
        relation: String,
        tuple: Vec<usize>,
    },
    /// Element `v` sent to target element `u`.
    Pair {
        element: usize,
        image: usize,
    },
    /// Source tuple `tuple` sent to target tuple `image`.
    TupleImage {
        relation: String,
        tuple: Vec<usize>,
        image: Vec<usize>,
    },
    PathX(usize),
    PathY,
    PathZ(usize),
    PathXPrime(usize),
    PathYPrime,
    PathZPrime(usize),
}

fn write_tuple(f: &mut fmt::Formatter<'_>, tuple: &[usize]) -> fmt::Result {
    for (i, x) in tuple.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", x + 1)?;
    }
    Ok(())
}

impl fmt::Display for StructVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructVertex::Element(v) => write!(f, "elem {}", v + 1),
            StructVertex::Incidence { relation, tuple } => {
                write!(f, "tuple {relation} ")?;
                write_tuple(f, tuple)
            }
            StructVertex::Pair { element, image } => {
                write!(f, "pair {} {}", element + 1, image + 1)
            }
            StructVertex::TupleImage {
                relation,
                tuple,
                image,
            } => {
                write!(f, "image {relation} ")?;
                write_tuple(f, tuple)?;
                f.write_str(" ")?;
                write_tuple(f, image)
            }
            StructVertex::PathX(i) => write!(f, "x {i}"),
            StructVertex::PathY => f.write_str("y"),
            StructVertex::PathZ(i) => write!(f, "z {i}"),
            StructVertex::PathXPrime(i) => write!(f, "x' {i}"),
            StructVertex::PathYPrime => f.write_str("y'"),
            StructVertex::PathZPrime(i) => write!(f, "z' {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructReductionOutput {
    pub g: OrderedGraph,
    pub h: OrderedGraph,
    /// Present for the list variant only.
    pub lists: Option<ListAssignment>,
    pub g_origin: Vec<StructVertex>,
    pub h_origin: Vec<StructVertex>,
    /// Source elements that occur in some tuple, in order. The others are
    /// dropped before construction.
    pub kept_elements: Vec<usize>,
}

/// Origin of a vertex produced by the independent-set reductions. Part
/// indices are 0-based and print 1-based; `j` prints as is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MisVertex {
    A(usize),
    B(usize),
    X(usize),
    Y(usize),
    Z(usize),
    C(usize),
    P { part: usize, j: usize },
    Q { part: usize, j: usize },
    R(usize),
}

impl fmt::Display for MisVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MisVertex::A(i) => write!(f, "a {}", i + 1),
            MisVertex::B(i) => write!(f, "b {}", i + 1),
            MisVertex::X(i) => write!(f, "x {}", i + 1),
            MisVertex::Y(i) => write!(f, "y {}", i + 1),
            MisVertex::Z(i) => write!(f, "z {}", i + 1),
            MisVertex::C(i) => write!(f, "c {}", i + 1),
            MisVertex::P { part, j } => write!(f, "p {} {}", part + 1, j),
            MisVertex::Q { part, j } => write!(f, "q {} {}", part + 1, j),
            MisVertex::R(i) => write!(f, "r {}", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisReductionOutput {
    pub g: OrderedGraph,
    pub h: OrderedGraph,
    pub lists: Option<ListAssignment>,
    pub g_origin: Vec<MisVertex>,
    pub h_origin: Vec<MisVertex>,
}

/// A position in a spliced vertex order: an old vertex or a new one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    Old(usize),
    New(usize),
}

/// Builds the graph whose vertices are `order`, keeping the edges of `base`
/// and adding `extra`. Every old vertex must appear exactly once, and new
/// vertices must be numbered `0..count`.
pub(crate) fn splice(
    base: &OrderedGraph,
    order: &[Slot],
    extra: impl IntoIterator<Item = (Slot, Slot)>,
) -> OrderedGraph {
    let new_count = order.iter().filter(|s| matches!(s, Slot::New(_))).count();
    assert_eq!(order.len(), base.vertex_count() + new_count);
    let mut old_pos = vec![usize::MAX; base.vertex_count()];
    let mut new_pos = vec![usize::MAX; new_count];
    for (pos, slot) in order.iter().enumerate() {
        let cell = match *slot {
            Slot::Old(v) => &mut old_pos[v],
            Slot::New(v) => &mut new_pos[v],
        };
        assert_eq!(*cell, usize::MAX, "slot {slot:?} repeated");
        *cell = pos;
    }
    let at = |s: Slot| match s {
        Slot::Old(v) => old_pos[v],
        Slot::New(v) => new_pos[v],
    };
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(u, v) in base.edges() {
        let (a, b) = (old_pos[u], old_pos[v]);
        edges.insert((a.min(b), a.max(b)));
    }
    for (u, v) in extra {
        let (a, b) = (at(u), at(v));
        edges.insert((a.min(b), a.max(b)));
    }
    OrderedGraph::new(order.len(), edges).expect("spliced edges are valid")
}

/// Reorders provenance to follow a splice.
pub(crate) fn splice_origin<T: Clone>(old: &[T], new: &[T], order: &[Slot]) -> Vec<T> {
    order
        .iter()
        .map(|s| match *s {
            Slot::Old(v) => old[v].clone(),
            Slot::New(v) => new[v].clone(),
        })
        .collect()
}
