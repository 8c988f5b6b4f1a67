//! Ordered graphs, candidate mappings and the per-vertex constraints used by
//! the bounded and list variants of the homomorphism problem.
//!
//! Vertices are `0..n` and the vertex order is the index order. The text
//! formats in [`crate::io`] are 1-based; conversion happens at that boundary.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// Returned when a mapping or constraint does not fit the graphs it is
/// checked against.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("mapping has length {found}, expected {expected}")]
    MappingLength { expected: usize, found: usize },
    #[error("mapping sends vertex {vertex} to {target}, but the target has {h} vertices")]
    MappingTarget {
        vertex: usize,
        target: usize,
        h: usize,
    },
    #[error("{what} has length {found}, expected {expected}")]
    ConstraintLength {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} for vertex {vertex} names target {target}, but the target has {h} vertices")]
    ConstraintTarget {
        what: &'static str,
        vertex: usize,
        target: usize,
        h: usize,
    },
}

/// An undirected simple graph on `0..n` whose vertex order is the index order.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl OrderedGraph {
    /// Builds a graph from unordered pairs. Pairs may be given in either
    /// orientation; they are stored as `(i, j)` with `i < j`, sorted.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canonical = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::OutOfRange { vertex, n });
                }
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in &canonical {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: canonical,
            neighbors,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// The complete graph `K_n` in its only ordering.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(n, edges).expect("complete graph is valid")
    }

    /// The monotone path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|j| (j - 1, j))).expect("path is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighbors of `v` that precede it in the order.
    pub fn earlier_neighbors(&self, v: usize) -> &[usize] {
        let list = &self.neighbors[v];
        &list[..list.partition_point(|&u| u < v)]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// The subgraph induced by the contiguous range `start..end`, relabelled
    /// to `0..end-start`.
    pub fn induced_range(&self, start: usize, end: usize) -> OrderedGraph {
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| i >= start && j < end)
            .map(|&(i, j)| (i - start, j - start));
        OrderedGraph::new(end - start, edges).expect("induced subgraph is valid")
    }

    pub fn is_independent_range(&self, start: usize, end: usize) -> bool {
        (start..end).all(|v| self.earlier_neighbors(v).iter().all(|&u| u < start))
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A function `V(G) -> V(H)` stored as the target of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedMapping {
    targets: Vec<usize>,
}

impl OrderedMapping {
    pub fn new(targets: Vec<usize>) -> Self {
        Self { targets }
    }

    /// Rebuilds the mapping from the number of vertices sent to each target,
    /// in target order.
    pub fn from_counts(counts: &[usize]) -> Self {
        let targets = counts
            .iter()
            .enumerate()
            .flat_map(|(t, &c)| std::iter::repeat_n(t, c))
            .collect();
        Self { targets }
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn into_targets(self) -> Vec<usize> {
        self.targets
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn target(&self, v: usize) -> usize {
        self.targets[v]
    }

    /// Preimage sizes `a_1, ..., a_h`.
    pub fn counts(&self, h: usize) -> Vec<usize> {
        let mut counts = vec![0; h];
        for &t in &self.targets {
            counts[t] += 1;
        }
        counts
    }

    pub fn is_monotone(&self) -> bool {
        self.targets.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Inclusive per-vertex index bounds `low(v) <= f(v) <= up(v)`.
///
/// `low(v) > up(v)` is allowed; such a vertex simply has no admissible target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsAssignment {
    low: Vec<usize>,
    up: Vec<usize>,
}

impl BoundsAssignment {
    pub fn new(low: Vec<usize>, up: Vec<usize>) -> Result<Self, ShapeError> {
        if low.len() != up.len() {
            return Err(ShapeError::ConstraintLength {
                what: "upper bounds",
                expected: low.len(),
                found: up.len(),
            });
        }
        Ok(Self { low, up })
    }

    /// `low = 0`, `up = h - 1` everywhere. Requires `h >= 1`.
    pub fn unrestricted(n: usize, h: usize) -> Self {
        assert!(h >= 1, "unrestricted bounds need a non-empty target");
        Self {
            low: vec![0; n],
            up: vec![h - 1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.low.len()
    }

    pub fn is_empty(&self) -> bool {
        self.low.is_empty()
    }

    pub fn low(&self) -> &[usize] {
        &self.low
    }

    pub fn up(&self) -> &[usize] {
        &self.up
    }

    pub fn allows(&self, v: usize, t: usize) -> bool {
        self.low[v] <= t && t <= self.up[v]
    }

    fn check(&self, n: usize, h: usize) -> Result<(), ShapeError> {
        if self.len() != n {
            return Err(ShapeError::ConstraintLength {
                what: "bounds",
                expected: n,
                found: self.len(),
            });
        }
        for (v, (&lo, &up)) in self.low.iter().zip(&self.up).enumerate() {
            for target in [lo, up] {
                if target >= h {
                    return Err(ShapeError::ConstraintTarget {
                        what: "bounds",
                        vertex: v,
                        target,
                        h,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Explicit allowed target sets `L(v)`. An empty list makes the instance
/// infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<usize>>) -> Self {
        Self { lists }
    }

    pub fn from_vecs<I, L>(lists: I) -> Self
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = usize>,
    {
        Self {
            lists: lists.into_iter().map(|l| l.into_iter().collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &BTreeSet<usize> {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BTreeSet<usize>] {
        &self.lists
    }

    pub fn allows(&self, v: usize, t: usize) -> bool {
        self.lists[v].contains(&t)
    }

    fn check(&self, n: usize, h: usize) -> Result<(), ShapeError> {
        if self.len() != n {
            return Err(ShapeError::ConstraintLength {
                what: "lists",
                expected: n,
                found: self.len(),
            });
        }
        for (v, list) in self.lists.iter().enumerate() {
            if let Some(&target) = list.iter().next_back().filter(|&&t| t >= h) {
                return Err(ShapeError::ConstraintTarget {
                    what: "lists",
                    vertex: v,
                    target,
                    h,
                });
            }
        }
        Ok(())
    }
}

/// Optional lists and bounds attached to an instance. Both may be present;
/// a target is admissible when every supplied constraint admits it.
#[derive(Debug, Clone, Copy, Default)]
pub struct Constraints<'a> {
    pub lists: Option<&'a ListAssignment>,
    pub bounds: Option<&'a BoundsAssignment>,
}

impl<'a> Constraints<'a> {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_lists(lists: &'a ListAssignment) -> Self {
        Self {
            lists: Some(lists),
            bounds: None,
        }
    }

    pub fn with_bounds(bounds: &'a BoundsAssignment) -> Self {
        Self {
            lists: None,
            bounds: Some(bounds),
        }
    }

    pub fn is_unconstrained(&self) -> bool {
        self.lists.is_none() && self.bounds.is_none()
    }

    pub fn allows(&self, v: usize, t: usize) -> bool {
        self.lists.is_none_or(|l| l.allows(v, t)) && self.bounds.is_none_or(|b| b.allows(v, t))
    }

    /// Checks that every supplied constraint has one entry per vertex of `G`
    /// and only names vertices of `H`.
    pub fn check_shape(&self, n: usize, h: usize) -> Result<(), ShapeError> {
        if let Some(lists) = self.lists {
            lists.check(n, h)?;
        }
        if let Some(bounds) = self.bounds {
            bounds.check(n, h)?;
        }
        Ok(())
    }
}

/// Decides whether `f` is an ordered homomorphism `G -> H` that respects the
/// supplied constraints.
pub fn validate_hom(
    g: &OrderedGraph,
    h: &OrderedGraph,
    f: &OrderedMapping,
    constraints: &Constraints<'_>,
) -> Result<bool, ShapeError> {
    let n = g.vertex_count();
    let hn = h.vertex_count();
    if f.len() != n {
        return Err(ShapeError::MappingLength {
            expected: n,
            found: f.len(),
        });
    }
    if let Some((vertex, &target)) = f.targets().iter().enumerate().find(|(_, &t)| t >= hn) {
        return Err(ShapeError::MappingTarget {
            vertex,
            target,
            h: hn,
        });
    }
    constraints.check_shape(n, hn)?;

    let ok = f.is_monotone()
        && g.edges()
            .iter()
            .all(|&(u, v)| h.has_edge(f.target(u), f.target(v)))
        && (0..n).all(|v| constraints.allows(v, f.target(v)));
    Ok(ok)
}
