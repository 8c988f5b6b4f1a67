//! Seeded random instances.

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::OrderedGraph;
use crate::reductions::{PartitionedGraph, ReductionError};
use crate::solvers::ShiftedDecomposition;
use crate::structure::{Relation, RelationalStructure};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> OrderedGraph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability must lie in [0, 1]"
    );
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    OrderedGraph::new(n, edges).expect("generated edges are valid")
}

/// A random graph for which the consecutive segments of the given sizes form
/// a valid shifted-clique decomposition: every segment is a clique and every
/// earlier vertex sees a uniformly random prefix of each later segment.
pub fn random_shifted<R: Rng + ?Sized>(
    sizes: &[usize],
    rng: &mut R,
) -> Option<(OrderedGraph, ShiftedDecomposition)> {
    let d = ShiftedDecomposition::from_sizes(sizes)?;
    let mut edges = Vec::new();
    for seg in d.segments() {
        for v in seg.clone() {
            for u in seg.start..v {
                edges.push((u, v));
            }
        }
        for u in 0..seg.start {
            let prefix = rng.random_range(0..=seg.len());
            edges.extend((seg.start..seg.start + prefix).map(|v| (u, v)));
        }
    }
    let g = OrderedGraph::new(d.covered(), edges).expect("generated edges are valid");
    Some((g, d))
}

/// `k` parts of `l` vertices, each pair of vertices in different parts an
/// edge with probability `p`. Parts are independent.
pub fn random_partitioned<R: Rng + ?Sized>(
    k: usize,
    ell: usize,
    p: f64,
    rng: &mut R,
) -> Result<PartitionedGraph, ReductionError> {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability must lie in [0, 1]"
    );
    let n = k * ell;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u / ell.max(1) != v / ell.max(1) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = OrderedGraph::new(n, edges).expect("generated edges are valid");
    PartitionedGraph::new(g, &vec![ell; k])
}

/// A structure with the given signature and, per relation, `tuples` distinct
/// tuples drawn uniformly (capped at the number of possible tuples) and
/// listed in lexicographic order.
pub fn random_structure<R: Rng + ?Sized>(
    universe: usize,
    signature: &[(&str, usize)],
    tuples: usize,
    rng: &mut R,
) -> RelationalStructure {
    let relations = signature
        .iter()
        .map(|&(name, arity)| {
            let total = u32::try_from(arity)
                .ok()
                .and_then(|a| universe.checked_pow(a))
                .expect("tuple space too large");
            let mut codes = sample(rng, total, tuples.min(total)).into_vec();
            codes.sort_unstable();
            let decoded = codes
                .into_iter()
                .map(|mut code| {
                    let mut t = vec![0; arity];
                    for slot in t.iter_mut().rev() {
                        *slot = code % universe;
                        code /= universe;
                    }
                    t
                })
                .collect();
            Relation::new(name, arity, decoded)
        })
        .collect();
    RelationalStructure::new(universe, relations).expect("generated tuples are valid")
}
