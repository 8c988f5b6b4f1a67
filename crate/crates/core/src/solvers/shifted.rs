//! Bounded homomorphism into k-shifted cliques.
//!
//! The recursion peels off the last clique segment `R = p..e` of the target.
//! Either no vertex of `G` lands in `R`, or some first vertex `v` does, in
//! which case the whole suffix `v..m` lands in `R`. On that suffix the
//! minimum clique solution can replace any other solution: with nested
//! back-neighbourhoods, lowering a target in `R` never loses an edge into
//! the earlier segments. The prefix `0..v` is then solved recursively
//! against the remaining `k - 1` segments.
//!
//! A single raised lower bound (the smallest neighbour of each fixed image)
//! does not capture the cross edges: the neighbourhood of a vertex in `R`
//! inside earlier segments need not be an interval. The prefix problem
//! therefore carries explicit allowed-target sets, intersected with the
//! neighbourhoods of the images fixed in the suffix. The base case handles
//! such sets because the minimum clique solution exists for any lists.

use std::ops::Range;

use rayon::prelude::*;

use crate::graph::{Constraints, OrderedGraph, OrderedMapping};
use crate::recognize::check_decomposition;

use super::clique::min_clique_assignment;
use super::{Algorithm, SolveError, SolveResult, SolveStats};

/// Below this many source vertices the top-level split loop stays sequential.
const PARALLEL_MIN_VERTICES: usize = 24;

/// Consecutive segments `V_1 < ... < V_k` covering the target, stored as
/// exclusive segment ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedDecomposition {
    ends: Vec<usize>,
}

impl ShiftedDecomposition {
    /// `ends` must be strictly increasing; the last entry is the number of
    /// covered vertices.
    pub fn from_ends(ends: Vec<usize>) -> Option<Self> {
        let increasing =
            ends.first().is_none_or(|&e| e > 0) && ends.windows(2).all(|w| w[0] < w[1]);
        increasing.then_some(Self { ends })
    }

    /// Segment sizes, all positive.
    pub fn from_sizes(sizes: &[usize]) -> Option<Self> {
        if sizes.contains(&0) {
            return None;
        }
        let ends = sizes
            .iter()
            .scan(0, |acc, &s| {
                *acc += s;
                Some(*acc)
            })
            .collect();
        Some(Self { ends })
    }

    pub fn single(h: usize) -> Self {
        Self {
            ends: if h == 0 { vec![] } else { vec![h] },
        }
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    /// Number of segments `k`.
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn covered(&self) -> usize {
        self.ends.last().copied().unwrap_or(0)
    }

    pub fn segments(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        let starts = std::iter::once(0).chain(self.ends.iter().copied());
        starts.zip(self.ends.iter().copied()).map(|(s, e)| s..e)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.segments().map(|r| r.len()).collect()
    }
}

/// Solves `G -> H` under the given constraints, where `decomposition`
/// witnesses that `H` is a k-shifted clique. Runs in `n^O(k) * h^O(1)`.
///
/// Split guesses are tried in increasing order and the first success is
/// returned, so the witness is deterministic even when the top-level loop
/// runs in parallel.
pub fn shifted_solve(
    g: &OrderedGraph,
    h: &OrderedGraph,
    decomposition: &ShiftedDecomposition,
    constraints: &Constraints<'_>,
) -> Result<SolveResult, SolveError> {
    let n = g.vertex_count();
    let hn = h.vertex_count();
    constraints.check_shape(n, hn)?;
    if decomposition.covered() != hn {
        return Err(SolveError::DecompositionSize {
            covered: decomposition.covered(),
            h: hn,
        });
    }
    check_decomposition(h, decomposition)?;

    let allowed: Vec<Vec<bool>> = (0..n)
        .map(|v| (0..hn).map(|t| constraints.allows(v, t)).collect())
        .collect();
    let solver = Shifted {
        g,
        h,
        segments: decomposition.segments().collect(),
    };
    let mut stats = SolveStats::default();
    let witness = if solver.segments.is_empty() {
        (n == 0).then(Vec::new)
    } else {
        solver.solve_prefix(solver.segments.len(), n, allowed, &mut stats, true)
    };
    Ok(SolveResult {
        witness: witness.map(OrderedMapping::new),
        algorithm: Algorithm::Shifted,
        stats,
    })
}

struct Shifted<'a> {
    g: &'a OrderedGraph,
    h: &'a OrderedGraph,
    segments: Vec<Range<usize>>,
}

impl Shifted<'_> {
    /// Maps the prefix `0..m` of `G` into the first `k` segments.
    /// `allowed[v][t]` is false for every `t` beyond segment `k`.
    fn solve_prefix(
        &self,
        k: usize,
        m: usize,
        allowed: Vec<Vec<bool>>,
        stats: &mut SolveStats,
        top_level: bool,
    ) -> Option<Vec<usize>> {
        stats.branches += 1;
        if m == 0 {
            return Some(Vec::new());
        }
        let last = self.segments[k - 1].clone();
        if k == 1 {
            return min_clique_assignment(self.g, 0, m, last.start, last.end, stats, |v, t| {
                allowed[v][t]
            });
        }

        let p = last.start;
        let capped: Vec<Vec<bool>> = allowed
            .iter()
            .map(|row| {
                let mut row = row.clone();
                row[p..].fill(false);
                row
            })
            .collect();
        if let Some(f) = self.solve_prefix(k - 1, m, capped.clone(), stats, false) {
            return Some(f);
        }

        let split =
            |v: usize, stats: &mut SolveStats| self.split_at(k, m, v, &allowed, &capped, stats);
        if top_level && m >= PARALLEL_MIN_VERTICES && rayon::current_num_threads() > 1 {
            let outcomes: Vec<(Option<Vec<usize>>, SolveStats)> = (0..m)
                .into_par_iter()
                .map(|v| {
                    let mut local = SolveStats::default();
                    (split(v, &mut local), local)
                })
                .collect();
            // Count work as the sequential loop would have.
            for (found, local) in outcomes {
                stats.absorb(local);
                if found.is_some() {
                    return found;
                }
            }
            None
        } else {
            (0..m).find_map(|v| split(v, stats))
        }
    }

    /// Tries `v` as the first vertex of the prefix `0..m` mapped into
    /// segment `k`.
    fn split_at(
        &self,
        k: usize,
        m: usize,
        v: usize,
        allowed: &[Vec<bool>],
        capped: &[Vec<bool>],
        stats: &mut SolveStats,
    ) -> Option<Vec<usize>> {
        stats.branches += 1;
        let last = self.segments[k - 1].clone();
        let tail = min_clique_assignment(self.g, v, m, last.start, last.end, stats, |u, t| {
            allowed[u][t]
        })?;

        let mut head_allowed: Vec<Vec<bool>> = capped[..v].to_vec();
        for (u, row) in head_allowed.iter_mut().enumerate() {
            for &w in self.g.neighbors(u).iter().filter(|&&w| w >= v && w < m) {
                let image = tail[w - v];
                for (t, ok) in row[..last.start].iter_mut().enumerate() {
                    *ok = *ok && self.h.has_edge(image, t);
                }
            }
        }
        let mut head = self.solve_prefix(k - 1, v, head_allowed, stats, false)?;
        head.extend(tail);
        Some(head)
    }
}
