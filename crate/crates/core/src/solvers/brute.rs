use crate::graph::{Constraints, OrderedGraph, OrderedMapping, ShapeError};

use super::{Algorithm, SolveResult, SolveStats};

/// Exhaustive search over monotone maps in lexicographic order, pruning a
/// prefix as soon as it breaks an edge or a constraint. Returns the
/// lexicographically smallest valid target vector.
///
/// This is the ground-truth oracle for every other solver. Worst case it
/// visits all `C(n + h - 1, h - 1)` maps, each checked in `O(m)`.
pub fn brute_force_solve(
    g: &OrderedGraph,
    h: &OrderedGraph,
    constraints: &Constraints<'_>,
) -> Result<SolveResult, ShapeError> {
    constraints.check_shape(g.vertex_count(), h.vertex_count())?;
    let mut search = Search {
        g,
        h,
        constraints,
        targets: Vec::with_capacity(g.vertex_count()),
        candidates: 0,
    };
    let found = search.extend();
    Ok(SolveResult {
        witness: found.then(|| OrderedMapping::new(search.targets)),
        algorithm: Algorithm::Brute,
        stats: SolveStats {
            candidates: search.candidates,
            ..SolveStats::default()
        },
    })
}

struct Search<'a> {
    g: &'a OrderedGraph,
    h: &'a OrderedGraph,
    constraints: &'a Constraints<'a>,
    targets: Vec<usize>,
    candidates: u64,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let v = self.targets.len();
        if v == self.g.vertex_count() {
            return true;
        }
        let start = self.targets.last().copied().unwrap_or(0);
        for t in start..self.h.vertex_count() {
            self.candidates += 1;
            if !self.constraints.allows(v, t) {
                continue;
            }
            let edges_ok = self
                .g
                .earlier_neighbors(v)
                .iter()
                .all(|&u| self.h.has_edge(self.targets[u], t));
            if !edges_ok {
                continue;
            }
            self.targets.push(t);
            if self.extend() {
                return true;
            }
            self.targets.pop();
        }
        false
    }
}
