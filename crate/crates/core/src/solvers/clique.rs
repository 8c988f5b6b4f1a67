use crate::graph::{BoundsAssignment, Constraints, OrderedGraph, OrderedMapping, ShapeError};

use super::{Algorithm, SolveResult, SolveStats};

/// Bounded homomorphism into the complete graph `K_h`, returning the
/// pointwise-minimum solution.
///
/// The two lower-bound propagation rules (an edge `uv` with `u < v` forces
/// `low(v) > low(u)`, and `u < v` forces `low(v) >= low(u)`) only point
/// forward, so one left-to-right pass reaches their fixpoint:
/// `f(v) = max(low(v), f(v-1), 1 + max f(u) over earlier neighbours u)`.
pub fn clique_lists_min(
    g: &OrderedGraph,
    h: usize,
    bounds: &BoundsAssignment,
) -> Result<SolveResult, ShapeError> {
    let constraints = Constraints::with_bounds(bounds);
    constraints.check_shape(g.vertex_count(), h)?;
    let mut stats = SolveStats::default();
    let witness = min_clique_assignment(g, 0, g.vertex_count(), 0, h, &mut stats, |v, t| {
        bounds.allows(v, t)
    })
    .map(OrderedMapping::new);
    Ok(SolveResult {
        witness,
        algorithm: Algorithm::CliqueMin,
        stats,
    })
}

/// Minimum monotone proper assignment of the vertices `start..end` of `g`
/// into the clique on targets `first..last`, honouring `allows`. Edges leaving
/// the range are ignored. Returns targets for `start..end` in order.
///
/// With arbitrary allowed sets the pointwise minimum of two solutions is
/// again a solution, so picking the smallest admissible target at each step
/// still yields the minimum.
pub(crate) fn min_clique_assignment(
    g: &OrderedGraph,
    start: usize,
    end: usize,
    first: usize,
    last: usize,
    stats: &mut SolveStats,
    allows: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut targets: Vec<usize> = Vec::with_capacity(end - start);
    for v in start..end {
        let mut lower = targets.last().copied().unwrap_or(first);
        for &u in g.earlier_neighbors(v) {
            if u >= start {
                lower = lower.max(targets[u - start] + 1);
            }
        }
        let t = (lower..last).find(|&t| {
            stats.candidates += 1;
            allows(v, t)
        })?;
        targets.push(t);
    }
    Some(targets)
}
