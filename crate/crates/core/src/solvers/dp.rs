//! Dynamic program parameterised by the cut width `c(H)`.
//!
//! A table entry is keyed by the last placed source vertex `u`, its target
//! `i`, and the preimages of the tracked targets `Ã_i ∪ B̃_i`. Monotonicity
//! makes each preimage an interval, so a key holds at most `2 c(H)` blocks
//! of two endpoints each.
//!
//! Transitions place a whole block `u+1..=u'` onto one new target `j > i`.
//! An edge from the block back to an earlier vertex `w` is decided by the
//! entry alone. If cut `i` tracks every vertex with a neighbour beyond it,
//! an untracked `w` has no neighbour at `j` and the edge fails; otherwise
//! cut `i` tracks every vertex with a non-neighbour beyond it, and an
//! untracked `w` is adjacent to all of them. Tracked vertices are checked
//! directly. Placing whole blocks keeps all of these checks anchored at the
//! cut before `j`, including edges between two vertices that would share a
//! target (the block must be independent).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::graph::{Constraints, OrderedGraph, OrderedMapping, ShapeError};

use super::profile::PathwidthProfile;
use super::{Algorithm, SolveResult, SolveStats};

/// The source vertices `first..=last` all map to `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreimageBlock {
    pub target: usize,
    pub first: usize,
    pub last: usize,
}

/// One table index. `placed` counts the source vertices assigned so far, so
/// the last placed vertex is `placed - 1`; `target` is its image (`None`
/// before anything is placed). `blocks` are the tracked preimages sorted by
/// target: together they give the set `X` and the map `ξ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DpKey {
    pub placed: usize,
    pub target: Option<usize>,
    pub blocks: Vec<PreimageBlock>,
}

impl DpKey {
    fn image_of(&self, w: usize) -> Option<usize> {
        self.blocks
            .iter()
            .find(|b| b.first <= w && w <= b.last)
            .map(|b| b.target)
    }
}

/// Decides `G -> H` under the given constraints in
/// `n^O(c(H)) * h^O(1)` time, returning a witness when one exists.
pub fn dp_solve(
    g: &OrderedGraph,
    h: &OrderedGraph,
    profile: &PathwidthProfile,
    constraints: &Constraints<'_>,
) -> Result<SolveResult, ShapeError> {
    let n = g.vertex_count();
    let hn = h.vertex_count();
    constraints.check_shape(n, hn)?;
    assert_eq!(profile.len(), hn, "profile was computed for another graph");

    let tracked: Vec<Vec<bool>> = (0..hn)
        .map(|i| {
            let mut mask = vec![false; hn];
            for t in profile.tracked(i) {
                mask[t] = true;
            }
            mask
        })
        .collect();

    // layers[p] maps every true key with `placed == p` to its predecessor.
    let mut layers: Vec<BTreeMap<DpKey, Option<DpKey>>> = vec![BTreeMap::new(); n + 1];
    let start = DpKey {
        placed: 0,
        target: None,
        blocks: Vec::new(),
    };
    layers[0].insert(start, None);
    let mut stats = SolveStats {
        dp_entries: 1,
        ..SolveStats::default()
    };

    for placed in 0..n {
        let keys: Vec<DpKey> = layers[placed].keys().cloned().collect();
        for key in keys {
            let neighbor_mode = key.target.map(|i| profile.tracks_neighbor_frontier(i));
            let first_target = key.target.map_or(0, |i| i + 1);
            for (j, tracked_j) in tracked.iter().enumerate().skip(first_target) {
                for end in placed..n {
                    stats.candidates += 1;
                    // Extend the block by `end`; a failure here rules out every
                    // longer block too.
                    if !constraints.allows(end, j)
                        || !vertex_fits(g, h, &key, neighbor_mode, placed, end, j)
                    {
                        break;
                    }
                    let mut blocks: Vec<PreimageBlock> = key
                        .blocks
                        .iter()
                        .copied()
                        .filter(|b| tracked_j[b.target])
                        .collect();
                    if tracked_j[j] {
                        blocks.push(PreimageBlock {
                            target: j,
                            first: placed,
                            last: end,
                        });
                    }
                    let next = DpKey {
                        placed: end + 1,
                        target: Some(j),
                        blocks,
                    };
                    if let Entry::Vacant(slot) = layers[end + 1].entry(next) {
                        slot.insert(Some(key.clone()));
                        stats.dp_entries += 1;
                    }
                }
            }
        }
    }

    let witness = layers[n].keys().next().cloned().map(|last| {
        let mut targets = vec![0; n];
        let mut cursor = Some(last);
        while let Some(key) = cursor {
            let prev = layers[key.placed][&key].clone();
            if let (Some(j), Some(p)) = (key.target, &prev) {
                targets[p.placed..key.placed].fill(j);
            }
            cursor = prev;
        }
        OrderedMapping::new(targets)
    });
    Ok(SolveResult {
        witness,
        algorithm: Algorithm::Dp,
        stats,
    })
}

/// Can vertex `v` join the block `placed..=v` mapped to `j`, given the entry
/// `key` describing everything before `placed`?
fn vertex_fits(
    g: &OrderedGraph,
    h: &OrderedGraph,
    key: &DpKey,
    neighbor_mode: Option<bool>,
    placed: usize,
    v: usize,
    j: usize,
) -> bool {
    g.earlier_neighbors(v).iter().all(|&w| {
        if w >= placed {
            // Same block, same target, and H has no loops.
            return false;
        }
        match (key.image_of(w), neighbor_mode) {
            (Some(t), _) => h.has_edge(t, j),
            (None, Some(true)) => false,
            (None, Some(false)) => true,
            (None, None) => unreachable!("no earlier vertices before the first block"),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_hom;
    use crate::solvers::compute_pathwidth_profile;

    fn run(g: &OrderedGraph, h: &OrderedGraph) -> Option<OrderedMapping> {
        let profile = compute_pathwidth_profile(h);
        dp_solve(g, h, &profile, &Constraints::none())
            .unwrap()
            .witness
    }

    #[test]
    fn k2_to_k2() {
        let k2 = OrderedGraph::complete(2);
        assert_eq!(run(&k2, &k2).unwrap().targets(), &[0, 1]);
    }

    #[test]
    fn path_to_itself() {
        let p = OrderedGraph::path(4);
        let f = run(&p, &p).unwrap();
        assert!(validate_hom(&p, &p, &f, &Constraints::none()).unwrap());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(run(&OrderedGraph::empty(0), &OrderedGraph::empty(0)).is_some());
        assert!(run(&OrderedGraph::empty(2), &OrderedGraph::empty(0)).is_none());
        assert!(run(&OrderedGraph::complete(2), &OrderedGraph::empty(3)).is_none());
    }

    #[test]
    fn long_edge_target() {
        // H: 0 - 2 with 1 isolated. G: edge {0, 2} plus a middle vertex.
        let h = OrderedGraph::new(3, [(0, 2)]).unwrap();
        let g = OrderedGraph::new(3, [(0, 2)]).unwrap();
        let f = run(&g, &h).unwrap();
        assert!(validate_hom(&g, &h, &f, &Constraints::none()).unwrap());
        let g = OrderedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(run(&g, &h).is_none());
    }
}
