use crate::graph::OrderedGraph;

/// Cut statistics of an ordered target graph, indexed by cut position `i`
/// (the cut sits between vertex `i` and vertex `i + 1`).
///
/// * `neighbor_frontier(i)` (`A_i`): vertices `<= i` with a neighbour `> i`.
/// * `non_neighbor_frontier(i)` (`B_i`): vertices `<= i` with a non-neighbour `> i`.
/// * `width()` (`c(H)`): `max_i min(|A_i|, |B_i|)`.
/// * `tracked_neighbors(i)` (`Ã_i`): `A_j ∩ V_{<=i}` for the first `j >= i`
///   with `|A_j| <= c(H)`; `tracked_non_neighbors(i)` (`B̃_i`) likewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathwidthProfile {
    neighbor_frontier: Vec<Vec<usize>>,
    non_neighbor_frontier: Vec<Vec<usize>>,
    neighbor_anchor: Vec<usize>,
    non_neighbor_anchor: Vec<usize>,
    tracked_neighbors: Vec<Vec<usize>>,
    tracked_non_neighbors: Vec<Vec<usize>>,
    width: usize,
}

pub fn compute_pathwidth_profile(h: &OrderedGraph) -> PathwidthProfile {
    let n = h.vertex_count();
    let mut neighbor_frontier = Vec::with_capacity(n);
    let mut non_neighbor_frontier = Vec::with_capacity(n);
    for i in 0..n {
        let later = i + 1..n;
        neighbor_frontier.push(
            (0..=i)
                .filter(|&v| h.neighbors(v).last().is_some_and(|&w| w > i))
                .collect::<Vec<_>>(),
        );
        non_neighbor_frontier.push(
            (0..=i)
                .filter(|&v| {
                    let later_neighbors = h.neighbors(v).iter().filter(|&&w| w > i).count();
                    later_neighbors < later.len()
                })
                .collect::<Vec<_>>(),
        );
    }
    let width = (0..n)
        .map(|i| {
            neighbor_frontier[i]
                .len()
                .min(non_neighbor_frontier[i].len())
        })
        .max()
        .unwrap_or(0);

    // Both frontiers are empty at the last cut, so an anchor always exists.
    let anchors = |frontier: &[Vec<usize>]| -> Vec<usize> {
        (0..n)
            .map(|i| {
                (i..n)
                    .find(|&j| frontier[j].len() <= width)
                    .expect("the last cut has empty frontiers")
            })
            .collect()
    };
    let neighbor_anchor = anchors(&neighbor_frontier);
    let non_neighbor_anchor = anchors(&non_neighbor_frontier);
    let restrict = |frontier: &[Vec<usize>], anchor: &[usize]| -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| {
                frontier[anchor[i]]
                    .iter()
                    .copied()
                    .filter(|&v| v <= i)
                    .collect()
            })
            .collect()
    };
    let tracked_neighbors = restrict(&neighbor_frontier, &neighbor_anchor);
    let tracked_non_neighbors = restrict(&non_neighbor_frontier, &non_neighbor_anchor);

    let profile = PathwidthProfile {
        neighbor_frontier,
        non_neighbor_frontier,
        neighbor_anchor,
        non_neighbor_anchor,
        tracked_neighbors,
        tracked_non_neighbors,
        width,
    };
    profile.assert_invariants();
    profile
}

impl PathwidthProfile {
    pub fn len(&self) -> usize {
        self.neighbor_frontier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbor_frontier.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn neighbor_frontier(&self, i: usize) -> &[usize] {
        &self.neighbor_frontier[i]
    }

    pub fn non_neighbor_frontier(&self, i: usize) -> &[usize] {
        &self.non_neighbor_frontier[i]
    }

    pub fn neighbor_anchor(&self, i: usize) -> usize {
        self.neighbor_anchor[i]
    }

    pub fn non_neighbor_anchor(&self, i: usize) -> usize {
        self.non_neighbor_anchor[i]
    }

    pub fn tracked_neighbors(&self, i: usize) -> &[usize] {
        &self.tracked_neighbors[i]
    }

    pub fn tracked_non_neighbors(&self, i: usize) -> &[usize] {
        &self.tracked_non_neighbors[i]
    }

    /// `Ã_i ∪ B̃_i`, sorted.
    pub fn tracked(&self, i: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.tracked_neighbors[i]
            .iter()
            .chain(&self.tracked_non_neighbors[i])
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// True when every vertex with a neighbour beyond cut `i` is tracked
    /// (`A_i = Ã_i`); otherwise every vertex with a non-neighbour beyond the
    /// cut is tracked.
    pub fn tracks_neighbor_frontier(&self, i: usize) -> bool {
        self.neighbor_frontier[i] == self.tracked_neighbors[i]
    }

    fn assert_invariants(&self) {
        for i in 0..self.len() {
            assert!(self.tracked_neighbors[i].len() <= self.width);
            assert!(self.tracked_non_neighbors[i].len() <= self.width);
            assert!(
                self.neighbor_frontier[i] == self.tracked_neighbors[i]
                    || self.non_neighbor_frontier[i] == self.tracked_non_neighbors[i],
                "cut {i} tracks neither frontier"
            );
            // What cut i + 1 tracks among old vertices is already tracked at i.
            if i + 1 < self.len() {
                for (next, cur) in [
                    (&self.tracked_neighbors[i + 1], &self.tracked_neighbors[i]),
                    (
                        &self.tracked_non_neighbors[i + 1],
                        &self.tracked_non_neighbors[i],
                    ),
                ] {
                    assert!(next.iter().filter(|&&v| v <= i).all(|v| cur.contains(v)));
                }
            }
        }
    }
}
