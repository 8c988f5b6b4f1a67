//! Structural analysis of target graphs: shifted-clique decompositions and
//! the width parameter `c(H)` used by the dynamic program.
//!
//! Every graph is trivially shifted with singleton segments, so recognition
//! is about the minimum number of segments. A segment `s..e` is feasible if
//! it induces a clique and every earlier vertex sees a prefix of it (the
//! nesting condition). Feasibility is inherited by sub-intervals: shrinking
//! the end removes pairs, and moving the start right adds earlier vertices
//! that are clique-adjacent to the whole rest of the segment. Greedy
//! longest feasible suffix is therefore optimal.

use thiserror::Error;

use crate::graph::OrderedGraph;
use crate::solvers::{compute_pathwidth_profile, ShiftedDecomposition};

/// The first condition a decomposition fails. Fields are 0-based, messages 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionViolation {
    #[error(
        "segment {} (vertices {}..={}) is not a clique: {} and {} are not adjacent",
        .segment + 1, .range.0 + 1, .range.1, .u + 1, .v + 1
    )]
    NotClique {
        segment: usize,
        range: (usize, usize),
        u: usize,
        v: usize,
    },
    #[error(
        "nesting fails in segment {}: earlier vertex {} is adjacent to {} but not to {}",
        .segment + 1, .earlier + 1, .later + 1, .former + 1
    )]
    Nesting {
        segment: usize,
        former: usize,
        later: usize,
        earlier: usize,
    },
}

/// Checks both conditions, reporting the first failure.
pub fn check_decomposition(
    h: &OrderedGraph,
    d: &ShiftedDecomposition,
) -> Result<(), DecompositionViolation> {
    for (index, seg) in d.segments().enumerate() {
        segment_violation(h, seg.start, seg.end).map_or(Ok(()), |mut violation| {
            match &mut violation {
                DecompositionViolation::NotClique { segment, .. }
                | DecompositionViolation::Nesting { segment, .. } => *segment = index,
            }
            Err(violation)
        })?;
    }
    Ok(())
}

pub fn validate_decomposition(h: &OrderedGraph, d: &ShiftedDecomposition) -> bool {
    d.covered() == h.vertex_count() && check_decomposition(h, d).is_ok()
}

fn segment_violation(h: &OrderedGraph, start: usize, end: usize) -> Option<DecompositionViolation> {
    for v in start..end {
        for u in start..v {
            if !h.has_edge(u, v) {
                return Some(DecompositionViolation::NotClique {
                    segment: 0,
                    range: (start, end),
                    u,
                    v,
                });
            }
        }
    }
    // Each earlier vertex must see a prefix of the segment.
    for earlier in 0..start {
        let mut seen_gap = None;
        for v in start..end {
            match (h.has_edge(earlier, v), seen_gap) {
                (false, None) => seen_gap = Some(v),
                (true, Some(former)) => {
                    return Some(DecompositionViolation::Nesting {
                        segment: 0,
                        former,
                        later: v,
                        earlier,
                    })
                }
                _ => {}
            }
        }
    }
    None
}

fn segment_ok(h: &OrderedGraph, start: usize, end: usize) -> bool {
    segment_violation(h, start, end).is_none()
}

/// Minimum-segment decomposition by greedy longest feasible suffix.
///
/// Returns `None` only for the empty graph.
pub fn recognize_shifted(h: &OrderedGraph) -> Option<ShiftedDecomposition> {
    let n = h.vertex_count();
    if n == 0 {
        return None;
    }
    let mut ends = vec![n];
    let mut end = n;
    while end > 0 {
        let mut start = end - 1;
        while start > 0 && segment_ok(h, start - 1, end) {
            start -= 1;
        }
        if start > 0 {
            ends.push(start);
        }
        end = start;
    }
    ends.reverse();
    let d = ShiftedDecomposition::from_ends(ends).expect("greedy ends increase");
    debug_assert!(validate_decomposition(h, &d));
    Some(d)
}

/// Tries all `2^(h-1)` segmentations and returns one with the fewest
/// segments (the first in cut-mask order). Exponential; meant as an oracle
/// for small `h`.
pub fn recognize_shifted_exhaustive(h: &OrderedGraph) -> Option<ShiftedDecomposition> {
    let n = h.vertex_count();
    if n == 0 {
        return None;
    }
    assert!(n <= 24, "exhaustive segmentation is limited to 24 vertices");
    let mut best: Option<ShiftedDecomposition> = None;
    for mask in 0u32..(1 << (n - 1)) {
        let ends: Vec<usize> = (1..n)
            .filter(|&cut| mask & (1 << (cut - 1)) != 0)
            .chain(std::iter::once(n))
            .collect();
        if best.as_ref().is_some_and(|b| b.len() <= ends.len()) {
            continue;
        }
        let d = ShiftedDecomposition::from_ends(ends).expect("cuts increase");
        if check_decomposition(h, &d).is_ok() {
            best = Some(d);
        }
    }
    best
}

/// `c(H) = max_i min(|A_i|, |B_i|)`.
pub fn compute_c(h: &OrderedGraph) -> usize {
    compute_pathwidth_profile(h).width()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_is_one_shifted() {
        let d = recognize_shifted(&OrderedGraph::complete(5)).unwrap();
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn edgeless_needs_singletons() {
        let d = recognize_shifted(&OrderedGraph::empty(4)).unwrap();
        assert_eq!(d.sizes(), vec![1, 1, 1, 1]);
        assert_eq!(
            recognize_shifted_exhaustive(&OrderedGraph::empty(4))
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn two_segment_example() {
        let h = OrderedGraph::new(3, [(1, 2), (0, 1)]).unwrap();
        let d = recognize_shifted(&h).unwrap();
        assert_eq!(d.sizes(), vec![1, 2]);
        assert_eq!(
            recognize_shifted_exhaustive(&h).unwrap().sizes(),
            vec![1, 2]
        );
    }

    #[test]
    fn single_edge_on_three_vertices() {
        let h = OrderedGraph::new(3, [(0, 2)]).unwrap();
        assert_eq!(recognize_shifted(&h).unwrap().len(), 3);
        let bad = ShiftedDecomposition::from_sizes(&[2, 1]).unwrap();
        let violation = check_decomposition(&h, &bad).unwrap_err();
        assert!(matches!(
            violation,
            DecompositionViolation::NotClique { segment: 0, .. }
        ));
        assert_eq!(
            violation.to_string(),
            "segment 1 (vertices 1..=2) is not a clique: 1 and 2 are not adjacent"
        );
        let bad = ShiftedDecomposition::from_sizes(&[1, 2]).unwrap();
        assert!(!validate_decomposition(&h, &bad));
    }

    #[test]
    fn validate_examples() {
        let k4 = OrderedGraph::complete(4);
        assert!(validate_decomposition(
            &k4,
            &ShiftedDecomposition::single(4)
        ));
        assert!(validate_decomposition(
            &k4,
            &ShiftedDecomposition::from_sizes(&[2, 2]).unwrap()
        ));
        let e = OrderedGraph::empty(3);
        assert!(!validate_decomposition(
            &e,
            &ShiftedDecomposition::from_sizes(&[2, 1]).unwrap()
        ));
    }

    #[test]
    fn nesting_violation_is_named() {
        // Vertex 0 sees the second vertex of segment {1, 2} but not the first.
        let h = OrderedGraph::new(3, [(1, 2), (0, 2)]).unwrap();
        let d = ShiftedDecomposition::from_sizes(&[1, 2]).unwrap();
        assert_eq!(
            check_decomposition(&h, &d),
            Err(DecompositionViolation::Nesting {
                segment: 1,
                former: 1,
                later: 2,
                earlier: 0
            })
        );
    }

    #[test]
    fn c_examples() {
        assert_eq!(compute_c(&OrderedGraph::complete(5)), 0);
        assert_eq!(compute_c(&OrderedGraph::empty(5)), 0);
        assert_eq!(compute_c(&OrderedGraph::new(3, [(0, 2)]).unwrap()), 1);
    }
}
