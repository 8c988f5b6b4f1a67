//! Structural checks used to certify reduction outputs.

use crate::graph::OrderedGraph;

/// Two-colourability by BFS.
pub fn is_bipartite(g: &OrderedGraph) -> bool {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("queued vertices are coloured");
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Number of vertices on the longest forward path, i.e. a path
/// `v_1 < v_2 < ... < v_r` with every `v_i v_{i+1}` an edge. Zero for the
/// empty graph.
pub fn longest_forward_path(g: &OrderedGraph) -> usize {
    let mut ending_at = vec![1usize; g.vertex_count()];
    for v in 0..g.vertex_count() {
        for &u in g.earlier_neighbors(v) {
            ending_at[v] = ending_at[v].max(ending_at[u] + 1);
        }
    }
    ending_at.into_iter().max().unwrap_or(0)
}

/// All maximum cliques, each sorted, in lexicographic order. Exponential
/// (Bron–Kerbosch with pivoting); for small certification instances.
pub fn maximum_cliques(g: &OrderedGraph) -> Vec<Vec<usize>> {
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..g.vertex_count()).collect();
    bron_kerbosch(g, &mut current, candidates, Vec::new(), &mut best);
    for c in &mut best {
        c.sort_unstable();
    }
    best.sort();
    best
}

fn bron_kerbosch(
    g: &OrderedGraph,
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    best: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        let size = best.first().map_or(0, Vec::len);
        if current.len() > size {
            best.clear();
        }
        if current.len() >= size {
            best.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&v| g.has_edge(u, v)).count())
        .expect("non-empty");
    let mut candidates = candidates;
    let mut excluded = excluded;
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in branch {
        current.push(v);
        let keep = |set: &[usize]| set.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        bron_kerbosch(g, current, keep(&candidates), keep(&excluded), best);
        current.pop();
        candidates.retain(|&w| w != v);
        excluded.push(v);
    }
}
