//! Independent reference implementations for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ordhom::generate::seeded_rng;
use ordhom::{BoundsAssignment, ListAssignment, OrderedGraph, RelationalStructure};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    seeded_rng(seed)
}

/// `C(n, k)` by Pascal's rule.
pub fn binomial(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// Edge-list graph built without the library's adjacency structure.
pub fn graph_from_mask(h: usize, mask: u64) -> OrderedGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..h {
        for v in u + 1..h {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    OrderedGraph::new(h, edges).unwrap()
}

pub fn pair_count(h: usize) -> usize {
    h * h.saturating_sub(1) / 2
}

/// Checks the definition directly: images in range, non-decreasing, edges
/// to edges, every vertex admitted.
pub fn naive_is_hom(
    g: &OrderedGraph,
    h: &OrderedGraph,
    f: &[usize],
    allows: &dyn Fn(usize, usize) -> bool,
) -> bool {
    if f.len() != g.vertex_count() || f.iter().any(|&t| t >= h.vertex_count()) {
        return false;
    }
    for v in 1..f.len() {
        if f[v - 1] > f[v] {
            return false;
        }
    }
    for u in 0..f.len() {
        for v in u + 1..f.len() {
            let edge_g = g.edges().contains(&(u, v));
            if edge_g {
                let (a, b) = (f[u].min(f[v]), f[u].max(f[v]));
                if a == b || !h.edges().contains(&(a, b)) {
                    return false;
                }
            }
        }
    }
    (0..f.len()).all(|v| allows(v, f[v]))
}

/// Every ordered homomorphism, in lexicographic order, by running an
/// odometer over all `h^n` functions.
pub fn all_homs(
    g: &OrderedGraph,
    h: &OrderedGraph,
    allows: &dyn Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let m = h.vertex_count();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    if m == 0 {
        return out;
    }
    let mut f = vec![0; n];
    loop {
        if naive_is_hom(g, h, &f, allows) {
            out.push(f.clone());
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            f[pos] += 1;
            if f[pos] < m {
                break;
            }
            f[pos] = 0;
        }
    }
}

pub fn random_bounds(n: usize, h: usize, rng: &mut ChaCha8Rng) -> BoundsAssignment {
    let mut low = Vec::with_capacity(n);
    let mut up = Vec::with_capacity(n);
    for _ in 0..n {
        let a = rng.random_range(0..h);
        let b = rng.random_range(0..h);
        low.push(a.min(b));
        up.push(a.max(b));
    }
    BoundsAssignment::new(low, up).unwrap()
}

pub fn random_lists(n: usize, h: usize, density: f64, rng: &mut ChaCha8Rng) -> ListAssignment {
    let lists: Vec<BTreeSet<usize>> = (0..n)
        .map(|_| (0..h).filter(|_| rng.random_bool(density)).collect())
        .collect();
    ListAssignment::new(lists)
}

/// Structure homomorphism by backtracking, assigning elements in order and
/// checking every tuple whose elements are all assigned.
pub fn backtrack_struct_hom(source: &RelationalStructure, target: &RelationalStructure) -> bool {
    fn go(source: &RelationalStructure, target: &RelationalStructure, f: &mut Vec<usize>) -> bool {
        let done = f.len();
        for rel in source.relations() {
            let image = target.relation(rel.name()).unwrap();
            for t in rel.tuples() {
                if t.iter().all(|&x| x < done) {
                    let mapped: Vec<usize> = t.iter().map(|&x| f[x]).collect();
                    if !image.tuples().contains(&mapped) {
                        return false;
                    }
                }
            }
        }
        if done == source.universe_size() {
            return true;
        }
        for u in 0..target.universe_size() {
            f.push(u);
            if go(source, target, f) {
                return true;
            }
            f.pop();
        }
        false
    }
    go(source, target, &mut Vec::new())
}

/// Multicoloured independent set by recursion over parts of size `ell`.
pub fn backtrack_mis(g: &OrderedGraph, k: usize, ell: usize) -> bool {
    fn go(g: &OrderedGraph, k: usize, ell: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        let part = chosen.len();
        for v in part * ell..(part + 1) * ell {
            if chosen.iter().all(|&u| !g.edges().contains(&(u, v))) {
                chosen.push(v);
                if go(g, k, ell, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(g, k, ell, &mut Vec::new())
}
