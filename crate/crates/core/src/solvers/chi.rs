use crate::graph::{OrderedGraph, OrderedMapping};

/// Ordered chromatic number: the fewest independent intervals covering
/// `V(G)`, equivalently the least `k` with `G -> K_k`.
pub fn chi_less(g: &OrderedGraph) -> usize {
    chi_less_mapping(g).targets().last().map_or(0, |&t| t + 1)
}

/// The greedy interval partition as a map into `K_chi`. A new interval
/// starts at `v` exactly when `v` has a neighbor inside the current one.
pub fn chi_less_mapping(g: &OrderedGraph) -> OrderedMapping {
    let mut targets = Vec::with_capacity(g.vertex_count());
    let mut color = 0;
    let mut interval_start = 0;
    for v in 0..g.vertex_count() {
        if g.earlier_neighbors(v).iter().any(|&u| u >= interval_start) {
            color += 1;
            interval_start = v;
        }
        targets.push(color);
    }
    OrderedMapping::new(targets)
}
