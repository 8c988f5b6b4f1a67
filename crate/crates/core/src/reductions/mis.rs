use crate::graph::{ListAssignment, OrderedGraph};

use super::{splice, splice_origin, MisReductionOutput, MisVertex, ReductionError, Slot};

/// A graph whose vertices `0..k*l` split into `k` consecutive parts of `l`
/// vertices each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    graph: OrderedGraph,
    parts: usize,
    part_size: usize,
    origin: Vec<usize>,
}

impl PartitionedGraph {
    /// Splits `graph` into consecutive parts of the given sizes. Shorter parts
    /// are padded to the largest size with copies of their last vertex; a
    /// copy is adjacent to exactly the copies of the original's neighbours.
    pub fn new(graph: OrderedGraph, part_sizes: &[usize]) -> Result<Self, ReductionError> {
        let total: usize = part_sizes.iter().sum();
        if total != graph.vertex_count() {
            return Err(ReductionError::Partition(format!(
                "part sizes sum to {total} but the graph has {} vertices",
                graph.vertex_count()
            )));
        }
        if let Some(i) = part_sizes.iter().position(|&s| s == 0) {
            return Err(ReductionError::Partition(format!(
                "part {} is empty",
                i + 1
            )));
        }
        let ell = part_sizes.iter().copied().max().unwrap_or(0);
        let mut origin = Vec::with_capacity(part_sizes.len() * ell);
        let mut start = 0;
        for &size in part_sizes {
            origin.extend(start..start + size);
            origin.extend(std::iter::repeat_n(start + size - 1, ell - size));
            start += size;
        }
        let padded = if origin.len() == graph.vertex_count() {
            graph
        } else {
            let n = origin.len();
            let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<(usize, usize)> = edges
                .filter(|&(a, b)| graph.has_edge(origin[a], origin[b]))
                .collect();
            OrderedGraph::new(n, edges).expect("copied edges are valid")
        };
        Ok(Self {
            graph: padded,
            parts: part_sizes.len(),
            part_size: ell,
            origin,
        })
    }

    /// `k` parts of equal size.
    pub fn equal_parts(graph: OrderedGraph, k: usize) -> Result<Self, ReductionError> {
        let n = graph.vertex_count();
        if k == 0 || !n.is_multiple_of(k) || n == 0 {
            return Err(ReductionError::Partition(format!(
                "{n} vertices cannot be split into {k} non-empty equal parts"
            )));
        }
        Self::new(graph, &vec![n / k; k])
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    /// `k`.
    pub fn parts(&self) -> usize {
        self.parts
    }

    /// `l`.
    pub fn part_size(&self) -> usize {
        self.part_size
    }

    /// The vertex at 0-based position `j` of 0-based part `i`.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        assert!(i < self.parts && j < self.part_size);
        i * self.part_size + j
    }

    /// For each vertex, the vertex of the unpadded graph it copies.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }
}

/// Is there an independent set with exactly one vertex in each part? Brute
/// force over all `l^k` transversals.
pub fn mis_exists(p: &PartitionedGraph) -> bool {
    let k = p.parts();
    let ell = p.part_size();
    let mut choice = vec![0usize; k];
    loop {
        let independent = (0..k).all(|a| {
            (a + 1..k).all(|b| {
                !p.graph()
                    .has_edge(p.vertex(a, choice[a]), p.vertex(b, choice[b]))
            })
        });
        if independent {
            return true;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < ell {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// List instance with `|V(H)| = 5k` and `|V(G)| = 2kl + 3k`.
pub fn reduce_mis_list(p: &PartitionedGraph) -> MisReductionOutput {
    let k = p.parts();
    let ell = p.part_size();
    let a = |i: usize| 2 * i;
    let b = |i: usize| 2 * i + 1;
    let x = |i: usize| 2 * k + 3 * i;
    let y = |i: usize| 2 * k + 3 * i + 1;
    let z = |i: usize| 2 * k + 3 * i + 2;

    let mut h_origin = Vec::with_capacity(5 * k);
    for i in 0..k {
        h_origin.extend([MisVertex::A(i), MisVertex::B(i)]);
    }
    for i in 0..k {
        h_origin.extend([MisVertex::X(i), MisVertex::Y(i), MisVertex::Z(i)]);
    }
    let mut h_edges = Vec::new();
    for i in 0..k {
        h_edges.extend([(a(i), x(i)), (a(i), y(i)), (b(i), y(i)), (b(i), z(i))]);
    }
    for u in 2 * k..5 * k {
        for v in u + 1..5 * k {
            let both_y = (u - 2 * k) % 3 == 1 && (v - 2 * k) % 3 == 1;
            if !both_y {
                h_edges.push((u, v));
            }
        }
    }
    let h = OrderedGraph::new(5 * k, h_edges).expect("gadget edges are valid");

    let p_at = |i: usize, j: usize| i * (ell + 1) + j;
    let q_at = |i: usize, j: usize| k * (ell + 1) + i * (ell + 2) + j;
    let n = k * (2 * ell + 3);
    let mut g_origin = Vec::with_capacity(n);
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(n);
    for i in 0..k {
        for j in 0..=ell {
            g_origin.push(MisVertex::P { part: i, j });
            lists.push(match j {
                0 => vec![a(i)],
                _ if j == ell => vec![b(i)],
                _ => vec![a(i), b(i)],
            });
        }
    }
    for i in 0..k {
        for j in 0..=ell + 1 {
            g_origin.push(MisVertex::Q { part: i, j });
            lists.push(match j {
                0 => vec![x(i)],
                _ if j == ell + 1 => vec![z(i)],
                _ => vec![x(i), y(i), z(i)],
            });
        }
    }
    let mut g_edges = Vec::new();
    for i in 0..k {
        for j in 1..=ell {
            g_edges.extend([(p_at(i, j - 1), q_at(i, j)), (p_at(i, j), q_at(i, j))]);
        }
    }
    let f = p.graph();
    for i in 0..k {
        for i2 in i + 1..k {
            for j in 1..=ell {
                for j2 in 1..=ell {
                    if f.has_edge(p.vertex(i, j - 1), p.vertex(i2, j2 - 1)) {
                        g_edges.push((q_at(i, j), q_at(i2, j2)));
                    }
                }
            }
        }
    }
    let g = OrderedGraph::new(n, g_edges).expect("gadget edges are valid");
    assert_eq!(h.vertex_count(), 5 * k);
    assert_eq!(g.vertex_count(), 2 * k * ell + 3 * k);
    MisReductionOutput {
        g,
        h,
        lists: Some(ListAssignment::from_vecs(lists)),
        g_origin,
        h_origin,
    }
}

/// Non-list instance: a `(2k+2)`-clique is added to both graphs, with
/// pendant edges that force every list through the order.
pub fn reduce_mis_nolist(p: &PartitionedGraph) -> MisReductionOutput {
    let base = reduce_mis_list(p);
    let k = p.parts();
    let ell = p.part_size();
    let c = Slot::New;
    let clique = || (0..2 * k + 2).flat_map(|u| (u + 1..2 * k + 2).map(move |v| (c(u), c(v))));

    // c_1,a_1,b_1,...,c_k,a_k,b_k,c_{k+1},x_1,y_1,z_1,c_{k+2},...,x_k,y_k,z_k,c_{2k+1},c_{2k+2}
    let mut h_order = Vec::with_capacity(7 * k + 2);
    for i in 0..k {
        h_order.extend([c(i), Slot::Old(2 * i), Slot::Old(2 * i + 1)]);
    }
    for i in 0..k {
        let x = 2 * k + 3 * i;
        h_order.extend([c(k + i), Slot::Old(x), Slot::Old(x + 1), Slot::Old(x + 2)]);
    }
    h_order.extend([c(2 * k), c(2 * k + 1)]);
    let mut h_pendants = Vec::new();
    for i in 0..k {
        let x = 2 * k + 3 * i;
        h_pendants.extend([
            (c(i), Slot::Old(2 * i)),
            (c(i + 1), Slot::Old(2 * i + 1)),
            (c(k + i), Slot::Old(x)),
            (c(k + i + 1), Slot::Old(x + 2)),
        ]);
    }
    let h = splice(&base.h, &h_order, clique().chain(h_pendants));

    // r_1,P^1,r_2,...,r_k,P^k,r_{k+1},Q^1,r_{k+2},...,r_{2k},Q^k,r_{2k+1},r_{2k+2}
    let r = Slot::New;
    let p_at = |i: usize, j: usize| Slot::Old(i * (ell + 1) + j);
    let q_at = |i: usize, j: usize| Slot::Old(k * (ell + 1) + i * (ell + 2) + j);
    let mut g_order = Vec::with_capacity(2 * k * ell + 5 * k + 2);
    for i in 0..k {
        g_order.push(r(i));
        g_order.extend((0..=ell).map(|j| p_at(i, j)));
    }
    for i in 0..k {
        g_order.push(r(k + i));
        g_order.extend((0..=ell + 1).map(|j| q_at(i, j)));
    }
    g_order.extend([r(2 * k), r(2 * k + 1)]);
    let mut g_pendants = Vec::new();
    for i in 0..k {
        g_pendants.extend([
            (r(i), p_at(i, 0)),
            (r(i + 1), p_at(i, ell)),
            (r(k + i), q_at(i, 0)),
            (r(k + i + 1), q_at(i, ell + 1)),
        ]);
    }
    let g = splice(&base.g, &g_order, clique().chain(g_pendants));

    let c_tags: Vec<MisVertex> = (0..2 * k + 2).map(MisVertex::C).collect();
    let r_tags: Vec<MisVertex> = (0..2 * k + 2).map(MisVertex::R).collect();
    assert_eq!(h.vertex_count(), 7 * k + 2);
    assert_eq!(g.vertex_count(), 2 * k * ell + 5 * k + 2);
    MisReductionOutput {
        g_origin: splice_origin(&base.g_origin, &r_tags, &g_order),
        h_origin: splice_origin(&base.h_origin, &c_tags, &h_order),
        g,
        h,
        lists: None,
    }
}
