use crate::graph::{ListAssignment, OrderedGraph};
use crate::structure::{RelationalStructure, StructureError, StructureMapping};

use super::{splice, splice_origin, ReductionError, Slot, StructReductionOutput, StructVertex};

/// Lexicographically smallest homomorphism `source -> target`, by exhaustive
/// search over all assignments.
pub fn struct_hom_exists(
    source: &RelationalStructure,
    target: &RelationalStructure,
) -> Result<Option<StructureMapping>, StructureError> {
    source.check_same_signature(target)?;
    let n = source.universe_size();
    let m = target.universe_size();
    if n == 0 {
        return Ok(Some(StructureMapping {
            targets: Vec::new(),
        }));
    }
    if m == 0 {
        return Ok(None);
    }
    let mut candidate = StructureMapping {
        targets: vec![0; n],
    };
    loop {
        if candidate.respects(source, target) {
            return Ok(Some(candidate));
        }
        // Odometer with the last element as the fastest digit.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            candidate.targets[pos] += 1;
            if candidate.targets[pos] < m {
                break;
            }
            candidate.targets[pos] = 0;
        }
    }
}

/// List instance: `G` is the incidence graph of the source (elements, then
/// tuples) and `H` has a vertex per element/image pair and per tuple/image
/// pair. Elements in no tuple are dropped first.
///
/// A tuple/image vertex `(R, x, y)` is isolated when `x` repeats an element
/// that `y` sends to two different images.
pub fn reduce_struct_list(
    source: &RelationalStructure,
    target: &RelationalStructure,
) -> Result<StructReductionOutput, ReductionError> {
    source.check_same_signature(target)?;
    let used = source.used_elements();
    let kept: Vec<usize> = (0..source.universe_size()).filter(|&v| used[v]).collect();
    let mut index = vec![usize::MAX; source.universe_size()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let p = kept.len();
    let hu = target.universe_size();

    let mut g_origin: Vec<StructVertex> = kept.iter().map(|&v| StructVertex::Element(v)).collect();
    let mut h_origin: Vec<StructVertex> = kept
        .iter()
        .flat_map(|&v| {
            (0..hu).map(move |u| StructVertex::Pair {
                element: v,
                image: u,
            })
        })
        .collect();
    let mut lists: Vec<Vec<usize>> = (0..p).map(|i| (i * hu..(i + 1) * hu).collect()).collect();
    let mut g_edges = Vec::new();
    let mut h_edges = Vec::new();

    for rel in source.relations() {
        let images = target
            .relation(rel.name())
            .expect("signatures were checked")
            .tuples();
        for x in rel.tuples() {
            let gv = g_origin.len();
            g_origin.push(StructVertex::Incidence {
                relation: rel.name().to_string(),
                tuple: x.clone(),
            });
            let mut elems: Vec<usize> = x.iter().map(|&v| index[v]).collect();
            elems.sort_unstable();
            elems.dedup();
            g_edges.extend(elems.iter().map(|&a| (a, gv)));

            let mut list = Vec::with_capacity(images.len());
            for y in images {
                let hv = h_origin.len();
                h_origin.push(StructVertex::TupleImage {
                    relation: rel.name().to_string(),
                    tuple: x.clone(),
                    image: y.clone(),
                });
                list.push(hv);
                // An image that splits a repeated element gets no edges.
                let consistent = (0..x.len()).all(|i| (0..i).all(|j| x[i] != x[j] || y[i] == y[j]));
                if !consistent {
                    continue;
                }
                let mut pairs: Vec<usize> =
                    x.iter().zip(y).map(|(&v, &u)| index[v] * hu + u).collect();
                pairs.sort_unstable();
                pairs.dedup();
                h_edges.extend(pairs.iter().map(|&a| (a, hv)));
            }
            lists.push(list);
        }
    }

    let g = OrderedGraph::new(g_origin.len(), g_edges).expect("incidence edges are valid");
    let h = OrderedGraph::new(h_origin.len(), h_edges).expect("pair edges are valid");
    let image_count: usize = source
        .relations()
        .iter()
        .map(|r| r.len() * target.relation(r.name()).map_or(0, |t| t.len()))
        .sum();
    assert_eq!(g.vertex_count(), p + source.tuple_count());
    assert_eq!(h.vertex_count(), p * hu + image_count);
    Ok(StructReductionOutput {
        g,
        h,
        lists: Some(ListAssignment::from_vecs(lists)),
        g_origin,
        h_origin,
        kept_elements: kept,
    })
}

/// Non-list instance: the list instance with a path gadget threaded through
/// both graphs so that every list is forced by the order alone.
///
/// Rejects targets where a relation used by the source is empty, since the
/// gadget vertex after an empty list has no defined position.
pub fn reduce_struct_nolist(
    source: &RelationalStructure,
    target: &RelationalStructure,
) -> Result<StructReductionOutput, ReductionError> {
    let base = reduce_struct_list(source, target)?;
    for rel in source.relations() {
        if !rel.is_empty() && target.relation(rel.name()).is_none_or(|t| t.is_empty()) {
            return Err(ReductionError::EmptyTargetRelation(rel.name().to_string()));
        }
    }
    let lists = base.lists.as_ref().expect("list variant has lists");
    let p = base.kept_elements.len();
    let q = source.tuple_count();
    // Path vertices: x_0..x_p are 0..=p, y is p+1, z_0..z_q are p+2..=p+q+2.
    let path_len = p + q + 3;
    let x = |i: usize| Slot::New(i);
    let y = Slot::New(p + 1);
    let z = |i: usize| Slot::New(p + 2 + i);
    let path_edges = || (0..path_len - 1).map(|i| (Slot::New(i), Slot::New(i + 1)));

    let mut g_order = vec![x(0)];
    for i in 0..p {
        g_order.extend([Slot::Old(i), x(i + 1)]);
    }
    g_order.extend([y, z(0)]);
    for j in 0..q {
        g_order.extend([Slot::Old(p + j), z(j + 1)]);
    }

    // Lists are contiguous blocks of H, in the same order as G.
    let mut h_order = vec![x(0)];
    for i in 0..p {
        h_order.extend(lists.list(i).iter().map(|&t| Slot::Old(t)));
        h_order.push(x(i + 1));
    }
    h_order.extend([y, z(0)]);
    for j in 0..q {
        h_order.extend(lists.list(p + j).iter().map(|&t| Slot::Old(t)));
        h_order.push(z(j + 1));
    }

    let g = splice(&base.g, &g_order, path_edges());
    let h = splice(&base.h, &h_order, path_edges());
    let g_tags: Vec<StructVertex> = (0..=p)
        .map(StructVertex::PathX)
        .chain([StructVertex::PathY])
        .chain((0..=q).map(StructVertex::PathZ))
        .collect();
    let h_tags: Vec<StructVertex> = (0..=p)
        .map(StructVertex::PathXPrime)
        .chain([StructVertex::PathYPrime])
        .chain((0..=q).map(StructVertex::PathZPrime))
        .collect();
    assert_eq!(g.vertex_count(), base.g.vertex_count() + path_len);
    assert_eq!(h.vertex_count(), base.h.vertex_count() + path_len);
    Ok(StructReductionOutput {
        g_origin: splice_origin(&base.g_origin, &g_tags, &g_order),
        h_origin: splice_origin(&base.h_origin, &h_tags, &h_order),
        g,
        h,
        lists: None,
        kept_elements: base.kept_elements,
    })
}
