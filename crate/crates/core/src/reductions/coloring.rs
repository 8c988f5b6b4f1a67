use crate::graph::OrderedGraph;
use crate::structure::{Relation, RelationalStructure};

/// Encodes proper `colors`-colouring of `f` as a homomorphism between
/// structures with one binary relation `E`: one tuple per edge of `f`
/// (lower endpoint first), and all ordered pairs of distinct colours.
pub fn coloring_to_struct(
    f: &OrderedGraph,
    colors: usize,
) -> (RelationalStructure, RelationalStructure) {
    assert!(colors >= 1, "at least one colour is required");
    let source_tuples = f.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    let target_tuples = (0..colors)
        .flat_map(|a| {
            (0..colors)
                .filter(move |&b| b != a)
                .map(move |b| vec![a, b])
        })
        .collect();
    let source =
        RelationalStructure::new(f.vertex_count(), vec![Relation::new("E", 2, source_tuples)])
            .expect("edges give distinct tuples");
    let target = RelationalStructure::new(colors, vec![Relation::new("E", 2, target_tuples)])
        .expect("distinct colour pairs");
    (source, target)
}
