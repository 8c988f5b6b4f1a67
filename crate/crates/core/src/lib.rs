//! Ordered graph homomorphism: solvers for `Hom<` and its list and bounded
//! variants, target-graph recognizers, and hardness constructions.
//!
//! Vertices are 0-based in the API. The text formats in [`io`] are 1-based.

pub mod analysis;
pub mod generate;
pub mod graph;
pub mod io;
pub mod recognize;
pub mod reductions;
pub mod solvers;
pub mod structure;

pub use graph::{
    validate_hom, BoundsAssignment, Constraints, GraphError, ListAssignment, OrderedGraph,
    OrderedMapping, ShapeError,
};
pub use recognize::{compute_c, recognize_shifted, validate_decomposition};
pub use solvers::{solve, Algorithm, SolveError, SolveOptions, SolveResult, SolveStats, Strategy};
pub use structure::{Relation, RelationalStructure, StructureError, StructureMapping};
