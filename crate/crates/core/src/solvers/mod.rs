//! Decision and search procedures for ordered homomorphism, with and without
//! per-vertex constraints.

use std::fmt;

use thiserror::Error;

use crate::graph::{OrderedMapping, ShapeError};
use crate::recognize::DecompositionViolation;

mod brute;
mod chi;
mod clique;
mod dispatch;
mod dp;
mod enumerate;
mod profile;
mod shifted;

pub use brute::brute_force_solve;
pub use chi::{chi_less, chi_less_mapping};
pub use clique::clique_lists_min;
pub use dispatch::{solve, SolveOptions, Strategy, AUTO_DP_MAX_WIDTH, AUTO_SHIFTED_MAX_SEGMENTS};
pub use dp::{dp_solve, DpKey, PreimageBlock};
pub use enumerate::{count_monotone_maps, enumerate_monotone_maps, MonotoneMaps};
pub use profile::{compute_pathwidth_profile, PathwidthProfile};
pub use shifted::{shifted_solve, ShiftedDecomposition};

/// The procedure that produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    CliqueMin,
    Shifted,
    Dp,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::CliqueMin => "clique-min",
            Algorithm::Shifted => "shifted",
            Algorithm::Dp => "dp",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Work counters. Which ones are populated depends on the algorithm.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Partial or complete candidate assignments examined.
    pub candidates: u64,
    /// Distinct dynamic-programming table entries set to true.
    pub dp_entries: u64,
    /// Recursive calls and split guesses made by the shifted-clique solver.
    pub branches: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: SolveStats) {
        self.candidates += other.candidates;
        self.dp_entries += other.dp_entries;
        self.branches += other.branches;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub witness: Option<OrderedMapping>,
    pub algorithm: Algorithm,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn feasible(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("invalid shifted-clique decomposition: {0}")]
    Decomposition(#[from] DecompositionViolation),
    #[error("decomposition covers {covered} vertices but the target has {h}")]
    DecompositionSize { covered: usize, h: usize },
}
