use std::fmt;
use std::str::FromStr;

use crate::graph::{validate_hom, Constraints, OrderedGraph};
use crate::recognize::recognize_shifted;

use super::{
    brute_force_solve, compute_pathwidth_profile, dp_solve, shifted_solve, ShiftedDecomposition,
    SolveError, SolveResult,
};

/// `auto` uses the shifted-clique solver when the target needs at most this
/// many segments.
pub const AUTO_SHIFTED_MAX_SEGMENTS: usize = 3;
/// `auto` uses the dynamic program when `c(H)` is at most this.
pub const AUTO_DP_MAX_WIDTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Brute,
    Shifted,
    Dp,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "brute" => Ok(Strategy::Brute),
            "shifted" => Ok(Strategy::Shifted),
            "dp" => Ok(Strategy::Dp),
            other => Err(format!(
                "unknown algorithm `{other}` (expected auto, brute, shifted or dp)"
            )),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Brute => "brute",
            Strategy::Shifted => "shifted",
            Strategy::Dp => "dp",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub strategy: Strategy,
    /// Decomposition to use with [`Strategy::Shifted`]; recognized when absent.
    pub decomposition: Option<ShiftedDecomposition>,
}

impl SolveOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Self {
            strategy,
            decomposition: None,
        }
    }
}

/// Runs the requested algorithm, or picks one for `auto`: the shifted solver
/// for targets with few segments when no lists are given, then the dynamic
/// program for small `c(H)` without lists, then brute force.
///
/// Every witness is re-checked with [`validate_hom`] before it is returned.
pub fn solve(
    g: &OrderedGraph,
    h: &OrderedGraph,
    constraints: &Constraints<'_>,
    options: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    constraints.check_shape(g.vertex_count(), h.vertex_count())?;
    let result = match options.strategy {
        Strategy::Brute => brute_force_solve(g, h, constraints)?,
        Strategy::Shifted => {
            let decomposition = match &options.decomposition {
                Some(d) => d.clone(),
                None => recognize_shifted(h).unwrap_or_else(|| ShiftedDecomposition::single(0)),
            };
            shifted_solve(g, h, &decomposition, constraints)?
        }
        Strategy::Dp => dp_solve(g, h, &compute_pathwidth_profile(h), constraints)?,
        Strategy::Auto => auto(g, h, constraints)?,
    };
    if let Some(f) = &result.witness {
        assert!(
            validate_hom(g, h, f, constraints)?,
            "{} returned an invalid witness",
            result.algorithm
        );
    }
    Ok(result)
}

fn auto(
    g: &OrderedGraph,
    h: &OrderedGraph,
    constraints: &Constraints<'_>,
) -> Result<SolveResult, SolveError> {
    if constraints.lists.is_none() {
        if let Some(d) = recognize_shifted(h).filter(|d| d.len() <= AUTO_SHIFTED_MAX_SEGMENTS) {
            return shifted_solve(g, h, &d, constraints);
        }
        let profile = compute_pathwidth_profile(h);
        if profile.width() <= AUTO_DP_MAX_WIDTH {
            return Ok(dp_solve(g, h, &profile, constraints)?);
        }
    }
    Ok(brute_force_solve(g, h, constraints)?)
}
