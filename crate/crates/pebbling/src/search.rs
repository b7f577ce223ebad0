//! Optimal pebbling numbers of small grids by exhaustive search, and the two
//! distribution transforms: smoothening a heavy vertex and flattening a
//! solvable distribution onto full occupancy (arity >= 5).

use crate::dist::Distribution;
use crate::engine::{self, is_solvable, witness_sequence, MoveRule, TOTAL_CAP};
use crate::enumerate::{canonical_distributions_of_total, distributions_of_total};
use crate::grid::{GridDims, Vertex};
use crate::rat::int;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub rule: MoveRule,
    /// Largest distribution total the search will try before giving up.
    pub max_total: u64,
    /// Restrict enumeration to canonical forms under the grid symmetries.
    pub use_symmetry: bool,
    pub parallelism: bool,
}

impl SearchConfig {
    pub fn classic() -> Self {
        SearchConfig {
            rule: MoveRule::CLASSIC,
            max_total: TOTAL_CAP,
            use_symmetry: true,
            parallelism: true,
        }
    }

    pub fn with_rule(rule: MoveRule) -> Self {
        SearchConfig {
            rule,
            ..SearchConfig::classic()
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("no solvable distribution with total <= {0}")]
    CapExceeded(u64),
    #[error("transform requires arity >= 5, got {0}")]
    ArityTooSmall(u32),
    #[error("distribution is not solvable under the given rule")]
    NotSolvable,
    #[error("vertex {0} holds {1} pebbles, need at least arity + 1")]
    TooFewPebbles(Vertex, u32),
}

/// The optimal k-pebbling number: the least total over solvable
/// distributions, with a solvable witness of that total.
///
/// Totals are tried in increasing order; within a total the enumeration runs
/// over canonical forms (or all forms with symmetry off) and returns the
/// first solvable distribution in the enumeration order, so the witness is
/// deterministic even under parallel search.
pub fn optimal_pebbling_number(
    dims: GridDims,
    config: SearchConfig,
) -> Result<(u64, Distribution), SearchError> {
    for total in 1..=config.max_total {
        let found = if config.use_symmetry {
            find_solvable(
                canonical_distributions_of_total(dims, total as u32).collect(),
                config,
            )
        } else {
            find_solvable(distributions_of_total(dims, total as u32).collect(), config)
        };
        if let Some(d) = found {
            return Ok((total, d));
        }
    }
    Err(SearchError::CapExceeded(config.max_total))
}

fn find_solvable(candidates: Vec<Distribution>, config: SearchConfig) -> Option<Distribution> {
    let viable = |d: &&Distribution| {
        // a solvable distribution keeps base-arity weight >= 1 at every target
        dims_min_weight_at_least_one(d, config.rule) && is_solvable(d, config.rule)
    };
    if config.parallelism {
        candidates.par_iter().find_first(viable).cloned()
    } else {
        candidates.iter().find(viable).cloned()
    }
}

fn dims_min_weight_at_least_one(d: &Distribution, rule: MoveRule) -> bool {
    let one = int(1);
    d.dims()
        .vertices()
        .all(|x| engine::weight_with_base(d, x, rule.arity()) >= one)
}

/// Checks whether the optimal k-pebbling number of the grid equals its vertex
/// count, for arity >= 5.
pub fn verify_pi_k_equals_nm(dims: GridDims, arity: u32) -> Result<bool, SearchError> {
    if arity < 5 {
        return Err(SearchError::ArityTooSmall(arity));
    }
    let rule = MoveRule::new(arity).expect("arity >= 2");
    let nm = dims.vertex_count() as u64;
    if nm > TOTAL_CAP {
        return Err(SearchError::CapExceeded(TOTAL_CAP));
    }
    let mut config = SearchConfig::with_rule(rule);
    config.max_total = nm;
    let (pi, _) = optimal_pebbling_number(dims, config)?;
    Ok(pi == nm)
}

/// Removes one move's worth of pebbles from `x` and gives one pebble to every
/// neighbour. Requires `x` to keep at least one pebble afterwards.
pub fn smoothen(
    dist: &Distribution,
    rule: MoveRule,
    x: Vertex,
) -> Result<Distribution, SearchError> {
    let c = dist.get(x);
    if c < rule.arity() + 1 {
        return Err(SearchError::TooFewPebbles(x, c));
    }
    let mut out = dist.clone();
    out.remove(x, rule.arity());
    for y in dist.dims().neighbors(x) {
        out.add(y, 1);
    }
    Ok(out)
}

/// Transforms a solvable distribution (arity >= 5) into a solvable
/// distribution with every vertex occupied and no greater total.
///
/// Each round picks the first unoccupied vertex, takes a witness move
/// sequence onto it, and spreads along that sequence: every move source
/// gives one pebble to each of its neighbours, paying a full move's worth
/// when it can spare one and one less when it holds exactly the arity.
/// The result dominates the witness trajectory pointwise, so it stays
/// solvable, and the round occupies the chosen vertex without emptying any
/// occupied one.
pub fn flatten_to_occupied(
    dist: &Distribution,
    rule: MoveRule,
) -> Result<Distribution, SearchError> {
    let arity = rule.arity();
    if arity < 5 {
        return Err(SearchError::ArityTooSmall(arity));
    }
    if !is_solvable(dist, rule) {
        return Err(SearchError::NotSolvable);
    }
    let dims = dist.dims();
    let mut current = dist.clone();
    loop {
        let Some(x) = dims.vertices().find(|&v| current.get(v) == 0) else {
            return Ok(current);
        };
        let moves = witness_sequence(&current, rule, x).expect("solvable, so reachable");
        debug_assert!(!moves.is_empty());
        // replay the witness, spreading: each move pays a full round's worth
        // when the source can spare one, one less (keeping a pebble) when it
        // holds exactly the arity, and gives one pebble to every neighbour.
        // The replayed state dominates the witness trajectory pointwise.
        let mut next = current.clone();
        for (from, _) in moves {
            let c = next.get(from);
            debug_assert!(c >= arity);
            let removed = if c >= arity + 1 { arity } else { arity - 1 };
            next.remove(from, removed);
            for y in dims.neighbors(from) {
                next.add(y, 1);
            }
        }
        debug_assert!(next.get(x) >= 1);
        debug_assert!(next.total() <= current.total());
        current = next;
    }
}

/// Optimal pebbling numbers for a sweep of arities on one grid.
pub fn pi_k_explore(dims: GridDims, arities: &[u32]) -> Vec<(u32, Result<u64, SearchError>)> {
    arities
        .iter()
        .map(|&a| {
            let rule = match MoveRule::new(a) {
                Ok(r) => r,
                Err(_) => return (a, Err(SearchError::ArityTooSmall(a))),
            };
            let r = optimal_pebbling_number(dims, SearchConfig::with_rule(rule)).map(|(t, _)| t);
            (a, r)
        })
        .collect()
}
