//! The move system: applying (k-)pebbling moves, deciding k-reachability and
//! solvability exactly.
//!
//! Reachability is a depth-first search over the distribution state space
//! with a per-query visited set. Every move strictly decreases the total
//! pebble count, so the search terminates. A move from `u` towards a target
//! `t` changes the base-`arity` weight by `-arity * b^(-d(u,t)) + b^(-d(w,t))
//! <= 0`, so the weight is non-increasing and `weight >= k` is a sound
//! necessary condition for k-reachability.

use crate::dist::Distribution;
use crate::grid::Vertex;
use crate::rat::{pow_neg, Rat};
use num::Zero;
use std::collections::HashSet;
use thiserror::Error;

/// Inputs with more pebbles than this are rejected before search; the state
/// space grows combinatorially with the total.
pub const TOTAL_CAP: u64 = 64;

/// The move rule: a move removes `arity` pebbles from a vertex and adds one
/// pebble to a neighbour. The classic game has arity 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveRule {
    arity: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("move arity must be at least 2, got {0}")]
    ArityTooSmall(u32),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("vertex {vertex} holds {present} pebbles, move needs {needed}")]
    InsufficientPebbles {
        vertex: Vertex,
        present: u32,
        needed: u32,
    },
}

impl MoveRule {
    pub const CLASSIC: MoveRule = MoveRule { arity: 2 };

    pub fn new(arity: u32) -> Result<Self, MoveError> {
        if arity < 2 {
            return Err(MoveError::ArityTooSmall(arity));
        }
        Ok(MoveRule { arity })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }
}

/// Applies a single pebbling move, returning the new distribution.
pub fn apply_move(
    dist: &Distribution,
    rule: MoveRule,
    from: Vertex,
    to: Vertex,
) -> Result<Distribution, MoveError> {
    let dims = dist.dims();
    if dims.distance(from, to) != 1 {
        return Err(MoveError::NotAdjacent(from, to));
    }
    let present = dist.get(from);
    if present < rule.arity {
        return Err(MoveError::InsufficientPebbles {
            vertex: from,
            present,
            needed: rule.arity,
        });
    }
    let mut next = dist.clone();
    next.remove(from, rule.arity);
    next.add(to, 1);
    Ok(next)
}

/// The target's weight: sum over vertices of `P(z) * 2^(-d(z, target))`.
/// An exact dyadic rational; equal to the paper's value of the target vertex.
pub fn weight(dist: &Distribution, target: Vertex) -> Rat {
    weight_with_base(dist, target, 2)
}

/// Base-k analogue of the weight, the non-increasing potential for arity-k moves.
pub fn weight_with_base(dist: &Distribution, target: Vertex, base: u32) -> Rat {
    let dims = dist.dims();
    let mut acc = Rat::zero();
    for z in dims.vertices() {
        let c = dist.get(z);
        if c > 0 {
            acc += Rat::from_integer(c.into()) * pow_neg(base, dims.distance(z, target));
        }
    }
    acc
}

/// Integer-scaled weight: `weight * base^dmax`, where `dmax` is the grid
/// diameter. Exact, and cheap enough to evaluate at every search node.
fn scaled_weight(counts: &[u32], pow_table: &[u128]) -> u128 {
    counts
        .iter()
        .zip(pow_table)
        .map(|(&c, &p)| c as u128 * p)
        .sum()
}

struct ReachSearch<'a> {
    rule: MoveRule,
    target_idx: usize,
    k: u32,
    /// base^(dmax - d(z, target)) per vertex, row-major
    pow_table: Vec<u128>,
    /// k * base^dmax, the pruning threshold
    threshold: u128,
    neighbors: &'a [Vec<usize>],
    visited: HashSet<Vec<u32>>,
}

impl ReachSearch<'_> {
    fn run(&mut self, counts: &[u32]) -> bool {
        if counts[self.target_idx] >= self.k {
            return true;
        }
        if scaled_weight(counts, &self.pow_table) < self.threshold {
            return false;
        }
        if !self.visited.insert(counts.to_vec()) {
            return false;
        }
        let arity = self.rule.arity;
        let mut next = counts.to_vec();
        for from in 0..counts.len() {
            if counts[from] < arity {
                continue;
            }
            for &to in &self.neighbors[from] {
                next.copy_from_slice(counts);
                next[from] -= arity;
                next[to] += 1;
                if self.run(&next) {
                    return true;
                }
            }
        }
        false
    }
}

fn neighbor_indices(dist: &Distribution) -> Vec<Vec<usize>> {
    let dims = dist.dims();
    dims.vertices()
        .map(|v| dims.neighbors(v).iter().map(|&w| dims.index(w)).collect())
        .collect()
}

fn make_pow_table(dist: &Distribution, target: Vertex, base: u32) -> (Vec<u128>, u32) {
    let dims = dist.dims();
    let dmax = (dims.rows() - 1 + dims.cols() - 1) as u32;
    let table = dims
        .vertices()
        .map(|z| (base as u128).pow(dmax - dims.distance(z, target)))
        .collect();
    (table, dmax)
}

/// Decides whether some sequence of legal moves puts at least `k` pebbles on
/// the target. `k = 0` is trivially true.
pub fn is_k_reachable(dist: &Distribution, rule: MoveRule, target: Vertex, k: u32) -> bool {
    assert!(
        dist.total() <= TOTAL_CAP,
        "total pebble count {} exceeds the search cap {TOTAL_CAP}",
        dist.total()
    );
    if k == 0 {
        return true;
    }
    let (pow_table, dmax) = make_pow_table(dist, target, rule.arity);
    let threshold = k as u128 * (rule.arity as u128).pow(dmax);
    let mut search = ReachSearch {
        rule,
        target_idx: dist.dims().index(target),
        k,
        pow_table,
        threshold,
        neighbors: &neighbor_indices(dist),
        visited: HashSet::new(),
    };
    search.run(dist.counts())
}

/// The largest k such that the target is k-reachable (0 if unreachable).
/// Bounded above by the floor of the base-arity weight.
pub fn reach_count(dist: &Distribution, rule: MoveRule, target: Vertex) -> u32 {
    let (pow_table, dmax) = make_pow_table(dist, target, rule.arity);
    let scale = (rule.arity as u128).pow(dmax);
    let ub = (scaled_weight(dist.counts(), &pow_table) / scale) as u32;
    let mut k = dist.get(target);
    while k < ub && is_k_reachable(dist, rule, target, k + 1) {
        k += 1;
    }
    k
}

/// True iff every vertex is 1-reachable.
pub fn is_solvable(dist: &Distribution, rule: MoveRule) -> bool {
    dist.dims()
        .vertices()
        .all(|v| is_k_reachable(dist, rule, v, 1))
}

/// A sequence of moves that puts a pebble on the target, if one exists.
/// Empty when the target is already occupied. Deterministic: the search
/// explores moves in row-major source order, up/left/right/down per source.
pub fn witness_sequence(
    dist: &Distribution,
    rule: MoveRule,
    target: Vertex,
) -> Option<Vec<(Vertex, Vertex)>> {
    assert!(dist.total() <= TOTAL_CAP);
    let dims = dist.dims();
    let target_idx = dims.index(target);
    let neighbors = neighbor_indices(dist);
    let (pow_table, dmax) = make_pow_table(dist, target, rule.arity);
    let threshold = (rule.arity as u128).pow(dmax);
    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut path: Vec<(usize, usize)> = Vec::new();

    fn dfs(
        counts: &[u32],
        arity: u32,
        target_idx: usize,
        neighbors: &[Vec<usize>],
        pow_table: &[u128],
        threshold: u128,
        visited: &mut HashSet<Vec<u32>>,
        path: &mut Vec<(usize, usize)>,
    ) -> bool {
        if counts[target_idx] >= 1 {
            return true;
        }
        if scaled_weight(counts, pow_table) < threshold {
            return false;
        }
        if !visited.insert(counts.to_vec()) {
            return false;
        }
        let mut next = counts.to_vec();
        for from in 0..counts.len() {
            if counts[from] < arity {
                continue;
            }
            for &to in &neighbors[from] {
                next.copy_from_slice(counts);
                next[from] -= arity;
                next[to] += 1;
                path.push((from, to));
                if dfs(&next, arity, target_idx, neighbors, pow_table, threshold, visited, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    if dfs(
        dist.counts(),
        rule.arity,
        target_idx,
        &neighbors,
        &pow_table,
        threshold,
        &mut visited,
        &mut path,
    ) {
        Some(
            path.into_iter()
                .map(|(f, t)| (dims.vertex_at(f), dims.vertex_at(t)))
                .collect(),
        )
    } else {
        None
    }
}
