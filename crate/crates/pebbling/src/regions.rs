//! Regions of reachability: 2-reachable cores, their neighbourhood closures,
//! the partition of a solvable distribution into regions plus leftover
//! vertices, and the normalization that empties the leftover set.

use crate::dist::Distribution;
use crate::engine::{is_k_reachable, reach_count, MoveRule};
use crate::grid::{GridDims, Vertex};
use std::collections::BTreeSet;
use thiserror::Error;

/// A region: a maximal connected set of 2-reachable vertices (the core)
/// together with their neighbours (the members).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    core: BTreeSet<Vertex>,
    members: BTreeSet<Vertex>,
}

impl Region {
    pub fn core(&self) -> &BTreeSet<Vertex> {
        &self.core
    }

    pub fn members(&self) -> &BTreeSet<Vertex> {
        &self.members
    }

    /// k, the number of 2-reachable vertices.
    pub fn k(&self) -> usize {
        self.core.len()
    }

    /// N, the total number of vertices in the region.
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The partition of Observation 1: pairwise disjoint regions plus the set S
/// of exactly-1-reachable occupied vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionPartition {
    pub dims: GridDims,
    pub regions: Vec<Region>,
    pub leftover: BTreeSet<Vertex>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegionError {
    #[error("distribution is not solvable (vertex {0} is unreachable)")]
    Unsolvable(Vertex),
    #[error("partition structure violated: {0}")]
    Structure(String),
}

/// All vertices that are 2-reachable under classic (arity 2) moves.
pub fn two_reachable_set(dist: &Distribution) -> BTreeSet<Vertex> {
    dist.dims()
        .vertices()
        .filter(|&v| is_k_reachable(dist, MoveRule::CLASSIC, v, 2))
        .collect()
}

fn first_unreachable(dist: &Distribution) -> Option<Vertex> {
    dist.dims()
        .vertices()
        .find(|&v| !is_k_reachable(dist, MoveRule::CLASSIC, v, 1))
}

/// Decomposes a solvable distribution into regions plus the leftover set,
/// verifying the partition structure as it goes. Structure failures signal an
/// engine bug, not a user error.
pub fn decompose(dist: &Distribution) -> Result<RegionPartition, RegionError> {
    if let Some(v) = first_unreachable(dist) {
        return Err(RegionError::Unsolvable(v));
    }
    let dims = dist.dims();
    let core_set = two_reachable_set(dist);

    // connected components of the subgraph induced on the 2-reachable set
    let mut regions: Vec<Region> = Vec::new();
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for &start in &core_set {
        if seen.contains(&start) {
            continue;
        }
        let mut core = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            core.insert(v);
            for w in dims.neighbors(v) {
                if core_set.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let mut members = core.clone();
        for &v in &core {
            members.extend(dims.neighbors(v));
        }
        let region = Region { core, members };
        // Region size bound: N <= 3k + 2, asserted fail-fast at construction.
        if region.size() > 3 * region.k() + 2 {
            return Err(RegionError::Structure(format!(
                "region with k={} has N={} > 3k+2",
                region.k(),
                region.size()
            )));
        }
        regions.push(region);
    }

    // disjointness
    let mut covered: BTreeSet<Vertex> = BTreeSet::new();
    for r in &regions {
        for &v in &r.members {
            if !covered.insert(v) {
                return Err(RegionError::Structure(format!(
                    "vertex {v} belongs to two regions"
                )));
            }
        }
    }

    // leftover vertices carry exactly one pebble and are exactly 1-reachable
    let mut leftover = BTreeSet::new();
    for v in dims.vertices() {
        if covered.contains(&v) {
            continue;
        }
        if dist.get(v) != 1 {
            return Err(RegionError::Structure(format!(
                "leftover vertex {v} holds {} pebbles, expected exactly 1",
                dist.get(v)
            )));
        }
        if reach_count(dist, MoveRule::CLASSIC, v) != 1 {
            return Err(RegionError::Structure(format!(
                "leftover vertex {v} is not exactly 1-reachable"
            )));
        }
        leftover.insert(v);
    }

    Ok(RegionPartition {
        dims,
        regions,
        leftover,
    })
}

/// Moves each leftover pebble onto its first neighbour until the leftover set
/// is empty. Preserves the total and solvability; terminates because |S|
/// strictly decreases.
pub fn normalize(dist: &Distribution) -> Result<Distribution, RegionError> {
    let dims = dist.dims();
    assert!(dims.vertex_count() >= 2, "normalize needs at least two vertices");
    let mut cur = dist.clone();
    for _ in 0..=dims.vertex_count() {
        let partition = decompose(&cur)?;
        let Some(&x) = partition.leftover.iter().next() else {
            return Ok(cur);
        };
        let u = dims.neighbors(x)[0];
        cur.remove(x, 1);
        cur.add(u, 1);
    }
    Err(RegionError::Structure(
        "leftover set did not shrink".to_string(),
    ))
}

/// Vertices of a region with at least one neighbour belonging to a different
/// region of the partition.
pub fn region_frontier(partition: &RegionPartition, region_index: usize) -> BTreeSet<Vertex> {
    let region = &partition.regions[region_index];
    let mut frontier = BTreeSet::new();
    for &v in &region.members {
        let foreign = partition.dims.neighbors(v).into_iter().any(|w| {
            partition
                .regions
                .iter()
                .enumerate()
                .any(|(i, r)| i != region_index && r.members.contains(&w))
        });
        if foreign {
            frontier.insert(v);
        }
    }
    frontier
}
