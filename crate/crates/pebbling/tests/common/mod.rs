//! Naive reachability oracle: explores every move sequence outright, with no
//! memoization and no weight pruning. Exponential, so only for small totals.

use pebbling::dist::Distribution;
use pebbling::engine::MoveRule;
use pebbling::grid::GridDims;

fn explore(counts: &mut Vec<u32>, dims: GridDims, arity: u32, best: &mut Vec<u32>) {
    for (i, &c) in counts.iter().enumerate() {
        if c > best[i] {
            best[i] = c;
        }
    }
    for i in 0..counts.len() {
        if counts[i] < arity {
            continue;
        }
        for j in dims
            .neighbors(dims.vertex_at(i))
            .into_iter()
            .map(|v| dims.index(v))
        {
            counts[i] -= arity;
            counts[j] += 1;
            explore(counts, dims, arity, best);
            counts[j] -= 1;
            counts[i] += arity;
        }
    }
}

/// Per-vertex maximum pebble count achievable by any move sequence.
pub fn naive_max_counts(dist: &Distribution, rule: MoveRule) -> Vec<u32> {
    let dims = dist.dims();
    let mut counts = dist.counts().to_vec();
    let mut best = vec![0; counts.len()];
    explore(&mut counts, dims, rule.arity(), &mut best);
    best
}

pub fn naive_is_solvable(dist: &Distribution, rule: MoveRule) -> bool {
    naive_max_counts(dist, rule).iter().all(|&c| c >= 1)
}
