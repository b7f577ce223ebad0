//! Enumeration of pebbling distributions with a fixed total, in descending
//! lexicographic count-array order (pebbles packed towards row-major-smallest
//! vertices first), optionally restricted to canonical symmetry-orbit
//! representatives.

use crate::dist::Distribution;
use crate::grid::GridDims;
use num::BigUint;

/// All count arrays of the given total, lexicographically descending.
pub struct Compositions {
    dims: GridDims,
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Distribution;

    fn next(&mut self) -> Option<Distribution> {
        let cur = self.next.take()?;
        self.next = successor(&cur);
        Some(Distribution::from_counts(self.dims, cur))
    }
}

/// Next composition in descending lexicographic order: find the last position
/// before the final cell with a positive count, move one unit from it one step
/// right, and pull the whole tail back onto that position.
fn successor(counts: &[u32]) -> Option<Vec<u32>> {
    let n = counts.len();
    if n == 1 {
        return None;
    }
    let i = (0..n - 1).rev().find(|&i| counts[i] > 0)?;
    let mut next = counts.to_vec();
    let tail: u32 = counts[i + 1..].iter().sum();
    next[i] -= 1;
    for c in next[i + 1..].iter_mut() {
        *c = 0;
    }
    next[i + 1] = tail + 1;
    Some(next)
}

/// Distributions of exactly `total` pebbles, lexicographic order.
pub fn distributions_of_total(dims: GridDims, total: u32) -> Compositions {
    let mut first = vec![0; dims.vertex_count()];
    first[0] = total;
    Compositions {
        dims,
        next: Some(first),
    }
}

/// Distributions of every total in `0..=max_total`, totals ascending.
pub fn distributions_up_to(dims: GridDims, max_total: u32) -> impl Iterator<Item = Distribution> {
    (0..=max_total).flat_map(move |t| distributions_of_total(dims, t))
}

/// Canonical-orbit representatives only.
pub fn canonical_distributions_of_total(
    dims: GridDims,
    total: u32,
) -> impl Iterator<Item = Distribution> {
    distributions_of_total(dims, total).filter(|d| d.is_canonical())
}

/// Number of compositions of `total` into `cells` parts: C(total+cells-1, cells-1).
pub fn composition_count(cells: usize, total: u32) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 1..cells {
        acc = acc * BigUint::from(total as usize + i) / BigUint::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn enumerates_all_compositions_once() {
        let dims = GridDims::new(2, 2);
        for t in 0..6u32 {
            let all: Vec<_> = distributions_of_total(dims, t).collect();
            let expected = composition_count(4, t);
            assert_eq!(BigUint::from(all.len()), expected);
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for d in &all {
                assert_eq!(d.total(), t as u64);
            }
            // descending lexicographic order on count arrays
            for w in all.windows(2) {
                assert!(w[0].counts() > w[1].counts());
            }
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(composition_count(4, 3), BigUint::from(20u32)); // C(6,3)
        assert_eq!(composition_count(9, 7), BigUint::from(6435u32)); // C(15,8)
        assert_eq!(composition_count(1, 5), BigUint::from(1u32));
    }

    #[test]
    fn canonical_representatives_cover_all_orbits() {
        let dims = GridDims::new(2, 3);
        for t in 0..5u32 {
            let reps: HashSet<_> = canonical_distributions_of_total(dims, t).collect();
            for d in distributions_of_total(dims, t) {
                assert!(reps.contains(&d.canonical()));
            }
        }
    }
}
