//! Pebbling distributions: a non-negative pebble count per vertex.

use crate::grid::{GridDims, Symmetry, Vertex};

/// A pebbling distribution on a grid, stored dense and row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Distribution {
    dims: GridDims,
    counts: Vec<u32>,
}

impl Distribution {
    pub fn empty(dims: GridDims) -> Self {
        Distribution {
            dims,
            counts: vec![0; dims.vertex_count()],
        }
    }

    pub fn from_counts(dims: GridDims, counts: Vec<u32>) -> Self {
        assert_eq!(counts.len(), dims.vertex_count(), "count array shape mismatch");
        Distribution { dims, counts }
    }

    /// Builds a distribution from (vertex, count) pairs, zero elsewhere.
    pub fn from_pebbles(dims: GridDims, pebbles: &[(Vertex, u32)]) -> Self {
        let mut d = Self::empty(dims);
        for &(v, c) in pebbles {
            d.set(v, c);
        }
        d
    }

    pub fn uniform(dims: GridDims, count: u32) -> Self {
        Distribution {
            dims,
            counts: vec![count; dims.vertex_count()],
        }
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.counts[self.dims.index(v)]
    }

    pub fn set(&mut self, v: Vertex, count: u32) {
        let i = self.dims.index(v);
        self.counts[i] = count;
    }

    pub fn add(&mut self, v: Vertex, delta: u32) {
        let i = self.dims.index(v);
        self.counts[i] += delta;
    }

    pub fn remove(&mut self, v: Vertex, delta: u32) {
        let i = self.dims.index(v);
        assert!(self.counts[i] >= delta, "removing more pebbles than present");
        self.counts[i] -= delta;
    }

    /// |P|, the total number of pebbles.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Vertices carrying at least one pebble, row-major order.
    pub fn support(&self) -> Vec<Vertex> {
        self.dims.vertices().filter(|&v| self.get(v) > 0).collect()
    }

    pub fn is_fully_occupied(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }

    pub fn apply_symmetry(&self, sym: Symmetry) -> Distribution {
        let mut out = Self::empty(self.dims);
        for v in self.dims.vertices() {
            out.set(self.dims.apply_symmetry(sym, v), self.get(v));
        }
        out
    }

    /// The canonical representative of this distribution's symmetry orbit:
    /// the image whose count array is lexicographically greatest, which
    /// places pebbles on the row-major-smallest vertices.
    pub fn canonical(&self) -> Distribution {
        self.dims
            .symmetries()
            .into_iter()
            .map(|s| self.apply_symmetry(s))
            .max_by(|a, b| a.counts.cmp(&b.counts))
            .expect("symmetry group is nonempty")
    }

    pub fn is_canonical(&self) -> bool {
        self == &self.canonical()
    }
}
