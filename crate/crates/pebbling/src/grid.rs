//! Rectangular grid graph: vertices, adjacency, distance, boundary and the
//! symmetry group of the rectangle.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Dimensions of an m x n grid. Both sides are at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridDims {
    rows: usize,
    cols: usize,
}

/// A grid square, 0-based, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A symmetry of the rectangle, acting on vertices. Transpositions only exist
/// for square grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Identity,
    FlipRows,
    FlipCols,
    Rot180,
    Transpose,
    AntiTranspose,
    Rot90,
    Rot270,
}

impl GridDims {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "grid dimensions must be positive");
        GridDims { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex_count(&self) -> usize {
        self.rows * self.cols
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.row < self.rows && v.col < self.cols
    }

    /// Row-major index of a vertex.
    pub fn index(&self, v: Vertex) -> usize {
        debug_assert!(self.contains(v));
        v.row * self.cols + v.col
    }

    pub fn vertex_at(&self, idx: usize) -> Vertex {
        debug_assert!(idx < self.vertex_count());
        Vertex::new(idx / self.cols, idx % self.cols)
    }

    /// All vertices in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let cols = self.cols;
        (0..self.vertex_count()).map(move |i| Vertex::new(i / cols, i % cols))
    }

    /// Graph distance. On a grid this is the L1 distance; a BFS oracle backs
    /// this up in the tests.
    pub fn distance(&self, a: Vertex, b: Vertex) -> u32 {
        assert!(self.contains(a) && self.contains(b), "vertex out of bounds");
        (a.row.abs_diff(b.row) + a.col.abs_diff(b.col)) as u32
    }

    /// In-bounds orthogonal neighbours, in the fixed order up, left, right, down.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        assert!(self.contains(v), "vertex out of bounds");
        let mut out = Vec::with_capacity(4);
        if v.row > 0 {
            out.push(Vertex::new(v.row - 1, v.col));
        }
        if v.col > 0 {
            out.push(Vertex::new(v.row, v.col - 1));
        }
        if v.col + 1 < self.cols {
            out.push(Vertex::new(v.row, v.col + 1));
        }
        if v.row + 1 < self.rows {
            out.push(Vertex::new(v.row + 1, v.col));
        }
        out
    }

    pub fn is_boundary(&self, v: Vertex) -> bool {
        v.row == 0 || v.row == self.rows - 1 || v.col == 0 || v.col == self.cols - 1
    }

    pub fn is_interior(&self, v: Vertex) -> bool {
        !self.is_boundary(v)
    }

    /// All boundary vertices, in row-major order.
    pub fn boundary(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_boundary(v)).collect()
    }

    /// The automorphism group of the rectangle: the Klein four-group for
    /// m != n, the dihedral group D4 for squares.
    pub fn symmetries(&self) -> Vec<Symmetry> {
        use Symmetry::*;
        if self.rows == self.cols {
            vec![
                Identity, FlipRows, FlipCols, Rot180, Transpose, AntiTranspose, Rot90, Rot270,
            ]
        } else {
            vec![Identity, FlipRows, FlipCols, Rot180]
        }
    }

    pub fn apply_symmetry(&self, sym: Symmetry, v: Vertex) -> Vertex {
        let (m, n) = (self.rows, self.cols);
        match sym {
            Symmetry::Identity => v,
            Symmetry::FlipRows => Vertex::new(m - 1 - v.row, v.col),
            Symmetry::FlipCols => Vertex::new(v.row, n - 1 - v.col),
            Symmetry::Rot180 => Vertex::new(m - 1 - v.row, n - 1 - v.col),
            Symmetry::Transpose => Vertex::new(v.col, v.row),
            Symmetry::AntiTranspose => Vertex::new(n - 1 - v.col, m - 1 - v.row),
            Symmetry::Rot90 => Vertex::new(v.col, m - 1 - v.row),
            Symmetry::Rot270 => Vertex::new(n - 1 - v.col, v.row),
        }
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}
