//! Reading and writing pebble distributions: a JSON form and a plain
//! whitespace-separated grid of counts.

use crate::dist::Distribution;
use crate::grid::GridDims;
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::Path;
use thiserror::Error;

/// On-disk JSON shape: explicit dimensions plus a row-major matrix of counts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistributionFile {
    pub rows: usize,
    pub cols: usize,
    pub pebbles: Vec<Vec<u32>>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad dimensions: expected {expected_rows}x{expected_cols}, got row lengths {got:?}")]
    Shape {
        expected_rows: usize,
        expected_cols: usize,
        got: Vec<usize>,
    },
    #[error("empty input")]
    Empty,
    #[error("bad count {0:?}")]
    BadCount(String),
    #[error("ragged grid: row {0} has {1} entries, expected {2}")]
    Ragged(usize, usize, usize),
}

impl DistributionFile {
    pub fn from_distribution(dist: &Distribution) -> Self {
        let dims = dist.dims();
        let pebbles = (0..dims.rows())
            .map(|r| {
                (0..dims.cols())
                    .map(|c| dist.get(crate::grid::Vertex::new(r, c)))
                    .collect()
            })
            .collect();
        DistributionFile {
            rows: dims.rows(),
            cols: dims.cols(),
            pebbles,
        }
    }

    pub fn to_distribution(&self) -> Result<Distribution, IoError> {
        let row_lens: Vec<usize> = self.pebbles.iter().map(|r| r.len()).collect();
        if self.rows == 0
            || self.cols == 0
            || self.pebbles.len() != self.rows
            || row_lens.iter().any(|&l| l != self.cols)
        {
            return Err(IoError::Shape {
                expected_rows: self.rows,
                expected_cols: self.cols,
                got: row_lens,
            });
        }
        let dims = GridDims::new(self.rows, self.cols);
        let counts = self.pebbles.iter().flatten().copied().collect();
        Ok(Distribution::from_counts(dims, counts))
    }
}

/// Parses a distribution from plain text: one line per row, counts separated
/// by whitespace.
pub fn parse_ascii(text: &str) -> Result<Distribution, IoError> {
    let rows: Vec<Vec<u32>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            line.split_whitespace()
                .map(|tok| tok.parse::<u32>().map_err(|_| IoError::BadCount(tok.into())))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if rows.is_empty() {
        return Err(IoError::Empty);
    }
    let cols = rows[0].len();
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(IoError::Ragged(i, r.len(), cols));
        }
    }
    if cols == 0 {
        return Err(IoError::Empty);
    }
    let dims = GridDims::new(rows.len(), cols);
    Ok(Distribution::from_counts(
        dims,
        rows.into_iter().flatten().collect(),
    ))
}

/// Renders a distribution as the plain-text grid accepted by `parse_ascii`.
pub fn format_ascii(dist: &Distribution) -> String {
    let dims = dist.dims();
    let mut out = String::new();
    for r in 0..dims.rows() {
        for c in 0..dims.cols() {
            if c > 0 {
                out.push(' ');
            }
            out.push_str(&dist.get(crate::grid::Vertex::new(r, c)).to_string());
        }
        out.push('\n');
    }
    out
}

/// Loads a distribution from a path, `-` meaning stdin. JSON when the text
/// parses as the JSON shape, plain grid otherwise.
pub fn load_distribution(path: &str) -> Result<Distribution, IoError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(Path::new(path))?
    };
    parse_distribution_text(&text)
}

/// JSON first, then the plain grid form.
pub fn parse_distribution_text(text: &str) -> Result<Distribution, IoError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let file: DistributionFile = serde_json::from_str(text)?;
        file.to_distribution()
    } else {
        parse_ascii(text)
    }
}
