//! Certificate reports: a self-contained, re-checkable record of the region
//! decomposition and potential bookkeeping for one hemmed distribution.
//!
//! Fields ending in `_approx` are f64 renderings for human consumption only;
//! every comparison in the report is carried out on the exact `p/q` strings.

use crate::dist::Distribution;
use crate::engine::{is_k_reachable, is_solvable, MoveRule};
use crate::grid::Vertex;
use crate::io::DistributionFile;
use crate::potential::{hem, region_average, value, ValueMap};
use crate::rat::{approx, fmt_rat, int, rat, Rat};
use crate::regions::{decompose, region_frontier, RegionError};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionRecord {
    /// Number of 2-reachable core vertices.
    pub k: usize,
    /// Number of member vertices (core plus neighbours).
    pub n: usize,
    pub core: Vec<Vertex>,
    pub members: Vec<Vertex>,
    pub frontier: Vec<Vertex>,
    /// Exact average value over the members.
    pub average: String,
    pub average_approx: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    /// SHA-256 of the canonical JSON form of the input distribution.
    pub input_digest: String,
    pub rows: usize,
    pub cols: usize,
    pub solvable: bool,
    pub total: u64,
    pub hemmed_total: u64,
    pub regions: Vec<RegionRecord>,
    /// Exact sum of hemmed values over all vertices.
    pub sum_value: String,
    pub sum_value_approx: f64,
    /// 9 times the hemmed total — the upper bound the sum must respect.
    pub nine_hemmed_total: String,
    pub sum_value_within_bound: bool,
    /// Exact minimum hemmed value, and whether it clears 4/3.
    pub min_value: String,
    pub min_value_at_least_four_thirds: bool,
    pub boundary_two_reachable: bool,
    /// With two or more regions, whether every region average clears
    /// 5092/3177; absent for single-region instances.
    pub multi_region_bound: Option<bool>,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("distribution is not solvable")]
    Unsolvable,
    #[error("region decomposition failed: {0}")]
    Region(#[from] RegionError),
    #[error("report does not match a recomputation: {0}")]
    Mismatch(String),
}

/// Digest of the canonical JSON form, stable across count-preserving
/// re-serializations of the same distribution.
pub fn input_digest(dist: &Distribution) -> String {
    let file = DistributionFile::from_distribution(dist);
    let json = serde_json::to_string(&file).expect("serializable");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    format!("{:x}", hasher.finalize())
}

/// Builds the full certificate for a solvable distribution: hems it,
/// decomposes the hemmed distribution, and records every quantity with its
/// exact value.
pub fn build_certificate(dist: &Distribution) -> Result<CertificateReport, ReportError> {
    if !is_solvable(dist, MoveRule::CLASSIC) {
        return Err(ReportError::Unsolvable);
    }
    let dims = dist.dims();
    let hemmed = hem(dist);
    let partition = decompose(&hemmed)?;
    let vm = ValueMap::compute(&hemmed);

    let regions: Vec<RegionRecord> = partition
        .regions
        .iter()
        .enumerate()
        .map(|(i, region)| {
            let avg = region_average(&hemmed, region);
            RegionRecord {
                k: region.k(),
                n: region.size(),
                core: region.core().iter().copied().collect(),
                members: region.members().iter().copied().collect(),
                frontier: region_frontier(&partition, i).into_iter().collect(),
                average: fmt_rat(&avg),
                average_approx: approx(&avg),
            }
        })
        .collect();

    let sum_value: Rat = dims.vertices().map(|x| value(&hemmed, x)).sum();
    let nine = int(9) * int(hemmed.total() as i64);
    let min_value = vm.min().clone();
    let boundary_two_reachable = dims
        .boundary()
        .into_iter()
        .all(|b| is_k_reachable(&hemmed, MoveRule::CLASSIC, b, 2));
    let multi_region_bound = if regions.len() >= 2 {
        Some(
            partition
                .regions
                .iter()
                .all(|r| region_average(&hemmed, r) >= rat(5092, 3177)),
        )
    } else {
        None
    };

    Ok(CertificateReport {
        input_digest: input_digest(dist),
        rows: dims.rows(),
        cols: dims.cols(),
        solvable: true,
        total: dist.total(),
        hemmed_total: hemmed.total(),
        regions,
        sum_value: fmt_rat(&sum_value),
        sum_value_approx: approx(&sum_value),
        nine_hemmed_total: fmt_rat(&nine),
        sum_value_within_bound: sum_value <= nine,
        min_value: fmt_rat(&min_value),
        min_value_at_least_four_thirds: min_value >= rat(4, 3),
        boundary_two_reachable,
        multi_region_bound,
    })
}

/// Recomputes the certificate from the distribution and compares bit-exactly.
pub fn verify_certificate(
    dist: &Distribution,
    report: &CertificateReport,
) -> Result<(), ReportError> {
    let fresh = build_certificate(dist)?;
    if &fresh == report {
        Ok(())
    } else {
        // name the first differing field for the error message
        let field = if fresh.input_digest != report.input_digest {
            "input_digest"
        } else if fresh.regions != report.regions {
            "regions"
        } else if fresh.sum_value != report.sum_value {
            "sum_value"
        } else if fresh.min_value != report.min_value {
            "min_value"
        } else {
            "report body"
        };
        Err(ReportError::Mismatch(field.into()))
    }
}
