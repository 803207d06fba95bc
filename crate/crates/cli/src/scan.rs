//! Grid driver: certifies every admissible `(d, s, k)` up to the given
//! bounds, in parallel, and assembles an order-independent report.

use std::time::Instant;

use perfdel_core::{CertStatus, Error, PerfectionStatus, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{certify, CertifyRequest, Family};

pub const D_MIN: usize = 5;
pub const S_MIN: usize = 1;
pub const K_MIN: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub d_min: usize,
    pub d_max: usize,
    pub s_min: usize,
    pub s_max: usize,
    pub k_min: usize,
    pub k_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Certified,
    Failed,
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub d: usize,
    pub s: usize,
    pub k: usize,
    pub n: i64,
    /// `d ≥ k(2s+1)+1`, where the closed-form family is claimed.
    pub in_regime: bool,
    pub status: CellStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delaunay_status: Option<CertStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perfection_status: Option<PerfectionStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_margin: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_status: Option<CertStatus>,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub cells: usize,
    pub certified: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
    pub in_regime: usize,
    pub in_regime_certified: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub grid: GridSpec,
    pub oracle: bool,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn all_in_regime_certified(&self) -> bool {
        self.summary.in_regime == self.summary.in_regime_certified
    }
}

pub fn in_regime(d: usize, s: usize, k: usize) -> bool {
    d > k * (2 * s + 1)
}

fn run_cell(d: usize, s: usize, k: usize, oracle: bool, node_budget: u64) -> ScanRecord {
    let n = d as i64 - 2 * k as i64;
    let mut rec = ScanRecord {
        d,
        s,
        k,
        n,
        in_regime: in_regime(d, s, k),
        status: CellStatus::Skipped,
        reason: None,
        vertex_count: None,
        delaunay_status: None,
        perfection_status: None,
        min_margin: None,
        oracle_status: None,
        runtime_ms: 0,
    };
    if n < 1 {
        rec.reason = Some("n<1".into());
        return rec;
    }
    if s + 1 > d {
        rec.reason = Some("s+1>d".into());
        return rec;
    }
    let start = Instant::now();
    let req = CertifyRequest {
        family: Family::P,
        d,
        s,
        k,
        oracle,
        node_budget,
    };
    match certify(&req) {
        Ok(doc) => {
            rec.status = if doc.is_certified() {
                CellStatus::Certified
            } else {
                CellStatus::Failed
            };
            rec.vertex_count = Some(doc.vertex_count);
            rec.delaunay_status = Some(doc.delaunay.status);
            rec.perfection_status = Some(doc.perfection.status);
            rec.min_margin = doc.delaunay.min_margin.clone();
            rec.oracle_status = doc.oracle.as_ref().map(|o| {
                if o.is_certified() {
                    CertStatus::Certified
                } else {
                    CertStatus::Failed
                }
            });
        }
        Err(e) => {
            rec.status = CellStatus::Error;
            rec.reason = Some(e.to_string());
        }
    }
    rec.runtime_ms = start.elapsed().as_millis() as u64;
    rec
}

pub fn scan(grid: &GridSpec, oracle: bool, node_budget: u64, jobs: Option<usize>) -> Result<ScanReport, Error> {
    let cells: Vec<(usize, usize, usize)> = (grid.d_min..=grid.d_max)
        .flat_map(|d| (grid.s_min..=grid.s_max).flat_map(move |s| (grid.k_min..=grid.k_max).map(move |k| (d, s, k))))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
    let mut records: Vec<ScanRecord> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(d, s, k)| run_cell(d, s, k, oracle, node_budget))
            .collect()
    });
    records.sort_by_key(|r| (r.d, r.s, r.k));
    let mut summary = ScanSummary {
        cells: records.len(),
        ..ScanSummary::default()
    };
    for r in &records {
        match r.status {
            CellStatus::Certified => summary.certified += 1,
            CellStatus::Failed => summary.failed += 1,
            CellStatus::Skipped => summary.skipped += 1,
            CellStatus::Error => summary.errors += 1,
        }
        if r.in_regime && r.status != CellStatus::Skipped {
            summary.in_regime += 1;
            if r.status == CellStatus::Certified {
                summary.in_regime_certified += 1;
            }
        }
    }
    Ok(ScanReport {
        grid: grid.clone(),
        oracle,
        records,
        summary,
    })
}
