use rayon::prelude::*;
use serde::Serialize;
use typegraph_k3graph::build_g3;
use typegraph_k4graph::{build_g_n4, tmc_subgraph};

use crate::diameter::{diameter, DiameterMode};
use crate::{check_odd, AnalysisError};

pub fn totient(n: u64) -> u64 {
    let (mut m, mut out, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// One line of the metrics table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricsRow {
    pub n: u32,
    pub v3: usize,
    pub v4: usize,
    pub v6: usize,
    pub tmc: usize,
    pub tmc_components: usize,
    pub diameter_lower: u32,
    pub diameter_upper: u32,
    pub phi: u64,
    pub diam_over_n: f64,
    pub diam_over_cuberoot: f64,
    pub v6_ratio: f64,
}

impl MetricsRow {
    /// Vertex ceiling `n φ(n) 2⌊n/2⌋`.
    pub fn vertex_ceiling(&self) -> u64 {
        self.n as u64 * self.phi * 2 * (self.n as u64 / 2)
    }
}

pub fn metrics_row(n: u32, mode: DiameterMode) -> Result<MetricsRow, AnalysisError> {
    check_odd(n, 7)?;
    let g3 = build_g3(n)?;
    let g = build_g_n4(n)?;
    let adj = g.adjacency();
    let d = diameter(&adj, mode)?;
    let tmc = tmc_subgraph(&g);
    let v6 = adj.iter().filter(|a| a.len() == 6).count();
    let v4 = g.len();
    Ok(MetricsRow {
        n,
        v3: g3.main.len(),
        v4,
        v6,
        tmc: tmc.len(),
        tmc_components: typegraph_core::graph::components(&tmc.adjacency()).len(),
        diameter_lower: d.lower(),
        diameter_upper: d.upper(),
        phi: totient(n as u64),
        diam_over_n: d.lower() as f64 / n as f64,
        diam_over_cuberoot: d.lower() as f64 / (v4 as f64).cbrt(),
        v6_ratio: v6 as f64 / v4 as f64,
    })
}

/// Rows in the order of `ns`, computed in parallel.
pub fn metrics(ns: &[u32], mode: DiameterMode) -> Result<Vec<MetricsRow>, AnalysisError> {
    ns.par_iter().map(|&n| metrics_row(n, mode)).collect()
}

pub fn rows_to_csv<T: Serialize>(rows: &[T]) -> Result<String, AnalysisError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| AnalysisError::Csv(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| AnalysisError::Csv(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| AnalysisError::Csv(e.to_string()))
}
