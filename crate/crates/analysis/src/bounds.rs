use std::collections::BTreeSet;

use rayon::prelude::*;
use typegraph_core::Card;
use typegraph_hexcharts::Atlas;
use typegraph_k3graph::build_g3;
use typegraph_k4graph::build_g_n4;

use crate::metrics::{totient, MetricsRow};
use crate::{check_odd, loglog_slope, AnalysisError};

/// Vertex ceiling and diameter bands over a metrics table.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    /// Orders where `|V(G_{n,4})|` exceeds `n φ(n) 2⌊n/2⌋`.
    pub ceiling_violations: Vec<u32>,
    /// Least and greatest `diam / n`.
    pub over_n: (f64, f64),
    /// Least and greatest `diam / |V|^{1/3}`.
    pub over_cuberoot: (f64, f64),
}

impl BoundsReport {
    pub fn over_n_band(&self) -> f64 {
        self.over_n.1 / self.over_n.0
    }

    pub fn over_cuberoot_band(&self) -> f64 {
        self.over_cuberoot.1 / self.over_cuberoot.0
    }
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, 0.0), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

pub fn check_bounds(rows: &[MetricsRow]) -> BoundsReport {
    BoundsReport {
        ceiling_violations: rows.iter().filter(|r| r.v4 as u64 > r.vertex_ceiling()).map(|r| r.n).collect(),
        over_n: range(rows.iter().map(|r| r.diam_over_n)),
        over_cuberoot: range(rows.iter().map(|r| r.diam_over_cuberoot)),
    }
}

/// Fitted constants for `G_{n,3}`.
#[derive(Clone, Debug, PartialEq)]
pub struct G3Fit {
    /// `(n, |V|, diameter)`.
    pub rows: Vec<(u32, usize, u32)>,
    /// Least and greatest `|V| / (n φ(n))`; the greatest is the fitted `C`.
    pub size_ratio: (f64, f64),
    /// Least `diam / n` over graphs with more than one vertex.
    pub c_lower: f64,
    /// Greatest `diam / |V|^{1/2}`.
    pub c_upper: f64,
}

pub fn g3_fit(ns: &[u32]) -> Result<G3Fit, AnalysisError> {
    let rows: Vec<(u32, usize, u32)> = ns
        .par_iter()
        .map(|&n| {
            let g = build_g3(n)?;
            Ok((n, g.main.len(), g.main.diameter()?))
        })
        .collect::<Result<_, AnalysisError>>()?;
    let size_ratio = range(rows.iter().map(|&(n, v, _)| v as f64 / (n as f64 * totient(n as u64) as f64)));
    let c_lower = range(rows.iter().filter(|r| r.1 > 1).map(|&(n, _, d)| d as f64 / n as f64)).0;
    let c_upper = range(rows.iter().map(|&(_, v, d)| d as f64 / (v as f64).sqrt())).1;
    Ok(G3Fit { rows, size_ratio, c_lower, c_upper })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowRow {
    pub n: u32,
    pub vertices: usize,
    /// TMC types met by each atlas `i = 1..=(n-1)/2`.
    pub chart_counts: Vec<usize>,
    /// All types met by the 1-atlas.
    pub all_types: usize,
    /// Every atlas is the 1-atlas scaled by its index.
    pub scaled: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShadowReport {
    pub rows: Vec<ShadowRow>,
    /// Log-log slope of the TMC chart count against `|V(G_{n,4})|`.
    pub slope: Option<f64>,
    /// The same slope for all types of the chart.
    pub all_types_slope: Option<f64>,
}

pub fn atlas_shadow(primes: &[u32]) -> Result<ShadowReport, AnalysisError> {
    let rows: Vec<ShadowRow> = primes
        .par_iter()
        .map(|&n| {
            check_odd(n, 5)?;
            let vertices = build_g_n4(n)?.len();
            let base = Atlas::new(n, 1, Some(1))?.types();
            let mut chart_counts = Vec::new();
            let mut scaled = true;
            for i in 1..=(n - 1) / 2 {
                let types = Atlas::new(n, i, Some(1))?.types();
                let image: BTreeSet<Card> = base.iter().map(|c| c.scale(i, n).canonical()).collect();
                scaled &= image == types;
                chart_counts.push(types.iter().filter(|c| c.is_tmc()).count());
            }
            Ok(ShadowRow { n, vertices, chart_counts, all_types: base.len(), scaled })
        })
        .collect::<Result<_, AnalysisError>>()?;
    let fit = |count: fn(&ShadowRow) -> usize| {
        let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.vertices as f64, count(r) as f64)).collect();
        loglog_slope(&points)
    };
    Ok(ShadowReport { slope: fit(|r| r.chart_counts[0]), all_types_slope: fit(|r| r.all_types), rows })
}
