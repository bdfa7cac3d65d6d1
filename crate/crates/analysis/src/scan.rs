use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use typegraph_core::graph::{bfs, components, UNREACHED};
use typegraph_core::Card;
use typegraph_k4graph::{build_g_n4, phi_reduce, tmc_subgraph};

use crate::diameter::{diameter, Diameter, DiameterMode};
use crate::{check_odd, AnalysisError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Shape {
    Isolated,
    Triangle,
    Other { vertices: usize, edges: usize },
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Isolated => write!(f, "isolated"),
            Shape::Triangle => write!(f, "triangle"),
            Shape::Other { vertices, edges } => write!(f, "{vertices}v/{edges}e"),
        }
    }
}

pub fn component_shapes(adj: &[Vec<usize>]) -> Vec<Shape> {
    components(adj)
        .into_iter()
        .map(|c| {
            let edges = c.iter().map(|&v| adj[v].iter().filter(|&&w| w != v).count()).sum::<usize>() / 2;
            match (c.len(), edges) {
                (1, _) => Shape::Isolated,
                (3, 3) => Shape::Triangle,
                (vertices, edges) => Shape::Other { vertices, edges },
            }
        })
        .collect()
}

/// Per-`n` verdict on the connectivity of the TMC subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub n: u32,
    pub vertices: usize,
    pub connected: bool,
    pub shapes: Vec<Shape>,
    /// Component size to number of components.
    pub histogram: BTreeMap<usize, usize>,
}

pub fn conjecture_scan(ns: &[u32]) -> Result<Vec<Verdict>, AnalysisError> {
    ns.par_iter()
        .map(|&n| {
            check_odd(n, 5)?;
            let tmc = tmc_subgraph(&build_g_n4(n)?);
            let adj = tmc.adjacency();
            let mut histogram = BTreeMap::new();
            for c in components(&adj) {
                *histogram.entry(c.len()).or_insert(0) += 1;
            }
            let shapes = component_shapes(&adj);
            Ok(Verdict { n, vertices: tmc.len(), connected: shapes.len() == 1, shapes, histogram })
        })
        .collect()
}

/// Component counts of `G_{n,4}`.
pub fn connectivity(ns: &[u32]) -> Result<Vec<(u32, usize)>, AnalysisError> {
    ns.par_iter()
        .map(|&n| {
            check_odd(n, 5)?;
            Ok((n, components(&build_g_n4(n)?.adjacency()).len()))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingRow {
    pub n: u32,
    pub vertices: usize,
    pub diameter: Diameter,
    /// Eccentricity of `011011`, with a type attaining it.
    pub base_eccentricity: u32,
    pub farthest: Card,
    /// `112(n-1)nn` reduced entrywise.
    pub witness: Card,
    /// Distance from `011011` when the reduced witness is a vertex.
    pub witness_distance: Option<u32>,
}

impl ScalingRow {
    pub fn over_n(&self) -> f64 {
        self.diameter.lower() as f64 / self.n as f64
    }

    pub fn over_cuberoot(&self) -> f64 {
        self.diameter.lower() as f64 / (self.vertices as f64).cbrt()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingTable {
    pub rows: Vec<ScalingRow>,
    /// Least `diam / n`.
    pub c1: f64,
    /// Greatest `diam / |V|^{1/3}`.
    pub c2: f64,
    /// Greatest over least `diam / n`.
    pub band: f64,
}

fn scaling_row(n: u32, mode: DiameterMode) -> Result<ScalingRow, AnalysisError> {
    check_odd(n, 7)?;
    let g = build_g_n4(n)?;
    let adj = g.adjacency();
    let d = diameter(&adj, mode)?;
    let base = g.index_of(&Card([0, 1, 1, 0, 1, 1])).ok_or(AnalysisError::Empty)?;
    let dist = bfs(&adj, base);
    let (far, ecc) = dist
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != UNREACHED)
        .fold((base, 0), |best, (i, &x)| if x > best.1 { (i, x) } else { best });
    let witness = Card([1, 1, 2, n - 1, n, n]).reduce(n);
    let witness_distance = phi_reduce(&Card([1, 1, 2, n - 1, n, n]), n)
        .ok()
        .and_then(|c| g.index_of(&c))
        .map(|i| dist[i]);
    Ok(ScalingRow {
        n,
        vertices: g.len(),
        diameter: d,
        base_eccentricity: ecc,
        farthest: g.vertices()[far],
        witness,
        witness_distance,
    })
}

pub fn diameter_scaling(ns: &[u32], mode: DiameterMode) -> Result<ScalingTable, AnalysisError> {
    let rows: Vec<ScalingRow> = ns.par_iter().map(|&n| scaling_row(n, mode)).collect::<Result<_, _>>()?;
    let over_n: Vec<f64> = rows.iter().map(ScalingRow::over_n).collect();
    let c1 = over_n.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = over_n.iter().copied().fold(0.0, f64::max);
    let c2 = rows.iter().map(ScalingRow::over_cuberoot).fold(0.0, f64::max);
    Ok(ScalingTable { rows, c1, c2, band: hi / c1 })
}
