//! Measurements over the type graphs: connectivity, diameters, the
//! degree-6 triangle structure, isolated TMC vertices and bound fits.

mod bounds;
mod census;
mod diameter;
mod metrics;
mod scan;
mod theorem1;

pub use bounds::{atlas_shadow, check_bounds, g3_fit, BoundsReport, G3Fit, ShadowReport, ShadowRow};
pub use census::{isolated_census, isolated_in_graph, CensusReport, FormulaCheck};
pub use diameter::{diameter, Diameter, DiameterMode, EXACT_LIMIT};
pub use metrics::{metrics, metrics_row, rows_to_csv, totient, MetricsRow};
pub use scan::{
    component_shapes, conjecture_scan, connectivity, diameter_scaling, ScalingRow, ScalingTable, Shape, Verdict,
};
pub use theorem1::{theorem1_check, Theorem1Report, Violation};

use thiserror::Error;
use typegraph_core::CoreError;
use typegraph_hexcharts::HexError;
use typegraph_k3graph::K3Error;
use typegraph_k4graph::K4Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has {0} components")]
    Disconnected(usize),
    #[error("n = {0} must be odd and at least {1}")]
    BadOrder(u32, u32),
    #[error("{0}")]
    Csv(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    K3(#[from] K3Error),
    #[error(transparent)]
    K4(#[from] K4Error),
    #[error(transparent)]
    Hex(#[from] HexError),
}

pub(crate) fn check_odd(n: u32, least: u32) -> Result<(), AnalysisError> {
    if n < least || n % 2 == 0 {
        return Err(AnalysisError::BadOrder(n, least));
    }
    Ok(())
}

/// Least-squares slope of `log y` against `log x`.
pub(crate) fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
