//! Planar pictures of the type graphs: CTs as lattice triangles, charts
//! of kagome sites, canonical hexagons, symmetry axes and their folds,
//! atlases MOD `n`, and SVG output.

mod atlas;
mod chart;
mod ct;
pub mod lattice;
mod render;
mod symmetry;
mod trace;

pub use atlas::{census_formulas, isolated_census, triangle_corners, Atlas, Corner, CornerReport, TauCell};
pub use chart::{build_chart, chart_from_card, dual_chart_check, line_path, partner_vertex, Chart, ChartParams, DualReport, Partner, SiteInfo};
pub use ct::{ct_edge_color, ColoredCt, PlacedCt};
pub use render::{chart_json, render_chart, render_tau};
pub use symmetry::{detect_sas, fold, mirrors_through, FixedPoint, Fold, Mirror, PartialCt, SaKind};
pub use trace::{anchor_perm, trace_hexagon, Variant};

use thiserror::Error;
use typegraph_core::CoreError;
use typegraph_k4graph::K4Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HexError {
    #[error("nu({a},{h}) and nu({f},{g}) do not meet")]
    EmptyIntersection { a: u32, f: u32, g: u32, h: u32 },
    #[error("nu({a},{h}) and nu({f},{g}) meet in {options:?}")]
    AmbiguousEdge { a: u32, f: u32, g: u32, h: u32, options: Vec<u32> },
    #[error("card {0} is not valid")]
    InvalidCard(String),
    #[error("trace step from {card} has options {options:?}")]
    TraceStep { card: String, options: Vec<u32> },
    #[error("hexagon through {0} does not close after six steps")]
    NotClosed(String),
    #[error("card {card} has no colors {a} and {d} at opposite positions")]
    NotButterfly { card: String, a: u32, d: u32 },
    #[error("card {0} is not realised by four points")]
    Unrealizable(String),
    #[error("chart colors disagree at {0}")]
    Inconsistent(String),
    #[error("reflection classes disagree at {0}")]
    InconsistentFold(String),
    #[error("colors {f},{g} neither differ by nor add up to {a}")]
    LinePath { f: u32, g: u32, a: u32 },
    #[error("atlas index {index} is not a unit in 1..=(n-1)/2 for n = {n}")]
    BadAtlas { n: u32, index: u32 },
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    K4(#[from] K4Error),
}
