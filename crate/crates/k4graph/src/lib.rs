//! Neighbor generation between K4-types, canonical triangles, windows of
//! the integer type-graph, the graphs `G_{n,4}`, and reduction MOD `n`.

mod ct;
mod graph;
mod neighbor;
mod reduce;

pub use ct::{ct_quadruple_valid, cts_of, CanonicalTriangle, Degeneracy};
pub use graph::{build_g_n4, g4_window, tmc_subgraph, K4Graph, Slot, TypeEdge};
pub use neighbor::{h_candidates, neighbor, swap_for, NeighborOutcome, Which};
pub use reduce::{phi_image, phi_reduce, PhiImage};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum K4Error {
    #[error("card {0} is not a valid card")]
    InvalidCard(String),
    #[error("card {card} admits several new colors {options:?} at position {position}")]
    Ambiguous { card: String, position: char, options: Vec<u32> },
    #[error("n = {0} must be odd and at least 5")]
    BadOrder(u32),
    #[error("reduction {0} of the card is not face-valid")]
    FaceInvalid(String),
}
