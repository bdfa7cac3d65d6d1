use std::fmt;

use rayon::prelude::*;
use typegraph_core::graph::{bfs, components, UNREACHED};

use crate::AnalysisError;

/// Largest order for which `Auto` runs all-sources BFS.
pub const EXACT_LIMIT: usize = 500_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterMode {
    Exact,
    Bounds,
    /// Exact up to [`EXACT_LIMIT`] vertices.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Exact(u32),
    Bounds { lower: u32, upper: u32 },
}

impl Diameter {
    pub fn lower(self) -> u32 {
        match self {
            Diameter::Exact(d) => d,
            Diameter::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(self) -> u32 {
        match self {
            Diameter::Exact(d) => d,
            Diameter::Bounds { upper, .. } => upper,
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            Diameter::Exact(d) => Some(d),
            Diameter::Bounds { .. } => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Exact(d) => write!(f, "{d}"),
            Diameter::Bounds { lower, upper } => write!(f, "[{lower},{upper}]"),
        }
    }
}

fn farthest(dist: &[u32]) -> (usize, u32) {
    dist.iter()
        .enumerate()
        .filter(|(_, &d)| d != UNREACHED)
        .fold((0, 0), |best, (i, &d)| if d > best.1 { (i, d) } else { best })
}

fn double_sweep(adj: &[Vec<usize>]) -> (u32, u32) {
    let (mut lower, mut upper) = (0, u32::MAX);
    let starts = [0, adj.len() / 3, 2 * adj.len() / 3];
    for &s in &starts {
        let (a, _) = farthest(&bfs(adj, s));
        let from_a = bfs(adj, a);
        let (b, d) = farthest(&from_a);
        lower = lower.max(d);
        // walk back from b to the middle of a shortest a-b path
        let mut mid = b;
        while from_a[mid] > d / 2 {
            mid = *adj[mid].iter().find(|&&w| from_a[w] + 1 == from_a[mid]).unwrap();
        }
        upper = upper.min(2 * farthest(&bfs(adj, mid)).1);
    }
    (lower, upper)
}

pub fn diameter(adj: &[Vec<usize>], mode: DiameterMode) -> Result<Diameter, AnalysisError> {
    if adj.is_empty() {
        return Err(AnalysisError::Empty);
    }
    let parts = components(adj).len();
    if parts > 1 {
        return Err(AnalysisError::Disconnected(parts));
    }
    let exact = match mode {
        DiameterMode::Exact => true,
        DiameterMode::Bounds => false,
        DiameterMode::Auto => adj.len() <= EXACT_LIMIT,
    };
    if exact {
        let d = (0..adj.len()).into_par_iter().map(|s| farthest(&bfs(adj, s)).1).max().unwrap_or(0);
        return Ok(Diameter::Exact(d));
    }
    let (lower, upper) = double_sweep(adj);
    Ok(if lower == upper { Diameter::Exact(lower) } else { Diameter::Bounds { lower, upper } })
}
