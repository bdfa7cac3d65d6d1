use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use typegraph_core::{Card, Position};
use typegraph_hexcharts::{trace_hexagon, Variant};
use typegraph_k4graph::{Degeneracy, K4Graph};

/// A degree-6 vertex whose CTs are not three triangles meeting only there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Card,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Theorem1Report {
    pub vertices: usize,
    pub v6: usize,
    pub tmc_v6: usize,
    pub violations: Vec<Violation>,
    /// Number of distinct hexagons through a degree-6 vertex, as a histogram.
    pub hexagons: BTreeMap<usize, usize>,
    /// Traces that stopped on an ambiguous or empty step.
    pub trace_failures: usize,
}

impl Theorem1Report {
    pub fn v6_ratio(&self) -> f64 {
        self.v6 as f64 / self.vertices as f64
    }
}

fn triangle_violation(g: &K4Graph, i: usize) -> Option<String> {
    let v = g.vertices()[i];
    let cts = g.cts(i);
    if cts.len() != 3 {
        return Some(format!("{} CTs", cts.len()));
    }
    if let Some(t) = cts.iter().find(|t| t.degeneracy != Degeneracy::Triangle) {
        return Some(format!("CT {} is {:?}", t.quadruple_string(), t.degeneracy));
    }
    let quads: BTreeSet<[u32; 4]> = cts.iter().map(|t| t.quadruple).collect();
    if quads.len() != 3 {
        return Some("repeated quadruple".into());
    }
    for (k, s) in cts.iter().enumerate() {
        for t in &cts[k + 1..] {
            let a: BTreeSet<Card> = s.distinct_members().into_iter().collect();
            let b: BTreeSet<Card> = t.distinct_members().into_iter().collect();
            let common: Vec<&Card> = a.intersection(&b).collect();
            if common != [&v] {
                return Some(format!("CTs {} and {} meet in {common:?}", s.quadruple_string(), t.quadruple_string()));
            }
        }
    }
    None
}

/// Distinct hexagons over all anchors and both variants, and failed traces.
fn hexagons_through(g: &K4Graph, i: usize) -> (usize, usize) {
    let v = g.vertices()[i];
    let mut seen = BTreeSet::new();
    let mut failures = 0;
    for p in 0..6 {
        let anchor = Position::new(p).unwrap();
        for variant in [Variant::Bdf, Variant::Cde] {
            match trace_hexagon(&v, anchor, variant, g.modulus()) {
                Ok(cycle) => {
                    let mut members: Vec<Card> = cycle.iter().map(Card::canonical).collect();
                    members.sort_unstable();
                    seen.insert(members);
                }
                Err(_) => failures += 1,
            }
        }
    }
    (seen.len(), failures)
}

/// Checks that every degree-6 vertex lies on three CTs with pairwise
/// intersection the vertex, and counts the hexagons through it.
pub fn theorem1_check(g: &K4Graph) -> Theorem1Report {
    let six: Vec<usize> = (0..g.len()).filter(|&i| g.degree(i) == 6).collect();
    let per: Vec<(Option<Violation>, usize, usize)> = six
        .par_iter()
        .map(|&i| {
            let violation =
                triangle_violation(g, i).map(|reason| Violation { vertex: g.vertices()[i], reason });
            let (h, f) = hexagons_through(g, i);
            (violation, h, f)
        })
        .collect();
    let mut hexagons = BTreeMap::new();
    for (_, h, _) in &per {
        *hexagons.entry(*h).or_insert(0) += 1;
    }
    Theorem1Report {
        vertices: g.len(),
        v6: six.len(),
        tmc_v6: six.iter().filter(|&&i| g.is_tmc(i)).count(),
        violations: per.iter().filter_map(|p| p.0.clone()).collect(),
        hexagons,
        trace_failures: per.iter().map(|p| p.2).sum(),
    }
}
