use typegraph_core::{Card, Modulus};
use typegraph_hexcharts::census_formulas;
use typegraph_k4graph::{build_g_n4, K4Graph};

use crate::{check_odd, AnalysisError};

/// TMC vertices with color 1 whose two CTs through color 1 hold no other
/// TMC type.
pub fn isolated_in_graph(g: &K4Graph) -> Vec<Card> {
    let mut out: Vec<Card> = (0..g.len())
        .filter(|&i| g.is_tmc(i) && g.vertices()[i].colors().contains(&1))
        .filter(|&i| {
            let v = g.vertices()[i];
            g.cts(i).iter().filter(|t| t.quadruple.contains(&1)).all(|t| {
                t.distinct_members().iter().all(|m| *m == v || !m.is_tmc())
            })
        })
        .map(|i| g.vertices()[i])
        .collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    pub name: String,
    pub card: Card,
    /// Canonical form when the reduced card is a TMC vertex.
    pub vertex: Option<Card>,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: u32,
    pub graph: Vec<Card>,
    pub chart: Vec<Card>,
    pub formulas: Vec<FormulaCheck>,
    pub warnings: Vec<String>,
}

impl CensusReport {
    pub fn routes_agree(&self) -> bool {
        self.graph == self.chart
    }
}

/// Isolated vertices of the TMC 1-atlas, found in `G_{n,4}` and in the
/// chart, with the closed forms checked against them.
pub fn isolated_census(n: u32) -> Result<CensusReport, AnalysisError> {
    check_odd(n, 13)?;
    let modulus = Modulus::cyclic(n)?;
    let graph = isolated_in_graph(&build_g_n4(n)?);
    let chart = typegraph_hexcharts::isolated_census(n)?;
    let mut warnings = Vec::new();
    if graph != chart {
        warnings.push(format!(
            "WARN n={n}: graph route {} differs from chart route {}",
            list(&graph),
            list(&chart)
        ));
    }
    let formulas: Vec<FormulaCheck> = census_formulas(n)
        .into_iter()
        .map(|(name, card)| {
            let vertex = (card.is_vertex(modulus) && card.is_tmc()).then(|| card.canonical());
            let found = vertex.is_some_and(|v| graph.contains(&v));
            FormulaCheck { name, card, vertex, found }
        })
        .collect();
    for f in formulas.iter().filter(|f| !f.found) {
        let why = if f.vertex.is_some() { "is not isolated" } else { "is not a TMC vertex" };
        warnings.push(format!("WARN n={n}: {} = {} {why}", f.name, f.card));
    }
    let explained: Vec<Card> = formulas.iter().filter_map(|f| f.vertex).collect();
    for c in graph.iter().filter(|c| !explained.contains(c)) {
        warnings.push(format!("WARN n={n}: isolated vertex {c} matches no closed form"));
    }
    Ok(CensusReport { n, graph, chart, formulas, warnings })
}

fn list(cards: &[Card]) -> String {
    let names: Vec<String> = cards.iter().map(Card::to_string).collect();
    format!("{{{}}}", names.join(","))
}
