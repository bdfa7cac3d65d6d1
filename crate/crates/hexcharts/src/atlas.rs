use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use typegraph_core::{format_colors, Card, Modulus, Triple};

use crate::chart::{Chart, ChartParams};
use crate::ct::others;
use crate::lattice::{Face, Site, Vertex, DIRS};
use crate::symmetry::{detect_sas, mirrors_through};
use crate::HexError;

/// The `i`-atlas MOD `n`: the chart centered at `i` with all offsets zero,
/// which is the chart centered at 1 with every color scaled by `i`.
#[derive(Clone, Debug)]
pub struct Atlas {
    pub n: u32,
    pub index: u32,
    pub chart: Chart,
}

/// One site of the triangle `T(n,1)` in the hexagonal representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauCell {
    pub site: Site,
    /// The color opposite the center when the site is TMC.
    pub label: Option<u32>,
    /// The pairs completing the two CTs through the center color.
    pub heading: [(u32, u32); 2],
    pub isolated: bool,
}

impl Atlas {
    pub fn new(n: u32, index: u32, radius: Option<i64>) -> Result<Atlas, HexError> {
        let modulus = Modulus::cyclic(n)?;
        if index == 0 || index > (n - 1) / 2 || index.gcd(&n) != 1 {
            return Err(HexError::BadAtlas { n, index });
        }
        let params = ChartParams::new(index, 0, 0, modulus);
        let chart = Chart::from_params(params, radius.unwrap_or(n as i64))?;
        Ok(Atlas { n, index, chart })
    }

    pub fn modulus(&self) -> Modulus {
        self.chart.modulus()
    }

    /// Types of one period of the lattice.
    pub fn types(&self) -> BTreeSet<Card> {
        period_sites(self.n).map(|s| self.chart.params.site_card(s).canonical()).collect()
    }

    /// TMC sites of the window.
    pub fn sigma(&self) -> Vec<(Site, Card)> {
        self.chart.complete_sites().filter(|(_, c)| c.is_tmc()).collect()
    }

    /// Sites in the triangle `0 <= r <= q, 2q + r <= n`.
    pub fn tau(&self) -> Vec<TauCell> {
        let n = self.n as i64;
        self.chart
            .complete_sites()
            .filter(|(s, _)| {
                let (x, y) = s.doubled();
                0 <= y && y <= x && 2 * x + y <= 2 * n
            })
            .map(|(site, card)| {
                let c = card.colors();
                let tmc = card.is_tmc();
                TauCell {
                    site,
                    label: tmc.then_some(c[3]),
                    heading: [(c[1], c[2]), (c[4], c[5])],
                    isolated: tmc && self.lonely(site, &card),
                }
            })
            .collect()
    }

    fn lonely(&self, site: Site, card: &Card) -> bool {
        let own = card.canonical();
        self.chart.kagome_neighbors(site).iter().all(|(s, _)| {
            let c = self.chart.params.site_card(*s);
            !c.is_tmc() || c.canonical() == own
        })
    }
}

fn period_sites(n: u32) -> impl Iterator<Item = Site> {
    let n = n as i64;
    (0..n).flat_map(move |q| (0..n).flat_map(move |r| DIRS.map(|d| Site::new(d, q, r))))
}

/// TMC types of the 1-atlas with no TMC neighbor of another type.
pub fn isolated_census(n: u32) -> Result<Vec<Card>, HexError> {
    let params = ChartParams::new(1, 0, 0, Modulus::cyclic(n)?);
    let mut neighbors: BTreeMap<Card, bool> = BTreeMap::new();
    for site in period_sites(n) {
        let card = params.site_card(site);
        if !card.is_tmc() {
            continue;
        }
        let own = card.canonical();
        let (up, down) = site.faces();
        let (i, j) = others(site.dir);
        let social = [up, down].iter().flat_map(|f| [f.sides()[i], f.sides()[j]]).any(|s| {
            let c = params.site_card(s);
            c.is_tmc() && c.canonical() != own
        });
        *neighbors.entry(own).or_insert(false) |= social;
    }
    Ok(neighbors.into_iter().filter(|(_, social)| !social).map(|(c, _)| c).collect())
}

/// The closed forms for the isolated vertices, with `k = (n-1)/2`. For
/// `n ≡ 0 mod 3` the third form is listed with `k` and with `m = n/3`.
pub fn census_formulas(n: u32) -> Vec<(String, Card)> {
    let k = (n - 1) / 2;
    let mut out = vec![
        ("134265".to_string(), Card([1, 3, 4, 2, 6, 5])),
        ("123k(k-2)(k-1)".to_string(), Card([1, 2, 3, k, k - 2, k - 1]).reduce(n)),
    ];
    if n % 3 == 0 {
        out.push(("1(k-2)(k-1)k(k+1)(k+2)".to_string(), Card([1, k - 2, k - 1, k, k + 1, k + 2]).reduce(n)));
        let m = n / 3;
        out.push(("1(m-2)(m-1)m(m+1)(m+2), m=n/3".to_string(), Card([1, m - 2, m - 1, m, m + 1, m + 2]).reduce(n)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corner {
    Hexagon { vertex: Vertex, center: u32, kind: Triple },
    Site { site: Site, card: Card },
    Ct { face: Face, quadruple: [u32; 4] },
}

impl Corner {
    pub fn describe(&self) -> String {
        match self {
            Corner::Hexagon { center, kind, .. } => format!("CH {center}.{kind}"),
            Corner::Site { card, .. } => format!("vertex {card}"),
            Corner::Ct { quadruple, .. } => format!("CT {}", format_colors(quadruple)),
        }
    }
}

/// Geometry of the fundamental triangle `T(n,1)` of the 1-atlas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerReport {
    pub n: u32,
    /// Corners at 30°, 90° and 60°, with the number of axes through each.
    pub corners: [(Corner, usize); 3],
    /// The 60° corner predicted by `1hhh`, `h = (n-5)/2`.
    pub predicted: String,
    pub predicted_matches: bool,
    /// Edge colors of the kagome line through the 90° corner.
    pub path_colors: Vec<u32>,
}

pub fn triangle_corners(n: u32) -> Result<CornerReport, HexError> {
    if n < 13 || n % 2 == 0 {
        return Err(HexError::Precondition(format!("n = {n} must be odd and at least 13")));
    }
    let atlas = Atlas::new(n, 1, None)?;
    let chart = &atlas.chart;
    let mirrors = detect_sas(chart);
    let origin = Vertex::new(0, 0);
    let k = (n as i64 - 1) / 2;
    let right = Site::new(0, k, 0);
    let sixty = match n % 3 {
        0 => {
            let v = Vertex::new(n as i64 / 3, n as i64 / 3);
            Corner::Hexagon { vertex: v, center: 1, kind: chart.hexagon_type(v) }
        }
        1 => {
            let h = (n as i64 - 1) / 3;
            ct_corner(chart, Face::up(h, h))
        }
        _ => {
            let h = (n as i64 + 1) / 3;
            ct_corner(chart, Face::down(h - 1, h - 1))
        }
    };
    let sixty_point = match &sixty {
        Corner::Hexagon { vertex, .. } => vertex.sixfold(),
        Corner::Ct { face, .. } => face.sixfold(),
        Corner::Site { site, .. } => site.sixfold(),
    };
    let corners = [
        (
            Corner::Hexagon { vertex: origin, center: 1, kind: chart.hexagon_type(origin) },
            mirrors_through(&mirrors, origin.sixfold()).len(),
        ),
        (
            Corner::Site { site: right, card: chart.card(right).unwrap().canonical() },
            mirrors_through(&mirrors, right.sixfold()).len(),
        ),
        (sixty, mirrors_through(&mirrors, sixty_point).len()),
    ];
    let h = (n - 5) / 2;
    let predicted = format!("CT {}", format_colors(&[1, h, h, h]));
    let predicted_matches = corners[2].0.describe() == predicted;
    Ok(CornerReport { n, corners, predicted, predicted_matches, path_colors: chart.kagome_line(1, k) })
}

fn ct_corner(chart: &Chart, face: Face) -> Corner {
    Corner::Ct { face, quadruple: chart.faces[&face].quadruple(chart.modulus()) }
}
