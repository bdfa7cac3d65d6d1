use std::collections::{BTreeMap, BTreeSet, VecDeque};

use typegraph_core::{format_colors, k3_less, Card, Modulus, Position, Triple};
use typegraph_k4graph::{neighbor, NeighborOutcome, Which};

use crate::ct::{others, PlacedCt};
use crate::lattice::{Face, Site, Vertex, DIRS};
use crate::HexError;

/// Affine labelling of the lattice lines: the line of direction `k` with
/// index `m` carries `center·m + offset[k]`, where the offsets are
/// `u`, `w` and `u+w`. Colors are the labels' absolute values or
/// reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartParams {
    pub center: u32,
    pub u: i64,
    pub w: i64,
    pub modulus: Modulus,
}

impl ChartParams {
    pub fn new(center: u32, u: i64, w: i64, modulus: Modulus) -> Self {
        ChartParams { center, u, w, modulus }
    }

    pub fn label(&self, dir: usize, line: i64) -> i64 {
        let offset = [self.u, self.w, self.u + self.w][dir];
        self.center as i64 * line + offset
    }

    pub fn color(&self, dir: usize, line: i64) -> u32 {
        self.modulus.color_of(self.label(dir, line))
    }

    pub fn placed(&self, face: Face) -> PlacedCt {
        let sides = face.sides();
        let outer = face.outer_lines();
        PlacedCt {
            face,
            center: self.center,
            sides: DIRS.map(|k| self.label(k, sides[k].line())),
            outer: DIRS.map(|k| self.label(k, outer[k])),
        }
    }

    pub fn site_card(&self, site: Site) -> Card {
        let (up, down) = site.faces();
        site_card(site, &self.placed(up), &self.placed(down), self.modulus)
    }

    /// The canonical hexagon type at a lattice vertex.
    pub fn hexagon_type(&self, v: Vertex) -> Triple {
        Triple::new(DIRS.map(|k| self.color(k, v.line(k))))
    }
}

/// Card of a site from its two CTs: `b,d,f` meet at the site's first end.
pub(crate) fn site_card(site: Site, up: &PlacedCt, down: &PlacedCt, modulus: Modulus) -> Card {
    let k = site.dir;
    let (j1, j2) = others(k);
    let labels = [
        up.center as i64,
        up.sides[j1],
        down.sides[j1],
        up.sides[k],
        up.sides[j2],
        down.sides[j2],
    ];
    Card(labels.map(|x| modulus.color_of(x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SiteInfo {
    pub label: i64,
    pub color: u32,
    /// Present when both incident CTs are in the window.
    pub card: Option<Card>,
}

/// A window of a T-subgraph: placed CTs on every lattice face within
/// `radius` of the origin, and the sites they cover.
#[derive(Clone, Debug)]
pub struct Chart {
    pub params: ChartParams,
    pub radius: i64,
    pub faces: BTreeMap<Face, PlacedCt>,
    pub sites: BTreeMap<Site, SiteInfo>,
}

impl Chart {
    /// Expands from the CT on `up (0,0)` by reflection across sides.
    pub fn from_params(params: ChartParams, radius: i64) -> Result<Chart, HexError> {
        if radius < 1 {
            return Err(HexError::Precondition(format!("radius {radius} must be at least 1")));
        }
        let seed = params.placed(Face::up(0, 0));
        let mut faces = BTreeMap::from([(seed.face, seed)]);
        let mut queue = VecDeque::from([seed]);
        while let Some(ct) = queue.pop_front() {
            for k in DIRS {
                let next = ct.reflect(k);
                if next.face.norm() > radius {
                    continue;
                }
                match faces.get(&next.face) {
                    Some(old) if *old != next => return Err(HexError::Inconsistent(next.face.to_string())),
                    Some(_) => {}
                    None => {
                        faces.insert(next.face, next);
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut sites = BTreeMap::new();
        for ct in faces.values() {
            for (k, site) in ct.face.sides().into_iter().enumerate() {
                let label = ct.sides[k];
                let color = params.modulus.color_of(label);
                let info = sites.entry(site).or_insert(SiteInfo { label, color, card: None });
                if info.label != label {
                    return Err(HexError::Inconsistent(site.to_string()));
                }
            }
        }
        for (site, info) in sites.iter_mut() {
            let (up, down) = site.faces();
            if let (Some(u), Some(d)) = (faces.get(&up), faces.get(&down)) {
                info.card = Some(site_card(*site, u, d, params.modulus));
            }
        }
        Ok(Chart { params, radius, faces, sites })
    }

    pub fn modulus(&self) -> Modulus {
        self.params.modulus
    }

    pub fn center(&self) -> u32 {
        self.params.center
    }

    pub fn card(&self, site: Site) -> Option<Card> {
        self.sites.get(&site).and_then(|s| s.card)
    }

    pub fn complete_sites(&self) -> impl Iterator<Item = (Site, Card)> + '_ {
        self.sites.iter().filter_map(|(s, i)| i.card.map(|c| (*s, c)))
    }

    /// Vertices whose six incident sites all carry cards.
    pub fn hexagons(&self) -> impl Iterator<Item = (Vertex, Triple)> + '_ {
        let r = self.radius - 1;
        (-r..=r)
            .flat_map(move |q| (-r..=r).map(move |s| Vertex::new(q, s)))
            .filter(move |v| v.norm() <= r)
            .filter(move |v| v.ring().iter().all(|s| self.card(*s).is_some()))
            .map(move |v| (v, self.hexagon_type(v)))
    }

    /// Colors of the three lines through `v`, read off the ring sites.
    pub fn hexagon_type(&self, v: Vertex) -> Triple {
        let ring = v.ring();
        Triple::new([ring[0], ring[1], ring[2]].map(|s| self.sites[&s].color))
    }

    /// The least hexagon type other than `000`, by the sum of its two
    /// largest colors, ties broken lexicographically.
    pub fn name_type(&self) -> Option<Triple> {
        let types: BTreeSet<Triple> = self.hexagons().map(|(_, t)| t).filter(|t| t.colors() != [0; 3]).collect();
        types.into_iter().reduce(|best, t| if k3_less(t, best) { t } else { best })
    }

    /// `a(s)`; the folded chart is written `a[s]`.
    pub fn name(&self) -> String {
        match self.name_type() {
            Some(s) => format!("{}({})", self.center(), s),
            None => format!("{}(-)", self.center()),
        }
    }

    /// The existence criterion `c+d <= a` for the name type `bcd`.
    pub fn existence_criterion(&self) -> Option<bool> {
        self.name_type().map(|s| {
            let [_, c, d] = s.colors();
            c + d <= self.center()
        })
    }

    /// The four other sides of the site's CTs with the colors of the
    /// joining kagome edges.
    pub fn kagome_neighbors(&self, site: Site) -> Vec<(Site, u32)> {
        let (up, down) = site.faces();
        let mut out = Vec::new();
        for face in [up, down] {
            if let Some(ct) = self.faces.get(&face) {
                let (i, j) = others(site.dir);
                let sides = face.sides();
                out.push((sides[i], self.modulus().color_of(ct.outer[j])));
                out.push((sides[j], self.modulus().color_of(ct.outer[i])));
            }
        }
        out
    }

    /// Sorted colors of the four kagome edges at a complete site.
    pub fn incident_colors(&self, site: Site) -> Option<[u32; 4]> {
        let colors: Vec<u32> = self.kagome_neighbors(site).into_iter().map(|(_, c)| c).collect();
        let mut colors: [u32; 4] = colors.try_into().ok()?;
        colors.sort_unstable();
        Some(colors)
    }

    /// Edge colors along the kagome line running in direction `dir`
    /// between lattice lines `line` and `line + 1`, in order.
    pub fn kagome_line(&self, dir: usize, line: i64) -> Vec<u32> {
        let mut strip: Vec<(i64, u32)> = self
            .faces
            .values()
            .filter(|ct| ct.face.vertices().iter().map(|v| v.line(dir)).min() == Some(line))
            .map(|ct| {
                let (x, y) = ct.face.tripled();
                (if dir == 0 { x } else { y }, self.modulus().color_of(ct.outer[dir]))
            })
            .collect();
        strip.sort_unstable();
        strip.into_iter().map(|(_, c)| c).collect()
    }
}

/// Chart through the card `t` with center `a` and butterfly color `d`,
/// where `d` sits opposite `a` in `t`. The seed site is the `dir 0` edge
/// from the origin.
pub fn build_chart(t: &Card, a: u32, d: u32, radius: i64, modulus: Modulus) -> Result<Chart, HexError> {
    if !t.is_valid(modulus) {
        return Err(HexError::InvalidCard(t.to_string()));
    }
    let card = t
        .orbit()
        .into_iter()
        .find(|c| c.0[0] == a && c.0[3] == d)
        .ok_or_else(|| HexError::NotButterfly { card: t.to_string(), a, d })?;
    chart_from_card(&card, radius, modulus)
}

/// Chart whose seed site carries exactly `card`, centered at `card[0]`.
pub fn chart_from_card(card: &Card, radius: i64, modulus: Modulus) -> Result<Chart, HexError> {
    let [_, p1, p2, p3] = card.realize(modulus).ok_or_else(|| HexError::Unrealizable(card.to_string()))?;
    let params = ChartParams::new(card.0[0], p3 - p2, p2 - p1, modulus);
    let chart = Chart::from_params(params, radius)?;
    match chart.card(Site::new(0, 0, 0)) {
        Some(s) if s == *card => Ok(chart),
        _ => Err(HexError::Inconsistent(format!("seed site of {card}"))),
    }
}

/// Alternating colors of a kagome line whose edges alternate `f` and `g`.
pub fn line_path(f: u32, g: u32, a: u32, len: usize) -> Result<Vec<u32>, HexError> {
    if f.abs_diff(g) != a && f + g != a {
        return Err(HexError::LinePath { f, g, a });
    }
    Ok((0..len).map(|i| if i % 2 == 0 { f } else { g }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Partner {
    Found {
        /// Canonical card of `u`.
        card: Card,
        /// The nearest site of the window covering `u` with the same
        /// incident colors, if any.
        site: Option<Site>,
        /// Colors of the edges at every covering vertex of `u` and `v`.
        incident: [u32; 4],
        /// Weak color of the edge `uv`.
        edge_color: u32,
    },
    None {
        reason: String,
    },
}

/// The vertex `u` sharing the four incident colors of `v`: the neighbor
/// of `v` through its butterfly position `d`, which keeps the center as
/// weak color and lies in the CT of those four colors.
pub fn partner_vertex(chart: &Chart, site: Site) -> Result<Partner, HexError> {
    let card = chart.card(site).ok_or_else(|| HexError::Precondition(format!("{site} is not a complete site")))?;
    let a = chart.center();
    let c = card.colors();
    if a % 2 == 0 && ((c[1] == a / 2 && c[2] == a / 2) || (c[4] == a / 2 && c[5] == a / 2)) {
        return Ok(Partner::None { reason: format!("{card} lies on the line L({h},{h},{a})", h = a / 2) });
    }
    let modulus = chart.modulus();
    let u = match neighbor(&card, Position::new(3).unwrap(), Which::First, modulus)? {
        NeighborOutcome::Card { card, .. } => card,
        NeighborOutcome::SelfLoop { .. } => return Ok(Partner::None { reason: format!("{card} is its own neighbor") }),
        NeighborOutcome::Absent => return Ok(Partner::None { reason: format!("{card} has no neighbor at d") }),
    };
    let mut incident = [c[1], c[2], c[4], c[5]];
    incident.sort_unstable();
    let target = u.canonical();
    let (x0, y0) = site.doubled();
    let near = chart
        .complete_sites()
        .filter(|(s, c)| c.canonical() == target && chart.incident_colors(*s) == Some(incident))
        .min_by_key(|(s, _)| {
            let (x, y) = s.doubled();
            ((x - x0).pow(2) + (x - x0) * (y - y0) + (y - y0).pow(2), *s)
        })
        .map(|(s, _)| s);
    Ok(Partner::Found { card: target, site: near, incident, edge_color: a })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReport {
    pub first: String,
    pub second: String,
    /// Quadruples of the two CTs at `t` in the chart centered at `d`.
    pub incident: [String; 2],
    pub incident_ok: bool,
    /// The two colored CTs at `t` look the same in both charts: corners
    /// other than `t` and all sides in the same places.
    pub same: bool,
    /// `f = c` and `e = b` for `t = abcdef`.
    pub criterion: bool,
}

/// Compares the chart `H'(t,a,d)` with `H'(t,d,a)`. The second is seeded
/// with `a` and `d` traded, `c` and `f` exchanged in the CT `acdf`, and
/// `b`, `e` left in place in the CT `abde`.
pub fn dual_chart_check(t: &Card, a: u32, d: u32, radius: i64, modulus: Modulus) -> Result<DualReport, HexError> {
    let first = build_chart(t, a, d, radius, modulus)?;
    let seed = Site::new(0, 0, 0);
    let [_, b, c, _, e, f] = first.card(seed).unwrap().colors();
    let second = chart_from_card(&Card([d, b, f, a, e, c]), radius, modulus)?;
    let sorted = |mut q: [u32; 4]| {
        q.sort_unstable();
        q
    };
    let want = BTreeSet::from([sorted([d, c, a, f]), sorted([d, b, a, e])]);
    let (up, down) = seed.faces();
    let got: BTreeSet<[u32; 4]> = [up, down].iter().map(|x| second.faces[x].quadruple(modulus)).collect();
    let same = [up, down].iter().all(|x| {
        let (p, q) = (first.faces[x].colors(modulus), second.faces[x].colors(modulus));
        p.edges == q.edges && p.corners[1..] == q.corners[1..]
    });
    Ok(DualReport {
        first: first.name(),
        second: second.name(),
        incident: [format_colors(&sorted([d, c, a, f])), format_colors(&sorted([d, b, a, e]))],
        incident_ok: got == want,
        same,
        criterion: f == c && e == b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Modulus = Modulus::Integers;

    fn card(s: &str) -> Card {
        s.parse().unwrap()
    }

    #[test]
    fn seed_card_matches_params() {
        let chart = build_chart(&card("123745"), 1, 7, 4, Z).unwrap();
        let seed = chart.card(Site::new(0, 0, 0)).unwrap();
        assert_eq!(seed.canonical(), card("123745").canonical());
        assert_eq!(seed.0[0], 1);
        assert_eq!(seed.0[3], 7);
    }

    #[test]
    fn expansion_matches_affine_labels() {
        let params = ChartParams::new(3, 1, 1, Z);
        let chart = Chart::from_params(params, 5).unwrap();
        for (face, ct) in &chart.faces {
            assert_eq!(*ct, params.placed(*face));
        }
        for (site, c) in chart.complete_sites() {
            assert_eq!(c, params.site_card(site));
            assert!(c.is_valid(Z));
        }
    }

    #[test]
    fn names_of_small_charts() {
        assert_eq!(build_chart(&card("000111"), 1, 0, 4, Z).unwrap().name(), "1(011)");
        assert_eq!(build_chart(&card("211011"), 2, 0, 4, Z).unwrap().name(), "2(011)");
        assert_eq!(Chart::from_params(ChartParams::new(3, 1, 1, Z), 4).unwrap().name(), "3(112)");
        assert_eq!(Chart::from_params(ChartParams::new(6, 1, 2, Z), 4).unwrap().name(), "6(123)");
    }

    #[test]
    fn butterfly_must_be_opposite() {
        let err = build_chart(&card("123745"), 1, 2, 3, Z).unwrap_err();
        assert!(matches!(err, HexError::NotButterfly { .. }));
    }

    #[test]
    fn line_path_examples() {
        assert_eq!(line_path(1, 3, 2, 4).unwrap(), vec![1, 3, 1, 3]);
        assert_eq!(line_path(2, 2, 4, 3).unwrap(), vec![2, 2, 2]);
        assert!(line_path(1, 2, 4, 3).is_err());
    }

    #[test]
    fn dual_chart_of_235142() {
        let t = card("235142");
        let report = dual_chart_check(&t, 2, 1, 4, Z).unwrap();
        assert!(report.incident_ok);
        assert!(!report.criterion);
    }
}
