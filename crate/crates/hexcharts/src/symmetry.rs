use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use typegraph_core::Card;

use crate::chart::Chart;
use crate::ct::others;
use crate::lattice::{Face, Site, Vertex};
use crate::HexError;

/// Linear parts of the six reflection classes of the lattice, with a
/// translation `t0` such that every mirror of the class is
/// `p ↦ L(p) + j·t0`.
const CLASSES: [([[i64; 2]; 2], (i64, i64)); 6] = [
    ([[1, 1], [0, -1]], (1, -2)),
    ([[-1, 0], [1, 1]], (2, -1)),
    ([[0, -1], [-1, 0]], (1, 1)),
    ([[-1, -1], [0, 1]], (1, 0)),
    ([[1, 0], [-1, -1]], (0, 1)),
    ([[0, 1], [1, 0]], (1, -1)),
];

/// Type 1 axes run along lattice lines; type 2 axes cross them at 90°.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SaKind {
    LatticeLine,
    Perpendicular,
}

impl SaKind {
    pub fn number(self) -> u8 {
        match self {
            SaKind::LatticeLine => 1,
            SaKind::Perpendicular => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mirror {
    pub class: usize,
    pub offset: i64,
}

impl Mirror {
    pub fn kind(self) -> SaKind {
        if self.class < 3 {
            SaKind::LatticeLine
        } else {
            SaKind::Perpendicular
        }
    }

    /// Image of a point given in units of `1/scale` lattice steps.
    pub fn apply(self, (x, y): (i64, i64), scale: i64) -> (i64, i64) {
        let ([[a, b], [c, d]], (tx, ty)) = CLASSES[self.class];
        let s = scale * self.offset;
        (a * x + b * y + s * tx, c * x + d * y + s * ty)
    }

    pub fn fixes(self, p: (i64, i64), scale: i64) -> bool {
        self.apply(p, scale) == p
    }

    /// The fixed line as an equation in `q, r`.
    pub fn equation(self) -> String {
        let j = self.offset;
        match self.class {
            0 => format!("r = {}", -j),
            1 => format!("q = {j}"),
            2 => format!("q+r = {j}"),
            3 => format!("2q+r = {j}"),
            4 => format!("q+2r = {j}"),
            _ => format!("q-r = {j}"),
        }
    }

    /// Two points of the fixed line, in sixfold coordinates.
    pub fn endpoints(self, radius: i64) -> [(i64, i64); 2] {
        let (j, r) = (6 * self.offset, 6 * radius);
        match self.class {
            0 => [(-r + j, -j), (r + j, -j)],
            1 => [(j, -r), (j, r)],
            2 => [(j + r, -r), (j - r, r)],
            3 => [((j + r) / 2, -r), ((j - r) / 2, r)],
            4 => [(-r, (j + r) / 2), (r, (j - r) / 2)],
            _ => [(j - r, -r), (j + r, r)],
        }
    }
}

impl fmt::Display for Mirror {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SA{} {}", self.kind().number(), self.equation())
    }
}

/// Mirrors of the site coloring. A mirror is kept when it matches every
/// site whose image lies in the window and at least a third of the
/// sites have their image there.
pub fn detect_sas(chart: &Chart) -> Vec<Mirror> {
    let colors: HashMap<(i64, i64), u32> = chart.sites.iter().map(|(s, i)| (s.doubled(), i.color)).collect();
    let total = colors.len();
    let span = 2 * chart.radius + 2;
    let mut out = Vec::new();
    for class in 0..6 {
        for offset in -span..=span {
            let m = Mirror { class, offset };
            let mut overlap = 0;
            let ok = colors.iter().all(|(p, c)| match colors.get(&m.apply(*p, 2)) {
                Some(d) => {
                    overlap += 1;
                    c == d
                }
                None => true,
            });
            if ok && 3 * overlap >= total {
                out.push(m);
            }
        }
    }
    out
}

/// Mirrors through a point given in sixfold coordinates.
pub fn mirrors_through(mirrors: &[Mirror], p: (i64, i64)) -> Vec<Mirror> {
    mirrors.iter().copied().filter(|m| m.fixes(p, 6)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPoint {
    Vertex(Vertex),
    Site(Site),
    Face(Face),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCt {
    pub face: Face,
    /// 2 for a ½-CT, 6 for a 1/6-CT.
    pub fraction: u32,
    pub quadruple: [u32; 4],
}

/// The chart folded along its symmetry axes.
#[derive(Clone, Debug)]
pub struct Fold {
    pub mirrors: Vec<Mirror>,
    /// Largest number of axes through one point.
    pub max_mirrors: usize,
    pub corner: Option<FixedPoint>,
    /// Orbit representative of every site.
    pub orbit: BTreeMap<Site, Site>,
    /// Kagome edges whose two ends fall in one orbit, as
    /// `(representative, edge color)`.
    pub loops: BTreeSet<(Site, u32)>,
    pub partial_cts: Vec<PartialCt>,
}

impl Fold {
    /// Interior angle between adjacent axes at the busiest point.
    pub fn wedge_angle(&self) -> Option<u32> {
        (self.max_mirrors > 0).then(|| 180 / self.max_mirrors as u32)
    }

    /// Copies of the fundamental region around that point.
    pub fn fold_count(&self) -> usize {
        if self.max_mirrors == 0 {
            1
        } else {
            2 * self.max_mirrors
        }
    }

    pub fn representatives(&self) -> BTreeSet<Site> {
        self.orbit.values().copied().collect()
    }

    /// Every site colored like its representative.
    pub fn unfolds_to(&self, chart: &Chart) -> bool {
        self.orbit.iter().all(|(s, r)| chart.sites[s].color == chart.sites[r].color)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (a, b) = (self.find(x), self.find(y));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Quotient of the window by the detected axes.
pub fn fold(chart: &Chart) -> Result<Fold, HexError> {
    let mirrors = detect_sas(chart);
    let sites: Vec<Site> = chart.sites.keys().copied().collect();
    let index: HashMap<(i64, i64), usize> = sites.iter().enumerate().map(|(i, s)| (s.doubled(), i)).collect();
    let mut uf = UnionFind((0..sites.len()).collect());
    for m in &mirrors {
        for (i, s) in sites.iter().enumerate() {
            if let Some(&j) = index.get(&m.apply(s.doubled(), 2)) {
                uf.union(i, j);
            }
        }
    }
    let orbit: BTreeMap<Site, Site> = (0..sites.len()).map(|i| (sites[i], sites[uf.find(i)])).collect();
    let mut types: HashMap<Site, Card> = HashMap::new();
    for (s, r) in &orbit {
        if chart.sites[s].color != chart.sites[r].color {
            return Err(HexError::InconsistentFold(s.to_string()));
        }
        if let Some(c) = chart.card(*s) {
            if *types.entry(*r).or_insert(c.canonical()) != c.canonical() {
                return Err(HexError::InconsistentFold(s.to_string()));
            }
        }
    }

    let mut loops = BTreeSet::new();
    let mut partial_cts = Vec::new();
    for ct in chart.faces.values() {
        let sides = ct.face.sides();
        for k in 0..3 {
            let (i, j) = others(k);
            if orbit[&sides[i]] == orbit[&sides[j]] {
                loops.insert((orbit[&sides[i]], chart.modulus().color_of(ct.outer[k])));
            }
        }
        let through = mirrors_through(&mirrors, ct.face.sixfold()).len();
        if through == 1 || through == 3 {
            partial_cts.push(PartialCt {
                face: ct.face,
                fraction: 2 * through as u32,
                quadruple: ct.quadruple(chart.modulus()),
            });
        }
    }

    let mut points: Vec<(usize, i64, FixedPoint)> = Vec::new();
    let r = chart.radius;
    for q in -r..=r {
        for s in -r..=r {
            let v = Vertex::new(q, s);
            if v.norm() <= r {
                points.push((mirrors_through(&mirrors, v.sixfold()).len(), v.norm(), FixedPoint::Vertex(v)));
            }
        }
    }
    for s in chart.sites.keys() {
        let (x, y) = s.doubled();
        points.push((mirrors_through(&mirrors, s.sixfold()).len(), x.abs().max(y.abs()), FixedPoint::Site(*s)));
    }
    for f in chart.faces.keys() {
        points.push((mirrors_through(&mirrors, f.sixfold()).len(), f.norm(), FixedPoint::Face(*f)));
    }
    let max_mirrors = points.iter().map(|p| p.0).max().unwrap_or(0);
    let corner = points
        .iter()
        .filter(|p| p.0 == max_mirrors && max_mirrors > 0)
        .min_by_key(|p| p.1)
        .map(|p| p.2);

    Ok(Fold { mirrors, max_mirrors, corner, orbit, loops, partial_cts })
}
