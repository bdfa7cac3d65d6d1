//! Axial coordinates on the triangular lattice. Lattice vertices carry the
//! canonical hexagons, lattice edges are the kagome sites, and lattice
//! faces carry the placed CTs.

use std::fmt;

/// Lattice directions: `E0 = (1,0)`, `E1 = (0,1)`, `E2 = (-1,1)`.
pub const DIRS: [usize; 3] = [0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub q: i64,
    pub r: i64,
}

impl Vertex {
    pub fn new(q: i64, r: i64) -> Self {
        Vertex { q, r }
    }

    /// Hexagonal distance from the origin.
    pub fn norm(self) -> i64 {
        self.q.abs().max(self.r.abs()).max((self.q + self.r).abs())
    }

    /// Index of the lattice line of direction `dir` through the vertex.
    pub fn line(self, dir: usize) -> i64 {
        match dir {
            0 => self.r,
            1 => self.q,
            _ => self.q + self.r,
        }
    }

    /// The six incident sites in counterclockwise order, starting east.
    pub fn ring(self) -> [Site; 6] {
        let (q, r) = (self.q, self.r);
        [
            Site::new(0, q, r),
            Site::new(1, q, r),
            Site::new(2, q - 1, r),
            Site::new(0, q - 1, r),
            Site::new(1, q, r - 1),
            Site::new(2, q, r - 1),
        ]
    }

    pub fn sixfold(self) -> (i64, i64) {
        (6 * self.q, 6 * self.r)
    }
}

/// A lattice edge. `dir 0` joins `(q,r)-(q+1,r)`, `dir 1` joins
/// `(q,r)-(q,r+1)`, `dir 2` joins `(q+1,r)-(q,r+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub dir: usize,
    pub q: i64,
    pub r: i64,
}

impl Site {
    pub fn new(dir: usize, q: i64, r: i64) -> Self {
        Site { dir, q, r }
    }

    /// Endpoints `(v1, v2)`; the card at the site puts `b,d,f` at `v1`.
    pub fn ends(self) -> (Vertex, Vertex) {
        let (q, r) = (self.q, self.r);
        match self.dir {
            0 => (Vertex::new(q, r), Vertex::new(q + 1, r)),
            1 => (Vertex::new(q, r), Vertex::new(q, r + 1)),
            _ => (Vertex::new(q + 1, r), Vertex::new(q, r + 1)),
        }
    }

    /// Index of the lattice line carrying the site.
    pub fn line(self) -> i64 {
        self.ends().0.line(self.dir)
    }

    /// The two incident faces, up then down.
    pub fn faces(self) -> (Face, Face) {
        let up = Face::up(self.q, self.r);
        let down = match self.dir {
            0 => Face::down(self.q, self.r - 1),
            1 => Face::down(self.q - 1, self.r),
            _ => Face::down(self.q, self.r),
        };
        (up, down)
    }

    /// Twice the midpoint.
    pub fn doubled(self) -> (i64, i64) {
        let (a, b) = self.ends();
        (a.q + b.q, a.r + b.r)
    }

    pub fn from_doubled((x, y): (i64, i64)) -> Option<Site> {
        let (ox, oy) = (x.rem_euclid(2), y.rem_euclid(2));
        match (ox, oy) {
            (1, 0) => Some(Site::new(0, (x - 1) / 2, y / 2)),
            (0, 1) => Some(Site::new(1, x / 2, (y - 1) / 2)),
            (1, 1) => Some(Site::new(2, (x - 1) / 2, (y - 1) / 2)),
            _ => None,
        }
    }

    pub fn sixfold(self) -> (i64, i64) {
        let (x, y) = self.doubled();
        (3 * x, 3 * y)
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}({},{})", self.dir, self.q, self.r)
    }
}

/// A lattice triangle: `up (q,r)` has vertices `(q,r),(q+1,r),(q,r+1)`,
/// `down (q,r)` has `(q+1,r),(q,r+1),(q+1,r+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub q: i64,
    pub r: i64,
    pub up: bool,
}

impl Face {
    pub fn up(q: i64, r: i64) -> Self {
        Face { q, r, up: true }
    }

    pub fn down(q: i64, r: i64) -> Self {
        Face { q, r, up: false }
    }

    pub fn vertices(self) -> [Vertex; 3] {
        let (q, r) = (self.q, self.r);
        if self.up {
            [Vertex::new(q, r), Vertex::new(q + 1, r), Vertex::new(q, r + 1)]
        } else {
            [Vertex::new(q + 1, r), Vertex::new(q, r + 1), Vertex::new(q + 1, r + 1)]
        }
    }

    /// Sides indexed by direction.
    pub fn sides(self) -> [Site; 3] {
        let (q, r) = (self.q, self.r);
        if self.up {
            [Site::new(0, q, r), Site::new(1, q, r), Site::new(2, q, r)]
        } else {
            [Site::new(0, q, r + 1), Site::new(1, q + 1, r), Site::new(2, q, r)]
        }
    }

    /// Line indices of the three lines meeting the face only at a vertex,
    /// indexed by direction.
    pub fn outer_lines(self) -> [i64; 3] {
        let (q, r) = (self.q, self.r);
        if self.up {
            [r + 1, q + 1, q + r]
        } else {
            [r, q, q + r + 2]
        }
    }

    /// The face across the side of direction `k`.
    pub fn across(self, k: usize) -> Face {
        let (q, r) = (self.q, self.r);
        match (self.up, k) {
            (true, 0) => Face::down(q, r - 1),
            (true, 1) => Face::down(q - 1, r),
            (true, _) => Face::down(q, r),
            (false, 0) => Face::up(q, r + 1),
            (false, 1) => Face::up(q + 1, r),
            (false, _) => Face::up(q, r),
        }
    }

    pub fn norm(self) -> i64 {
        self.vertices().iter().map(|v| v.norm()).max().unwrap()
    }

    /// Three times the centroid.
    pub fn tripled(self) -> (i64, i64) {
        self.vertices().iter().fold((0, 0), |(x, y), v| (x + v.q, y + v.r))
    }

    pub fn from_tripled((x, y): (i64, i64)) -> Option<Face> {
        match (x.rem_euclid(3), y.rem_euclid(3)) {
            (1, 1) => Some(Face::up((x - 1) / 3, (y - 1) / 3)),
            (2, 2) => Some(Face::down((x - 2) / 3, (y - 2) / 3)),
            _ => None,
        }
    }

    pub fn sixfold(self) -> (i64, i64) {
        let (x, y) = self.tripled();
        (2 * x, 2 * y)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", if self.up { "up" } else { "down" }, self.q, self.r)
    }
}

/// Cartesian position of an axial point given in units of `1/scale`.
pub fn cartesian(p: (i64, i64), scale: f64) -> (f64, f64) {
    let (q, r) = (p.0 as f64 / scale, p.1 as f64 / scale);
    (q + 0.5 * r, -(3f64.sqrt() / 2.0) * r)
}
