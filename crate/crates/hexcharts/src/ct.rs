use typegraph_core::{format_colors, nu_in, Modulus};

use crate::lattice::Face;
use crate::HexError;

/// The edge color between corners `f` and `g` of a CT centered at `a` whose
/// third corner is `h`.
pub fn ct_edge_color(a: u32, f: u32, g: u32, h: u32, modulus: Modulus) -> Result<u32, HexError> {
    let hit = nu_in(modulus, a, h).intersect(&nu_in(modulus, f, g));
    match hit.len() {
        0 => Err(HexError::EmptyIntersection { a, f, g, h }),
        1 => Ok(hit.single().unwrap()),
        _ => Err(HexError::AmbiguousEdge { a, f, g, h, options: hit.as_slice().to_vec() }),
    }
}

/// Colors of a CT drawn as a triangle: corners and sides indexed by
/// direction, side `k` joining the two corners other than `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredCt {
    pub center: u32,
    pub corners: [u32; 3],
    pub edges: [u32; 3],
}

impl ColoredCt {
    /// Completes the side colors from the corners, one
    /// `ct_edge_color` per side.
    pub fn from_corners(center: u32, corners: [u32; 3], modulus: Modulus) -> Result<Self, HexError> {
        let mut edges = [0; 3];
        for (k, edge) in edges.iter_mut().enumerate() {
            let (i, j) = others(k);
            *edge = ct_edge_color(center, corners[i], corners[j], corners[k], modulus)?;
        }
        Ok(ColoredCt { center, corners, edges })
    }

    pub fn quadruple(&self) -> [u32; 4] {
        let mut q = [self.center, self.corners[0], self.corners[1], self.corners[2]];
        q.sort_unstable();
        q
    }

    /// The CT across corner `k`, from colors alone: `k` keeps its color,
    /// the other corners and sides trade places, and the far side is the
    /// ν-intersection.
    pub fn reflect(&self, k: usize, modulus: Modulus) -> Result<ColoredCt, HexError> {
        let (i, j) = others(k);
        let mut corners = [0; 3];
        corners[k] = self.corners[k];
        corners[i] = self.edges[i];
        corners[j] = self.edges[j];
        let mut edges = [0; 3];
        edges[i] = self.corners[i];
        edges[j] = self.corners[j];
        edges[k] = ct_edge_color(self.center, corners[i], corners[j], corners[k], modulus)?;
        Ok(ColoredCt { center: self.center, corners, edges })
    }
}

/// A CT on a lattice face with signed labels. `sides[k]` labels the
/// face's side of direction `k` (a corner of the CT), `outer[k]` the line
/// of direction `k` through the opposite apex (the CT side between the
/// two other corners).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlacedCt {
    pub face: Face,
    pub center: u32,
    pub sides: [i64; 3],
    pub outer: [i64; 3],
}

impl PlacedCt {
    /// The placement across side `k`. Needs no color arithmetic: the outer
    /// line of direction `k` moves to the parallel line on the other side.
    pub fn reflect(&self, k: usize) -> PlacedCt {
        let (i, j) = others(k);
        let mut sides = self.sides;
        let mut outer = self.outer;
        sides[i] = self.outer[i];
        sides[j] = self.outer[j];
        outer[i] = self.sides[i];
        outer[j] = self.sides[j];
        outer[k] = 2 * self.sides[k] - self.outer[k];
        PlacedCt { face: self.face.across(k), center: self.center, sides, outer }
    }

    pub fn colors(&self, modulus: Modulus) -> ColoredCt {
        ColoredCt {
            center: self.center,
            corners: self.sides.map(|x| modulus.color_of(x)),
            edges: self.outer.map(|x| modulus.color_of(x)),
        }
    }

    pub fn quadruple(&self, modulus: Modulus) -> [u32; 4] {
        self.colors(modulus).quadruple()
    }

    pub fn quadruple_string(&self, modulus: Modulus) -> String {
        format_colors(&self.quadruple(modulus))
    }
}

pub(crate) fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}
