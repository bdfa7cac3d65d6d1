use num_integer::Integer;
use typegraph_core::{nu_in, Card, Modulus, Position};

use crate::{neighbor, K4Error, NeighborOutcome, Which};

/// How the members of a canonical triangle `{t, t', t''}` coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// Three different K4-types.
    Triangle,
    /// `t = t' != t''`: a loop at `t`.
    LoopAtBase,
    /// `t != t' = t''`.
    DoubledNeighbor,
    /// `t = t' = t''`.
    SingleVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTriangle {
    /// The four colors left after removing an opposite pair, sorted.
    pub quadruple: [u32; 4],
    /// Canonical cards of `t` and of its neighbors through the two
    /// positions of the removed pair; `None` where no neighbor exists.
    pub members: [Option<Card>; 3],
    pub degeneracy: Degeneracy,
}

impl CanonicalTriangle {
    pub fn distinct_members(&self) -> Vec<Card> {
        let mut out: Vec<Card> = self.members.iter().flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn quadruple_string(&self) -> String {
        typegraph_core::format_colors(&self.quadruple)
    }
}

fn member(r: &Card, p: usize, modulus: Modulus) -> Result<Option<Card>, K4Error> {
    let pos = Position::new(p).unwrap();
    Ok(match neighbor(r, pos, Which::First, modulus)? {
        NeighborOutcome::Card { card, .. } => Some(card.canonical()),
        NeighborOutcome::SelfLoop { .. } => Some(r.canonical()),
        NeighborOutcome::Absent => None,
    })
}

/// One canonical triangle per opposite pair `ad`, `be`, `cf`.
pub fn cts_of(r: &Card, modulus: Modulus) -> Result<Vec<CanonicalTriangle>, K4Error> {
    let base = r.canonical();
    (0..3)
        .map(|p| {
            let q = p + 3;
            let c = r.colors();
            let mut quadruple: [u32; 4] = {
                let rest: Vec<u32> = (0..6).filter(|&i| i != p && i != q).map(|i| c[i]).collect();
                rest.try_into().unwrap()
            };
            quadruple.sort_unstable();
            let (m1, m2) = (member(r, p, modulus)?, member(r, q, modulus)?);
            let members = [Some(base), m1, m2];
            let same1 = m1 == Some(base);
            let same2 = m2 == Some(base);
            let degeneracy = match (same1, same2) {
                (true, true) => Degeneracy::SingleVertex,
                (true, false) | (false, true) => Degeneracy::LoopAtBase,
                (false, false) if m1 == m2 => Degeneracy::DoubledNeighbor,
                _ => Degeneracy::Triangle,
            };
            Ok(CanonicalTriangle { quadruple, members, degeneracy })
        })
        .collect()
}

/// Some pairing `{x,y},{z,w}` has `nu(x,y)` meeting `nu(z,w)`, and the gcd
/// of the four colors (with `n`) is 1.
pub fn ct_quadruple_valid(q: [u32; 4], modulus: Modulus) -> bool {
    let mut g = q.iter().fold(0u32, |g, c| g.gcd(c));
    if let Modulus::Cyclic(n) = modulus {
        g = g.gcd(&n);
    }
    let [a, b, c, d] = q;
    g == 1
        && [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
            .iter()
            .any(|&((x, y), (z, w))| !nu_in(modulus, x, y).intersect(&nu_in(modulus, z, w)).is_empty())
}
