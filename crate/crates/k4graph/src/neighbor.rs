use std::collections::BTreeSet;

use typegraph_core::{nu_in, Card, Modulus, NuSet, Position, FACES, OPPOSITE};

use crate::K4Error;

/// Which of the two faces avoiding the changed position gets its free
/// entries swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    First,
    Second,
}

impl Which {
    pub const BOTH: [Which; 2] = [Which::First, Which::Second];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborOutcome {
    /// A different K4-type, given by the card next to the input.
    Card { card: Card, h: u32 },
    /// The new card is another card of the input's own type.
    SelfLoop { h: u32 },
    /// No admissible new color (only for types shaped `0aa0aa`).
    Absent,
}

/// The positions swapped when changing position `p`.
pub fn swap_for(p: usize, which: Which) -> (usize, usize) {
    let q = OPPOSITE[p];
    let face = FACES
        .iter()
        .filter(|f| !f.contains(&p))
        .nth(which as usize)
        .expect("two faces avoid each position");
    let mut free = face.iter().copied().filter(|&i| i != q);
    (free.next().unwrap(), free.next().unwrap())
}

/// The card after swapping, and the colors `h` closing both new faces
/// through `p`.
pub fn h_candidates(r: &Card, p: usize, which: Which, modulus: Modulus) -> (Card, NuSet) {
    let (i, j) = swap_for(p, which);
    let swapped = r.swap(i, j);
    let c = swapped.colors();
    let mut sets = FACES.iter().filter(|f| f.contains(&p)).map(|f| {
        let mut rest = f.iter().copied().filter(|&k| k != p);
        let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
        nu_in(modulus, c[x], c[y])
    });
    let (s1, s2) = (sets.next().unwrap(), sets.next().unwrap());
    (swapped, s1.intersect(&s2))
}

/// New colors admissible at `p`: those produced by both swap choices at
/// `p` and at its opposite position, landing on a vertex type. A type
/// shaped `0aa0aa` never links to itself this way.
pub(crate) fn h_options(r: &Card, p: usize, modulus: Modulus) -> BTreeSet<u32> {
    let mut common: Option<BTreeSet<u32>> = None;
    for pos in [p, OPPOSITE[p]] {
        for which in Which::BOTH {
            let (swapped, hs) = h_candidates(r, pos, which, modulus);
            let ok: BTreeSet<u32> = hs.iter().filter(|&h| swapped.with(pos, h).is_vertex(modulus)).collect();
            common = Some(match common {
                None => ok,
                Some(prev) => prev.intersection(&ok).copied().collect(),
            });
        }
    }
    let mut options = common.unwrap_or_default();
    if r.is_zero_double() {
        let own = r.canonical();
        let (swapped, _) = h_candidates(r, p, Which::First, modulus);
        options.retain(|&h| swapped.with(p, h).canonical() != own);
    }
    options
}

/// Changes the color at `p`, swapping the free entries of the selected face
/// avoiding `p`.
pub fn neighbor(r: &Card, p: Position, which: Which, modulus: Modulus) -> Result<NeighborOutcome, K4Error> {
    if !r.is_valid(modulus) {
        return Err(K4Error::InvalidCard(r.to_string()));
    }
    let p = p.index();
    let options = h_options(r, p, modulus);
    let h = match options.len() {
        0 => return Ok(NeighborOutcome::Absent),
        1 => *options.first().unwrap(),
        _ => {
            return Err(K4Error::Ambiguous {
                card: r.to_string(),
                position: (b'a' + p as u8) as char,
                options: options.into_iter().collect(),
            })
        }
    };
    let (swapped, _) = h_candidates(r, p, which, modulus);
    let card = swapped.with(p, h);
    Ok(if card.canonical() == r.canonical() {
        NeighborOutcome::SelfLoop { h }
    } else {
        NeighborOutcome::Card { card, h }
    })
}
