use std::fmt;
use std::str::FromStr;

use typegraph_core::{nu_in, Card, Modulus, Position};

use crate::HexError;

/// Which face of the card survives the whole trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Bdf,
    Cde,
}

impl Variant {
    /// Swapped positions of the odd and even steps, and the position
    /// recomputed after each.
    fn steps(self) -> [((usize, usize), usize); 2] {
        match self {
            Variant::Bdf => [((3, 5), 4), ((3, 1), 2)],
            Variant::Cde => [((2, 3), 1), ((3, 4), 5)],
        }
    }

    pub fn kept_face(self) -> [usize; 3] {
        match self {
            Variant::Bdf => [1, 3, 5],
            Variant::Cde => [2, 3, 4],
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Bdf => "bdf",
            Variant::Cde => "cde",
        })
    }
}

impl FromStr for Variant {
    type Err = HexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bdf" => Ok(Variant::Bdf),
            "cde" => Ok(Variant::Cde),
            _ => Err(HexError::Parse(format!("variant {s:?}, expected bdf or cde"))),
        }
    }
}

/// Symmetry moving the color at `anchor` to position `a`. Each is an
/// involution, so it also moves traced cards back.
pub fn anchor_perm(anchor: Position) -> [usize; 6] {
    match anchor.index() {
        0 => [0, 1, 2, 3, 4, 5],
        1 => [1, 0, 2, 4, 3, 5],
        2 => [2, 1, 0, 5, 4, 3],
        3 => [3, 4, 2, 0, 1, 5],
        4 => [4, 3, 2, 1, 0, 5],
        _ => [5, 1, 3, 2, 4, 0],
    }
}

/// The six cards of the canonical hexagon through `r` that keeps the color
/// at `anchor`, written in the frame of `r`.
pub fn trace_hexagon(r: &Card, anchor: Position, variant: Variant, modulus: Modulus) -> Result<[Card; 6], HexError> {
    if !r.is_valid(modulus) {
        return Err(HexError::InvalidCard(r.to_string()));
    }
    let perm = anchor_perm(anchor);
    let start = r.permute(&perm);
    let mut cur = start;
    let mut out = [Card([0; 6]); 6];
    for (step, slot) in out.iter_mut().enumerate() {
        *slot = cur.permute(&perm);
        let ((i, j), fix) = variant.steps()[step % 2];
        cur = recompute(&cur.swap(i, j), fix, modulus)?;
    }
    if cur != start {
        return Err(HexError::NotClosed(r.to_string()));
    }
    Ok(out)
}

/// Restores both faces through position `fix` with the unique fitting color.
fn recompute(card: &Card, fix: usize, modulus: Modulus) -> Result<Card, HexError> {
    let faces: Vec<[usize; 3]> = typegraph_core::FACES.iter().copied().filter(|f| f.contains(&fix)).collect();
    let c = card.colors();
    let pair = |f: &[usize; 3]| {
        let mut rest = f.iter().copied().filter(|&i| i != fix);
        let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
        nu_in(modulus, c[x], c[y])
    };
    let hit = pair(&faces[0]).intersect(&pair(&faces[1]));
    match hit.single() {
        Some(h) => Ok(card.with(fix, h)),
        None => Err(HexError::TraceStep { card: card.to_string(), options: hit.as_slice().to_vec() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(cards: &[Card; 6]) -> String {
        cards.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }

    fn trace(card: &str, anchor: char, variant: Variant) -> String {
        let card: Card = card.parse().unwrap();
        let anchor: Position = anchor.to_string().parse().unwrap();
        names(&trace_hexagon(&card, anchor, variant, Modulus::Integers).unwrap())
    }

    #[test]
    fn hexagons_through_123745() {
        assert_eq!(trace("123745", 'a', Variant::Bdf), "123745 123587 156287 156712 176512 176245");
        assert_eq!(trace("123745", 'a', Variant::Cde), "123745 187345 187434 134734 134376 123476");
        assert_eq!(trace("123745", 'd', Variant::Bdf), "123745 583741 48c751 1bc754 5b6714 426715");
        assert_eq!(trace("123745", 'd', Variant::Cde), "123745 321785 23178a 13279a 312796 213746");
    }

    #[test]
    fn anchor_perms_are_card_symmetries() {
        for p in Position::ALL {
            let perm = anchor_perm(p);
            assert!(typegraph_core::symmetries().contains(&perm));
            assert_eq!(perm[0], p.index());
        }
    }

    #[test]
    fn kept_face_is_constant() {
        let card: Card = "123745".parse().unwrap();
        for v in [Variant::Bdf, Variant::Cde] {
            let cards = trace_hexagon(&card, Position::new(0).unwrap(), v, Modulus::Integers).unwrap();
            let kept: Vec<_> = cards
                .iter()
                .map(|c| {
                    let mut f = v.kept_face().map(|i| c.colors()[i]);
                    f.sort_unstable();
                    f
                })
                .collect();
            assert!(kept.windows(2).all(|w| w[0] == w[1]));
        }
    }
}
