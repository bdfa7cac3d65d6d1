use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::{format_colors, parse_colors, CoreError, Modulus, Triple};

/// Positions of the faces `abc`, `cde`, `aef`, `bdf`.
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [2, 3, 4], [0, 4, 5], [1, 3, 5]];

/// `a-d`, `b-e`, `c-f`.
pub const OPPOSITE: [usize; 6] = [3, 4, 5, 0, 1, 2];

/// K4 vertex pair carrying each position: a=01, b=12, c=02, d=23, e=03, f=13.
const EDGE_ENDS: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)];

const GENERATORS: [[usize; 6]; 3] = [[0, 2, 1, 3, 5, 4], [2, 1, 0, 5, 4, 3], [0, 5, 4, 3, 2, 1]];

/// The 24 position permutations of a card (`new[i] = old[perm[i]]`), sorted.
pub fn symmetries() -> &'static [[usize; 6]] {
    static PERMS: OnceLock<Vec<[usize; 6]>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut seen = vec![[0, 1, 2, 3, 4, 5]];
        let mut i = 0;
        while i < seen.len() {
            let cur = seen[i];
            for g in GENERATORS {
                let next = g.map(|k| cur[k]);
                if !seen.contains(&next) {
                    seen.push(next);
                }
            }
            i += 1;
        }
        seen.sort_unstable();
        seen
    })
}

/// Position name `a`..`f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(usize);

impl Position {
    pub const ALL: [Position; 6] = [
        Position(0),
        Position(1),
        Position(2),
        Position(3),
        Position(4),
        Position(5),
    ];

    pub fn new(index: usize) -> Option<Self> {
        (index < 6).then_some(Position(index))
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn opposite(self) -> Position {
        Position(OPPOSITE[self.0])
    }

    pub fn letter(self) -> char {
        (b'a' + self.0 as u8) as char
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Position {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            l @ ("a" | "b" | "c" | "d" | "e" | "f") => Ok(Position((l.as_bytes()[0] - b'a') as usize)),
            d @ ("0" | "1" | "2" | "3" | "4" | "5") => Ok(Position(d.parse().unwrap())),
            _ => Err(CoreError::Parse {
                text: s.to_string(),
                reason: "position must be one of a-f or 0-5".into(),
            }),
        }
    }
}

/// Vertex-constraint flags of a card.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexCheck {
    pub gcd_one: bool,
    pub pairs_ok: bool,
}

impl VertexCheck {
    pub fn passes(&self) -> bool {
        self.gcd_one && self.pairs_ok
    }
}

/// A 6-tuple `(a,b,c,d,e,f)` of colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Card(pub [u32; 6]);

impl Card {
    pub fn colors(&self) -> [u32; 6] {
        self.0
    }

    pub fn get(&self, p: Position) -> u32 {
        self.0[p.0]
    }

    pub fn faces(&self) -> [Triple; 4] {
        FACES.map(|f| Triple::new(f.map(|i| self.0[i])))
    }

    pub fn is_valid(&self, modulus: Modulus) -> bool {
        self.0.iter().all(|&c| modulus.admits(c)) && self.faces().iter().all(|f| f.is_k3(modulus))
    }

    pub fn permute(&self, perm: &[usize; 6]) -> Card {
        Card(perm.map(|i| self.0[i]))
    }

    pub fn swap(&self, i: usize, j: usize) -> Card {
        let mut out = self.0;
        out.swap(i, j);
        Card(out)
    }

    pub fn with(&self, i: usize, color: u32) -> Card {
        let mut out = self.0;
        out[i] = color;
        Card(out)
    }

    pub fn orbit(&self) -> Vec<Card> {
        let mut out: Vec<Card> = symmetries().iter().map(|p| self.permute(p)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn canonical(&self) -> Card {
        symmetries().iter().map(|p| self.permute(p)).min().unwrap()
    }

    pub fn is_tmc(&self) -> bool {
        (0..6).all(|i| (i + 1..6).all(|j| self.0[i] != self.0[j]))
    }

    /// gcd of the colors, together with `n` when cyclic.
    pub fn gcd(&self, modulus: Modulus) -> u32 {
        let g = self.0.iter().fold(0u32, |g, c| g.gcd(c));
        match modulus {
            Modulus::Integers => g,
            Modulus::Cyclic(n) => g.gcd(&n),
        }
    }

    /// All three opposite pairs repeat: the shape `abcabc`.
    pub fn is_abcabc(&self) -> bool {
        (0..3).all(|i| self.0[i] == self.0[i + 3])
    }

    /// The shape `0aa0aa` with `a > 0`.
    pub fn is_zero_double(&self) -> bool {
        let zeros = self.0.iter().filter(|&&c| c == 0).count();
        let mut rest = self.0.iter().filter(|&&c| c != 0);
        let first = rest.next();
        self.is_abcabc() && zeros == 2 && rest.all(|c| Some(c) == first)
    }

    /// gcd 1, and no repeated opposite pairs `abcabc` other than `0aa0aa`.
    pub fn vertex_check(&self, modulus: Modulus) -> VertexCheck {
        VertexCheck {
            gcd_one: self.gcd(modulus) == 1,
            pairs_ok: !self.is_abcabc() || self.is_zero_double(),
        }
    }

    pub fn is_vertex(&self, modulus: Modulus) -> bool {
        self.vertex_check(modulus).passes()
    }

    /// Entrywise reduction MOD `n`.
    pub fn reduce(&self, n: u32) -> Card {
        let m = Modulus::Cyclic(n);
        Card(self.0.map(|c| m.color_of(c as i64)))
    }

    /// Multiplies every color by `factor` and reduces MOD `n`.
    pub fn scale(&self, factor: u32, n: u32) -> Card {
        let m = Modulus::Cyclic(n);
        Card(self.0.map(|c| m.color_of(c as i64 * factor as i64)))
    }

    /// Points `0 = P0, P1, P2, P3` whose pairwise differences color the card,
    /// if the card is realised by a K4 of the complete Cayley graph.
    pub fn realize(&self, modulus: Modulus) -> Option<[i64; 4]> {
        let [a, b, c, d, e, f] = self.0.map(i64::from);
        let col = |x: i64| modulus.color_of(x) as i64;
        let p1 = a;
        for p2 in [c, -c] {
            if col(p2 - p1) != b {
                continue;
            }
            for p3 in [e, -e] {
                if col(p3 - p2) == d && col(p3 - p1) == f {
                    return Some([0, p1, p2, p3]);
                }
            }
        }
        None
    }

    pub fn is_sign_consistent(&self, modulus: Modulus) -> bool {
        self.realize(modulus).is_some()
    }

    /// Positions joining K4 vertices `i` and `j`.
    pub fn position_of_edge(i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        EDGE_ENDS.iter().position(|&e| e == key).expect("distinct K4 vertices")
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_colors(&self.0))
    }
}

impl FromStr for Card {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let colors = parse_colors(s)?;
        let colors: [u32; 6] = colors.try_into().map_err(|_| CoreError::Parse {
            text: s.to_string(),
            reason: "expected six colors".into(),
        })?;
        Ok(Card(colors))
    }
}

/// A K4-type, stored as the least card of its orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct K4Type(Card);

impl K4Type {
    pub fn of(card: Card, modulus: Modulus) -> Result<Self, CoreError> {
        if !card.is_valid(modulus) {
            return Err(CoreError::InvalidCard { card: card.to_string() });
        }
        Ok(K4Type(card.canonical()))
    }

    pub fn card(&self) -> Card {
        self.0
    }
}

impl fmt::Display for K4Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
