use std::fmt;

use num_integer::Integer;

use crate::{format_colors, CoreError, Modulus};

/// A sorted 3-multiset of colors. Not necessarily a K3-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple([u32; 3]);

impl Triple {
    pub fn new(mut colors: [u32; 3]) -> Self {
        colors.sort_unstable();
        Triple(colors)
    }

    pub fn colors(&self) -> [u32; 3] {
        self.0
    }

    pub fn is_k3(&self, modulus: Modulus) -> bool {
        is_k3_type(self.0, modulus)
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &c| g.gcd(&c))
    }

    pub fn is_tmc(&self) -> bool {
        self.0[0] != self.0[1] && self.0[1] != self.0[2]
    }

    /// Size of the multiset intersection.
    pub fn shared(&self, other: &Triple) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < 3 && j < 3 {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn reduce(&self, n: u32) -> Triple {
        let m = Modulus::Cyclic(n);
        Triple::new(self.0.map(|c| m.color_of(c as i64)))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_colors(&self.0))
    }
}

impl std::str::FromStr for Triple {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let colors = crate::parse_colors(s)?;
        let colors: [u32; 3] = colors.try_into().map_err(|_| CoreError::Parse {
            text: s.to_string(),
            reason: "expected three colors".into(),
        })?;
        Ok(Triple::new(colors))
    }
}

/// Over the integers the two least colors sum to the greatest; modulo `n`
/// some signing `±x±y±z` vanishes.
pub fn is_k3_type(colors: [u32; 3], modulus: Modulus) -> bool {
    match modulus {
        Modulus::Integers => {
            let [x, y, z] = Triple::new(colors).0;
            x as u64 + y as u64 == z as u64
        }
        Modulus::Cyclic(n) => {
            let n = n as i64;
            let [x, y, z] = colors.map(i64::from);
            [(1, 1), (1, -1), (-1, 1), (-1, -1)]
                .iter()
                .any(|&(sy, sz)| (x + sy * y + sz * z).rem_euclid(n) == 0)
        }
    }
}

/// A validated K3-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct K3Type {
    triple: Triple,
    modulus: Modulus,
}

impl K3Type {
    pub fn new(colors: [u32; 3], modulus: Modulus) -> Option<Self> {
        (colors.iter().all(|&c| modulus.admits(c)) && is_k3_type(colors, modulus)).then(|| K3Type {
            triple: Triple::new(colors),
            modulus,
        })
    }

    pub fn triple(&self) -> Triple {
        self.triple
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }
}

/// `bcd < b'c'd'` iff `c+d < c'+d'`, comparing the two largest colors.
pub fn k3_less(s: Triple, t: Triple) -> bool {
    let ([_, c, d], [_, c2, d2]) = (s.0, t.0);
    c + d < c2 + d2
}
