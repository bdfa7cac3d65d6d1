use std::fmt;

use crate::CoreError;

/// The ring colors are taken from: the integers, or an odd cyclic group
/// whose colors are the residues `0..=(n-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Integers,
    Cyclic(u32),
}

impl Modulus {
    pub fn cyclic(n: u32) -> Result<Self, CoreError> {
        if n < 3 || n % 2 == 0 {
            return Err(CoreError::BadModulus(n as u64));
        }
        Ok(Modulus::Cyclic(n))
    }

    pub fn order(self) -> Option<u32> {
        match self {
            Modulus::Integers => None,
            Modulus::Cyclic(n) => Some(n),
        }
    }

    /// Largest color of the ring, `None` over the integers.
    pub fn max_color(self) -> Option<u32> {
        self.order().map(|n| (n - 1) / 2)
    }

    pub fn admits(self, color: u32) -> bool {
        self.max_color().is_none_or(|max| color <= max)
    }

    /// Color of a signed integer: its absolute value, or its reduction.
    pub fn color_of(self, value: i64) -> u32 {
        match self {
            Modulus::Integers => value.unsigned_abs() as u32,
            Modulus::Cyclic(n) => {
                let n = n as i64;
                let r = value.rem_euclid(n);
                (if 2 * r > n { n - r } else { r }) as u32
            }
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Integers => write!(f, "Z"),
            Modulus::Cyclic(n) => write!(f, "Z_{n}"),
        }
    }
}

/// Reduction of `m` MOD `n`: `m mod n`, folded onto `0..=(n-1)/2`.
pub fn mod_reduce(m: u64, n: u32) -> Result<u32, CoreError> {
    if n < 3 || n % 2 == 0 {
        return Err(CoreError::BadModulus(n as u64));
    }
    let n = n as u64;
    let r = m % n;
    Ok((if 2 * r > n { n - r } else { r }) as u32)
}

/// A color tagged with its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Color {
    value: u32,
    modulus: Modulus,
}

impl Color {
    pub fn new(value: u32, modulus: Modulus) -> Result<Self, CoreError> {
        match modulus {
            Modulus::Cyclic(n) if !modulus.admits(value) => Err(CoreError::ColorOutOfRange {
                value,
                max: (n - 1) / 2,
                modulus: n,
            }),
            _ => Ok(Color { value, modulus }),
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

/// At most two colors, sorted and distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NuSet {
    vals: [u32; 2],
    len: u8,
}

impl NuSet {
    pub const EMPTY: NuSet = NuSet { vals: [0; 2], len: 0 };

    fn pair(x: u32, y: u32) -> Self {
        if x == y {
            NuSet { vals: [x, 0], len: 1 }
        } else {
            NuSet { vals: [x.min(y), x.max(y)], len: 2 }
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.vals[..self.len as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.as_slice().iter().copied()
    }

    pub fn contains(&self, c: u32) -> bool {
        self.as_slice().contains(&c)
    }

    pub fn intersect(&self, other: &NuSet) -> NuSet {
        let mut out = NuSet::EMPTY;
        for c in self.iter().filter(|&c| other.contains(c)) {
            out.vals[out.len as usize] = c;
            out.len += 1;
        }
        out
    }

    /// The element, when there is exactly one.
    pub fn single(&self) -> Option<u32> {
        (self.len == 1).then_some(self.vals[0])
    }
}

/// `{|a-b|, a+b}` over the integers, or the reductions of `a-b` and `a+b`.
pub fn nu_in(modulus: Modulus, a: u32, b: u32) -> NuSet {
    let (a, b) = (a as i64, b as i64);
    NuSet::pair(modulus.color_of(a - b), modulus.color_of(a + b))
}

pub fn nu(a: Color, b: Color) -> Result<NuSet, CoreError> {
    if a.modulus != b.modulus {
        return Err(CoreError::ModulusMismatch(a.modulus, b.modulus));
    }
    Ok(nu_in(a.modulus, a.value, b.value))
}
