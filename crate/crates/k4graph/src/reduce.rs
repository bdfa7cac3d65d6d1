use std::collections::BTreeSet;

use typegraph_core::{Card, Modulus};

use crate::{K4Error, K4Graph, Slot};

/// Entrywise reduction MOD `n`, canonicalised over `Z_n`.
pub fn phi_reduce(r: &Card, n: u32) -> Result<Card, K4Error> {
    let image = r.reduce(n);
    if !image.is_valid(Modulus::Cyclic(n)) {
        return Err(K4Error::FaceInvalid(image.to_string()));
    }
    Ok(image.canonical())
}

/// Image of an integer window under reduction, with equal images identified.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiImage {
    pub vertices: BTreeSet<Card>,
    /// Unordered pairs (`u <= v`; equal ends mean a loop).
    pub edges: BTreeSet<(Card, Card)>,
    /// Window types whose reduction fails face validity.
    pub face_invalid: Vec<Card>,
    /// Window types whose reduction is face-valid but not a vertex of `G_{n,4}`.
    pub not_vertices: Vec<Card>,
}

fn ordered(a: Card, b: Card) -> (Card, Card) {
    if a <= b { (a, b) } else { (b, a) }
}

pub fn phi_image(window: &K4Graph, n: u32) -> PhiImage {
    let modulus = Modulus::Cyclic(n);
    let mut out = PhiImage::default();
    let image: Vec<Option<Card>> = window
        .vertices()
        .iter()
        .map(|r| match phi_reduce(r, n) {
            Ok(c) if c.is_vertex(modulus) => Some(c),
            Ok(_) => {
                out.not_vertices.push(*r);
                None
            }
            Err(_) => {
                out.face_invalid.push(*r);
                None
            }
        })
        .collect();
    for (i, img) in image.iter().enumerate() {
        let Some(u) = img else { continue };
        out.vertices.insert(*u);
        for slot in window.slots(i) {
            match *slot {
                Slot::Vertex(j) => {
                    if let Some(v) = image[j] {
                        out.edges.insert(ordered(*u, v));
                    }
                }
                Slot::Loop => {
                    out.edges.insert((*u, *u));
                }
                _ => {}
            }
        }
    }
    out
}

impl K4Graph {
    /// Edge set as unordered pairs of canonical cards, loops included.
    pub fn edge_pairs(&self) -> BTreeSet<(Card, Card)> {
        self.edges()
            .iter()
            .map(|e| ordered(self.vertices()[e.u], self.vertices()[e.v]))
            .collect()
    }
}
