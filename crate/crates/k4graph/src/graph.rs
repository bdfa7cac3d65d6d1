use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use typegraph_core::{nu_in, Card, Modulus, Triple, FACES, OPPOSITE};

use crate::neighbor::{h_candidates, h_options};
use crate::{CanonicalTriangle, Degeneracy, K4Error, Which};

/// What lies through one position of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Vertex(usize),
    Loop,
    /// A neighbor outside the window (or outside an induced subgraph).
    Outside(Card),
    Absent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeEdge {
    pub u: usize,
    pub v: usize,
    /// The two faces shared by the endpoints.
    pub strong: [Triple; 2],
    /// The shared color that keeps its position.
    pub weak: u32,
    pub is_loop: bool,
}

/// Canonical K4-types with their neighbor through each position.
#[derive(Clone, Debug)]
pub struct K4Graph {
    modulus: Modulus,
    vertices: Vec<Card>,
    slots: Vec<[Slot; 6]>,
}

/// Canonical neighbor type through position `p`.
fn neighbor_type(r: &Card, p: usize, modulus: Modulus) -> Result<Option<Card>, K4Error> {
    let options = h_options(r, p, modulus);
    match options.len() {
        0 => Ok(None),
        1 => {
            let h = *options.first().unwrap();
            let (swapped, _) = h_candidates(r, p, Which::First, modulus);
            Ok(Some(swapped.with(p, h).canonical()))
        }
        _ => Err(K4Error::Ambiguous {
            card: r.to_string(),
            position: (b'a' + p as u8) as char,
            options: options.into_iter().collect(),
        }),
    }
}

impl K4Graph {
    /// Links every vertex through its six positions; neighbors missing from
    /// `vertices` become [`Slot::Outside`].
    pub fn link(modulus: Modulus, mut vertices: Vec<Card>) -> Result<Self, K4Error> {
        vertices.sort_unstable();
        vertices.dedup();
        let slots = vertices
            .par_iter()
            .map(|r| {
                let mut out = [Slot::Absent; 6];
                for (p, slot) in out.iter_mut().enumerate() {
                    *slot = match neighbor_type(r, p, modulus)? {
                        None => Slot::Absent,
                        Some(t) if t == *r => Slot::Loop,
                        Some(t) => match vertices.binary_search(&t) {
                            Ok(j) => Slot::Vertex(j),
                            Err(_) => Slot::Outside(t),
                        },
                    };
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>, K4Error>>()?;
        Ok(K4Graph { modulus, vertices, slots })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn vertices(&self) -> &[Card] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, card: &Card) -> Option<usize> {
        self.vertices.binary_search(&card.canonical()).ok()
    }

    pub fn slots(&self, i: usize) -> &[Slot; 6] {
        &self.slots[i]
    }

    /// No neighbor leaves the vertex set.
    pub fn is_interior(&self, i: usize) -> bool {
        !self.slots[i].iter().any(|s| matches!(s, Slot::Outside(_)))
    }

    /// Distinct neighbors other than the vertex itself.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.slots[i]
            .iter()
            .filter_map(|s| match s {
                Slot::Vertex(j) => Some(*j),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|i| self.neighbors(i)).collect()
    }

    pub fn is_tmc(&self, i: usize) -> bool {
        self.vertices[i].is_tmc()
    }

    fn strong_color(&self, i: usize, p: usize) -> [Triple; 2] {
        let faces = self.vertices[i].faces();
        let mut avoid = FACES.iter().zip(faces).filter(|(f, _)| !f.contains(&p)).map(|(_, t)| t);
        let mut out = [avoid.next().unwrap(), avoid.next().unwrap()];
        out.sort_unstable();
        out
    }

    /// Non-loop edges once each, then one loop per vertex and opposite pair.
    pub fn edges(&self) -> Vec<TypeEdge> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for pair in 0..3 {
                let mut looped = false;
                for p in [pair, pair + 3] {
                    let weak = self.vertices[i].colors()[OPPOSITE[p]];
                    match self.slots[i][p] {
                        Slot::Vertex(j) if j > i => out.push(TypeEdge {
                            u: i,
                            v: j,
                            strong: self.strong_color(i, p),
                            weak,
                            is_loop: false,
                        }),
                        Slot::Loop if !looped => {
                            looped = true;
                            out.push(TypeEdge {
                                u: i,
                                v: i,
                                strong: self.strong_color(i, p),
                                weak,
                                is_loop: true,
                            });
                        }
                        _ => {}
                    }
                }
            }
        }
        out.sort_by_key(|e| (e.is_loop, e.u, e.v, e.strong, e.weak));
        out.dedup_by_key(|e| (e.is_loop, e.u, e.v, e.strong));
        out
    }

    /// The canonical triangles through vertex `i`, read from its slots.
    pub fn cts(&self, i: usize) -> Vec<CanonicalTriangle> {
        let base = self.vertices[i];
        let member = |s: Slot| match s {
            Slot::Vertex(j) => Some(self.vertices[j]),
            Slot::Loop => Some(base),
            Slot::Outside(c) => Some(c),
            Slot::Absent => None,
        };
        (0..3)
            .map(|p| {
                let c = base.colors();
                let mut quadruple = [0u32; 4];
                for (k, idx) in (0..6).filter(|&k| k != p && k != p + 3).enumerate() {
                    quadruple[k] = c[idx];
                }
                quadruple.sort_unstable();
                let (m1, m2) = (member(self.slots[i][p]), member(self.slots[i][p + 3]));
                let degeneracy = match (m1 == Some(base), m2 == Some(base)) {
                    (true, true) => Degeneracy::SingleVertex,
                    (true, false) | (false, true) => Degeneracy::LoopAtBase,
                    (false, false) if m1 == m2 => Degeneracy::DoubledNeighbor,
                    _ => Degeneracy::Triangle,
                };
                CanonicalTriangle { quadruple, members: [Some(base), m1, m2], degeneracy }
            })
            .collect()
    }

    pub fn induced(&self, keep: impl Fn(&Card) -> bool) -> K4Graph {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(&self.vertices[i])).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &i) in kept.iter().enumerate() {
            new_index[i] = k;
        }
        let slots = kept
            .iter()
            .map(|&i| {
                self.slots[i].map(|s| match s {
                    Slot::Vertex(j) if new_index[j] == usize::MAX => Slot::Outside(self.vertices[j]),
                    Slot::Vertex(j) => Slot::Vertex(new_index[j]),
                    other => other,
                })
            })
            .collect();
        K4Graph {
            modulus: self.modulus,
            vertices: kept.iter().map(|&i| self.vertices[i]).collect(),
            slots,
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let shape = if self.is_tmc(i) { "box" } else { "ellipse" };
            let _ = writeln!(out, "  \"{v}\" [shape={shape}];");
        }
        for e in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}|{}\", weak={}{}];",
                self.vertices[e.u],
                self.vertices[e.v],
                e.strong[0],
                e.strong[1],
                e.weak,
                if e.is_loop { ", loop=true" } else { "" }
            );
        }
        out.push_str("}\n");
        out
    }

    /// One JSON object per vertex: card, TMC flag, degree, CT quadruples.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let quads: Vec<String> = self.cts(i).iter().map(|t| t.quadruple_string()).collect();
            let rec = serde_json::json!({
                "card": v.to_string(),
                "tmc": self.is_tmc(i),
                "degree": self.degree(i),
                "cts": quads,
            });
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        out
    }
}

fn enumerate(modulus: Modulus, cap: u32) -> Vec<Card> {
    let admit = |c: u32| c <= cap;
    let mut out: Vec<Card> = (0..=cap)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = BTreeSet::new();
            for b in 0..=cap {
                for c in nu_in(modulus, a, b).iter().filter(|&c| admit(c)) {
                    for d in 0..=cap {
                        for e in nu_in(modulus, c, d).iter().filter(|&e| admit(e)) {
                            let fs = nu_in(modulus, a, e).intersect(&nu_in(modulus, b, d));
                            for f in fs.iter().filter(|&f| admit(f)) {
                                let r = Card([a, b, c, d, e, f]);
                                if r.is_vertex(modulus) {
                                    local.insert(r.canonical());
                                }
                            }
                        }
                    }
                }
            }
            local
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Integer K4-types with every color at most `cap`.
pub fn g4_window(cap: u32) -> Result<K4Graph, K4Error> {
    K4Graph::link(Modulus::Integers, enumerate(Modulus::Integers, cap))
}

/// `G_{n,4}`, enumerated directly over `Z_n`.
pub fn build_g_n4(n: u32) -> Result<K4Graph, K4Error> {
    let modulus = Modulus::cyclic(n).map_err(|_| K4Error::BadOrder(n))?;
    if n < 5 {
        return Err(K4Error::BadOrder(n));
    }
    K4Graph::link(modulus, enumerate(modulus, (n - 1) / 2))
}

/// The subgraph induced by TMC types.
pub fn tmc_subgraph(g: &K4Graph) -> K4Graph {
    g.induced(Card::is_tmc)
}
