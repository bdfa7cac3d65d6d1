//! Graphs of K3-types: `G_n`, its TMC part, the component of `123`, and
//! finite windows of the integer graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;
use thiserror::Error;
use typegraph_core::graph::{bfs, components, UNREACHED};
use typegraph_core::{is_k3_type, Modulus, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum K3Error {
    #[error("n = {0} must be odd and at least 7")]
    BadOrder(u32),
    #[error("graph has no vertices")]
    Empty,
}

/// K3-types joined when they share exactly two colors (as multisets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Graph {
    modulus: Modulus,
    vertices: Vec<Triple>,
    adj: Vec<Vec<usize>>,
}

impl K3Graph {
    pub fn from_vertices(modulus: Modulus, mut vertices: Vec<Triple>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let mut by_pair: BTreeMap<[u32; 2], Vec<usize>> = BTreeMap::new();
        for (i, t) in vertices.iter().enumerate() {
            let [x, y, z] = t.colors();
            let mut pairs = [[x, y], [x, z], [y, z]];
            pairs.sort_unstable();
            for (k, p) in pairs.iter().enumerate() {
                if k == 0 || pairs[k - 1] != *p {
                    by_pair.entry(*p).or_default().push(i);
                }
            }
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for members in by_pair.values() {
            for (k, &i) in members.iter().enumerate() {
                for &j in &members[k + 1..] {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        K3Graph { modulus, vertices, adj }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn vertices(&self) -> &[Triple] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, t: &Triple) -> Option<usize> {
        self.vertices.binary_search(t).ok()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|i| self.adj[i].iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        out.sort_unstable();
        out
    }

    /// The two colors shared by adjacent K3-types.
    pub fn edge_color(&self, i: usize, j: usize) -> [u32; 2] {
        let (s, t) = (self.vertices[i].colors(), self.vertices[j].colors());
        let mut rest = t.to_vec();
        let mut out = Vec::with_capacity(2);
        for c in s {
            if let Some(k) = rest.iter().position(|&x| x == c) {
                rest.remove(k);
                out.push(c);
            }
        }
        [out[0], out[1]]
    }

    pub fn induced(&self, keep: impl Fn(&Triple) -> bool) -> K3Graph {
        let kept = self.vertices.iter().copied().filter(|t| keep(t)).collect();
        K3Graph::from_vertices(self.modulus, kept)
    }

    /// Components as vertex lists, ordered by least member.
    pub fn components(&self) -> Vec<Vec<Triple>> {
        components(&self.adj)
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.vertices[i]).collect())
            .collect()
    }

    pub fn component_of(&self, t: &Triple) -> Option<K3Graph> {
        let start = self.index_of(t)?;
        let dist = bfs(&self.adj, start);
        Some(self.induced(|u| {
            let i = self.index_of(u).unwrap();
            dist[i] != UNREACHED
        }))
    }

    /// Exact diameter of a connected graph by all-sources BFS.
    pub fn diameter(&self) -> Result<u32, K3Error> {
        if self.is_empty() {
            return Err(K3Error::Empty);
        }
        Ok((0..self.len())
            .map(|s| bfs(&self.adj, s).into_iter().filter(|&d| d != UNREACHED).max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for t in &self.vertices {
            let _ = writeln!(out, "  \"{t}\";");
        }
        for (i, j) in self.edges() {
            let [x, y] = self.edge_color(i, j);
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                self.vertices[i],
                self.vertices[j],
                typegraph_core::format_colors(&[x, y])
            );
        }
        out.push_str("}\n");
        out
    }

    /// One JSON object per vertex: colors, degree and component id.
    pub fn to_jsonl(&self) -> String {
        let comp = components(&self.adj);
        let mut id = vec![0; self.len()];
        for (k, c) in comp.iter().enumerate() {
            for &i in c {
                id[i] = k;
            }
        }
        let mut out = String::new();
        for (i, t) in self.vertices.iter().enumerate() {
            let rec = serde_json::json!({
                "type": t.to_string(),
                "colors": t.colors(),
                "degree": self.degree(i),
                "component": id[i],
            });
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        out
    }
}

/// All K3-types of `Z_n`, its TMC part and the component of `123`.
#[derive(Debug, Clone)]
pub struct G3Build {
    pub n: u32,
    /// `G_n`: every K3-type of `Z_n`.
    pub full: K3Graph,
    /// `G'_n`: TMC K3-types with `gcd(colors, n) = 1`.
    pub tmc: K3Graph,
    /// `G_{n,3}`: the component of `G'_n` containing `123`.
    pub main: K3Graph,
}

impl G3Build {
    /// Vertices of `G_n` whose colors have gcd 1.
    pub fn gcd_one_types(&self) -> Vec<Triple> {
        self.full.vertices().iter().copied().filter(|t| t.gcd() == 1).collect()
    }

    pub fn tmc_components(&self) -> Vec<Vec<Triple>> {
        self.tmc.components()
    }
}

fn gcd_with(t: &Triple, n: u32) -> u32 {
    t.gcd().gcd(&n)
}

fn sorted_triples(max: u32) -> impl Iterator<Item = [u32; 3]> {
    (0..=max).flat_map(move |x| (x..=max).flat_map(move |y| (y..=max).map(move |z| [x, y, z])))
}

pub fn build_g3(n: u32) -> Result<G3Build, K3Error> {
    if n < 7 || n % 2 == 0 {
        return Err(K3Error::BadOrder(n));
    }
    let modulus = Modulus::Cyclic(n);
    let types = sorted_triples((n - 1) / 2)
        .filter(|&c| is_k3_type(c, modulus))
        .map(Triple::new)
        .collect();
    let full = K3Graph::from_vertices(modulus, types);
    let tmc = full.induced(|t| t.is_tmc() && gcd_with(t, n) == 1);
    let main = tmc
        .component_of(&Triple::new([1, 2, 3]))
        .expect("123 is a TMC K3-type for n >= 7");
    Ok(G3Build { n, full, tmc, main })
}

/// Integer K3-types with gcd 1 and every color at most `cap`.
pub fn g3_window(cap: u32) -> K3Graph {
    let types = (0..=cap)
        .flat_map(|x| (x..=cap).filter_map(move |y| (x + y <= cap).then(|| Triple::new([x, y, x + y]))))
        .filter(|t| t.gcd() == 1)
        .collect();
    K3Graph::from_vertices(Modulus::Integers, types)
}

/// Reduces every color MOD `n` and identifies equal images; edges whose
/// ends collapse to one vertex disappear.
pub fn reduce_window(window: &K3Graph, n: u32) -> K3Graph {
    let image: Vec<Triple> = window.vertices().iter().map(|t| t.reduce(n)).collect();
    let mut vertices = image.clone();
    vertices.sort_unstable();
    vertices.dedup();
    let mut adj = vec![Vec::new(); vertices.len()];
    let pos = |t: &Triple| vertices.binary_search(t).unwrap();
    for (i, j) in window.edges() {
        let (u, v) = (pos(&image[i]), pos(&image[j]));
        if u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    K3Graph { modulus: Modulus::Cyclic(n), vertices, adj }
}
