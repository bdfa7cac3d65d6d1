//! Breadth-first utilities over adjacency lists.

use std::collections::VecDeque;

pub const UNREACHED: u32 = u32::MAX;

/// Distances from `source`; unreachable vertices hold [`UNREACHED`].
pub fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; adj.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == UNREACHED {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Connected components, each sorted, ordered by least vertex.
pub fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; adj.len()];
    let mut out = Vec::new();
    for start in 0..adj.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        label[start] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for &w in &adj[v] {
                if label[w] == usize::MAX {
                    label[w] = id;
                    members.push(w);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Largest finite distance from `source`.
pub fn eccentricity(adj: &[Vec<usize>], source: usize) -> u32 {
    bfs(adj, source).into_iter().filter(|&d| d != UNREACHED).max().unwrap_or(0)
}
