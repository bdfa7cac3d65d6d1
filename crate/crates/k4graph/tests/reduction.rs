//! `G_{n,4}` built directly agrees with the reduction of an integer window.

use typegraph_core::graph::components;
use typegraph_k4graph::{build_g_n4, g4_window, phi_image, tmc_subgraph};

#[test]
fn direct_enumeration_equals_window_image() {
    for n in [5u32, 7, 9, 11, 13, 15] {
        let g = build_g_n4(n).unwrap();
        let window = g4_window(2 * n).unwrap();
        let image = phi_image(&window, n);
        let direct: std::collections::BTreeSet<_> = g.vertices().iter().copied().collect();
        assert_eq!(image.vertices, direct, "vertices, n = {n}");
        assert_eq!(image.edges, g.edge_pairs(), "edges, n = {n}");
        assert!(image.face_invalid.is_empty(), "n = {n}: {:?}", image.face_invalid);
    }
}

#[test]
fn vertex_counts() {
    let expected = [(5, 9), (7, 19), (9, 31), (11, 55), (13, 83), (15, 107), (17, 164), (19, 219), (21, 263)];
    for (n, count) in expected {
        assert_eq!(build_g_n4(n).unwrap().len(), count, "n = {n}");
    }
}

#[test]
fn n15_tmc_components_golden() {
    let g = build_g_n4(15).unwrap();
    let t = tmc_subgraph(&g);
    let mut lines: Vec<String> = components(&t.adjacency())
        .iter()
        .map(|c| c.iter().map(|&i| t.vertices()[i].to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    lines.sort();
    let golden = include_str!("golden/g15_tmc_components.txt");
    assert_eq!(lines.join("\n") + "\n", golden);
}
