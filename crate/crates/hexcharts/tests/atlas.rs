use std::collections::BTreeSet;

use typegraph_core::{is_k3_type, Card, Modulus};
use typegraph_hexcharts::*;

fn card(s: &str) -> Card {
    s.parse().unwrap()
}

fn names(cards: &[Card]) -> Vec<String> {
    cards.iter().map(|c| c.to_string()).collect()
}

#[test]
fn scaling_is_an_isomorphism_for_primes() {
    for n in [13u32, 17] {
        let one = Atlas::new(n, 1, Some(8)).unwrap();
        let base = one.types();
        for i in 2..=(n - 1) / 2 {
            let other = Atlas::new(n, i, Some(8)).unwrap();
            for (site, c) in one.chart.complete_sites() {
                assert_eq!(other.chart.card(site), Some(c.scale(i, n)));
            }
            let scaled: BTreeSet<Card> = base.iter().map(|c| c.scale(i, n).canonical()).collect();
            assert_eq!(scaled, other.types(), "n={n} i={i}");
        }
    }
}

#[test]
fn figure_pair_mod_13() {
    let m = Modulus::Cyclic(13);
    let (x, y) = (card("123645"), card("246153"));
    assert!(x.is_valid(m) && y.is_valid(m) && x.is_tmc() && y.is_tmc());
    assert_ne!(x.canonical(), y.canonical());
    assert!(Atlas::new(13, 1, None).unwrap().types().contains(&x.canonical()));
    assert!(Atlas::new(13, 2, None).unwrap().types().contains(&y.canonical()));
}

#[test]
fn tau_labels() {
    let isolated = |n| -> Vec<u32> {
        let mut v: Vec<u32> = Atlas::new(n, 1, None).unwrap().tau().iter().filter(|c| c.isolated).filter_map(|c| c.label).collect();
        v.sort_unstable();
        v
    };
    assert_eq!(isolated(13), [2, 6]);
    assert_eq!(isolated(15), [2, 5, 7]);
    assert_eq!(isolated(17), [2, 8]);
}

#[test]
fn tau_cells_carry_their_k3_types() {
    for n in [13u32, 15, 19] {
        let m = Modulus::Cyclic(n);
        for cell in Atlas::new(n, 1, None).unwrap().tau() {
            let Some(i) = cell.label else { continue };
            let [(p, q), (r, s)] = cell.heading;
            assert!(is_k3_type([1, p, q], m) && is_k3_type([1, r, s], m));
            let first = is_k3_type([i, p, r], m) && is_k3_type([i, q, s], m);
            let second = is_k3_type([i, p, s], m) && is_k3_type([i, q, r], m);
            assert!(first || second);
        }
    }
}

#[test]
fn census_matches_formulas_where_they_apply() {
    assert_eq!(names(&isolated_census(13).unwrap()), ["123645", "134265"]);
    let fifteen = isolated_census(15).unwrap();
    assert_eq!(names(&fifteen), ["123756", "134265", "134567"]);
    let formulas = census_formulas(15);
    assert_eq!(formulas.len(), 4);
    assert!(!formulas[2].1.is_tmc());
    for n in [15u32, 21, 27, 33, 39] {
        let third = census_formulas(n)[3].1.canonical();
        assert!(isolated_census(n).unwrap().contains(&third), "n={n}");
    }
    assert_eq!(isolated_census(17).unwrap().len(), 2);
    for n in [13u32, 17, 19, 23, 25] {
        let got: BTreeSet<Card> = isolated_census(n).unwrap().into_iter().collect();
        let want: BTreeSet<Card> = census_formulas(n).iter().map(|(_, c)| c.canonical()).collect();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn triangle_corner_reports() {
    let describe = |n| -> Vec<String> { triangle_corners(n).unwrap().corners.iter().map(|c| c.0.describe()).collect() };
    assert_eq!(describe(13), ["CH 1.000", "vertex 066166", "CT 1444"]);
    assert_eq!(describe(15), ["CH 1.000", "vertex 077177", "CH 1.555"]);
    assert_eq!(describe(17), ["CH 1.000", "vertex 088188", "CT 1666"]);
    for n in [13u32, 15, 17, 19, 21] {
        let r = triangle_corners(n).unwrap();
        assert_eq!(r.corners.iter().map(|c| c.1).collect::<Vec<_>>(), [6, 2, 3]);
        let j = (n - 1) / 2;
        assert!(r.path_colors.iter().all(|&c| c == j));
    }
    assert!(card("066166").is_valid(Modulus::Cyclic(13)));
    assert!(!triangle_corners(15).unwrap().predicted_matches);
    assert!(triangle_corners(11).is_err());
}

#[test]
fn tau_render_is_stable() {
    let atlas = Atlas::new(13, 1, None).unwrap();
    let a = render_tau(&atlas.tau());
    assert_eq!(a, render_tau(&atlas.tau()));
    assert!(a.contains(">2</text>") && a.contains(">6</text>"));
}
