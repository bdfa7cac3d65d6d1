use std::collections::BTreeSet;

use typegraph_core::{is_k3_type, Card, Modulus, Position, Triple};
use typegraph_hexcharts::lattice::{Site, Vertex, DIRS};
use typegraph_hexcharts::*;
use typegraph_k4graph::{cts_of, neighbor, NeighborOutcome, Which};

const Z: Modulus = Modulus::Integers;

fn card(s: &str) -> Card {
    s.parse().unwrap()
}

fn sample_charts() -> Vec<Chart> {
    let mut out = vec![
        build_chart(&card("000111"), 1, 0, 7, Z).unwrap(),
        build_chart(&card("211011"), 2, 0, 7, Z).unwrap(),
        build_chart(&card("123745"), 1, 7, 7, Z).unwrap(),
        build_chart(&card("123745"), 7, 1, 7, Z).unwrap(),
    ];
    for (a, u, w) in [(3, 1, 1), (6, 1, 2), (5, 2, 1), (4, -3, 7)] {
        out.push(Chart::from_params(ChartParams::new(a, u, w, Z), 7).unwrap());
    }
    for n in [13, 15] {
        out.push(Chart::from_params(ChartParams::new(2, 3, 5, Modulus::Cyclic(n)), 7).unwrap());
    }
    out
}

#[test]
fn chart_names() {
    let names: Vec<String> = sample_charts().iter().take(2).map(|c| c.name()).collect();
    assert_eq!(names, ["1(011)", "2(011)"]);
    let three = Chart::from_params(ChartParams::new(3, 1, 1, Z), 5).unwrap();
    assert_eq!(three.name(), "3(112)");
    assert_eq!(Chart::from_params(ChartParams::new(6, 1, 2, Z), 5).unwrap().name(), "6(123)");
}

#[test]
fn every_site_card_is_valid_and_faces_agree() {
    for chart in sample_charts() {
        let m = chart.modulus();
        for (site, c) in chart.complete_sites() {
            assert!(c.is_valid(m), "{} {site} {c}", chart.name());
            assert_eq!(c.0[0], chart.center());
            assert_eq!(c.0[3], chart.sites[&site].color);
            let (up, down) = site.faces();
            for f in [up, down] {
                let ct = chart.faces[&f];
                assert_eq!(m.color_of(ct.sides[site.dir]), chart.sites[&site].color);
            }
        }
    }
}

#[test]
fn placed_cts_obey_the_edge_rule() {
    for chart in sample_charts() {
        let m = chart.modulus();
        for ct in chart.faces.values() {
            let c = ct.colors(m);
            for k in 0..3 {
                let (i, j) = match k {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                match ct_edge_color(c.center, c.corners[i], c.corners[j], c.corners[k], m) {
                    Ok(e) => assert_eq!(e, c.edges[k]),
                    Err(_) => {
                        let hit = typegraph_core::nu_in(m, c.center, c.corners[k])
                            .intersect(&typegraph_core::nu_in(m, c.corners[i], c.corners[j]));
                        assert!(hit.contains(c.edges[k]));
                    }
                }
            }
        }
    }
}

#[test]
fn hexagons_have_k3_types_on_opposite_edges() {
    for chart in sample_charts() {
        let m = chart.modulus();
        for (v, kind) in chart.hexagons() {
            assert!(is_k3_type(kind.colors(), m));
            let ring = v.ring();
            for i in 0..3 {
                assert_eq!(chart.sites[&ring[i]].color, chart.sites[&ring[i + 3]].color);
            }
        }
    }
}

/// The ring of sites around a vertex, read in the order the algebraic trace
/// walks, matches the trace's types.
#[test]
fn chart_hexagons_match_algebraic_traces() {
    let a = Position::new(0).unwrap();
    for chart in sample_charts() {
        let m = chart.modulus();
        let inner: Vec<(Site, Card)> = chart
            .complete_sites()
            .filter(|(s, _)| {
                let (v1, v2) = s.ends();
                v1.norm() < chart.radius - 1 && v2.norm() < chart.radius - 1
            })
            .collect();
        for (site, c) in inner {
            for (variant, v) in [(Variant::Bdf, site.ends().0), (Variant::Cde, site.ends().1)] {
                let Ok(trace) = trace_hexagon(&c, a, variant, m) else { continue };
                let traced: Vec<Card> = trace.iter().map(|t| t.canonical()).collect();
                let ring = v.ring();
                let start = ring.iter().position(|s| *s == site).unwrap();
                let walk = |step: i64| -> Vec<Card> {
                    (0..6)
                        .map(|i| chart.card(ring[(start as i64 + step * i).rem_euclid(6) as usize]).unwrap().canonical())
                        .collect()
                };
                assert!(traced == walk(1) || traced == walk(-1), "{} {site} {variant}", chart.name());
            }
        }
    }
}

#[test]
fn third_ct_is_formed_by_the_incident_edges() {
    for chart in sample_charts() {
        let m = chart.modulus();
        for (site, c) in chart.complete_sites() {
            let Some(incident) = chart.incident_colors(site) else { continue };
            let cts = cts_of(&c, m).unwrap();
            let (up, down) = site.faces();
            let own: BTreeSet<[u32; 4]> = [up, down].iter().map(|f| chart.faces[f].quadruple(m)).collect();
            assert!(cts.iter().any(|t| t.quadruple == incident));
            assert!(cts.iter().filter(|t| !own.contains(&t.quadruple)).all(|t| t.quadruple == incident));
        }
    }
}

#[test]
fn kagome_lines_alternate() {
    for chart in sample_charts().into_iter().filter(|c| c.modulus() == Z) {
        let a = chart.center();
        for dir in DIRS {
            for line in -3..3 {
                let colors = chart.kagome_line(dir, line);
                assert!(colors.len() >= 4);
                assert!(colors.windows(3).all(|w| w[0] == w[2]));
                assert!(line_path(colors[0], colors[1], a, colors.len()).is_ok());
                let next = chart.kagome_line(dir, line + 1);
                let pairs = [(colors[0], colors[1]), (colors[1], colors[0])];
                let contiguous = pairs.iter().any(|&(g, f)| {
                    [(next[0], next[1]), (next[1], next[0])]
                        .iter()
                        .any(|&(f2, h)| f2 == f && (g.abs_diff(h) == 2 * a || g + h == 2 * a))
                });
                assert!(contiguous, "{} {dir} {line}", chart.name());
            }
        }
    }
}

#[test]
fn line_path_half_center() {
    assert_eq!(line_path(2, 2, 4, 5).unwrap(), vec![2; 5]);
    assert!(matches!(line_path(2, 3, 4, 2), Err(HexError::LinePath { .. })));
}

#[test]
fn hexagon_types_follow_line_labels() {
    let params = ChartParams::new(5, 2, -1, Z);
    let chart = Chart::from_params(params, 6).unwrap();
    for (v, t) in chart.hexagons() {
        assert_eq!(t, params.hexagon_type(v));
    }
    assert_eq!(chart.hexagon_type(Vertex::new(0, 0)), Triple::new([2, 1, 1]));
}

#[test]
fn folds_of_the_small_charts() {
    let one = build_chart(&card("000111"), 1, 0, 6, Z).unwrap();
    let two = build_chart(&card("211011"), 2, 0, 6, Z).unwrap();
    let three = Chart::from_params(ChartParams::new(3, 1, 1, Z), 6).unwrap();
    let six = Chart::from_params(ChartParams::new(6, 1, 2, Z), 6).unwrap();
    let got: Vec<(Option<u32>, usize)> =
        [&one, &two, &three, &six].iter().map(|c| fold(c).unwrap()).map(|f| (f.wedge_angle(), f.fold_count())).collect();
    assert_eq!(got, [(Some(30), 12), (Some(90), 4), (Some(60), 6), (None, 1)]);

    let f = fold(&three).unwrap();
    let sixths: Vec<String> = f
        .partial_cts
        .iter()
        .filter(|p| p.fraction == 6)
        .map(|p| typegraph_core::format_colors(&p.quadruple))
        .collect();
    assert_eq!(sixths, ["1113"]);
    assert!(f.partial_cts.iter().any(|p| p.fraction == 2));
}

#[test]
fn axes_of_type_one_carry_zero() {
    for chart in sample_charts() {
        for m in fold(&chart).unwrap().mirrors {
            if m.kind() == SaKind::LatticeLine {
                for (site, info) in &chart.sites {
                    if m.fixes(site.sixfold(), 6) {
                        assert_eq!(info.color, 0, "{} {m}", chart.name());
                    }
                }
            }
        }
    }
}

#[test]
fn folding_round_trips() {
    for chart in sample_charts() {
        let f = fold(&chart).unwrap();
        assert!(f.unfolds_to(&chart));
        for (s, r) in &f.orbit {
            if let (Some(x), Some(y)) = (chart.card(*s), chart.card(*r)) {
                assert_eq!(x.canonical(), y.canonical());
            }
        }
    }
}

#[test]
fn folded_one_has_loops() {
    let one = build_chart(&card("000111"), 1, 0, 6, Z).unwrap();
    let f = fold(&one).unwrap();
    assert!(!f.loops.is_empty());
    assert!(f.representatives().len() < one.sites.len() / 6);
}

#[test]
fn partner_of_110110() {
    let one = build_chart(&card("000111"), 1, 0, 6, Z).unwrap();
    let (site, _) = one.complete_sites().find(|(_, c)| c.canonical() == card("011011")).unwrap();
    match partner_vertex(&one, site).unwrap() {
        Partner::Found { site: Some(s), edge_color, .. } => {
            assert_eq!(edge_color, 1);
            match partner_vertex(&one, s).unwrap() {
                Partner::Found { card: back, .. } => assert_eq!(back, card("011011")),
                other => panic!("{other:?}"),
            }
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn partner_is_an_involution_on_types() {
    for chart in sample_charts() {
        let m = chart.modulus();
        for (site, c) in chart.complete_sites().take(60) {
            if let Partner::Found { card: u, incident, .. } = partner_vertex(&chart, site).unwrap() {
                let mut inc = [c.0[1], c.0[2], c.0[4], c.0[5]];
                inc.sort_unstable();
                assert_eq!(inc, incident);
                let back = u.orbit().into_iter().find(|x| x.0[0] == c.0[0] && {
                    let mut i = [x.0[1], x.0[2], x.0[4], x.0[5]];
                    i.sort_unstable();
                    i == inc
                });
                let back = back.expect("u keeps the center and the incident colors");
                if let NeighborOutcome::Card { card: v, .. } = neighbor(&back, Position::new(3).unwrap(), Which::First, m).unwrap() {
                    assert_eq!(v.canonical(), c.canonical(), "{} {site}", chart.name());
                }
            }
        }
    }
}

#[test]
fn partner_refused_on_central_line() {
    let chart = Chart::from_params(ChartParams::new(4, 2, 0, Z), 5).unwrap();
    let refused = chart
        .complete_sites()
        .filter(|(s, _)| matches!(partner_vertex(&chart, *s).unwrap(), Partner::None { ref reason } if reason.contains("L(2,2,4)")))
        .count();
    assert!(refused > 0);
}

#[test]
fn dual_chart_criterion() {
    let r = dual_chart_check(&card("235142"), 2, 1, 4, Z).unwrap();
    assert!(r.incident_ok && !r.same && !r.criterion);
    let mut agree = 0;
    for a in 1..6u32 {
        for d in 1..6u32 {
            for b in 0..6u32 {
                for c in 0..6u32 {
                    for e in 0..6u32 {
                        for f in 0..6u32 {
                            let t = Card([a, b, c, d, e, f]);
                            if a == d || !t.is_valid(Z) || !t.is_vertex(Z) {
                                continue;
                            }
                            let r = dual_chart_check(&t, a, d, 2, Z).unwrap();
                            assert!(r.incident_ok);
                            assert_eq!(r.same, r.criterion, "{t}");
                            agree += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(agree > 100);
}
