use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use typegraph_analysis as analysis;
use typegraph_core::{format_colors, is_k3_type, k3_less, nu_in, Card, Modulus, Position};
use typegraph_hexcharts::{self as hex, Chart, Partner};
use typegraph_k3graph::{build_g3, g3_window, reduce_window, K3Graph};
use typegraph_k4graph::{
    build_g_n4, ct_quadruple_valid, cts_of, g4_window, neighbor, phi_reduce, tmc_subgraph, K4Graph, NeighborOutcome,
    Which,
};
use typegraph_lambda::{bound_sweep, build_lambda};

use crate::args::*;
use crate::CliError;

/// Subcommand paths and the library operations each one reaches.
pub const DISPATCH: &[(&str, &[&str])] = &[
    ("card show", &["faces", "is_valid_card", "orbit", "canonical_k4", "is_tmc", "mod_reduce"]),
    ("card k3", &["is_k3_type", "k3_less"]),
    ("card edge", &["ct_edge_color"]),
    ("card nu", &["nu"]),
    ("k3 build", &["build_g3"]),
    ("k3 window", &["g3_window"]),
    ("k4 build", &["build_g_n4", "g4_window", "tmc_subgraph"]),
    ("k4 neighbors", &["neighbor"]),
    ("k4 cts", &["cts_of", "ct_quadruple_valid"]),
    ("k4 reduce", &["phi_reduce"]),
    ("hex trace", &["trace_hexagon"]),
    ("chart build", &["build_chart", "reflect_ct"]),
    ("chart fold", &["detect_sas", "fold"]),
    ("chart dual", &["dual_chart_check"]),
    ("chart partner", &["partner_vertex"]),
    ("chart from-card", &["build_chart"]),
    ("chart line", &["line_path"]),
    ("atlas", &["atlas", "triangle_corners"]),
    ("render chart", &["render"]),
    ("render tau", &["render"]),
    ("analyze metrics", &["components", "diameter", "totient"]),
    ("analyze conjecture", &["conjecture_scan"]),
    ("analyze isolated", &["isolated_census"]),
    ("analyze connectivity", &["components"]),
    ("analyze theorem1", &["theorem1_check"]),
    ("analyze scaling", &["diameter_scaling"]),
    ("analyze bounds", &["totient", "diameter"]),
    ("analyze g3", &["build_g3"]),
    ("analyze shadow", &["atlas"]),
    ("lambda diam", &["build_lambda", "lambda_diameter"]),
    ("lambda sweep", &["bound_sweep"]),
    ("lambda greedy", &["greedy_path"]),
    ("lambda check", &["greedy_path", "lambda_diameter"]),
];

fn ring(r: Ring) -> Result<Modulus, CliError> {
    Ok(match r.n {
        Some(n) => Modulus::cyclic(n)?,
        None => Modulus::Integers,
    })
}

fn pick(format: Option<Format>, allowed: &[Format]) -> Result<Format, CliError> {
    match format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(CliError::Usage(format!("format {f:?} is not available here; use one of {allowed:?}"))),
    }
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn diameter_mode(m: Mode) -> analysis::DiameterMode {
    match m {
        Mode::Exact => analysis::DiameterMode::Exact,
        Mode::Bounds => analysis::DiameterMode::Bounds,
        Mode::Auto => analysis::DiameterMode::Auto,
    }
}

/// Runs the parsed command and returns its output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Card(c) => card(c, f),
        Command::K3(c) => k3(c, f),
        Command::K4(c) => k4(c, f),
        Command::Hex(HexCmd::Trace { card, anchor, variant, ring: r }) => {
            pick(f, &[Format::Txt])?;
            let modulus = ring(*r)?;
            let cycle = hex::trace_hexagon(card, *anchor, *variant, modulus)?;
            let start = card.permute(&hex::anchor_perm(*anchor)).colors();
            let mut kept = variant.kept_face().map(|p| start[p]);
            kept.sort_unstable();
            Ok(format!("{}.{}: {}\n", start[0], format_colors(&kept), join(cycle)))
        }
        Command::Chart(c) => chart(c, f),
        Command::Atlas(a) => atlas(a, f),
        Command::Render(r) => render(r, f),
        Command::Analyze(a) => analyze(a, f),
        Command::Lambda(l) => lambda(l, f),
    }
}

fn card(cmd: &CardCmd, f: Option<Format>) -> Result<String, CliError> {
    match cmd {
        CardCmd::Show { card, ring: r } => {
            let modulus = ring(*r)?;
            let card = match r.n {
                Some(n) => card.reduce(n),
                None => *card,
            };
            let valid = card.is_valid(modulus);
            let check = card.vertex_check(modulus);
            let faces = join(card.faces());
            let realization = card.realize(modulus).map(|p| join(p));
            match pick(f, &[Format::Txt, Format::Json])? {
                Format::Json => Ok(pretty(json!({
                    "card": card.to_string(),
                    "modulus": modulus.to_string(),
                    "faces": faces,
                    "valid": valid,
                    "canonical": card.canonical().to_string(),
                    "orbit": card.orbit().len(),
                    "tmc": card.is_tmc(),
                    "gcd_one": check.gcd_one,
                    "pairs_ok": check.pairs_ok,
                    "vertex": valid && check.passes(),
                    "realization": realization,
                }))),
                _ => {
                    let mut out = String::new();
                    writeln!(out, "card {card}").unwrap();
                    writeln!(out, "modulus {modulus}").unwrap();
                    writeln!(out, "faces {faces}").unwrap();
                    writeln!(out, "valid {valid}").unwrap();
                    writeln!(out, "canonical {}", card.canonical()).unwrap();
                    writeln!(out, "orbit {}", card.orbit().len()).unwrap();
                    writeln!(out, "tmc {}", card.is_tmc()).unwrap();
                    writeln!(out, "vertex {}", valid && check.passes()).unwrap();
                    writeln!(out, "realization {}", realization.unwrap_or_else(|| "none".into())).unwrap();
                    Ok(out)
                }
            }
        }
        CardCmd::K3 { triple, than, ring: r } => {
            pick(f, &[Format::Txt])?;
            let modulus = ring(*r)?;
            let mut out = format!("{triple} k3 {}\n", is_k3_type(triple.colors(), modulus));
            if let Some(other) = than {
                writeln!(out, "{triple} < {other} {}", k3_less(*triple, *other)).unwrap();
            }
            Ok(out)
        }
        CardCmd::Edge { a, f: x, g, h, ring: r } => {
            pick(f, &[Format::Txt])?;
            Ok(format!("{}\n", hex::ct_edge_color(*a, *x, *g, *h, ring(*r)?)?))
        }
        CardCmd::Nu { x, y, ring: r } => {
            pick(f, &[Format::Txt])?;
            Ok(format!("{}\n", join(nu_in(ring(*r)?, *x, *y).iter())))
        }
    }
}

fn k3_text(name: &str, g: &K3Graph) -> String {
    let mut out = format!("{name}: {} types, {} edges, {} components\n", g.len(), g.edges().len(), g.components().len());
    writeln!(out, "  {}", join(g.vertices())).unwrap();
    out
}

fn k3(cmd: &K3Cmd, f: Option<Format>) -> Result<String, CliError> {
    match cmd {
        K3Cmd::Build { n } => {
            let g = build_g3(*n)?;
            match pick(f, &[Format::Txt, Format::Dot, Format::Json])? {
                Format::Dot => Ok(g.main.to_dot(&format!("G_{n}_3"))),
                Format::Json => Ok(g.full.to_jsonl()),
                _ => {
                    let mut out = format!("n {n}\n");
                    writeln!(out, "gcd-1 types: {}", join(g.gcd_one_types())).unwrap();
                    out.push_str(&k3_text("G_n", &g.full));
                    out.push_str(&k3_text("G'_n", &g.tmc));
                    out.push_str(&k3_text("G_n,3", &g.main));
                    Ok(out)
                }
            }
        }
        K3Cmd::Window { cap, reduce } => {
            let mut g = g3_window(*cap);
            if let Some(n) = reduce {
                typegraph_core::Modulus::cyclic(*n)?;
                g = reduce_window(&g, *n);
            }
            match pick(f, &[Format::Txt, Format::Dot, Format::Json])? {
                Format::Dot => Ok(g.to_dot("window")),
                Format::Json => Ok(g.to_jsonl()),
                _ => Ok(k3_text(&format!("window cap {cap}"), &g)),
            }
        }
    }
}

fn k4_text(g: &K4Graph) -> String {
    let adj = g.adjacency();
    let comps = typegraph_core::graph::components(&adj).len();
    let mut out = format!(
        "{} types, {} edges, {} components, max degree {}\n",
        g.len(),
        g.edges().len(),
        comps,
        adj.iter().map(Vec::len).max().unwrap_or(0)
    );
    for i in 0..g.len() {
        let quads: Vec<String> = g.cts(i).iter().map(|t| t.quadruple_string()).collect();
        writeln!(
            out,
            "{} deg {} {} cts {}",
            g.vertices()[i],
            g.degree(i),
            if g.is_tmc(i) { "tmc" } else { "-" },
            quads.join(",")
        )
        .unwrap();
    }
    out
}

fn k4(cmd: &K4Cmd, f: Option<Format>) -> Result<String, CliError> {
    match cmd {
        K4Cmd::Build { n, cap, tmc } => {
            let (mut g, name) = match (n, cap) {
                (Some(n), _) => (build_g_n4(*n)?, format!("G_{n}_4")),
                (None, Some(c)) => (g4_window(*c)?, format!("window_{c}")),
                (None, None) => return Err(CliError::Usage("give --n or --cap".into())),
            };
            if *tmc {
                g = tmc_subgraph(&g);
            }
            match pick(f, &[Format::Txt, Format::Dot, Format::Json])? {
                Format::Dot => Ok(g.to_dot(&name)),
                Format::Json => Ok(g.to_jsonl()),
                _ => Ok(k4_text(&g)),
            }
        }
        K4Cmd::Neighbors { card, ring: r, second } => {
            pick(f, &[Format::Txt])?;
            let modulus = ring(*r)?;
            let which = if *second { Which::Second } else { Which::First };
            let mut out = String::new();
            for p in 0..6 {
                let pos = Position::new(p).unwrap();
                let line = match neighbor(card, pos, which, modulus)? {
                    NeighborOutcome::Card { card, h } => format!("{card} h={h} type {}", card.canonical()),
                    NeighborOutcome::SelfLoop { h } => format!("SELF h={h}"),
                    NeighborOutcome::Absent => "ABSENT".to_string(),
                };
                writeln!(out, "{pos}: {line}").unwrap();
            }
            Ok(out)
        }
        K4Cmd::Cts { card, ring: r } => {
            pick(f, &[Format::Txt])?;
            let modulus = ring(*r)?;
            let mut out = String::new();
            for t in cts_of(card, modulus)? {
                let members: Vec<String> =
                    t.members.iter().map(|m| m.map_or("-".to_string(), |c| c.to_string())).collect();
                writeln!(
                    out,
                    "{} {} {:?} valid {}",
                    t.quadruple_string(),
                    members.join(","),
                    t.degeneracy,
                    ct_quadruple_valid(t.quadruple, modulus)
                )
                .unwrap();
            }
            Ok(out)
        }
        K4Cmd::Reduce { card, n } => {
            pick(f, &[Format::Txt])?;
            Ok(format!("{}\n", phi_reduce(card, *n)?))
        }
    }
}

fn chart_text(chart: &Chart) -> String {
    let modulus = chart.modulus();
    let mut out = format!("chart {}\n", chart.name());
    writeln!(out, "modulus {modulus} radius {}", chart.radius).unwrap();
    if let Some(ok) = chart.existence_criterion() {
        writeln!(out, "criterion c+d<=a {ok}").unwrap();
    }
    let types: BTreeSet<Card> = chart.complete_sites().map(|(_, c)| c.canonical()).collect();
    writeln!(out, "types {}: {}", types.len(), join(&types)).unwrap();
    let hexes: BTreeSet<String> = chart.hexagons().map(|(_, t)| format!("{}.{t}", chart.center())).collect();
    writeln!(out, "hexagons {}", join(&hexes)).unwrap();
    for ct in chart.faces.values() {
        let c = ct.colors(modulus);
        writeln!(out, "{} {} corners {} sides {}", ct.face, ct.quadruple_string(modulus), join(c.corners), join(c.edges))
            .unwrap();
    }
    for (site, info) in &chart.sites {
        let card = info.card.map_or("-".to_string(), |c| c.to_string());
        writeln!(out, "{site} {} {card}", info.color).unwrap();
    }
    out
}

fn fold_text(chart: &Chart, fold: &hex::Fold) -> String {
    let mut out = format!("chart {}\n", chart.name().replace('(', "[").replace(')', "]"));
    writeln!(out, "axes {}", fold.mirrors.len()).unwrap();
    for m in &fold.mirrors {
        writeln!(out, "  {m}").unwrap();
    }
    match fold.wedge_angle() {
        Some(angle) => writeln!(out, "wedge {angle} k {}", fold.fold_count()).unwrap(),
        None => writeln!(out, "wedge none k 1").unwrap(),
    }
    if let Some(c) = fold.corner {
        let at = match c {
            hex::FixedPoint::Vertex(v) => format!("vertex ({},{})", v.q, v.r),
            hex::FixedPoint::Site(s) => format!("site {s}"),
            hex::FixedPoint::Face(f) => format!("face {f}"),
        };
        writeln!(out, "corner {at}").unwrap();
    }
    writeln!(out, "representatives {}", fold.representatives().len()).unwrap();
    writeln!(out, "loops {}", fold.loops.len()).unwrap();
    for p in &fold.partial_cts {
        writeln!(out, "1/{}-CT {} at {}", p.fraction, format_colors(&p.quadruple), p.face).unwrap();
    }
    out
}

fn build(a: &ChartArgs) -> Result<Chart, CliError> {
    Ok(hex::build_chart(&a.t, a.a, a.d, a.radius, ring(a.ring)?)?)
}

fn chart(cmd: &ChartCmd, f: Option<Format>) -> Result<String, CliError> {
    match cmd {
        ChartCmd::Build(a) => {
            let chart = build(a)?;
            match pick(f, &[Format::Txt, Format::Json, Format::Svg])? {
                Format::Json => Ok(pretty(hex::chart_json(&chart, None))),
                Format::Svg => Ok(hex::render_chart(&chart, None)),
                _ => Ok(chart_text(&chart)),
            }
        }
        ChartCmd::Fold(a) => {
            let chart = build(a)?;
            let fold = hex::fold(&chart)?;
            match pick(f, &[Format::Txt, Format::Json, Format::Svg])? {
                Format::Json => Ok(pretty(hex::chart_json(&chart, Some(&fold)))),
                Format::Svg => Ok(hex::render_chart(&chart, Some(&fold))),
                _ => Ok(fold_text(&chart, &fold)),
            }
        }
        ChartCmd::Dual(a) => {
            let r = hex::dual_chart_check(&a.t, a.a, a.d, a.radius, ring(a.ring)?)?;
            let body = json!({
                "first": r.first,
                "second": r.second,
                "incident": r.incident,
                "incident_ok": r.incident_ok,
                "same": r.same,
                "criterion": r.criterion,
            });
            match pick(f, &[Format::Txt, Format::Json])? {
                Format::Json => Ok(pretty(body)),
                _ => Ok(format!(
                    "first {}\nsecond {}\nincident {} ok {}\nsame {}\ncriterion f=c,e=b {}\n",
                    r.first,
                    r.second,
                    r.incident.join(","),
                    r.incident_ok,
                    r.same,
                    r.criterion
                )),
            }
        }
        ChartCmd::Partner { chart: a, site } => {
            pick(f, &[Format::Txt])?;
            let chart = build(a)?;
            let v = chart.card(site.0).map_or("-".to_string(), |c| c.to_string());
            Ok(match hex::partner_vertex(&chart, site.0)? {
                Partner::Found { card, site: s, incident, edge_color } => format!(
                    "v {v}\nu {card}\nsite {}\nincident {}\nedge {edge_color}\n",
                    s.map_or("outside".to_string(), |s| s.to_string()),
                    join(incident)
                ),
                Partner::None { reason } => format!("v {v}\nu NONE ({reason})\n"),
            })
        }
        ChartCmd::FromCard { card, radius, ring: r } => {
            let chart = hex::chart_from_card(card, *radius, ring(*r)?)?;
            match pick(f, &[Format::Txt, Format::Json, Format::Svg])? {
                Format::Json => Ok(pretty(hex::chart_json(&chart, None))),
                Format::Svg => Ok(hex::render_chart(&chart, None)),
                _ => Ok(chart_text(&chart)),
            }
        }
        ChartCmd::Line { f: x, g, a, len } => {
            pick(f, &[Format::Txt])?;
            Ok(format!("{}\n", join(hex::line_path(*x, *g, *a, *len)?)))
        }
    }
}

fn atlas(a: &AtlasArgs, f: Option<Format>) -> Result<String, CliError> {
    let atlas = hex::Atlas::new(a.n, a.i, a.radius)?;
    let cells = atlas.tau();
    match pick(f, &[Format::Txt, Format::Json, Format::Svg])? {
        Format::Svg => Ok(hex::render_tau(&cells)),
        Format::Json => {
            let tau: Vec<serde_json::Value> = cells
                .iter()
                .map(|c| json!({"site": c.site.to_string(), "label": c.label, "isolated": c.isolated}))
                .collect();
            let mut body = json!({
                "n": a.n,
                "i": a.i,
                "types": atlas.types().len(),
                "sigma": atlas.sigma().len(),
                "tau": tau,
            });
            if a.i == 1 && a.n >= 13 {
                let r = hex::triangle_corners(a.n)?;
                body["corners"] = json!(r.corners.iter().map(|(c, k)| json!({"corner": c.describe(), "axes": k})).collect::<Vec<_>>());
                body["predicted"] = json!(r.predicted);
                body["predicted_matches"] = json!(r.predicted_matches);
            }
            Ok(pretty(body))
        }
        _ => {
            let mut out = format!("atlas n {} i {}\n", a.n, a.i);
            writeln!(out, "types {}", atlas.types().len()).unwrap();
            writeln!(out, "sigma {}", atlas.sigma().len()).unwrap();
            let labels: Vec<String> = cells
                .iter()
                .map(|c| match c.label {
                    Some(l) if c.isolated => format!("{}:{l}*", c.site),
                    Some(l) => format!("{}:{l}", c.site),
                    None => format!("{}:.", c.site),
                })
                .collect();
            writeln!(out, "tau {}", labels.join(" ")).unwrap();
            if a.i == 1 && a.n >= 13 {
                let r = hex::triangle_corners(a.n)?;
                for ((c, k), angle) in r.corners.iter().zip([30, 90, 60]) {
                    writeln!(out, "corner {angle} {} axes {k}", c.describe()).unwrap();
                }
                writeln!(out, "predicted {} matches {}", r.predicted, r.predicted_matches).unwrap();
            }
            Ok(out)
        }
    }
}

fn render(cmd: &RenderCmd, f: Option<Format>) -> Result<String, CliError> {
    pick(f, &[Format::Svg])?;
    match cmd {
        RenderCmd::Chart { chart: a, fold } => {
            let chart = build(a)?;
            let folded = if *fold { Some(hex::fold(&chart)?) } else { None };
            Ok(hex::render_chart(&chart, folded.as_ref()))
        }
        RenderCmd::Tau(a) => Ok(hex::render_tau(&hex::Atlas::new(a.n, a.i, a.radius)?.tau())),
    }
}

fn csv_or_json<T: serde::Serialize>(rows: &[T], f: Option<Format>) -> Result<String, CliError> {
    match pick(f, &[Format::Csv, Format::Json])? {
        Format::Json => Ok(pretty(serde_json::to_value(rows).expect("rows serialize"))),
        _ => Ok(analysis::rows_to_csv(rows)?),
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn analyze(cmd: &AnalyzeCmd, f: Option<Format>) -> Result<String, CliError> {
    match cmd {
        AnalyzeCmd::Metrics { range, mode } => csv_or_json(&analysis::metrics(&range.0, diameter_mode(*mode))?, f),
        AnalyzeCmd::Conjecture { range } => {
            let verdicts = analysis::conjecture_scan(&range.0)?;
            match pick(f, &[Format::Txt, Format::Json])? {
                Format::Json => Ok(pretty(serde_json::to_value(&verdicts).expect("verdicts serialize"))),
                _ => Ok(verdicts
                    .iter()
                    .map(|v| {
                        format!(
                            "n={} vertices={} {} components={} shapes={}\n",
                            v.n,
                            v.vertices,
                            if v.connected { "connected" } else { "disconnected" },
                            v.shapes.len(),
                            join(&v.shapes)
                        )
                    })
                    .collect()),
            }
        }
        AnalyzeCmd::Isolated { n } => {
            pick(f, &[Format::Txt])?;
            let c = analysis::isolated_census(*n)?;
            let mut out = format!("n {n}\nisolated {}\nchart {}\n", join(&c.graph), join(&c.chart));
            for fc in &c.formulas {
                let vertex = fc.vertex.map_or("-".to_string(), |v| v.to_string());
                writeln!(out, "formula {} = {} vertex {vertex} found {}", fc.name, fc.card, fc.found).unwrap();
            }
            for w in &c.warnings {
                writeln!(out, "{w}").unwrap();
            }
            Ok(out)
        }
        AnalyzeCmd::Connectivity { range } => {
            pick(f, &[Format::Txt])?;
            Ok(analysis::connectivity(&range.0)?
                .iter()
                .map(|(n, parts)| format!("n={n} components={parts}\n"))
                .collect())
        }
        AnalyzeCmd::Theorem1 { n } => {
            pick(f, &[Format::Txt])?;
            let r = analysis::theorem1_check(&build_g_n4(*n)?);
            let mut out = format!(
                "n {n}\nvertices {}\ndegree6 {} (tmc {})\nratio {:.6}\nviolations {}\n",
                r.vertices,
                r.v6,
                r.tmc_v6,
                r.v6_ratio(),
                r.violations.len()
            );
            for v in &r.violations {
                writeln!(out, "  {} {}", v.vertex, v.reason).unwrap();
            }
            let hist: Vec<String> = r.hexagons.iter().map(|(k, c)| format!("{k}:{c}")).collect();
            writeln!(out, "hexagons per vertex {}\ntrace failures {}", hist.join(" "), r.trace_failures).unwrap();
            Ok(out)
        }
        AnalyzeCmd::Scaling { range, mode } => {
            pick(f, &[Format::Txt])?;
            let t = analysis::diameter_scaling(&range.0, diameter_mode(*mode))?;
            let mut out = String::from("n vertices diameter ecc(011011) farthest witness distance diam/n diam/V^(1/3)\n");
            for r in &t.rows {
                writeln!(
                    out,
                    "{} {} {} {} {} {} {} {:.6} {:.6}",
                    r.n,
                    r.vertices,
                    r.diameter,
                    r.base_eccentricity,
                    r.farthest,
                    r.witness,
                    r.witness_distance.map_or("face-invalid".to_string(), |d| d.to_string()),
                    r.over_n(),
                    r.over_cuberoot()
                )
                .unwrap();
            }
            writeln!(out, "c1 {:.6}\nc2 {:.6}\nband {:.6}", t.c1, t.c2, t.band).unwrap();
            Ok(out)
        }
        AnalyzeCmd::Bounds { range } => {
            pick(f, &[Format::Txt])?;
            let rows = analysis::metrics(&range.0, analysis::DiameterMode::Auto)?;
            let b = analysis::check_bounds(&rows);
            Ok(format!(
                "ceiling violations {}\ndiam/n {:.6}..{:.6} band {:.6}\ndiam/V^(1/3) {:.6}..{:.6} band {:.6}\n",
                b.ceiling_violations.len(),
                b.over_n.0,
                b.over_n.1,
                b.over_n_band(),
                b.over_cuberoot.0,
                b.over_cuberoot.1,
                b.over_cuberoot_band()
            ))
        }
        AnalyzeCmd::G3 { range } => {
            pick(f, &[Format::Txt])?;
            let g = analysis::g3_fit(&range.0)?;
            let mut out = String::from("n vertices diameter\n");
            for (n, v, d) in &g.rows {
                writeln!(out, "{n} {v} {d}").unwrap();
            }
            writeln!(
                out,
                "C {:.6} (least ratio {:.6})\nc_lower {:.6}\nc_upper {:.6}",
                g.size_ratio.1, g.size_ratio.0, g.c_lower, g.c_upper
            )
            .unwrap();
            Ok(out)
        }
        AnalyzeCmd::Shadow { range } => {
            pick(f, &[Format::Txt])?;
            if let Some(n) = range.0.iter().find(|&&n| !is_prime(n)) {
                return Err(CliError::Domain(format!("n = {n} is not prime")));
            }
            let s = analysis::atlas_shadow(&range.0)?;
            let mut out = String::from("n vertices tmc_types all_types equal scaled\n");
            for r in &s.rows {
                let equal = r.chart_counts.windows(2).all(|w| w[0] == w[1]);
                writeln!(out, "{} {} {} {} {equal} {}", r.n, r.vertices, r.chart_counts[0], r.all_types, r.scaled).unwrap();
            }
            let fmt = |s: Option<f64>| s.map_or("undefined".to_string(), |x| format!("{x:.6}"));
            writeln!(out, "slope tmc {}\nslope all {}", fmt(s.slope), fmt(s.all_types_slope)).unwrap();
            Ok(out)
        }
    }
}

fn lambda(cmd: &LambdaCmd, f: Option<Format>) -> Result<String, CliError> {
    match cmd {
        LambdaCmd::Diam { m, n } => {
            pick(f, &[Format::Txt])?;
            let g = build_lambda(*m, *n)?;
            Ok(format!("m {m} n {n}\ngenerators {}\ndiameter {}\n", join(g.generators()), g.diameter()?))
        }
        LambdaCmd::Sweep { m, ns, powers } => {
            let orders: Vec<u64> = match (ns, powers) {
                (Some(Numbers(v)), _) => v.clone(),
                (None, Some(Numbers(k))) => k.iter().map(|k| k.pow(*m)).collect(),
                (None, None) => return Err(CliError::Usage("give --ns or --powers".into())),
            };
            let (rows, slope) = bound_sweep(*m, &orders)?;
            let slope_text = slope.map_or("undefined".to_string(), |s| format!("{s:.6}"));
            match pick(f, &[Format::Txt, Format::Csv, Format::Json])? {
                Format::Csv => {
                    let mut out = String::from("n,m,diameter,root,ratio\n");
                    for r in &rows {
                        writeln!(out, "{},{},{},{:.6},{:.6}", r.n, r.m, r.diameter, r.root, r.ratio).unwrap();
                    }
                    Ok(out)
                }
                Format::Json => Ok(pretty(json!({
                    "rows": rows.iter().map(|r| json!({"n": r.n, "m": r.m, "diameter": r.diameter, "root": r.root, "ratio": r.ratio})).collect::<Vec<_>>(),
                    "slope": slope,
                }))),
                _ => {
                    let mut out = String::from("n m diameter root ratio\n");
                    for r in &rows {
                        writeln!(out, "{} {} {} {:.6} {:.6}", r.n, r.m, r.diameter, r.root, r.ratio).unwrap();
                    }
                    writeln!(out, "slope {slope_text}").unwrap();
                    Ok(out)
                }
            }
        }
        LambdaCmd::Greedy { m, n, x, y } => {
            pick(f, &[Format::Txt])?;
            let g = build_lambda(*m, *n)?;
            let path = g.greedy_path(*x, *y);
            Ok(format!(
                "length {}\ndistance {}\npath {}\n",
                path.len() - 1,
                g.distance(*x, *y),
                join(&path)
            ))
        }
        LambdaCmd::Check { m, n, samples, seed } => {
            pick(f, &[Format::Txt])?;
            let g = build_lambda(*m, *n)?;
            let dist = g.bfs(0);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut shorter = 0;
            let mut longest = 0;
            for _ in 0..*samples {
                let (x, y) = (rng.gen_range(0..*n), rng.gen_range(0..*n));
                let len = g.greedy_path(x, y).len() - 1;
                let d = dist[((y + n - x) % n) as usize] as usize;
                shorter += usize::from(len < d);
                longest = longest.max(len);
            }
            Ok(format!(
                "samples {samples}\ngreedy shorter than bfs {shorter}\nlongest greedy {longest}\nbound {}\n",
                g.greedy_bound()
            ))
        }
    }
}
