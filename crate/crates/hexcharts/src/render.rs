use std::fmt::Write;

use serde_json::{json, Value};

use crate::atlas::TauCell;
use crate::chart::Chart;
use crate::ct::others;
use crate::lattice::cartesian;
use crate::symmetry::Fold;

const UNIT: f64 = 40.0;

struct Canvas {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Canvas {
    fn new() -> Self {
        Canvas { body: String::new(), min: (f64::MAX, f64::MAX), max: (f64::MIN, f64::MIN) }
    }

    /// Maps a point in units of `1/scale` lattice steps to pixels.
    fn at(&mut self, p: (i64, i64), scale: f64) -> (f64, f64) {
        let (x, y) = cartesian(p, scale);
        let (x, y) = (x * UNIT, y * UNIT);
        self.min = (self.min.0.min(x), self.min.1.min(y));
        self.max = (self.max.0.max(x), self.max.1.max(y));
        (x, y)
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), class: &str) {
        writeln!(
            self.body,
            r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            a.0, a.1, b.0, b.1
        )
        .unwrap();
    }

    fn text(&mut self, p: (f64, f64), class: &str, text: &str) {
        writeln!(self.body, r#"<text class="{class}" x="{:.2}" y="{:.2}">{text}</text>"#, p.0, p.1).unwrap();
    }

    fn finish(self) -> String {
        let mut out = String::new();
        if self.body.is_empty() {
            out.push_str(r#"<svg xmlns="http://www.w3.org/2000/svg"/>"#);
            out.push('\n');
            return out;
        }
        let pad = UNIT / 2.0;
        let (x, y) = (self.min.0 - pad, self.min.1 - pad);
        let (w, h) = (self.max.0 - self.min.0 + 2.0 * pad, self.max.1 - self.min.1 + 2.0 * pad);
        writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x:.2} {y:.2} {w:.2} {h:.2}">"#).unwrap();
        out.push_str(concat!(
            "<style>",
            ".edge{stroke:#333;stroke-width:1}",
            ".loop{stroke:#333;stroke-width:4;stroke-opacity:0.35}",
            ".sa{stroke:#c00;stroke-dasharray:4 4}",
            "text{font:10px monospace;text-anchor:middle}",
            ".bullet{fill:#888}",
            "</style>\n"
        ));
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// Kagome edges, site colors and, for a fold, axes and double-trace loops.
pub fn render_chart(chart: &Chart, fold: Option<&Fold>) -> String {
    let mut canvas = Canvas::new();
    for ct in chart.faces.values() {
        let sides = ct.face.sides();
        for k in 0..3 {
            let (i, j) = others(k);
            let a = canvas.at(sides[i].doubled(), 2.0);
            let b = canvas.at(sides[j].doubled(), 2.0);
            let looped = fold.is_some_and(|f| f.orbit[&sides[i]] == f.orbit[&sides[j]]);
            canvas.line(a, b, if looped { "loop" } else { "edge" });
        }
    }
    for (site, info) in &chart.sites {
        let p = canvas.at(site.doubled(), 2.0);
        canvas.text(p, "site", &info.color.to_string());
    }
    if let Some(f) = fold {
        for m in &f.mirrors {
            let [a, b] = m.endpoints(chart.radius);
            let (a, b) = (canvas.at(a, 6.0), canvas.at(b, 6.0));
            canvas.line(a, b, "sa");
        }
    }
    canvas.finish()
}

/// The hexagonal representation: integers on TMC sites, bullets elsewhere.
pub fn render_tau(cells: &[TauCell]) -> String {
    let mut canvas = Canvas::new();
    for cell in cells {
        let p = canvas.at(cell.site.doubled(), 2.0);
        match cell.label {
            Some(label) => canvas.text(p, if cell.isolated { "isolated" } else { "label" }, &label.to_string()),
            None => canvas.text(p, "bullet", "&#8226;"),
        }
    }
    canvas.finish()
}

pub fn chart_json(chart: &Chart, fold: Option<&Fold>) -> Value {
    let modulus = chart.modulus();
    let faces: Vec<Value> = chart
        .faces
        .values()
        .map(|ct| {
            let c = ct.colors(modulus);
            json!({
                "face": ct.face.to_string(),
                "quadruple": ct.quadruple_string(modulus),
                "corners": c.corners,
                "edges": c.edges,
            })
        })
        .collect();
    let sites: Vec<Value> = chart
        .sites
        .iter()
        .map(|(s, i)| {
            json!({
                "site": s.to_string(),
                "color": i.color,
                "card": i.card.map(|c| c.to_string()),
                "type": i.card.map(|c| c.canonical().to_string()),
            })
        })
        .collect();
    let mut out = json!({
        "name": chart.name(),
        "center": chart.center(),
        "modulus": modulus.to_string(),
        "radius": chart.radius,
        "faces": faces,
        "sites": sites,
    });
    if let Some(f) = fold {
        out["fold"] = json!({
            "axes": f.mirrors.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "max_axes_at_point": f.max_mirrors,
            "wedge_angle": f.wedge_angle(),
            "fold_count": f.fold_count(),
            "representatives": f.representatives().len(),
            "loops": f.loops.iter().map(|(s, c)| json!({"site": s.to_string(), "color": c})).collect::<Vec<_>>(),
            "partial_cts": f.partial_cts.iter().map(|p| json!({
                "face": p.face.to_string(),
                "fraction": format!("1/{}", p.fraction),
                "quadruple": typegraph_core::format_colors(&p.quadruple),
            })).collect::<Vec<_>>(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::ChartParams;
    use typegraph_core::Modulus;

    #[test]
    fn empty_document() {
        assert_eq!(render_tau(&[]), "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n");
    }

    #[test]
    fn rendering_is_deterministic() {
        let chart = Chart::from_params(ChartParams::new(2, 1, 0, Modulus::Integers), 3).unwrap();
        let fold = crate::fold(&chart).unwrap();
        let a = render_chart(&chart, Some(&fold));
        assert_eq!(a, render_chart(&chart, Some(&fold)));
        assert!(a.contains("class=\"sa\""));
        assert!(a.starts_with("<svg"));
    }
}
