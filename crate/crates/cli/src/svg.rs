//! Deformed-shape drawing.

use std::fmt::Write;

use symtruss_core::trussfem::{SolveResult, TrussModel};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 60.0;
const LEGEND_HEIGHT: f64 = 60.0;

fn bar_color(force: f64, max_abs: f64) -> &'static str {
    if force.abs() <= 1e-9 * max_abs.max(1.0) {
        "black"
    } else if force < 0.0 {
        "red"
    } else {
        "blue"
    }
}

/// Undeformed geometry in grey, deformed geometry (displacements times
/// `scale`) in black with bars colored by axial force sign.
pub fn render(model: &TrussModel, result: &SolveResult, scale: f64) -> String {
    let original: Vec<(f64, f64)> = model.nodes().iter().map(|n| (n.x, n.y)).collect();
    let deformed: Vec<(f64, f64)> = original
        .iter()
        .zip(&result.displacements)
        .map(|(&(x, y), d)| (x + scale * d.ux, y + scale * d.uy))
        .collect();

    let all = original.iter().chain(&deformed);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let k = (WIDTH - 2.0 * MARGIN) / span;
    let height = (y1 - y0) * k + 2.0 * MARGIN + LEGEND_HEIGHT;
    let px = |(x, y): (f64, f64)| ((x - x0) * k + MARGIN, (y1 - y) * k + MARGIN);

    let max_force = result.axial_forces.iter().fold(0.0_f64, |m, a| m.max(a.force.abs()));
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height:.1}" viewBox="0 0 {WIDTH} {height:.1}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    writeln!(s, r#"<g id="undeformed" stroke="grey" stroke-width="2" stroke-dasharray="6 4">"#).unwrap();
    for e in 0..model.bars().len() {
        let (i, j) = model.bar_nodes(e);
        let (a, b) = (px(original[i]), px(original[j]));
        writeln!(s, r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g id="deformed" stroke-width="3">"#).unwrap();
    for (e, bar) in model.bars().iter().enumerate() {
        let (i, j) = model.bar_nodes(e);
        let (a, b) = (px(deformed[i]), px(deformed[j]));
        let force = result.axial_forces[e].force;
        writeln!(
            s,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}"><title>{} N = {:.0}</title></line>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            bar_color(force, max_force),
            bar.id,
            force
        )
        .unwrap();
    }
    for (n, &p) in model.nodes().iter().zip(&deformed) {
        let (x, y) = px(p);
        writeln!(s, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#).unwrap();
        writeln!(
            s,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">{}</text>"#,
            x + 6.0,
            y - 6.0,
            n.id
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    let ly = height - LEGEND_HEIGHT + 20.0;
    writeln!(
        s,
        r#"<g id="legend" font-family="sans-serif" font-size="13"><text x="{MARGIN}" y="{ly:.1}">grey dashed: undeformed; black nodes: deformed shape, displacements ×{scale}</text><text x="{MARGIN}" y="{:.1}"><tspan fill="red">red: compression</tspan>, <tspan fill="blue">blue: tension</tspan></text></g>"#,
        ly + 20.0
    )
    .unwrap();
    writeln!(s, "</svg>").unwrap();
    s
}
