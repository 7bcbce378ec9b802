use std::fmt::Write;

use serde_json::json;
use symtruss_core::numcore::{Line3, Plane3};
use symtruss_core::quadform::{
    classify_conic, classify_quadric, parse_conic, parse_quadric, symmetry_elements, ConicShape,
    QuadricSymmetry, Term,
};

use crate::args::{EquationArgs, Format};
use crate::exit::Failure;
use crate::fmt::{num, point};

const VARS: [char; 3] = ['x', 'y', 'z'];

fn plane_text(p: &Plane3) -> String {
    let (a, b, c, d) = p.coefficients();
    let n = [a, b, c];
    let nonzero: Vec<usize> = (0..3).filter(|&i| n[i] != 0.0).collect();
    if let [i] = nonzero[..] {
        format!("{} = {}", VARS[i], num(-d / n[i], 6))
    } else {
        format!("{}x + {}y + {}z + {} = 0", num(a, 6), num(b, 6), num(c, 6), num(d, 6))
    }
}

fn axis_text(l: &Line3) -> String {
    format!(
        "through {} along {}",
        point(&l.origin().components()),
        point(&l.direction().components())
    )
}

fn symmetry_json(sym: &QuadricSymmetry) -> serde_json::Value {
    json!({
        "center": sym.center.map(|c| c.components().to_vec()),
        "axes": sym.axes.iter().map(|l| json!({
            "point": l.origin().components().to_vec(),
            "direction": l.direction().components().to_vec(),
        })).collect::<Vec<_>>(),
        "planes": sym.planes.iter().map(|p| {
            let (a, b, c, d) = p.coefficients();
            json!([a, b, c, d])
        }).collect::<Vec<_>>(),
    })
}

pub fn quadric(a: &EquationArgs, out: &mut String) -> Result<(), Failure> {
    let q = parse_quadric(&a.equation)?;
    let cq = classify_quadric(&q)?;
    let sym = a.symmetry.then(|| symmetry_elements(&cq));
    let denominators = cq.denominators();

    if a.format == Format::Json {
        let mut v = json!({
            "kind": cq.kind.name(),
            "subtype": cq.kind.tag(),
            "center": cq.center.components().to_vec(),
            "canonical": cq.to_string(),
            "denominators": denominators.to_vec(),
            "coefficients": q,
        });
        if let Some(sym) = &sym {
            v["symmetry"] = symmetry_json(sym);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
        return Ok(());
    }

    match cq.kind.tag() {
        Some(tag) => writeln!(out, "kind: {} ({tag})", cq.kind.name()).unwrap(),
        None => writeln!(out, "kind: {}", cq.kind.name()).unwrap(),
    }
    let has_linear = cq.terms.iter().any(|t| matches!(t, Term::Linear { .. }));
    let label = if has_linear { "vertex" } else { "center" };
    writeln!(out, "{label}: {}", point(&cq.center.components())).unwrap();
    writeln!(out, "canonical: {cq}").unwrap();
    let dens: Vec<String> = (0..3)
        .filter_map(|i| denominators[i].map(|d| format!("{}: {}", VARS[i], num(d, 9))))
        .collect();
    if !dens.is_empty() {
        writeln!(out, "denominators: {}", dens.join(", ")).unwrap();
    }
    if let Some(r) = cq.radius() {
        writeln!(out, "radius: {}", num(r, 9)).unwrap();
    }
    if let Some(sym) = sym {
        writeln!(out, "symmetry:").unwrap();
        match sym.center {
            Some(c) => writeln!(out, "  center: {}", point(&c.components())).unwrap(),
            None => writeln!(out, "  center: none").unwrap(),
        }
        for l in &sym.axes {
            writeln!(out, "  axis: {}", axis_text(l)).unwrap();
        }
        for p in &sym.planes {
            writeln!(out, "  plane: {}", plane_text(p)).unwrap();
        }
    }
    Ok(())
}

pub fn conic(a: &EquationArgs, out: &mut String) -> Result<(), Failure> {
    let c = parse_conic(&a.equation)?;
    let cc = classify_conic(&c)?;

    if a.format == Format::Json {
        let v = json!({
            "kind": cc.kind,
            "discriminant": cc.discriminant,
            "center": cc.center.map(|p| p.components().to_vec()),
            "shape": cc.shape,
            "coefficients": c,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
        return Ok(());
    }

    let kind = match cc.kind {
        symtruss_core::quadform::ConicKind::Degenerate(d) => {
            format!("degenerate ({})", serde_json::to_value(d).unwrap().as_str().unwrap_or("?"))
        }
        k => k.name().to_string(),
    };
    writeln!(out, "kind: {kind}").unwrap();
    writeln!(out, "discriminant: {}", num(cc.discriminant, 9)).unwrap();
    if let Some(p) = cc.center {
        let label = if matches!(cc.shape, Some(ConicShape::Parabola { .. })) { "vertex" } else { "center" };
        writeln!(out, "{label}: {}", point(&p.components())).unwrap();
    }
    match cc.shape {
        Some(ConicShape::Circle { r }) => writeln!(out, "radius: {}", num(r, 9)).unwrap(),
        Some(ConicShape::Ellipse { a, b, major }) => {
            writeln!(out, "semi-axes: a = {}, b = {} (major along {major})", num(a, 9), num(b, 9)).unwrap()
        }
        Some(ConicShape::Hyperbola { a, b, transverse }) => writeln!(
            out,
            "semi-axes: a = {}, b = {} (transverse along {transverse})",
            num(a, 9),
            num(b, 9)
        )
        .unwrap(),
        Some(ConicShape::Parabola { p, axis }) => {
            writeln!(out, "focal parameter: p = {} (axis along {axis})", num(p, 9)).unwrap()
        }
        None => {}
    }
    Ok(())
}
