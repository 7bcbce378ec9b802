use std::fmt::Write;

use symtruss_core::isometry::{
    cyclic, dihedral, rotation2, verify_group, Isometry, IsometryKind, Mirror, Parameter,
    SymmetryGroup,
};
use symtruss_core::numcore::{Mat2, Vec2};

use crate::args::{GroupArgs, GroupKind, RotateArgs};
use crate::exit::{self, Failure};
use crate::fmt::num;

fn angle_text(rad: f64, degrees: bool) -> String {
    if degrees {
        format!("{}°", num(rad.to_degrees(), 6))
    } else {
        format!("{} rad", num(rad, 6))
    }
}

fn describe(g: &Isometry<2>, degrees: bool) -> String {
    match g.parameter() {
        Parameter::Angle(a) => format!("rotation by {}", angle_text(a, degrees)),
        Parameter::Mirror(Mirror::Line(a)) => {
            format!("reflection in line at {}", angle_text(a, degrees))
        }
        other => match g.kind() {
            IsometryKind::Rotation => format!("rotation ({other})"),
            IsometryKind::Reflection => format!("reflection ({other})"),
        },
    }
}

fn load_matrices(path: &std::path::Path) -> Result<SymmetryGroup<2>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::PARSE, format!("{}: {e}", path.display())))?;
    let rows: Vec<[[f64; 2]; 2]> = serde_json::from_str(&text).map_err(|e| {
        Failure::new(exit::PARSE, format!("{}: expected a list of 2x2 matrices: {e}", path.display()))
    })?;
    if rows.is_empty() {
        return Err(Failure::new(exit::PARSE, format!("{}: no matrices", path.display())));
    }
    let mut elements = Vec::with_capacity(rows.len());
    for (i, r) in rows.into_iter().enumerate() {
        let m = Mat2::try_from_rows(r)?;
        let g = Isometry::from_matrix(m).map_err(|_| {
            Failure::new(exit::GROUP_AXIOM, format!("matrix {i} is not orthogonal with det ±1"))
        })?;
        elements.push(g);
    }
    let name = path.file_stem().map_or("file".into(), |s| s.to_string_lossy().into_owned());
    Ok(SymmetryGroup::from_elements(name, elements))
}

pub fn run(a: &GroupArgs, out: &mut String) -> Result<(), Failure> {
    let group = match (&a.from_file, a.kind, a.n) {
        (Some(path), _, _) => load_matrices(path)?,
        (None, Some(GroupKind::Dihedral), Some(n)) => dihedral(n)?,
        (None, Some(GroupKind::Cyclic), Some(n)) => cyclic(n)?,
        _ => return Err(Failure::new(exit::PARSE, "expected a group kind and order")),
    };
    let verify = a.verify || a.from_file.is_some();

    let noun = if group.order() == 1 { "element" } else { "elements" };
    writeln!(out, "{}: {} {noun}", group.name(), group.order()).unwrap();
    for (i, g) in group.elements().iter().enumerate() {
        writeln!(out, "  g{i:<3} {}", describe(g, a.degrees)).unwrap();
        if a.list {
            let m = g.matrix();
            for r in 0..2 {
                writeln!(out, "        [{:>10.6} {:>10.6}]", m[(r, 0)] + 0.0, m[(r, 1)] + 0.0).unwrap();
            }
        }
    }

    if verify {
        let report = verify_group(&group);
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(out, "closure:   {}", mark(report.closure)).unwrap();
        if let Some((i, j)) = report.closure_witness {
            writeln!(out, "  g{i} ∘ g{j} is not in the set").unwrap();
        }
        writeln!(out, "identity:  {}", mark(report.has_identity)).unwrap();
        writeln!(out, "inverses:  {}", mark(report.has_inverses)).unwrap();
        if let Some(i) = report.inverse_witness {
            writeln!(out, "  inverse of g{i} is not in the set").unwrap();
        }
        if !report.is_group() {
            return Err(Failure::new(exit::GROUP_AXIOM, "the elements do not form a group"));
        }
    }
    Ok(())
}

fn parse_point(text: &str) -> Result<Vec2, Failure> {
    let bad = || Failure::new(exit::PARSE, format!("expected a point `x,y`, got {text:?}"));
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    let x: f64 = x.trim().parse().map_err(|_| bad())?;
    let y: f64 = y.trim().parse().map_err(|_| bad())?;
    Ok(Vec2::try_from_array([x, y])?)
}

pub fn rotate(a: &RotateArgs, out: &mut String) -> Result<(), Failure> {
    let theta = if a.degrees { a.angle.to_radians() } else { a.angle };
    if !theta.is_finite() {
        return Err(Failure::new(exit::PARSE, "angle must be finite"));
    }
    let p = parse_point(&a.point)?;
    let q = rotation2(theta).apply(&p);
    writeln!(out, "({}, {})", num(q.x(), 6), num(q.y(), 6)).unwrap();
    Ok(())
}
