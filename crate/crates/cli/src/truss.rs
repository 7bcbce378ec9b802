use std::fmt::Write;
use std::path::Path;

use symtruss_core::trussfem::{
    builtin_case, compare_results, generate_ring, solve, ComparisonReport, Direction, SolveResult,
    TrussModel,
};

use crate::args::{Format, TrussAction, TrussArgs};
use crate::exit::{self, Failure};
use crate::fmt::{fixed, sig9, signed_int};
use crate::svg;

const MM: f64 = 1e3;

/// Loads `builtin:<name>` or a JSON model file; returns the model and a
/// short label.
pub fn load_model(input: &str) -> Result<(TrussModel, String), Failure> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return Ok((builtin_case(name)?, name.to_string()));
    }
    let path = Path::new(input);
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::PARSE, format!("cannot read {input}: {e}")))?;
    let model = TrussModel::from_json(&text)?;
    let label = path.file_stem().map_or_else(|| input.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((model, label))
}

fn dir_text(d: Direction) -> &'static str {
    match d {
        Direction::X => "x",
        Direction::Y => "y",
    }
}

fn state(force: f64) -> &'static str {
    match signed_int(force).chars().next() {
        Some('+') => "tension",
        Some('-') => "compression",
        _ => "",
    }
}

fn write_table(r: &SolveResult, out: &mut String) {
    writeln!(out, "Displacements (mm)").unwrap();
    writeln!(out, "  {:<8} {:>10} {:>10}", "node", "ux", "uy").unwrap();
    for d in &r.displacements {
        writeln!(out, "  {:<8} {:>10} {:>10}", d.node, fixed(d.ux * MM, 4), fixed(d.uy * MM, 4)).unwrap();
    }
    writeln!(out, "Reactions (N)").unwrap();
    writeln!(out, "  {:<8} {:<4} {:>8}", "node", "dir", "R").unwrap();
    for re in &r.reactions {
        writeln!(out, "  {:<8} {:<4} {:>8}", re.node, dir_text(re.direction), signed_int(re.value)).unwrap();
    }
    writeln!(out, "Axial forces (N)").unwrap();
    writeln!(out, "  {:<8} {:>8}", "element", "N").unwrap();
    for a in &r.axial_forces {
        let line = format!("  {:<8} {:>8}  {}", a.element, signed_int(a.force), state(a.force));
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    writeln!(out, "‖u‖₂ = {} mm", fixed(r.displacement_norm * MM, 4)).unwrap();
    let [rx, ry] = r.equilibrium_residual;
    writeln!(out, "equilibrium residual: ({}, {}) N", sig9(rx), sig9(ry)).unwrap();
}

fn write_csv(r: &SolveResult, out: &mut String) {
    writeln!(out, "record,id,component,value,unit").unwrap();
    for d in &r.displacements {
        writeln!(out, "displacement,{},x,{},m", d.node, sig9(d.ux)).unwrap();
        writeln!(out, "displacement,{},y,{},m", d.node, sig9(d.uy)).unwrap();
    }
    for re in &r.reactions {
        writeln!(out, "reaction,{},{},{},N", re.node, dir_text(re.direction), sig9(re.value)).unwrap();
    }
    for a in &r.axial_forces {
        writeln!(out, "axial,{},,{},N", a.element, sig9(a.force)).unwrap();
    }
    writeln!(out, "norm,u,,{},m", sig9(r.displacement_norm)).unwrap();
}

fn write_result(r: &SolveResult, format: Format, out: &mut String) {
    match format {
        Format::Table => write_table(r, out),
        Format::Csv => write_csv(r, out),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(r).unwrap()).unwrap(),
    }
}

pub fn summary_line(c: &ComparisonReport) -> String {
    format!(
        "peak |N|: {:.0} → {:.0} N ({:+.1}%) ; ‖u‖₂: {:.3} → {:.3} mm ({:+.1}%)",
        c.first.peak_force,
        c.second.peak_force,
        c.peak_force_change_pct,
        c.first.displacement_norm * MM,
        c.second.displacement_norm * MM,
        c.displacement_norm_change_pct,
    )
}

fn write_comparison(c: &ComparisonReport, labels: [&str; 2], format: Format, out: &mut String) {
    let cell = |v: Option<f64>| v.map_or_else(|| "-".to_string(), signed_int);
    let mark = |v: Option<f64>, peak: f64, id: &str, peak_id: &Option<String>| {
        let peak_here = peak_id.as_deref() == Some(id) && v.is_some_and(|f| f.abs() == peak);
        format!("{}{}", cell(v), if peak_here { "*" } else { " " })
    };
    match format {
        Format::Table => {
            writeln!(out, "{:<8} {:>10} {:>10}", "element", labels[0], labels[1]).unwrap();
            for row in &c.forces {
                let line = format!(
                    "{:<8} {:>10} {:>10}",
                    row.element,
                    mark(row.first, c.first.peak_force, &row.element, &c.first.peak_element),
                    mark(row.second, c.second.peak_force, &row.element, &c.second.peak_element),
                );
                writeln!(out, "{}", line.trim_end()).unwrap();
            }
            writeln!(out, "(* peak |N| per case)").unwrap();
            writeln!(out, "{}", summary_line(c)).unwrap();
        }
        Format::Csv => {
            writeln!(out, "element,{},{}", labels[0], labels[1]).unwrap();
            let v = |x: Option<f64>| x.map_or_else(String::new, sig9);
            for row in &c.forces {
                writeln!(out, "{},{},{}", row.element, v(row.first), v(row.second)).unwrap();
            }
            writeln!(
                out,
                "peak_abs_force_N,{},{}",
                sig9(c.first.peak_force),
                sig9(c.second.peak_force)
            )
            .unwrap();
            writeln!(
                out,
                "displacement_norm_m,{},{}",
                sig9(c.first.displacement_norm),
                sig9(c.second.displacement_norm)
            )
            .unwrap();
            writeln!(out, "peak_change_pct,{}", sig9(c.peak_force_change_pct)).unwrap();
            writeln!(out, "norm_change_pct,{}", sig9(c.displacement_norm_change_pct)).unwrap();
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(c).unwrap()).unwrap(),
    }
}

pub fn run(a: &TrussArgs, out: &mut String) -> Result<(), Failure> {
    match &a.action {
        TrussAction::Solve { input, format, svg: svg_path, scale } => {
            let (model, _) = load_model(input)?;
            let r = solve(&model)?;
            write_result(&r, *format, out);
            if let Some(path) = svg_path {
                if !(scale.is_finite() && *scale >= 0.0) {
                    return Err(Failure::new(exit::PARSE, "--scale must be a finite non-negative number"));
                }
                std::fs::write(path, svg::render(&model, &r, *scale)).map_err(|e| {
                    Failure::new(exit::PARSE, format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(())
        }
        TrussAction::Compare { first, second, format } => {
            let (ma, la) = load_model(first)?;
            let (mb, lb) = load_model(second)?;
            let c = compare_results(&solve(&ma)?, &solve(&mb)?);
            write_comparison(&c, [&la, &lb], *format, out);
            Ok(())
        }
        TrussAction::Ring { input, n, format, write_model } => {
            let (module, _) = load_model(input)?;
            let ring = generate_ring(&module, *n)?;
            for w in &ring.warnings {
                eprintln!("warning: {w}");
            }
            if let Some(path) = write_model {
                std::fs::write(path, ring.model.to_json()).map_err(|e| {
                    Failure::new(exit::PARSE, format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let r = solve(&ring.model)?;
            if *format == Format::Table {
                writeln!(
                    out,
                    "ring: {n} sectors, {} nodes, {} elements",
                    ring.model.nodes().len(),
                    ring.model.bars().len()
                )
                .unwrap();
                for w in &ring.warnings {
                    writeln!(out, "warning: {w}").unwrap();
                }
            }
            write_result(&r, *format, out);
            Ok(())
        }
    }
}
