use serde::Serialize;

use crate::error::{Error, Result};

use super::analysis::{solve, SolveResult};
use super::model::{Bar, NodalLoad, Node, Support, TrussModel};

/// Steel, Pa.
pub const STEEL_E: f64 = 210e9;
/// 1 cm², m².
pub const BAR_AREA: f64 = 1e-4;

/// Four-node portal: pins at A and D, gravity load at every node and a
/// lateral load at B. `braced` adds the AC and BD diagonals.
pub fn portal_frame(base_a_x: f64, braced: bool) -> TrussModel {
    let nodes = vec![
        Node::new("A", base_a_x, 0.0),
        Node::new("B", base_a_x, 2.0),
        Node::new("C", 1.0, 2.0),
        Node::new("D", 1.0, 0.0),
    ];
    let mut pairs = vec![("AB", "A", "B"), ("BC", "B", "C"), ("CD", "C", "D"), ("DA", "D", "A")];
    if braced {
        pairs.extend([("AC", "A", "C"), ("BD", "B", "D")]);
    }
    let bars = pairs
        .into_iter()
        .map(|(id, i, j)| Bar::new(id, i, j, STEEL_E, BAR_AREA))
        .collect();
    let loads = vec![
        NodalLoad::new("A", 0.0, -500.0),
        NodalLoad::new("B", 1000.0, -500.0),
        NodalLoad::new("C", 0.0, -500.0),
        NodalLoad::new("D", 0.0, -500.0),
    ];
    TrussModel::new(nodes, bars, vec![Support::pin("A"), Support::pin("D")], loads)
        .expect("portal frame is valid")
}

/// Built-in case studies: `"d2"` (symmetric frame) and `"asym"` (left
/// column moved to x = −0.5).
pub fn builtin_case(name: &str) -> Result<TrussModel> {
    match name {
        "d2" => Ok(portal_frame(-1.0, true)),
        "asym" => Ok(portal_frame(-0.5, true)),
        other => Err(Error::Model(format!("unknown builtin case {other:?} (expected d2 or asym)"))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseSummary {
    pub displacement_norm: f64,
    pub peak_element: Option<String>,
    /// Largest |N| (N).
    pub peak_force: f64,
}

impl CaseSummary {
    fn of(r: &SolveResult) -> Self {
        let peak = r.peak_axial();
        Self {
            displacement_norm: r.displacement_norm,
            peak_element: peak.map(|a| a.element.clone()),
            peak_force: peak.map_or(0.0, |a| a.force.abs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForceRow {
    pub element: String,
    pub first: Option<f64>,
    pub second: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub first: CaseSummary,
    pub second: CaseSummary,
    /// Union of element ids, first model's order then new ids.
    pub forces: Vec<ForceRow>,
    pub peak_force_change_pct: f64,
    pub displacement_norm_change_pct: f64,
}

/// `(b / a − 1)·100`; zero when both are zero.
pub fn percent_change(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (b / a - 1.0) * 100.0
    }
}

pub fn compare(a: &TrussModel, b: &TrussModel) -> Result<ComparisonReport> {
    let ra = solve(a)?;
    let rb = solve(b)?;
    Ok(compare_results(&ra, &rb))
}

pub fn compare_results(ra: &SolveResult, rb: &SolveResult) -> ComparisonReport {
    let mut forces: Vec<ForceRow> = ra
        .axial_forces
        .iter()
        .map(|f| ForceRow { element: f.element.clone(), first: Some(f.force), second: rb.axial(&f.element) })
        .collect();
    for f in &rb.axial_forces {
        if ra.axial(&f.element).is_none() {
            forces.push(ForceRow { element: f.element.clone(), first: None, second: Some(f.force) });
        }
    }
    let first = CaseSummary::of(ra);
    let second = CaseSummary::of(rb);
    ComparisonReport {
        peak_force_change_pct: percent_change(first.peak_force, second.peak_force),
        displacement_norm_change_pct: percent_change(first.displacement_norm, second.displacement_norm),
        first,
        second,
        forces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trussfem::{assemble, element_geometry, element_stiffness, reduced_stiffness};

    const MM: f64 = 1e3;

    fn check_case(name: &str, u: [f64; 4], norm: f64, forces: [f64; 6]) {
        let r = solve(&builtin_case(name).unwrap()).unwrap();
        let b = r.displacement("B").unwrap() * MM;
        let c = r.displacement("C").unwrap() * MM;
        for (got, want) in [b.x(), b.y(), c.x(), c.y()].iter().zip(u) {
            assert!((got - want).abs() < 1e-3, "{name}: {got} vs {want}");
        }
        assert!((r.displacement_norm * MM - norm).abs() < 2e-3);
        for (a, want) in r.axial_forces.iter().zip(forces) {
            assert!((a.force - want).abs() < 3.0, "{name} {}: {} vs {want}", a.element, a.force);
        }
        assert_eq!(r.axial("DA"), Some(0.0));
        assert!(r.equilibrium_residual.iter().all(|v| v.abs() < 1e-6));
    }

    #[test]
    fn symmetric_case() {
        check_case("d2", [0.1979, 0.0165, 0.1667, -0.0787], 0.271, [173.0, -328.0, -826.0, 0.0, 462.0, -952.0]);
    }

    #[test]
    fn asymmetric_case() {
        check_case("asym", [0.2624, 0.0352, 0.2376, -0.0919], 0.367, [370.0, -347.0, -964.0, 0.0, 580.0, -1086.0]);
    }

    #[test]
    fn diagonal_geometry() {
        let d2 = builtin_case("d2").unwrap();
        let g = element_geometry(&d2, 4).unwrap();
        assert!((g.length - 8f64.sqrt()).abs() < 1e-12);
        assert!((g.c - 0.5f64.sqrt()).abs() < 1e-12 && (g.s - g.c).abs() < 1e-12);
        let asym = builtin_case("asym").unwrap();
        let g = element_geometry(&asym, 4).unwrap();
        assert!((g.length - 2.5).abs() < 1e-12);
        assert!((g.c - 0.6).abs() < 1e-12 && (g.s - 0.8).abs() < 1e-12);
        let ab = element_geometry(&d2, 0).unwrap();
        assert!((element_stiffness(STEEL_E, BAR_AREA, &ab)[1][1] - 1.05e7).abs() < 1e-6);
    }

    #[test]
    fn reduced_matrix_matches_printed_integers() {
        let (kr, free) = reduced_stiffness(&builtin_case("d2").unwrap()).unwrap().unwrap();
        assert_eq!(free, vec![2, 3, 4, 5]);
        let diag = 14_212_346.0;
        let off = 3_712_346.0;
        let want = [
            [diag, -off, -10_500_000.0, 0.0],
            [-off, diag, 0.0, 0.0],
            [-10_500_000.0, 0.0, diag, off],
            [0.0, 0.0, off, diag],
        ];
        for r in 0..4 {
            for c in 0..4 {
                let w: f64 = want[r][c];
                let got = kr[(r, c)];
                if w == 0.0 {
                    assert!(got.abs() < 1e-6, "({r},{c}) = {got}");
                } else {
                    assert!(((got - w) / w).abs() < 1e-4, "({r},{c}) = {got}");
                }
            }
        }
        let k = assemble(&builtin_case("d2").unwrap()).unwrap();
        assert!((k[(2, 2)] - diag).abs() / diag < 1e-4);
        assert!(k[(2, 5)].abs() < 1e-6);
    }

    #[test]
    fn comparison_deltas() {
        let r = compare(&builtin_case("d2").unwrap(), &builtin_case("asym").unwrap()).unwrap();
        assert_eq!(r.first.peak_element.as_deref(), Some("BD"));
        assert_eq!(r.second.peak_element.as_deref(), Some("BD"));
        assert!((r.peak_force_change_pct - 14.0).abs() < 1.0);
        assert!((r.displacement_norm_change_pct - 35.0).abs() < 1.0);
        assert_eq!(r.forces.len(), 6);

        let same = compare(&builtin_case("d2").unwrap(), &builtin_case("d2").unwrap()).unwrap();
        assert_eq!(same.peak_force_change_pct, 0.0);
        assert_eq!(same.displacement_norm_change_pct, 0.0);
    }

    #[test]
    fn unbraced_frame_is_a_mechanism() {
        assert_eq!(solve(&portal_frame(-1.0, false)), Err(Error::Mechanism));
        assert!(builtin_case("d8").is_err());
    }
}
