use serde::Serialize;

use crate::error::{Error, Result};
use crate::numcore::Vec2;
use crate::symcheck::Axis;

use super::{ConicCoeffs, ZERO_RTOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateConic {
    Point,
    Empty,
    IntersectingLines,
    ParallelLines,
    CoincidentLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConicKind {
    Circle,
    Ellipse,
    Parabola,
    Hyperbola,
    Degenerate(DegenerateConic),
}

impl ConicKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConicKind::Circle => "circle",
            ConicKind::Ellipse => "ellipse",
            ConicKind::Parabola => "parabola",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Degenerate(_) => "degenerate",
        }
    }
}

/// Canonical parameters, available only when there is no xy term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "form")]
pub enum ConicShape {
    /// `(x−h)² + (y−k)² = r²`.
    Circle { r: f64 },
    /// Semi-axes `a ≥ b`; `major` is the axis direction of `a`.
    Ellipse { a: f64, b: f64, major: char },
    /// `a` is the transverse semi-axis along `transverse`.
    Hyperbola { a: f64, b: f64, transverse: char },
    /// `(u − u₀)² = 4p (v − v₀)` with `v` the direction of `axis`.
    Parabola { p: f64, axis: char },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CanonicalConic {
    pub kind: ConicKind,
    pub discriminant: f64,
    /// Center, or vertex for a parabola.
    pub center: Option<Vec2>,
    pub shape: Option<ConicShape>,
}

fn axis_char(axis: Axis) -> char {
    match axis {
        Axis::X => 'x',
        Axis::Y => 'y',
        Axis::Z => 'z',
    }
}

/// Classifies `Ax² + Bxy + Cy² + Dx + Ey + F = 0`.
///
/// The discriminant `B² − 4AC` picks ellipse (< 0), parabola (= 0) or
/// hyperbola (> 0); degenerate loci are detected after completing the
/// square, or from the 3×3 determinant when `B ≠ 0`.
pub fn classify_conic(c: &ConicCoeffs) -> Result<CanonicalConic> {
    let quad_scale = c.a.abs().max(c.b.abs()).max(c.c.abs());
    if quad_scale == 0.0 {
        return Err(Error::NotQuadratic);
    }
    let eps = ZERO_RTOL * quad_scale;
    let disc = c.discriminant();
    let disc_sign = if disc.abs() <= ZERO_RTOL * quad_scale * quad_scale {
        0
    } else if disc < 0.0 {
        -1
    } else {
        1
    };

    if c.b.abs() > eps {
        return Ok(classify_rotated(c, disc, disc_sign));
    }

    let (a, cc) = (
        if c.a.abs() > eps { c.a } else { 0.0 },
        if c.c.abs() > eps { c.c } else { 0.0 },
    );

    let result = |kind, center: Option<Vec2>, shape| CanonicalConic {
        kind,
        discriminant: disc,
        center,
        shape,
    };

    if a != 0.0 && cc != 0.0 {
        let h = -c.d / (2.0 * a);
        let k = -c.e / (2.0 * cc);
        let center = Vec2::new(h, k);
        // a(x−h)² + c(y−k)² = rhs
        let rhs = a * h * h + cc * k * k - c.f;
        let rhs_scale = c.f.abs().max((a * h * h).abs()).max((cc * k * k).abs());
        let rhs_zero = rhs.abs() <= ZERO_RTOL * rhs_scale.max(f64::MIN_POSITIVE);
        if a.signum() == cc.signum() {
            if rhs_zero {
                return Ok(result(ConicKind::Degenerate(DegenerateConic::Point), Some(center), None));
            }
            if (rhs / a) < 0.0 {
                return Ok(result(ConicKind::Degenerate(DegenerateConic::Empty), None, None));
            }
            let (ax, ay) = (rhs / a, rhs / cc);
            if (a - cc).abs() <= ZERO_RTOL * quad_scale {
                let r = ax.sqrt();
                return Ok(result(ConicKind::Circle, Some(center), Some(ConicShape::Circle { r })));
            }
            let (major, major_sq, minor_sq) =
                if ax >= ay { (Axis::X, ax, ay) } else { (Axis::Y, ay, ax) };
            let shape = ConicShape::Ellipse {
                a: major_sq.sqrt(),
                b: minor_sq.sqrt(),
                major: axis_char(major),
            };
            return Ok(result(ConicKind::Ellipse, Some(center), Some(shape)));
        }
        if rhs_zero {
            return Ok(result(
                ConicKind::Degenerate(DegenerateConic::IntersectingLines),
                Some(center),
                None,
            ));
        }
        let (ax, ay) = (rhs / a, rhs / cc);
        let (transverse, t_sq, c_sq) =
            if ax > 0.0 { (Axis::X, ax, -ay) } else { (Axis::Y, ay, -ax) };
        let shape = ConicShape::Hyperbola {
            a: t_sq.sqrt(),
            b: c_sq.sqrt(),
            transverse: axis_char(transverse),
        };
        return Ok(result(ConicKind::Hyperbola, Some(center), Some(shape)));
    }

    // exactly one squared variable: parabola or a pair of parallel lines
    let (q, lin_sq, lin_other, sq_axis, other_axis) = if a != 0.0 {
        (a, c.d, c.e, Axis::X, Axis::Y)
    } else {
        (cc, c.e, c.d, Axis::Y, Axis::X)
    };
    let u0 = -lin_sq / (2.0 * q);
    let f_shift = c.f - q * u0 * u0;
    let lin_scale = c.to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if lin_other.abs() > ZERO_RTOL * lin_scale {
        // q(u−u₀)² + e·v + f' = 0  ⇒  (u−u₀)² = −(e/q)(v − v₀)
        let v0 = -f_shift / lin_other;
        let vertex = match sq_axis {
            Axis::X => Vec2::new(u0, v0),
            _ => Vec2::new(v0, u0),
        };
        let shape = ConicShape::Parabola { p: -lin_other / (4.0 * q), axis: axis_char(other_axis) };
        return Ok(result(ConicKind::Parabola, Some(vertex), Some(shape)));
    }
    let f_scale = c.f.abs().max((q * u0 * u0).abs());
    let kind = if f_shift.abs() <= ZERO_RTOL * f_scale.max(f64::MIN_POSITIVE) {
        DegenerateConic::CoincidentLines
    } else if -f_shift / q > 0.0 {
        DegenerateConic::ParallelLines
    } else {
        DegenerateConic::Empty
    };
    Ok(result(ConicKind::Degenerate(kind), None, None))
}

fn classify_rotated(c: &ConicCoeffs, disc: f64, disc_sign: i8) -> CanonicalConic {
    let ConicCoeffs { a, b, c: cc, d, e, f } = *c;
    // determinant of the symmetric 3×3 matrix of the conic
    let det = a * (cc * f - e * e / 4.0) - (b / 2.0) * (b / 2.0 * f - e * d / 4.0)
        + (d / 2.0) * (b / 2.0 * e / 2.0 - cc * d / 2.0);
    let scale = c.to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let degenerate = det.abs() <= ZERO_RTOL * scale * scale * scale;
    let kind = match (disc_sign, degenerate) {
        (-1, true) => ConicKind::Degenerate(DegenerateConic::Point),
        (1, true) => ConicKind::Degenerate(DegenerateConic::IntersectingLines),
        (_, true) => ConicKind::Degenerate(DegenerateConic::ParallelLines),
        (-1, false) if (a + cc) * det > 0.0 => ConicKind::Degenerate(DegenerateConic::Empty),
        (-1, false) => ConicKind::Ellipse,
        (0, false) => ConicKind::Parabola,
        _ => ConicKind::Hyperbola,
    };
    CanonicalConic { kind, discriminant: disc, center: None, shape: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_from_center_and_radius() {
        let (h, k, r) = (2.0, -3.0, 1.5);
        let c = ConicCoeffs::new(1.0, 0.0, 1.0, -2.0 * h, -2.0 * k, h * h + k * k - r * r);
        let out = classify_conic(&c).unwrap();
        assert_eq!(out.kind, ConicKind::Circle);
        assert_eq!(out.center, Some(Vec2::new(h, k)));
        assert_eq!(out.shape, Some(ConicShape::Circle { r }));
    }

    #[test]
    fn line_pair() {
        let out = classify_conic(&ConicCoeffs::new(1.0, 0.0, -1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(out.kind, ConicKind::Degenerate(DegenerateConic::IntersectingLines));
    }

    #[test]
    fn ellipse_by_hand() {
        // x² + 4y² = 4  ⇒  x²/4 + y²/1 = 1
        let out = classify_conic(&ConicCoeffs::new(1.0, 0.0, 4.0, 0.0, 0.0, -4.0)).unwrap();
        assert_eq!(out.kind, ConicKind::Ellipse);
        assert_eq!(out.shape, Some(ConicShape::Ellipse { a: 2.0, b: 1.0, major: 'x' }));
    }

    #[test]
    fn unit_hyperbola_and_parabola() {
        let h = classify_conic(&ConicCoeffs::new(1.0, 0.0, -1.0, 0.0, 0.0, -1.0)).unwrap();
        assert_eq!(h.kind, ConicKind::Hyperbola);
        assert_eq!(h.shape, Some(ConicShape::Hyperbola { a: 1.0, b: 1.0, transverse: 'x' }));

        // y = x²  ⇒  x² − y = 0
        let p = classify_conic(&ConicCoeffs::new(1.0, 0.0, 0.0, 0.0, -1.0, 0.0)).unwrap();
        assert_eq!(p.kind, ConicKind::Parabola);
        assert_eq!(p.discriminant, 0.0);
        assert_eq!(p.center, Some(Vec2::new(0.0, 0.0)));
        assert_eq!(p.shape, Some(ConicShape::Parabola { p: 0.25, axis: 'y' }));
    }

    #[test]
    fn sideways_parabola_vertex() {
        // (y − 1)² = 2(x + 3)  ⇒  y² − 2y − 2x − 5 = 0
        let p = classify_conic(&ConicCoeffs::new(0.0, 0.0, 1.0, -2.0, -2.0, -5.0)).unwrap();
        assert_eq!(p.kind, ConicKind::Parabola);
        assert_eq!(p.center, Some(Vec2::new(-3.0, 1.0)));
        assert_eq!(p.shape, Some(ConicShape::Parabola { p: 0.5, axis: 'x' }));
    }

    #[test]
    fn degenerate_cases() {
        let point = classify_conic(&ConicCoeffs::new(1.0, 0.0, 2.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(point.kind, ConicKind::Degenerate(DegenerateConic::Point));
        let empty = classify_conic(&ConicCoeffs::new(1.0, 0.0, 1.0, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(empty.kind, ConicKind::Degenerate(DegenerateConic::Empty));
        let parallel = classify_conic(&ConicCoeffs::new(1.0, 0.0, 0.0, 0.0, 0.0, -1.0)).unwrap();
        assert_eq!(parallel.kind, ConicKind::Degenerate(DegenerateConic::ParallelLines));
        let double = classify_conic(&ConicCoeffs::new(0.0, 0.0, 1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(double.kind, ConicKind::Degenerate(DegenerateConic::CoincidentLines));
    }

    #[test]
    fn cross_term_uses_discriminant_only() {
        // x² + xy + y² = 1: Δ = −3
        let e = classify_conic(&ConicCoeffs::new(1.0, 1.0, 1.0, 0.0, 0.0, -1.0)).unwrap();
        assert_eq!(e.kind, ConicKind::Ellipse);
        assert!(e.shape.is_none());
        // xy = 1
        let h = classify_conic(&ConicCoeffs::new(0.0, 1.0, 0.0, 0.0, 0.0, -1.0)).unwrap();
        assert_eq!(h.kind, ConicKind::Hyperbola);
        // xy = 0
        let lines = classify_conic(&ConicCoeffs::new(0.0, 1.0, 0.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(lines.kind, ConicKind::Degenerate(DegenerateConic::IntersectingLines));
        // (x + y)² = x − y is a parabola
        let p = classify_conic(&ConicCoeffs::new(1.0, 2.0, 1.0, -1.0, 1.0, 0.0)).unwrap();
        assert_eq!(p.kind, ConicKind::Parabola);
    }

    #[test]
    fn not_quadratic() {
        assert_eq!(
            classify_conic(&ConicCoeffs::new(0.0, 0.0, 0.0, 1.0, 1.0, 0.0)),
            Err(Error::NotQuadratic)
        );
    }
}
