use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numcore::{Line3, Plane3, Vec3};
use crate::symcheck::{Axis, Figure};

use super::{QuadricCoeffs, ZERO_RTOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OtherQuadric {
    Point,
    Empty,
    Cone,
    Line,
    EllipticCylinder,
    HyperbolicCylinder,
    ParabolicCylinder,
    IntersectingPlanes,
    ParallelPlanes,
    CoincidentPlanes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadricKind {
    Sphere,
    Ellipsoid,
    EllipticParaboloid,
    HyperbolicParaboloid,
    HyperboloidOneSheet,
    HyperboloidTwoSheets,
    DegenerateOrOther(OtherQuadric),
}

impl QuadricKind {
    pub fn name(&self) -> &'static str {
        match self {
            QuadricKind::Sphere => "sphere",
            QuadricKind::Ellipsoid => "ellipsoid",
            QuadricKind::EllipticParaboloid => "elliptic_paraboloid",
            QuadricKind::HyperbolicParaboloid => "hyperbolic_paraboloid",
            QuadricKind::HyperboloidOneSheet => "hyperboloid_one_sheet",
            QuadricKind::HyperboloidTwoSheets => "hyperboloid_two_sheets",
            QuadricKind::DegenerateOrOther(_) => "degenerate_or_other",
        }
    }

    pub fn tag(&self) -> Option<&'static str> {
        let QuadricKind::DegenerateOrOther(other) = self else {
            return None;
        };
        Some(match other {
            OtherQuadric::Point => "point",
            OtherQuadric::Empty => "empty",
            OtherQuadric::Cone => "cone",
            OtherQuadric::Line => "line",
            OtherQuadric::EllipticCylinder => "elliptic_cylinder",
            OtherQuadric::HyperbolicCylinder => "hyperbolic_cylinder",
            OtherQuadric::ParabolicCylinder => "parabolic_cylinder",
            OtherQuadric::IntersectingPlanes => "intersecting_planes",
            OtherQuadric::ParallelPlanes => "parallel_planes",
            OtherQuadric::CoincidentPlanes => "coincident_planes",
        })
    }
}

/// Role of one coordinate in the canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "role")]
pub enum Term {
    /// `sign · (x − h)² / denominator` on the left-hand side.
    Squared { sign: f64, denominator: f64 },
    /// `coefficient · (x − h)` on the right-hand side.
    Linear { coefficient: f64 },
    Absent,
}

/// Canonical form
/// `Σ sign·(xᵢ − hᵢ)²/dᵢ = rhs + Σ cₖ·(xₖ − hₖ)`, related to the input by
/// `input = scale · (lhs − rhs_side)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CanonicalQuadric {
    pub kind: QuadricKind,
    /// Center or vertex; coordinates of absent variables are zero.
    pub center: Vec3,
    pub terms: [Term; 3],
    /// 1 for central forms with a nonzero constant, 0 otherwise.
    pub rhs: f64,
    pub scale: f64,
}

impl CanonicalQuadric {
    /// Sign of each squared term (+1/−1), 0 when not squared.
    pub fn sign_pattern(&self) -> [i8; 3] {
        self.terms.map(|t| match t {
            Term::Squared { sign, .. } if sign > 0.0 => 1,
            Term::Squared { .. } => -1,
            _ => 0,
        })
    }

    /// Squared denominators (a², b², c²) for squared variables.
    pub fn denominators(&self) -> [Option<f64>; 3] {
        self.terms.map(|t| match t {
            Term::Squared { denominator, .. } => Some(denominator),
            _ => None,
        })
    }

    /// Semi-axis lengths `√dᵢ`.
    pub fn semi_axes(&self) -> [Option<f64>; 3] {
        self.denominators().map(|d| d.map(f64::sqrt))
    }

    pub fn radius(&self) -> Option<f64> {
        match self.kind {
            QuadricKind::Sphere => self.semi_axes()[0],
            _ => None,
        }
    }

    fn squared_axes(&self) -> Vec<usize> {
        (0..3).filter(|&i| matches!(self.terms[i], Term::Squared { .. })).collect()
    }

    /// Expands back to raw coefficients.
    pub fn expand(&self) -> QuadricCoeffs {
        let h = self.center.components();
        let mut quad = [0.0; 3];
        let mut lin = [0.0; 3];
        let mut constant = -self.rhs;
        for i in 0..3 {
            match self.terms[i] {
                Term::Squared { sign, denominator } => {
                    let q = sign / denominator;
                    quad[i] = q;
                    lin[i] = -2.0 * q * h[i];
                    constant += q * h[i] * h[i];
                }
                Term::Linear { coefficient } => {
                    lin[i] = -coefficient;
                    constant += coefficient * h[i];
                }
                Term::Absent => {}
            }
        }
        QuadricCoeffs {
            xx: quad[0],
            yy: quad[1],
            zz: quad[2],
            x: lin[0],
            y: lin[1],
            z: lin[2],
            constant,
            ..Default::default()
        }
        .scaled(self.scale)
    }
}

const VARS: [char; 3] = ['x', 'y', 'z'];

fn shifted(var: char, h: f64) -> String {
    if h == 0.0 {
        var.to_string()
    } else if h > 0.0 {
        format!("({var} - {h})")
    } else {
        format!("({var} + {})", -h)
    }
}

impl fmt::Display for CanonicalQuadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.center.components();
        let mut lhs = String::new();
        let mut rhs_parts = Vec::new();
        for i in 0..3 {
            match self.terms[i] {
                Term::Squared { sign, denominator } => {
                    let op = match (lhs.is_empty(), sign > 0.0) {
                        (true, true) => "",
                        (true, false) => "-",
                        (false, true) => " + ",
                        (false, false) => " - ",
                    };
                    lhs.push_str(&format!("{op}{}^2/{denominator}", shifted(VARS[i], h[i])));
                }
                Term::Linear { coefficient } => {
                    rhs_parts.push(format!("{coefficient}*{}", shifted(VARS[i], h[i])));
                }
                Term::Absent => {}
            }
        }
        if self.rhs != 0.0 || rhs_parts.is_empty() {
            rhs_parts.insert(0, format!("{}", self.rhs));
        }
        write!(f, "{lhs} = {}", rhs_parts.join(" + "))
    }
}

/// Classifies an axis-aligned quadric by completing the square.
pub fn classify_quadric(q: &QuadricCoeffs) -> Result<CanonicalQuadric> {
    let quad = q.quadratic();
    let quad_scale = quad.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let all_scale = q.max_abs();
    if q.cross().iter().any(|v| v.abs() > ZERO_RTOL * all_scale) {
        return Err(Error::CrossTermsUnsupported);
    }
    if quad_scale == 0.0 {
        return Err(Error::NotQuadratic);
    }
    let quad: [f64; 3] = quad.map(|v| if v.abs() > ZERO_RTOL * quad_scale { v } else { 0.0 });
    let lin_in = q.linear();

    let mut center = [0.0; 3];
    let mut constant = q.constant;
    let mut constant_scale = q.constant.abs();
    let mut linear_axes = Vec::new();
    for i in 0..3 {
        if quad[i] != 0.0 {
            center[i] = -lin_in[i] / (2.0 * quad[i]);
            let completed = quad[i] * center[i] * center[i];
            constant -= completed;
            constant_scale = constant_scale.max(completed.abs());
        } else if lin_in[i].abs() > ZERO_RTOL * all_scale {
            linear_axes.push(i);
        }
    }
    let squared: Vec<usize> = (0..3).filter(|&i| quad[i] != 0.0).collect();

    if let Some(&first_lin) = linear_axes.first() {
        // absorb the constant into the first linear variable's vertex
        center[first_lin] = -constant / lin_in[first_lin];
        let flip = quad[squared[0]].signum();
        let scale = flip * lin_in[first_lin].abs();
        let mut terms = [Term::Absent; 3];
        for &i in &squared {
            terms[i] = Term::Squared {
                sign: (quad[i] / scale).signum(),
                denominator: (scale / quad[i]).abs(),
            };
        }
        for &k in &linear_axes {
            terms[k] = Term::Linear { coefficient: -lin_in[k] / scale };
        }
        let kind = match (squared.len(), linear_axes.len()) {
            (2, 1) if quad[squared[0]].signum() == quad[squared[1]].signum() => {
                QuadricKind::EllipticParaboloid
            }
            (2, 1) => QuadricKind::HyperbolicParaboloid,
            _ => QuadricKind::DegenerateOrOther(OtherQuadric::ParabolicCylinder),
        };
        return Ok(CanonicalQuadric { kind, center: Vec3::from_array(center), terms, rhs: 0.0, scale });
    }

    // Σ qᵢ(xᵢ − hᵢ)² = r
    let r = -constant;
    let r_is_zero = r.abs() <= ZERO_RTOL * constant_scale.max(f64::MIN_POSITIVE);
    let (scale, rhs) = if r_is_zero { (quad_scale, 0.0) } else { (r, 1.0) };
    let mut terms = [Term::Absent; 3];
    for &i in &squared {
        terms[i] = Term::Squared {
            sign: (quad[i] / scale).signum(),
            denominator: (scale / quad[i]).abs(),
        };
    }
    let positive = squared.iter().filter(|&&i| quad[i] / scale > 0.0).count();
    let negative = squared.len() - positive;

    use OtherQuadric as O;
    let kind = if r_is_zero {
        let mixed = positive > 0 && negative > 0;
        match (squared.len(), mixed) {
            (3, false) => QuadricKind::DegenerateOrOther(O::Point),
            (3, true) => QuadricKind::DegenerateOrOther(O::Cone),
            (2, false) => QuadricKind::DegenerateOrOther(O::Line),
            (2, true) => QuadricKind::DegenerateOrOther(O::IntersectingPlanes),
            _ => QuadricKind::DegenerateOrOther(O::CoincidentPlanes),
        }
    } else {
        match (squared.len(), positive) {
            (_, 0) => QuadricKind::DegenerateOrOther(O::Empty),
            (3, 3) => {
                let d: Vec<f64> = squared.iter().map(|&i| (scale / quad[i]).abs()).collect();
                let equal = d.iter().all(|v| (v - d[0]).abs() <= ZERO_RTOL * d[0]);
                if equal {
                    QuadricKind::Sphere
                } else {
                    QuadricKind::Ellipsoid
                }
            }
            (3, 2) => QuadricKind::HyperboloidOneSheet,
            (3, _) => QuadricKind::HyperboloidTwoSheets,
            (2, 2) => QuadricKind::DegenerateOrOther(O::EllipticCylinder),
            (2, _) => QuadricKind::DegenerateOrOther(O::HyperbolicCylinder),
            _ => QuadricKind::DegenerateOrOther(O::ParallelPlanes),
        }
    };
    Ok(CanonicalQuadric { kind, center: Vec3::from_array(center), terms, rhs, scale })
}

/// Symmetry elements read off the canonical form.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricSymmetry {
    pub center: Option<Vec3>,
    pub axes: Vec<Line3>,
    pub planes: Vec<Plane3>,
}

/// Even-exponent rule: a variable that appears only squared gives a
/// mirror plane through the center; a line along a variable whose two
/// complementary variables are squared is a half-turn axis; the center is
/// a symmetry center only when all three variables are squared.
pub fn symmetry_elements(cq: &CanonicalQuadric) -> QuadricSymmetry {
    if cq.kind == QuadricKind::DegenerateOrOther(OtherQuadric::Empty) {
        return QuadricSymmetry { center: None, axes: vec![], planes: vec![] };
    }
    let h = cq.center.components();
    let squared = cq.squared_axes();
    let is_squared = |i: usize| squared.contains(&i);
    let planes = squared.iter().map(|&i| Plane3::coordinate(i, h[i])).collect();
    let axes = (0..3)
        .filter(|&i| (0..3).filter(|&j| j != i).all(is_squared))
        .map(|i| Line3::new(cq.center, Axis::from_index(i).unit()).expect("unit direction"))
        .collect();
    let center = (squared.len() == 3).then_some(cq.center);
    QuadricSymmetry { center, axes, planes }
}

/// Deterministic points on the surface from its canonical parametrization.
/// Returns an empty list for kinds without a real surface parametrization
/// here (empty set, point, line, plane pairs, parabolic cylinders).
pub fn sample_surface(cq: &CanonicalQuadric, count: usize) -> Vec<Vec3> {
    let h = cq.center.components();
    let semi = cq.semi_axes();
    let sq = cq.squared_axes();
    let pos: Vec<usize> = sq.iter().copied().filter(|&i| cq.sign_pattern()[i] > 0).collect();
    let neg: Vec<usize> = sq.iter().copied().filter(|&i| cq.sign_pattern()[i] < 0).collect();
    let linear: Vec<usize> =
        (0..3).filter(|&i| matches!(cq.terms[i], Term::Linear { .. })).collect();
    let absent: Vec<usize> = (0..3).filter(|&i| cq.terms[i] == Term::Absent).collect();
    let golden = PI * (3.0 - 5f64.sqrt());

    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // t sweeps (−1, 1) and θ spirals so no sample sits on a symmetry element
        let t = -1.0 + 2.0 * (k as f64 + 0.5) / count as f64;
        let theta = golden * k as f64 + 0.1;
        let (s, c) = theta.sin_cos();
        let mut x = [0.0; 3];
        let a = |i: usize| semi[i].expect("squared axis");
        let ok = match (cq.rhs != 0.0, sq.len(), pos.len(), linear.len()) {
            (true, 3, 3, 0) => {
                let phi = (t).acos();
                x[sq[0]] = a(sq[0]) * phi.sin() * c;
                x[sq[1]] = a(sq[1]) * phi.sin() * s;
                x[sq[2]] = a(sq[2]) * phi.cos();
                true
            }
            (true, 3, 2, 0) => {
                let u = 1.5 * t;
                x[pos[0]] = a(pos[0]) * u.cosh() * c;
                x[pos[1]] = a(pos[1]) * u.cosh() * s;
                x[neg[0]] = a(neg[0]) * u.sinh();
                true
            }
            (true, 3, 1, 0) => {
                let u = 1.5 * t.abs() + 0.05;
                let sheet = if k % 2 == 0 { 1.0 } else { -1.0 };
                x[pos[0]] = sheet * a(pos[0]) * u.cosh();
                x[neg[0]] = a(neg[0]) * u.sinh() * c;
                x[neg[1]] = a(neg[1]) * u.sinh() * s;
                true
            }
            (false, 3, 1 | 2, 0) => {
                // cone: the lone-sign variable grows linearly with the radius
                let (ring, apex_axis) =
                    if pos.len() == 2 { (&pos, neg[0]) } else { (&neg, pos[0]) };
                let u = 2.0 * t;
                x[ring[0]] = a(ring[0]) * u * c;
                x[ring[1]] = a(ring[1]) * u * s;
                x[apex_axis] = a(apex_axis) * u;
                true
            }
            (false, 2, _, 1) => {
                // paraboloid: Σ sign·X²/d = c·Z
                let Term::Linear { coefficient } = cq.terms[linear[0]] else { unreachable!() };
                let (u, v) = (2.0 * t * c, 2.0 * t * s);
                x[sq[0]] = a(sq[0]) * u;
                x[sq[1]] = a(sq[1]) * v;
                let sg = cq.sign_pattern();
                x[linear[0]] =
                    (f64::from(sg[sq[0]]) * u * u + f64::from(sg[sq[1]]) * v * v) / coefficient;
                true
            }
            (true, 2, 2, 0) => {
                x[sq[0]] = a(sq[0]) * c;
                x[sq[1]] = a(sq[1]) * s;
                x[absent[0]] = 3.0 * t;
                true
            }
            (true, 2, 1, 0) => {
                let u = 1.5 * t;
                let branch = if k % 2 == 0 { 1.0 } else { -1.0 };
                x[pos[0]] = branch * a(pos[0]) * u.cosh();
                x[neg[0]] = a(neg[0]) * u.sinh();
                x[absent[0]] = 3.0 * s;
                true
            }
            _ => false,
        };
        if !ok {
            return Vec::new();
        }
        out.push(Vec3::new(x[0] + h[0], x[1] + h[1], x[2] + h[2]));
    }
    out
}

/// Implicit figure `q(p)/max|coeff| = 0`.
pub fn implicit_figure(q: &QuadricCoeffs) -> Figure<3> {
    let norm = q.max_abs().max(f64::MIN_POSITIVE);
    let q = q.scaled(1.0 / norm);
    Figure::implicit(move |p: &Vec3| q.evaluate(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::parse_quadric;
    use crate::symcheck::{is_symmetric, SymmetryElement3};

    fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs())
    }

    #[test]
    fn corrected_hyperboloid_example() {
        let q = parse_quadric("48x^2+32y^2-24z^2+96x-320y-960z-8944=0").unwrap();
        let cq = classify_quadric(&q).unwrap();
        assert_eq!(cq.kind, QuadricKind::HyperboloidOneSheet);
        assert_eq!(cq.center, Vec3::new(-1.0, 5.0, -20.0));
        let d = cq.denominators();
        for (got, want) in d.iter().zip([4.0, 6.0, 8.0]) {
            assert!(rel_eq(got.unwrap(), want, 1e-12));
        }
        assert_eq!(cq.sign_pattern(), [1, 1, -1]);
        assert!(cq.expand().relative_mismatch_up_to_scale(&q) < 1e-12);
    }

    #[test]
    fn printed_hyperboloid_constant() {
        let q = parse_quadric("48x^2+32y^2-24z^2+96x-320y-960z-8994=0").unwrap();
        let cq = classify_quadric(&q).unwrap();
        assert_eq!(cq.kind, QuadricKind::HyperboloidOneSheet);
        let d = cq.denominators();
        for (got, want) in d.iter().zip([242.0 / 48.0, 242.0 / 32.0, 242.0 / 24.0]) {
            assert!(rel_eq(got.unwrap(), want, 1e-12));
        }
    }

    #[test]
    fn sphere_radius_two() {
        let q = QuadricCoeffs::from_array([1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -4.0]);
        let cq = classify_quadric(&q).unwrap();
        assert_eq!(cq.kind, QuadricKind::Sphere);
        assert_eq!(cq.center, Vec3::zero());
        assert_eq!(cq.radius(), Some(2.0));
    }

    #[test]
    fn elliptic_paraboloid_vertex() {
        let q = QuadricCoeffs::from_array([1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0]);
        let cq = classify_quadric(&q).unwrap();
        assert_eq!(cq.kind, QuadricKind::EllipticParaboloid);
        assert_eq!(cq.center, Vec3::zero());
        assert_eq!(cq.terms[2], Term::Linear { coefficient: 1.0 });
        assert!(cq.expand().relative_mismatch_up_to_scale(&q) < 1e-15);
    }

    #[test]
    fn other_kinds() {
        let cases: [([f64; 10], QuadricKind); 8] = [
            // x²/4 + y² − z²/9 = −1 is a two-sheet hyperboloid
            (
                [0.25, 1.0, -1.0 / 9.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
                QuadricKind::HyperboloidTwoSheets,
            ),
            ([1.0, 2.0, 3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0], QuadricKind::Ellipsoid),
            ([1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0], QuadricKind::HyperbolicParaboloid),
            (
                [1.0, 1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
                QuadricKind::DegenerateOrOther(OtherQuadric::Cone),
            ),
            (
                [1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
                QuadricKind::DegenerateOrOther(OtherQuadric::Empty),
            ),
            (
                [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0],
                QuadricKind::DegenerateOrOther(OtherQuadric::EllipticCylinder),
            ),
            (
                [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0],
                QuadricKind::DegenerateOrOther(OtherQuadric::ParabolicCylinder),
            ),
            (
                [1.0, 1.0, 1.0, 0.0, 0.0, 0.0, -2.0, 0.0, 0.0, 1.0],
                QuadricKind::DegenerateOrOther(OtherQuadric::Point),
            ),
        ];
        for (coeffs, kind) in cases {
            let q = QuadricCoeffs::from_array(coeffs);
            let cq = classify_quadric(&q).unwrap();
            assert_eq!(cq.kind, kind, "{coeffs:?}");
            assert!(cq.expand().relative_mismatch_up_to_scale(&q) < 1e-12, "{coeffs:?}");
        }
    }

    #[test]
    fn errors() {
        let cross = QuadricCoeffs { xx: 1.0, xy: 1.0, ..Default::default() };
        assert_eq!(classify_quadric(&cross), Err(Error::CrossTermsUnsupported));
        let flat = QuadricCoeffs { x: 1.0, constant: 2.0, ..Default::default() };
        assert_eq!(classify_quadric(&flat), Err(Error::NotQuadratic));
    }

    #[test]
    fn hyperboloid_symmetry_elements() {
        let q = parse_quadric("48x^2+32y^2-24z^2+96x-320y-960z-8944=0").unwrap();
        let sym = symmetry_elements(&classify_quadric(&q).unwrap());
        let c = Vec3::new(-1.0, 5.0, -20.0);
        assert_eq!(sym.center, Some(c));
        assert!(sym.axes.contains(&Line3::new(c, Axis::Z.unit()).unwrap()));
        assert_eq!(sym.axes.len(), 3);
        assert_eq!(
            sym.planes,
            vec![Plane3::coordinate(0, -1.0), Plane3::coordinate(1, 5.0), Plane3::coordinate(2, -20.0)]
        );
    }

    #[test]
    fn paraboloid_symmetry_elements() {
        // 2(z − 3) = (x − 1)² + (y + 2)²/4
        let q = QuadricCoeffs::from_array([1.0, 0.25, 0.0, 0.0, 0.0, 0.0, -2.0, 1.0, -2.0, 8.0]);
        let cq = classify_quadric(&q).unwrap();
        assert_eq!(cq.kind, QuadricKind::EllipticParaboloid);
        assert!(cq.center.approx_eq(&Vec3::new(1.0, -2.0, 3.0), 1e-12));
        let sym = symmetry_elements(&cq);
        assert_eq!(sym.center, None);
        assert_eq!(sym.axes, vec![Line3::new(cq.center, Axis::Z.unit()).unwrap()]);
        assert_eq!(sym.planes, vec![Plane3::coordinate(0, 1.0), Plane3::coordinate(1, -2.0)]);
    }

    #[test]
    fn sphere_elements_and_samples() {
        let q = QuadricCoeffs::from_array([1.0, 1.0, 1.0, 0.0, 0.0, 0.0, -2.0, 0.0, 0.0, -3.0]);
        let cq = classify_quadric(&q).unwrap();
        let sym = symmetry_elements(&cq);
        assert_eq!(sym.center, Some(Vec3::new(1.0, 0.0, 0.0)));
        assert_eq!((sym.axes.len(), sym.planes.len()), (3, 3));
        let fig = implicit_figure(&q);
        let samples = sample_surface(&cq, 32);
        assert_eq!(samples.len(), 32);
        assert!(samples.iter().all(|p| fig.contains(p)));
        for plane in sym.planes {
            assert!(is_symmetric(&fig, &SymmetryElement3::Plane(plane), &samples).unwrap());
        }
    }

    #[test]
    fn samples_lie_on_surface() {
        for text in [
            "48x^2+32y^2-24z^2+96x-320y-960z-8944=0",
            "x^2 + y^2 - z^2 = -1",
            "x^2 + 2y^2 + 3z^2 = 5",
            "x^2 - y^2 - z + 4 = 0",
            "-x^2 - 3y^2 = 2z",
            "x^2 + y^2 - z^2 = 0",
            "4x^2 + y^2 = 1",
            "x^2 - y^2 = 1",
        ] {
            let q = parse_quadric(text).unwrap();
            let cq = classify_quadric(&q).unwrap();
            let fig = implicit_figure(&q);
            let samples = sample_surface(&cq, 40);
            assert_eq!(samples.len(), 40, "{text}");
            assert!(samples.iter().all(|p| fig.contains(p)), "{text}");
        }
    }

    #[test]
    fn canonical_display() {
        let q = parse_quadric("48x^2+32y^2-24z^2+96x-320y-960z-8944=0").unwrap();
        let cq = classify_quadric(&q).unwrap();
        assert_eq!(cq.to_string(), "(x + 1)^2/4 + (y - 5)^2/6 - (z + 20)^2/8 = 1");
    }
}
