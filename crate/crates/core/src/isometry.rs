//! Rotation and reflection matrices, the dihedral and cyclic groups, and
//! group-axiom verification.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::numcore::{Mat2, Mat3, Matrix, Vector};

/// Tolerance for the orthogonality/determinant invariant of stored isometries.
pub const ISOMETRY_TOL: f64 = 1e-12;
/// Entrywise tolerance for matrix equality in deduplication and closure checks.
pub const MATRIX_EQ_TOL: f64 = 1e-12;
/// Looser orthogonality tolerance used when classifying arbitrary matrices.
pub const CLASSIFY_TOL: f64 = 1e-9;
/// Point deduplication tolerance for orbits.
pub const ORBIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryKind {
    Rotation,
    Reflection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Rotation,
    Reflection,
    NotIsometry,
}

/// Mirror used by a reflection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mirror {
    /// Line through the origin at the given angle from +X (radians).
    Line(f64),
    /// The xy-plane (`z ↦ −z`).
    XyPlane,
    /// An improper 3D map without a simple mirror label.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Parameter {
    /// Counter-clockwise angle in radians, about +z for 3D matrices.
    Angle(f64),
    Mirror(Mirror),
    /// A proper 3D rotation whose axis is not z.
    Unlabeled,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Angle(a) => write!(f, "angle {a:.6} rad"),
            Parameter::Mirror(Mirror::Line(a)) => write!(f, "mirror line at {a:.6} rad"),
            Parameter::Mirror(Mirror::XyPlane) => write!(f, "mirror plane xy"),
            Parameter::Mirror(Mirror::Other) => write!(f, "improper"),
            Parameter::Unlabeled => write!(f, "rotation"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis2 {
    X,
    Y,
}

/// An orthogonal matrix tagged with its kind and parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry<const N: usize> {
    matrix: Matrix<N>,
    kind: IsometryKind,
    parameter: Parameter,
}

impl<const N: usize> Isometry<N> {
    /// Wraps an orthogonal matrix, checking the invariant at `1e-12`.
    pub fn from_matrix(matrix: Matrix<N>) -> Result<Self> {
        let det = matrix.det();
        if matrix.orthogonality_defect() > ISOMETRY_TOL || (det.abs() - 1.0).abs() > ISOMETRY_TOL {
            return Err(Error::NotIsometry);
        }
        let kind = if det > 0.0 { IsometryKind::Rotation } else { IsometryKind::Reflection };
        Ok(Self { matrix, kind, parameter: infer_parameter(&matrix, kind) })
    }

    pub fn identity() -> Self {
        Self {
            matrix: Matrix::identity(),
            kind: IsometryKind::Rotation,
            parameter: Parameter::Angle(0.0),
        }
    }

    pub fn matrix(&self) -> &Matrix<N> {
        &self.matrix
    }

    pub fn kind(&self) -> IsometryKind {
        self.kind
    }

    pub fn parameter(&self) -> Parameter {
        self.parameter
    }

    pub fn det(&self) -> f64 {
        self.matrix.det()
    }

    pub fn apply(&self, p: &Vector<N>) -> Vector<N> {
        self.matrix * *p
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let matrix = self.matrix * other.matrix;
        let kind = match (self.kind, other.kind) {
            (IsometryKind::Rotation, IsometryKind::Rotation)
            | (IsometryKind::Reflection, IsometryKind::Reflection) => IsometryKind::Rotation,
            _ => IsometryKind::Reflection,
        };
        Self { matrix, kind, parameter: infer_parameter(&matrix, kind) }
    }

    /// The transpose, which is the inverse of an orthogonal matrix.
    pub fn inverse(&self) -> Self {
        let matrix = self.matrix.transpose();
        Self { matrix, kind: self.kind, parameter: infer_parameter(&matrix, self.kind) }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.matrix.approx_eq(&other.matrix, MATRIX_EQ_TOL)
    }
}

impl Isometry<2> {
    pub fn angle(&self) -> Option<f64> {
        match self.parameter {
            Parameter::Angle(a) => Some(a),
            _ => None,
        }
    }
}

fn normalize_angle(a: f64) -> f64 {
    let a = a.rem_euclid(2.0 * PI);
    // values a hair below 2π come from rounding; fold them to 0
    if (2.0 * PI - a) < 1e-12 {
        0.0
    } else {
        a
    }
}

fn xy_mirror<const N: usize>() -> Matrix<N> {
    let mut diag = [1.0; N];
    diag[N - 1] = -1.0;
    Matrix::from_diagonal(diag)
}

fn infer_parameter<const N: usize>(m: &Matrix<N>, kind: IsometryKind) -> Parameter {
    let rotation_block = || normalize_angle(m[(1, 0)].atan2(m[(0, 0)]));
    match (N, kind) {
        (2, IsometryKind::Rotation) => Parameter::Angle(rotation_block()),
        (2, IsometryKind::Reflection) => {
            // [[cos 2φ, sin 2φ], [sin 2φ, −cos 2φ]] mirrors about the line at φ
            Parameter::Mirror(Mirror::Line(normalize_angle(m[(1, 0)].atan2(m[(0, 0)])) / 2.0))
        }
        (3, kind) => {
            let block_z = m[(0, 2)].abs() <= MATRIX_EQ_TOL
                && m[(1, 2)].abs() <= MATRIX_EQ_TOL
                && m[(2, 0)].abs() <= MATRIX_EQ_TOL
                && m[(2, 1)].abs() <= MATRIX_EQ_TOL;
            match kind {
                IsometryKind::Rotation if block_z && (m[(2, 2)] - 1.0).abs() <= MATRIX_EQ_TOL => {
                    Parameter::Angle(rotation_block())
                }
                IsometryKind::Rotation => Parameter::Unlabeled,
                IsometryKind::Reflection if m.approx_eq(&xy_mirror(), MATRIX_EQ_TOL) => {
                    Parameter::Mirror(Mirror::XyPlane)
                }
                IsometryKind::Reflection => Parameter::Mirror(Mirror::Other),
            }
        }
        _ => match kind {
            IsometryKind::Rotation => Parameter::Unlabeled,
            IsometryKind::Reflection => Parameter::Mirror(Mirror::Other),
        },
    }
}

/// Counter-clockwise rotation by `theta` radians.
pub fn rotation2(theta: f64) -> Isometry<2> {
    let (s, c) = theta.sin_cos();
    Isometry {
        matrix: Mat2::from_rows([[c, -s], [s, c]]),
        kind: IsometryKind::Rotation,
        parameter: Parameter::Angle(normalize_angle(theta)),
    }
}

/// Rotation by `theta` radians about the z axis.
pub fn rotation3_z(theta: f64) -> Isometry<3> {
    let (s, c) = theta.sin_cos();
    Isometry {
        matrix: Mat3::from_rows([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]),
        kind: IsometryKind::Rotation,
        parameter: Parameter::Angle(normalize_angle(theta)),
    }
}

/// Reflection about a coordinate axis.
pub fn reflection2(axis: Axis2) -> Isometry<2> {
    let (diag, angle) = match axis {
        Axis2::X => ([1.0, -1.0], 0.0),
        Axis2::Y => ([-1.0, 1.0], PI / 2.0),
    };
    Isometry {
        matrix: Mat2::from_diagonal(diag),
        kind: IsometryKind::Reflection,
        parameter: Parameter::Mirror(Mirror::Line(angle)),
    }
}

/// Horizontal mirror `diag(1, 1, −1)`.
pub fn sigma_h() -> Isometry<3> {
    Isometry {
        matrix: Mat3::from_diagonal([1.0, 1.0, -1.0]),
        kind: IsometryKind::Reflection,
        parameter: Parameter::Mirror(Mirror::XyPlane),
    }
}

/// Classifies a matrix as rotation, reflection or neither, with
/// orthogonality checked at `1e-9`.
pub fn classify_isometry<const N: usize>(m: &Matrix<N>) -> Classification {
    if m.orthogonality_defect() > CLASSIFY_TOL {
        Classification::NotIsometry
    } else if m.det() > 0.0 {
        Classification::Rotation
    } else {
        Classification::Reflection
    }
}

#[derive(Debug, Clone)]
pub struct SymmetryGroup<const N: usize> {
    name: String,
    elements: Vec<Isometry<N>>,
}

impl<const N: usize> SymmetryGroup<N> {
    /// Builds an unverified element set; duplicates are dropped.
    pub fn from_elements(name: impl Into<String>, elements: impl IntoIterator<Item = Isometry<N>>) -> Self {
        let mut unique: Vec<Isometry<N>> = Vec::new();
        for e in elements {
            if !unique.iter().any(|u| u.approx_eq(&e)) {
                unique.push(e);
            }
        }
        Self { name: name.into(), elements: unique }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[Isometry<N>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, g: &Isometry<N>) -> Option<usize> {
        self.elements.iter().position(|e| e.approx_eq(g))
    }

    pub fn contains(&self, g: &Isometry<N>) -> bool {
        self.position(g).is_some()
    }
}

/// The 2n symmetries of the regular n-gon: rotations by 2πk/n and those
/// rotations composed with the reflection about the X axis.
pub fn dihedral(n: usize) -> Result<SymmetryGroup<2>> {
    if n < 1 {
        return Err(Error::InvalidOrder { order: n, min: 1 });
    }
    let sigma = reflection2(Axis2::X);
    let rotations: Vec<_> = (0..n).map(|k| rotation2(2.0 * PI * k as f64 / n as f64)).collect();
    let reflections: Vec<_> = rotations.iter().map(|r| r.compose(&sigma)).collect();
    Ok(SymmetryGroup::from_elements(format!("D{n}"), rotations.into_iter().chain(reflections)))
}

/// The n rotations by 2πk/n.
pub fn cyclic(n: usize) -> Result<SymmetryGroup<2>> {
    if n < 1 {
        return Err(Error::InvalidOrder { order: n, min: 1 });
    }
    Ok(SymmetryGroup::from_elements(
        format!("C{n}"),
        (0..n).map(|k| rotation2(2.0 * PI * k as f64 / n as f64)),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupReport {
    pub closure: bool,
    pub has_identity: bool,
    pub has_inverses: bool,
    /// First pair `(i, j)` whose product `elements[i] ∘ elements[j]` is missing.
    pub closure_witness: Option<(usize, usize)>,
    /// First element whose inverse is missing.
    pub inverse_witness: Option<usize>,
}

impl GroupReport {
    pub fn is_group(&self) -> bool {
        self.closure && self.has_identity && self.has_inverses
    }
}

/// Exhaustively checks closure, identity and inverses.
pub fn verify_group<const N: usize>(g: &SymmetryGroup<N>) -> GroupReport {
    let elements = g.elements();
    let mut closure_witness = None;
    'outer: for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if !g.contains(&a.compose(b)) {
                closure_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    let has_identity = g.contains(&Isometry::identity());
    let inverse_witness = elements.iter().position(|e| !g.contains(&e.inverse()));
    GroupReport {
        closure: closure_witness.is_none(),
        has_identity,
        has_inverses: inverse_witness.is_none(),
        closure_witness,
        inverse_witness,
    }
}

/// Union of the images of `points` under every group element,
/// deduplicated at `1e-9`.
pub fn orbit<const N: usize>(g: &SymmetryGroup<N>, points: &[Vector<N>]) -> Vec<Vector<N>> {
    let mut out: Vec<Vector<N>> = Vec::new();
    for p in points {
        for e in g.elements() {
            let image = e.apply(p);
            if !out.iter().any(|q| q.approx_eq(&image, ORBIT_TOL)) {
                out.push(image);
            }
        }
    }
    out
}

/// Set equality of two point lists at tolerance `tol`.
pub fn same_point_set<const N: usize>(a: &[Vector<N>], b: &[Vector<N>], tol: f64) -> bool {
    a.iter().all(|p| b.iter().any(|q| p.approx_eq(q, tol)))
        && b.iter().all(|q| a.iter().any(|p| p.approx_eq(q, tol)))
}
