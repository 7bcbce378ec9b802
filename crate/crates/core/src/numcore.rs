//! Small dense linear algebra: fixed-size vectors and matrices, a general
//! dense solver, and point/line/plane distances.
//!
//! Every quantity is in SI units. Fixed-size types reject non-finite
//! components at construction; arithmetic on them does not re-check.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Relative pivot threshold used by [`solve_dense`].
pub const SINGULAR_PIVOT_RTOL: f64 = 1e-12;

/// Relative tolerance for [`collinear`].
pub const COLLINEAR_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector<const N: usize>([f64; N]);

pub type Vec2 = Vector<2>;
pub type Vec3 = Vector<3>;

impl<const N: usize> Vector<N> {
    pub fn try_from_array(components: [f64; N]) -> Result<Self> {
        if components.iter().all(|c| c.is_finite()) {
            Ok(Self(components))
        } else {
            Err(Error::NonFinite("vector"))
        }
    }

    /// Panics if any component is NaN or infinite.
    pub fn from_array(components: [f64; N]) -> Self {
        Self::try_from_array(components).expect("vector components must be finite")
    }

    pub fn zero() -> Self {
        Self([0.0; N])
    }

    pub fn components(&self) -> [f64; N] {
        self.0
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = self.0;
        out.iter_mut().for_each(|c| *c *= factor);
        Self(out)
    }

    /// Componentwise absolute comparison.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| (a - b).abs() <= tol)
    }
}

impl Vector<2> {
    pub fn new(x: f64, y: f64) -> Self {
        Self::from_array([x, y])
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn y(&self) -> f64 {
        self.0[1]
    }

    /// Embeds into the z = 0 plane.
    pub fn embed(&self) -> Vec3 {
        Vector([self.0[0], self.0[1], 0.0])
    }
}

impl Vector<3> {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self::from_array([x, y, z])
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn y(&self) -> f64 {
        self.0[1]
    }

    pub fn z(&self) -> f64 {
        self.0[2]
    }

    pub fn cross(&self, other: &Self) -> Self {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        Vector([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }
}

impl<const N: usize> Serialize for Vector<N> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl<const N: usize> Index<usize> for Vector<N> {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl<const N: usize> Add for Vector<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.0.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        self
    }
}

impl<const N: usize> Sub for Vector<N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.0.iter_mut().zip(rhs.0).for_each(|(a, b)| *a -= b);
        self
    }
}

impl<const N: usize> Neg for Vector<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl<const N: usize> Mul<f64> for Vector<N> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> fmt::Display for Vector<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match f.precision() {
                Some(p) => write!(f, "{c:.p$}")?,
                None => write!(f, "{c}")?,
            }
        }
        write!(f, ")")
    }
}

/// Square matrix stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix<const N: usize>([[f64; N]; N]);

pub type Mat2 = Matrix<2>;
pub type Mat3 = Matrix<3>;

impl<const N: usize> Matrix<N> {
    pub fn try_from_rows(rows: [[f64; N]; N]) -> Result<Self> {
        if rows.iter().flatten().all(|c| c.is_finite()) {
            Ok(Self(rows))
        } else {
            Err(Error::NonFinite("matrix"))
        }
    }

    /// Panics if any entry is NaN or infinite.
    pub fn from_rows(rows: [[f64; N]; N]) -> Self {
        Self::try_from_rows(rows).expect("matrix entries must be finite")
    }

    pub fn identity() -> Self {
        let mut rows = [[0.0; N]; N];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self(rows)
    }

    pub fn from_diagonal(diag: [f64; N]) -> Self {
        let mut m = Self([[0.0; N]; N]);
        for (i, d) in diag.into_iter().enumerate() {
            m.0[i][i] = d;
        }
        m
    }

    pub fn rows(&self) -> [[f64; N]; N] {
        self.0
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[0.0; N]; N];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        Self(out)
    }

    pub fn trace(&self) -> f64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut a = self.0;
        let mut det = 1.0;
        for col in 0..N {
            let pivot_row = (col..N)
                .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
                .unwrap_or(col);
            if a[pivot_row][col] == 0.0 {
                return 0.0;
            }
            if pivot_row != col {
                a.swap(pivot_row, col);
                det = -det;
            }
            det *= a[col][col];
            let (upper, lower) = a.split_at_mut(col + 1);
            let pivot = &upper[col];
            for row in lower {
                let factor = row[col] / pivot[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= factor * p;
                }
            }
        }
        det
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// ‖MᵀM − I‖∞ (max-entry norm).
    pub fn orthogonality_defect(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&Self::identity())
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.0[r][c]
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [[0.0; N]; N];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Self(out)
    }
}

impl<const N: usize> Mul<Vector<N>> for Matrix<N> {
    type Output = Vector<N>;
    fn mul(self, rhs: Vector<N>) -> Vector<N> {
        let mut out = [0.0; N];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.0[i].iter().zip(rhs.0.iter()).map(|(a, b)| a * b).sum();
        }
        Vector(out)
    }
}

/// Heap-allocated row-major matrix of arbitrary shape.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1");
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::DimensionMismatch { expected: 1, actual: 0 });
        }
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch { expected: n_cols, actual: row.len() });
            }
            data.extend_from_slice(row);
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("dense matrix"));
        }
        Ok(Self { rows: n_rows, cols: n_cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Induced infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &DenseVector) -> Result<DenseVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, actual: v.len() });
        }
        Ok(DenseVector(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(v.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// Extracts the submatrix with the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len().max(1), cols.len().max(1));
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out[(i, j)] = self[(r, c)];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DenseVector(pub Vec<f64>);

impl DenseVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn norm2(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

impl From<Vec<f64>> for DenseVector {
    fn from(v: Vec<f64>) -> Self {
        Self(v)
    }
}

impl std::ops::Deref for DenseVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl std::ops::DerefMut for DenseVector {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }
}

/// Solves `a · u = b` by Gaussian elimination with partial pivoting.
///
/// A pivot whose magnitude falls below `1e-12` times the largest absolute
/// entry of the original matrix is reported as [`Error::SingularMatrix`].
pub fn solve_dense(a: &DenseMatrix, b: &DenseVector) -> Result<DenseVector> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { expected: a.rows(), actual: a.cols() });
    }
    let n = a.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: b.len() });
    }
    if !b.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("right-hand side"));
    }

    let threshold = SINGULAR_PIVOT_RTOL * a.max_abs();
    let mut m = a.clone();
    let mut rhs = b.clone();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| m[(r, col)].abs().total_cmp(&m[(s, col)].abs()))
            .expect("non-empty pivot range");
        let pivot = m[(pivot_row, col)];
        if pivot.abs() < threshold || pivot == 0.0 {
            return Err(Error::SingularMatrix { column: col, pivot });
        }
        if pivot_row != col {
            for c in 0..n {
                m.data.swap(pivot_row * n + c, col * n + c);
            }
            rhs.0.swap(pivot_row, col);
        }
        for r in col + 1..n {
            let factor = m[(r, col)] / pivot;
            if factor == 0.0 {
                continue;
            }
            m[(r, col)] = 0.0;
            for c in col + 1..n {
                let v = m[(col, c)];
                m[(r, c)] -= factor * v;
            }
            rhs[r] -= factor * rhs[col];
        }
    }

    let mut u = DenseVector::zeros(n);
    for r in (0..n).rev() {
        let tail: f64 = (r + 1..n).map(|c| m[(r, c)] * u[c]).sum();
        u[r] = (rhs[r] - tail) / m[(r, r)];
    }
    Ok(u)
}

/// Line `a·x + b·y + c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    a: f64,
    b: f64,
    c: f64,
}

impl Line2 {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFinite("line"));
        }
        if a * a + b * b <= 0.0 {
            return Err(Error::InvalidGeometry("line needs a² + b² > 0".into()));
        }
        Ok(Self { a, b, c })
    }

    /// The vertical line `x = offset`.
    pub fn vertical(offset: f64) -> Self {
        Self { a: 1.0, b: 0.0, c: -offset }
    }

    /// The horizontal line `y = offset`.
    pub fn horizontal(offset: f64) -> Self {
        Self { a: 0.0, b: 1.0, c: -offset }
    }

    pub fn coefficients(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    pub fn normal(&self) -> Vec2 {
        Vector([self.a, self.b])
    }

    pub fn direction(&self) -> Vec2 {
        Vector([-self.b, self.a])
    }

    /// Signed value of `a·x + b·y + c` scaled by `1/√(a²+b²)`.
    pub fn signed_distance(&self, p: &Vec2) -> f64 {
        (self.a * p.x() + self.b * p.y() + self.c) / self.normal().norm()
    }
}

/// Parametric line `origin + t·direction`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line3 {
    origin: Vec3,
    direction: Vec3,
}

impl Line3 {
    pub fn new(origin: Vec3, direction: Vec3) -> Result<Self> {
        if direction.norm() <= 0.0 {
            return Err(Error::InvalidGeometry("line direction must be nonzero".into()));
        }
        Ok(Self { origin, direction })
    }

    pub fn origin(&self) -> Vec3 {
        self.origin
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn project(&self, p: &Vec3) -> Vec3 {
        let d = self.direction;
        let t = (*p - self.origin).dot(&d) / d.dot(&d);
        self.origin + d * t
    }
}

/// Plane `a·x + b·y + c·z + d = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane3 {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Plane3 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("plane"));
        }
        if a * a + b * b + c * c <= 0.0 {
            return Err(Error::InvalidGeometry("plane needs a² + b² + c² > 0".into()));
        }
        Ok(Self { a, b, c, d })
    }

    /// The plane `x_axis = offset` for coordinate index 0, 1 or 2.
    pub fn coordinate(axis: usize, offset: f64) -> Self {
        let mut n = [0.0; 3];
        n[axis] = 1.0;
        Self { a: n[0], b: n[1], c: n[2], d: -offset }
    }

    pub fn coefficients(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn normal(&self) -> Vec3 {
        Vector([self.a, self.b, self.c])
    }

    pub fn signed_distance(&self, p: &Vec3) -> f64 {
        (self.normal().dot(p) + self.d) / self.normal().norm()
    }
}

pub fn dist_point_line2(p: &Vec2, line: &Line2) -> f64 {
    line.signed_distance(p).abs()
}

/// ‖(P − origin) × v‖ / ‖v‖.
pub fn dist_point_line3(p: &Vec3, line: &Line3) -> f64 {
    let v = line.direction();
    (*p - line.origin()).cross(&v).norm() / v.norm()
}

pub fn dist_point_plane(p: &Vec3, plane: &Plane3) -> f64 {
    plane.signed_distance(p).abs()
}

/// True when the three points lie on one line: ‖(Q−P)×(R−P)‖ is at most
/// `1e-9` times the largest pairwise distance.
pub fn collinear(p: &Vec3, q: &Vec3, r: &Vec3) -> bool {
    let scale = p.distance(q).max(p.distance(r)).max(q.distance(r));
    if scale == 0.0 {
        return true;
    }
    // both the cross product and the threshold carry one length factor each
    (*q - *p).cross(&(*r - *p)).norm() <= COLLINEAR_RTOL * scale * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &DenseMatrix, u: &DenseVector, b: &DenseVector) -> f64 {
        let au = a.mul_vec(u).unwrap();
        au.iter().zip(b.iter()).fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()))
            / b.norm_inf().max(1.0)
    }

    #[test]
    fn identity_solve() {
        let b = DenseVector::from(vec![1.0, -2.0, 3.0, 0.0]);
        let u = solve_dense(&DenseMatrix::identity(4), &b).unwrap();
        assert_eq!(u, b);
    }

    #[test]
    fn rank_deficient_is_singular() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let err = solve_dense(&a, &DenseVector::from(vec![1.0, 2.0])).unwrap_err();
        assert!(matches!(err, Error::SingularMatrix { column: 1, .. }));
    }

    #[test]
    fn zero_matrix_is_singular() {
        let a = DenseMatrix::zeros(3, 3);
        assert!(solve_dense(&a, &DenseVector::zeros(3)).is_err());
    }

    #[test]
    fn solve_needs_pivoting() {
        let a = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let b = DenseVector::from(vec![2.0, 3.0]);
        let u = solve_dense(&a, &b).unwrap();
        assert_eq!(u.0, vec![3.0, 2.0]);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = DenseMatrix::zeros(2, 3);
        assert!(matches!(
            solve_dense(&a, &DenseVector::zeros(2)),
            Err(Error::DimensionMismatch { .. })
        ));
        let a = DenseMatrix::identity(2);
        assert!(matches!(
            solve_dense(&a, &DenseVector::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reduced_truss_system() {
        // reduced symmetric-frame system with exact element lengths
        let k = 210e9 * 1e-4 / 2.0;
        let d = 210e9 * 1e-4 / (2.0 * 2f64.sqrt()) * 0.5;
        let a = DenseMatrix::from_rows(&[
            vec![k + d, -d, -k, 0.0],
            vec![-d, k + d, 0.0, 0.0],
            vec![-k, 0.0, k + d, d],
            vec![0.0, 0.0, d, k + d],
        ])
        .unwrap();
        let b = DenseVector::from(vec![1000.0, -500.0, 0.0, -500.0]);
        let u = solve_dense(&a, &b).unwrap();
        let mm: Vec<f64> = u.iter().map(|v| v * 1e3).collect();
        let expected = [0.1979, 0.0165, 0.1667, -0.0787];
        for (got, want) in mm.iter().zip(expected) {
            assert!((got - want).abs() < 1e-3, "{got} vs {want}");
        }
        assert!(residual(&a, &u, &b) <= 1e-9);
    }

    #[test]
    fn line2_distance() {
        let p = Vec2::new(-3.5, 7.0);
        assert_eq!(dist_point_line2(&p, &Line2::vertical(0.0)), 3.5);
        let on = Vec2::new(0.0, 1.0);
        let l = Line2::new(1.0, 1.0, -1.0).unwrap();
        assert_eq!(dist_point_line2(&on, &l), 0.0);
    }

    #[test]
    fn line2_distance_matches_sampled_minimum() {
        let p = Vec2::new(3.0, 4.0);
        let l = Line2::new(1.0, 1.0, -1.0).unwrap();
        // brute-force minimum over points (t, 1 - t) on the line
        let sampled = (-200_000..=200_000)
            .map(|i| {
                let t = i as f64 * 1e-4;
                p.distance(&Vec2::new(t, 1.0 - t))
            })
            .fold(f64::INFINITY, f64::min);
        let exact = 6.0 / 2f64.sqrt();
        assert!((sampled - exact).abs() < 1e-6);
        assert!((dist_point_line2(&p, &l) - exact).abs() < 1e-12);
    }

    #[test]
    fn line2_rejects_degenerate() {
        assert!(Line2::new(0.0, 0.0, 1.0).is_err());
        assert!(Line2::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn line3_distance() {
        let x_axis = Line3::new(Vec3::zero(), Vec3::new(1.0, 0.0, 0.0)).unwrap();
        let p = Vec3::new(2.0, -3.0, 4.0);
        assert_eq!(dist_point_line3(&p, &x_axis), 5.0);
        assert_eq!(dist_point_line3(&Vec3::new(9.0, 0.0, 0.0), &x_axis), 0.0);

        let z_axis = Line3::new(Vec3::zero(), Vec3::new(0.0, 0.0, 1.0)).unwrap();
        let p = Vec3::new(1.0, 1.0, 1.0);
        let sampled = (-20_000..=20_000)
            .map(|i| p.distance(&Vec3::new(0.0, 0.0, i as f64 * 1e-4)))
            .fold(f64::INFINITY, f64::min);
        assert!((sampled - 2f64.sqrt()).abs() < 1e-9);
        assert!((dist_point_line3(&p, &z_axis) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn line3_rejects_zero_direction() {
        assert!(Line3::new(Vec3::zero(), Vec3::zero()).is_err());
    }

    #[test]
    fn plane_distance() {
        let p = Vec3::new(-2.5, 1.0, 1.0);
        assert_eq!(dist_point_plane(&p, &Plane3::coordinate(0, 0.0)), 2.5);
        assert_eq!(dist_point_plane(&Vec3::new(0.0, 3.0, 1.0), &Plane3::coordinate(0, 0.0)), 0.0);

        let plane = Plane3::new(1.0, 2.0, 2.0, 0.0).unwrap();
        let p = Vec3::new(1.0, 2.0, 2.0);
        // the projection onto the plane is the closest point
        let n = plane.normal();
        let foot = p - n * (n.dot(&p) / n.dot(&n));
        assert!(plane.signed_distance(&foot).abs() < 1e-12);
        assert!((p.distance(&foot) - 3.0).abs() < 1e-12);
        assert!((dist_point_plane(&p, &plane) - 3.0).abs() < 1e-12);
        assert!(Plane3::new(0.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn collinearity() {
        let p = Vec3::new(1.5, -2.0, 0.5);
        assert!(collinear(&Vec3::zero(), &p, &-p));
        assert!(collinear(&p, &p, &Vec3::new(4.0, 4.0, 4.0)));
        assert!(!collinear(&Vec3::zero(), &Vec3::new(1.0, 0.0, 0.0), &Vec3::new(0.0, 1.0, 0.0)));
    }

    #[test]
    fn non_finite_vectors_rejected() {
        assert!(Vec2::try_from_array([1.0, f64::INFINITY]).is_err());
        assert!(Mat2::try_from_rows([[1.0, 0.0], [f64::NAN, 1.0]]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![f64::NAN]]).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(Mat3::identity().det(), 1.0);
        assert_eq!(Mat2::from_rows([[1.0, 0.0], [0.0, -1.0]]).det(), -1.0);
        let m = Mat3::from_rows([[0.0, 2.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 3.0]]);
        assert_eq!(m.det(), -6.0);
    }
}
