//! Second-degree equations: parsing, conic and axis-aligned quadric
//! classification by completing the square, and symmetry extraction.

mod conic;
mod parser;
mod quadric;

pub use conic::{classify_conic, CanonicalConic, ConicKind, ConicShape, DegenerateConic};
pub use parser::{parse_conic, parse_quadratic, parse_quadric, ParsedQuadratic};
pub use quadric::{
    classify_quadric, implicit_figure, sample_surface, symmetry_elements, CanonicalQuadric,
    OtherQuadric, QuadricKind, QuadricSymmetry, Term,
};

use serde::Serialize;

use crate::numcore::Vec3;

/// Relative tolerance for zero tests on coefficients and the discriminant.
pub const ZERO_RTOL: f64 = 1e-12;

/// `A x² + B xy + C y² + D x + E y + F = 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct ConicCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl ConicCoeffs {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// `B² − 4AC`.
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }

    pub fn scaled(&self, k: f64) -> Self {
        let [a, b, c, d, e, f] = self.to_array().map(|v| v * k);
        Self { a, b, c, d, e, f }
    }

    pub fn evaluate(&self, x: f64, y: f64) -> f64 {
        self.a * x * x + self.b * x * y + self.c * y * y + self.d * x + self.e * y + self.f
    }

    /// Coefficients of `q(R⁻¹ p)`, i.e. the curve rotated by `theta`.
    pub fn rotated(&self, theta: f64) -> Self {
        // substitute x = c·x' + s·y', y = −s·x' + c·y'
        let (s, c) = theta.sin_cos();
        let Self { a, b, c: cc, d, e, f } = *self;
        Self {
            a: a * c * c - b * c * s + cc * s * s,
            b: 2.0 * a * c * s + b * (c * c - s * s) - 2.0 * cc * s * c,
            c: a * s * s + b * c * s + cc * c * c,
            d: d * c - e * s,
            e: d * s + e * c,
            f,
        }
    }
}

/// Coefficients of x², y², z², xy, xz, yz, x, y, z and 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct QuadricCoeffs {
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
    pub xy: f64,
    pub xz: f64,
    pub yz: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub constant: f64,
}

impl QuadricCoeffs {
    /// Order: x², y², z², xy, xz, yz, x, y, z, 1.
    pub fn from_array(v: [f64; 10]) -> Self {
        let [xx, yy, zz, xy, xz, yz, x, y, z, constant] = v;
        Self { xx, yy, zz, xy, xz, yz, x, y, z, constant }
    }

    pub fn to_array(&self) -> [f64; 10] {
        [
            self.xx, self.yy, self.zz, self.xy, self.xz, self.yz, self.x, self.y, self.z,
            self.constant,
        ]
    }

    pub fn quadratic(&self) -> [f64; 3] {
        [self.xx, self.yy, self.zz]
    }

    pub fn linear(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn cross(&self) -> [f64; 3] {
        [self.xy, self.xz, self.yz]
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::from_array(self.to_array().map(|v| v * k))
    }

    pub fn evaluate(&self, p: &Vec3) -> f64 {
        let (x, y, z) = (p.x(), p.y(), p.z());
        self.xx * x * x
            + self.yy * y * y
            + self.zz * z * z
            + self.xy * x * y
            + self.xz * x * z
            + self.yz * y * z
            + self.x * x
            + self.y * y
            + self.z * z
            + self.constant
    }

    /// Coefficients of `q(p − t)`: the surface translated by `t`.
    pub fn translated(&self, t: &Vec3) -> Self {
        let (tx, ty, tz) = (t.x(), t.y(), t.z());
        // gradient of the quadratic part at t
        let gx = 2.0 * self.xx * tx + self.xy * ty + self.xz * tz;
        let gy = 2.0 * self.yy * ty + self.xy * tx + self.yz * tz;
        let gz = 2.0 * self.zz * tz + self.xz * tx + self.yz * ty;
        let quad_t = self.xx * tx * tx
            + self.yy * ty * ty
            + self.zz * tz * tz
            + self.xy * tx * ty
            + self.xz * tx * tz
            + self.yz * ty * tz;
        Self {
            x: self.x - gx,
            y: self.y - gy,
            z: self.z - gz,
            constant: self.constant + quad_t - self.x * tx - self.y * ty - self.z * tz,
            ..*self
        }
    }

    /// Relative distance to `other` after the best single scale factor,
    /// measured against this record's largest coefficient.
    pub fn relative_mismatch_up_to_scale(&self, other: &Self) -> f64 {
        let a = self.to_array();
        let b = other.to_array();
        let pivot = (0..10).max_by(|&i, &j| a[i].abs().total_cmp(&a[j].abs())).unwrap_or(0);
        if b[pivot] == 0.0 {
            return f64::INFINITY;
        }
        let k = a[pivot] / b[pivot];
        let norm = self.max_abs().max(f64::MIN_POSITIVE);
        a.iter().zip(b.iter()).fold(0.0_f64, |m, (x, y)| m.max((x - k * y).abs())) / norm
    }
}
