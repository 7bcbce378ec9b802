//! Symmetry predicates: image maps for centers, axes and planes, the
//! two-condition definition check, and figure-level symmetry tests.

use crate::error::{Error, Result};
use crate::isometry::same_point_set;
use crate::numcore::{
    collinear, dist_point_line2, dist_point_line3, dist_point_plane, Line2, Line3, Plane3, Vec2,
    Vec3, Vector,
};

/// Tolerance for point-set equality and the definition conditions.
pub const CONDITION_TOL: f64 = 1e-9;
/// Default membership tolerance of implicit figures.
pub const MEMBERSHIP_TOL: f64 = 1e-9;
/// Tolerance applied to `|f(image)|` for implicit figures.
pub const IMPLIED_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Self {
        match i {
            0 => Axis::X,
            1 => Axis::Y,
            _ => Axis::Z,
        }
    }

    pub fn unit(self) -> Vec3 {
        let mut c = [0.0; 3];
        c[self.index()] = 1.0;
        Vec3::from_array(c)
    }
}

/// `2·O − P`.
pub fn central_image<const N: usize>(p: &Vector<N>, center: &Vector<N>) -> Vector<N> {
    *center * 2.0 - *p
}

/// Mirror image of `p` about the line parallel to `axis` at the given offset
/// (`axis = Y, offset = c` is the line `x = c`).
pub fn axial_image2(p: &Vec2, axis: Axis, offset: f64) -> Vec2 {
    match axis {
        Axis::X => Vec2::new(p.x(), 2.0 * offset - p.y()),
        _ => Vec2::new(2.0 * offset - p.x(), p.y()),
    }
}

/// Mirror image of `p` about the plane `x_normal = offset`.
pub fn plane_image3(p: &Vec3, normal: Axis, offset: f64) -> Vec3 {
    let mut c = p.components();
    let i = normal.index();
    c[i] = 2.0 * offset - c[i];
    Vec3::from_array(c)
}

/// Half-turn image of `p` about the line through `through` parallel to `axis`.
pub fn axis_image3(p: &Vec3, axis: Axis, through: &Vec3) -> Vec3 {
    let mut c = p.components();
    let o = through.components();
    for i in (0..3).filter(|&i| i != axis.index()) {
        c[i] = 2.0 * o[i] - c[i];
    }
    Vec3::from_array(c)
}

/// Outcome of the two-condition symmetry definition for a pair `P`, `P*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    /// Collinearity with the center, or perpendicularity of `PP*` to the
    /// axis or plane.
    pub alignment: bool,
    /// Equal distance of `P` and `P*` to the element.
    pub equidistant: bool,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.alignment && self.equidistant
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= CONDITION_TOL * a.abs().max(b.abs()).max(1.0)
}

/// `|u·v| ≤ tol·‖u‖‖v‖`; a zero vector counts as perpendicular to anything.
fn perpendicular<const N: usize>(u: &Vector<N>, v: &Vector<N>) -> bool {
    u.dot(v).abs() <= CONDITION_TOL * u.norm() * v.norm()
}

/// A candidate symmetry element acting on `N`-dimensional points.
pub trait SymmetryElement<const N: usize> {
    /// The image of `p` under the element's symmetry map.
    fn image(&self, p: &Vector<N>) -> Vector<N>;

    /// Checks the two defining conditions for the pair `(p, p_star)`.
    fn check_definition(&self, p: &Vector<N>, p_star: &Vector<N>) -> ConditionReport;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymmetryElement2 {
    Center(Vec2),
    Axis(Line2),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymmetryElement3 {
    Center(Vec3),
    Axis(Line3),
    Plane(Plane3),
}

impl SymmetryElement<2> for SymmetryElement2 {
    fn image(&self, p: &Vec2) -> Vec2 {
        match self {
            SymmetryElement2::Center(o) => central_image(p, o),
            SymmetryElement2::Axis(line) => {
                let n = line.normal();
                *p - n * (2.0 * line.signed_distance(p) / n.norm())
            }
        }
    }

    fn check_definition(&self, p: &Vec2, p_star: &Vec2) -> ConditionReport {
        match self {
            SymmetryElement2::Center(o) => {
                SymmetryElement3::Center(o.embed()).check_definition(&p.embed(), &p_star.embed())
            }
            SymmetryElement2::Axis(line) => ConditionReport {
                alignment: perpendicular(&(*p_star - *p), &line.direction()),
                equidistant: close(dist_point_line2(p, line), dist_point_line2(p_star, line)),
            },
        }
    }
}

impl SymmetryElement<3> for SymmetryElement3 {
    fn image(&self, p: &Vec3) -> Vec3 {
        match self {
            SymmetryElement3::Center(o) => central_image(p, o),
            SymmetryElement3::Axis(line) => central_image(p, &line.project(p)),
            SymmetryElement3::Plane(plane) => {
                let n = plane.normal();
                *p - n * (2.0 * plane.signed_distance(p) / n.norm())
            }
        }
    }

    fn check_definition(&self, p: &Vec3, p_star: &Vec3) -> ConditionReport {
        if p.approx_eq(p_star, 0.0) {
            return ConditionReport { alignment: true, equidistant: true };
        }
        let segment = *p_star - *p;
        match self {
            SymmetryElement3::Center(o) => ConditionReport {
                alignment: collinear(o, p, p_star),
                equidistant: close(o.distance(p), o.distance(p_star)),
            },
            SymmetryElement3::Axis(line) => ConditionReport {
                alignment: perpendicular(&segment, &line.direction()),
                equidistant: close(dist_point_line3(p, line), dist_point_line3(p_star, line)),
            },
            SymmetryElement3::Plane(plane) => {
                let n = plane.normal();
                ConditionReport {
                    // PP* must run along the normal
                    alignment: segment.cross(&n).norm()
                        <= CONDITION_TOL * segment.norm() * n.norm(),
                    equidistant: close(dist_point_plane(p, plane), dist_point_plane(p_star, plane)),
                }
            }
        }
    }
}

type ImplicitFn<const N: usize> = Box<dyn Fn(&Vector<N>) -> f64 + Send + Sync>;

/// A figure: either a finite point set or an implicit surface `f = 0`.
pub enum Figure<const N: usize> {
    Points(Vec<Vector<N>>),
    Implicit { f: ImplicitFn<N>, membership_tol: f64 },
}

impl<const N: usize> Figure<N> {
    pub fn points(points: Vec<Vector<N>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidGeometry("point-set figure must be nonempty".into()));
        }
        Ok(Figure::Points(points))
    }

    pub fn implicit(f: impl Fn(&Vector<N>) -> f64 + Send + Sync + 'static) -> Self {
        Figure::Implicit { f: Box::new(f), membership_tol: MEMBERSHIP_TOL }
    }

    pub fn with_membership_tol(self, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidGeometry("membership tolerance must be positive".into()));
        }
        Ok(match self {
            Figure::Implicit { f, .. } => Figure::Implicit { f, membership_tol: tol },
            other => other,
        })
    }

    pub fn contains(&self, p: &Vector<N>) -> bool {
        match self {
            Figure::Points(pts) => pts.iter().any(|q| q.approx_eq(p, CONDITION_TOL)),
            Figure::Implicit { f, membership_tol } => f(p).abs() <= *membership_tol,
        }
    }
}

impl<const N: usize> std::fmt::Debug for Figure<N> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Figure::Points(pts) => f.debug_tuple("Points").field(pts).finish(),
            Figure::Implicit { membership_tol, .. } => {
                f.debug_struct("Implicit").field("membership_tol", membership_tol).finish()
            }
        }
    }
}

/// Whether the figure maps onto itself under `element`.
///
/// Point sets are compared as sets. Implicit figures are tested on the
/// given samples: each member sample must map to a point with
/// `|f| ≤ 1e-6`. Samples that are not members are ignored.
pub fn is_symmetric<const N: usize, E: SymmetryElement<N>>(
    figure: &Figure<N>,
    element: &E,
    samples: &[Vector<N>],
) -> Result<bool> {
    match figure {
        Figure::Points(points) => {
            let images: Vec<_> = points.iter().map(|p| element.image(p)).collect();
            Ok(same_point_set(points, &images, CONDITION_TOL))
        }
        Figure::Implicit { f, membership_tol } => {
            if samples.is_empty() {
                return Err(Error::NoSamples);
            }
            Ok(samples
                .iter()
                .filter(|p| f(p).abs() <= *membership_tol)
                .all(|p| f(&element.image(p)).abs() <= IMPLIED_TOL))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::{dihedral, orbit, SymmetryGroup};
    use std::f64::consts::PI;

    #[test]
    fn central_images() {
        let p = Vec2::new(1.25, -3.0);
        assert_eq!(central_image(&p, &Vec2::zero()), Vec2::new(-1.25, 3.0));
        assert_eq!(central_image(&p, &p), p);

        let o = Vec2::new(1.0, 1.0);
        let q = central_image(&Vec2::new(3.0, 1.0), &o);
        assert_eq!(q, Vec2::new(-1.0, 1.0));
        // collinear with the center and equidistant from it
        let report = SymmetryElement2::Center(o).check_definition(&Vec2::new(3.0, 1.0), &q);
        assert!(report.holds());
    }

    #[test]
    fn coordinate_images() {
        let p = Vec3::new(1.0, 2.0, 3.0);
        assert_eq!(axis_image3(&p, Axis::X, &Vec3::zero()), Vec3::new(1.0, -2.0, -3.0));
        assert_eq!(plane_image3(&p, Axis::X, 0.0), Vec3::new(-1.0, 2.0, 3.0));
        assert_eq!(axial_image2(&Vec2::new(4.0, 5.0), Axis::Y, 0.0), Vec2::new(-4.0, 5.0));

        let on_axis = Vec3::new(7.0, 0.0, 0.0);
        assert_eq!(axis_image3(&on_axis, Axis::X, &Vec3::zero()), on_axis);

        let shifted = plane_image3(&p, Axis::X, -1.0);
        assert_eq!(shifted, Vec3::new(-3.0, 2.0, 3.0));
        let plane = Plane3::coordinate(0, -1.0);
        assert_eq!(dist_point_plane(&p, &plane), dist_point_plane(&shifted, &plane));
    }

    #[test]
    fn general_maps_agree_with_coordinate_maps() {
        let p = Vec3::new(0.3, -1.1, 2.7);
        let through = Vec3::new(-1.0, 5.0, -20.0);
        let axis = Line3::new(through, Axis::Z.unit()).unwrap();
        assert!(SymmetryElement3::Axis(axis)
            .image(&p)
            .approx_eq(&axis_image3(&p, Axis::Z, &through), 1e-12));
        let plane = Plane3::coordinate(1, 5.0);
        assert!(SymmetryElement3::Plane(plane)
            .image(&p)
            .approx_eq(&plane_image3(&p, Axis::Y, 5.0), 1e-12));
        let line = Line2::vertical(2.0);
        let q = Vec2::new(-0.5, 4.0);
        assert!(SymmetryElement2::Axis(line)
            .image(&q)
            .approx_eq(&axial_image2(&q, Axis::Y, 2.0), 1e-12));
    }

    #[test]
    fn degenerate_segment_satisfies_definition() {
        let p = Vec2::new(1.0, 0.0);
        let report = SymmetryElement2::Axis(Line2::vertical(0.0)).check_definition(&p, &p);
        assert!(report.alignment);
        assert!(report.equidistant);
    }

    #[test]
    fn non_collinear_pair_fails() {
        let report = SymmetryElement2::Center(Vec2::zero())
            .check_definition(&Vec2::new(1.0, 2.0), &Vec2::new(0.0, 5.0));
        assert!(!report.alignment);
    }

    #[test]
    fn wrong_image_fails_equidistance() {
        let axis = SymmetryElement3::Plane(Plane3::coordinate(0, 0.0));
        let report = axis.check_definition(&Vec3::new(1.0, 0.0, 0.0), &Vec3::new(-2.0, 0.0, 0.0));
        assert!(report.alignment);
        assert!(!report.equidistant);
    }

    #[test]
    fn circle_has_central_symmetry() {
        let circle = Figure::implicit(|p: &Vec2| p.x() * p.x() + p.y() * p.y() - 1.0);
        let samples: Vec<_> = (0..64)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / 64.0;
                Vec2::new(t.cos(), t.sin())
            })
            .collect();
        let center = SymmetryElement2::Center(Vec2::zero());
        assert!(is_symmetric(&circle, &center, &samples).unwrap());
        assert_eq!(is_symmetric(&circle, &center, &[]), Err(Error::NoSamples));
    }

    #[test]
    fn isosceles_triangle_axis() {
        let (p1, p2, p3) = (1.5, -0.5, 2.0);
        let tri = Figure::points(vec![
            Vec2::new(p1, p2),
            Vec2::new(-p1, p2),
            Vec2::new(0.0, p3),
        ])
        .unwrap();
        assert!(is_symmetric(&tri, &SymmetryElement2::Axis(Line2::vertical(0.0)), &[]).unwrap());
        assert!(!is_symmetric(&tri, &SymmetryElement2::Axis(Line2::horizontal(0.0)), &[]).unwrap());
        assert!(!is_symmetric(&tri, &SymmetryElement2::Center(Vec2::zero()), &[]).unwrap());
    }

    #[test]
    fn paraboloid_has_no_center() {
        let parab = Figure::implicit(|p: &Vec3| p.x() * p.x() + p.y() * p.y() - p.z());
        let samples: Vec<_> = (1..=8)
            .flat_map(|i| {
                (0..8).map(move |k| {
                    let r = 0.25 * i as f64;
                    let t = 2.0 * PI * k as f64 / 8.0;
                    Vec3::new(r * t.cos(), r * t.sin(), r * r)
                })
            })
            .collect();
        let center = SymmetryElement3::Center(Vec3::zero());
        assert!(!is_symmetric(&parab, &center, &samples).unwrap());
        let z_axis = SymmetryElement3::Axis(Line3::new(Vec3::zero(), Axis::Z.unit()).unwrap());
        assert!(is_symmetric(&parab, &z_axis, &samples).unwrap());
    }

    #[test]
    fn square_symmetries() {
        let square = vec![
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
        ];
        let fig = Figure::points(square.clone()).unwrap();
        for e in [
            SymmetryElement2::Center(Vec2::zero()),
            SymmetryElement2::Axis(Line2::vertical(0.0)),
            SymmetryElement2::Axis(Line2::horizontal(0.0)),
        ] {
            assert!(is_symmetric(&fig, &e, &[]).unwrap());
        }
        // diagonal mirrors are the reflections of D4 at π/4 and 3π/4
        let d4 = dihedral(4).unwrap();
        for g in d4.elements() {
            let pair = SymmetryGroup::from_elements("pair", [crate::isometry::Isometry::identity(), *g]);
            assert!(same_point_set(&orbit(&pair, &square), &square, 1e-9));
        }
    }

    #[test]
    fn empty_point_figure_rejected() {
        assert!(Figure::<2>::points(vec![]).is_err());
        assert!(Figure::implicit(|_: &Vec2| 0.0).with_membership_tol(0.0).is_err());
    }
}
