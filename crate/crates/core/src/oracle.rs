//! Exhaustive reference solvers.
//!
//! Every routine here enumerates all candidate shapes determined by small
//! subsets of the input and keeps the best one that encloses everything. They
//! are polynomial of high degree and only meant for checking the fast solvers
//! on small inputs. Candidate construction deliberately uses closed-form
//! formulas (cross products, Cramer's rule) rather than the elimination code
//! the fast solvers share.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::planar::Circle2;
use crate::sphere::{EuclideanBall, PlaneCircle, UnitVector, EPS_CONTAIN};
use crate::vector::{Vec2, Vec3};

pub const MAX_SPHERICAL: usize = 60;
pub const MAX_BALL: usize = 40;
pub const MAX_PLANAR: usize = 60;

fn check_size(n: usize, min: usize, max: usize, what: &str) -> Result<()> {
    if n < min || n > max {
        return Err(Error::invalid(format!(
            "{what} accepts {min} to {max} points, got {n}"
        )));
    }
    Ok(())
}

fn lexicographic(a: Vec3, b: Vec3) -> Ordering {
    a.x.total_cmp(&b.x)
        .then(a.y.total_cmp(&b.y))
        .then(a.z.total_cmp(&b.z))
}

/// Input in a canonical order so results do not depend on the caller's order.
fn canonical(points: &[UnitVector]) -> Vec<UnitVector> {
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| lexicographic(a.vec(), b.vec()));
    sorted
}

fn unit(v: Vec3) -> Option<Vec3> {
    let n = v.norm();
    (n > 0.0 && n.is_finite()).then(|| v / n)
}

/// Some unit vector orthogonal to `a`.
fn perpendicular(a: Vec3) -> Vec3 {
    let axis = if a.x.abs() <= a.y.abs() && a.x.abs() <= a.z.abs() {
        Vec3::new(1.0, 0.0, 0.0)
    } else if a.y.abs() <= a.z.abs() {
        Vec3::new(0.0, 1.0, 0.0)
    } else {
        Vec3::new(0.0, 0.0, 1.0)
    };
    unit(a.cross(axis)).expect("a unit vector is not parallel to its weakest axis")
}

/// Smallest enclosing spherical circle by enumeration, plus whether it bounds
/// a cap smaller than a hemisphere.
///
/// Candidates are the midpoint circle of every pair and both circles (small
/// and large cap) through every triple of distinct, non-antipodal points.
/// Antipodal pairs contribute the great circles through them. Ties in `t` are
/// broken towards the lexicographically largest center.
pub fn oracle_spherical_sec(points: &[UnitVector]) -> Result<(PlaneCircle, bool)> {
    check_size(points.len(), 2, MAX_SPHERICAL, "oracle_spherical_sec")?;
    let pts: Vec<Vec3> = canonical(points).iter().map(|p| p.vec()).collect();
    let n = pts.len();

    let encloses = |u: Vec3, t: f64| pts.iter().all(|p| u.dot(*p) >= t - EPS_CONTAIN);
    let mut best: Option<(Vec3, f64)> = None;
    let mut offer = |u: Vec3, t: f64| {
        if t.is_nan() || t <= -1.0 || !encloses(u, t) {
            return;
        }
        let better = match best {
            None => true,
            Some((bu, bt)) => {
                if (t - bt).abs() <= EPS_CONTAIN {
                    lexicographic(u, bu) == Ordering::Greater
                } else {
                    t > bt
                }
            }
        };
        if better {
            best = Some((u, t));
        }
    };

    for i in 0..n {
        for j in i..n {
            let (a, b) = (pts[i], pts[j]);
            match unit(a + b) {
                Some(u) if 1.0 + a.dot(b) > 0.0 => offer(u, u.dot(a).min(u.dot(b)).min(1.0)),
                _ => {
                    // Antipodal: every great circle through a and -a.
                    let p = perpendicular(a);
                    offer(p, 0.0);
                    offer(-p, 0.0);
                    for c in &pts {
                        if let Some(u) = unit(a.cross(*c)) {
                            offer(u, 0.0);
                            offer(-u, 0.0);
                        }
                    }
                }
            }
        }
    }

    let degenerate_pair = |a: Vec3, b: Vec3| a == b || 1.0 + a.dot(b) <= 0.0;
    for i in 0..n {
        for j in i + 1..n {
            if degenerate_pair(pts[i], pts[j]) {
                continue;
            }
            for k in j + 1..n {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                if degenerate_pair(a, c) || degenerate_pair(b, c) {
                    continue;
                }
                let Some(u) = unit((b - a).cross(c - a)) else {
                    continue;
                };
                let t = (u.dot(a) + u.dot(b) + u.dot(c)) / 3.0;
                offer(u, t);
                offer(-u, -t);
            }
        }
    }

    let (u, t) = best.ok_or_else(|| Error::OracleSelfCheck("no enclosing candidate".into()))?;
    let circle = PlaneCircle::new(UnitVector::normalize(u)?, t)?;
    Ok((circle, t > EPS_CONTAIN))
}

/// Whether some open hemisphere holds every point, decided twice: by testing
/// candidate directions (the points, normalized pair sums, normalized
/// solutions of `b_i·v = 1` for triples) and by the sign of the enumerated
/// smallest circle. Disagreement is an [`Error::OracleSelfCheck`].
pub fn oracle_hemisphere_feasible(points: &[UnitVector]) -> Result<bool> {
    check_size(points.len(), 1, MAX_SPHERICAL, "oracle_hemisphere_feasible")?;
    if points.len() == 1 {
        return Ok(true);
    }
    let pts: Vec<Vec3> = canonical(points).iter().map(|p| p.vec()).collect();
    let n = pts.len();
    let witnesses = |u: Vec3| pts.iter().all(|p| u.dot(*p) > EPS_CONTAIN);

    let mut by_direction = pts.iter().any(|&p| witnesses(p));
    for i in 0..n {
        for j in i + 1..n {
            if by_direction {
                break;
            }
            if let Some(u) = unit(pts[i] + pts[j]) {
                by_direction = witnesses(u);
            }
        }
    }
    'triples: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if by_direction {
                    break 'triples;
                }
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                // Cramer's rule for [a; b; c] v = (1, 1, 1).
                let det = a.dot(b.cross(c));
                if det.abs() <= 1e-14 {
                    continue;
                }
                let v = (b.cross(c) + c.cross(a) + a.cross(b)) / det;
                if let Some(u) = unit(v) {
                    by_direction = witnesses(u);
                }
            }
        }
    }

    let (_, by_circle) = oracle_spherical_sec(points)?;
    if by_direction != by_circle {
        return Err(Error::OracleSelfCheck(format!(
            "direction search says {by_direction}, enclosing circle says {by_circle}"
        )));
    }
    Ok(by_direction)
}

/// Smallest enclosing ball by enumeration over subsets of up to four points.
pub fn oracle_ball3d(points: &[Vec3]) -> Result<EuclideanBall> {
    check_size(points.len(), 1, MAX_BALL, "oracle_ball3d")?;
    let pts = points;
    let n = pts.len();
    let mut best: Option<EuclideanBall> = None;
    let mut offer = |center: Vec3, support: &[Vec3]| {
        let radius = support
            .iter()
            .map(|p| (*p - center).norm())
            .fold(0.0, f64::max);
        let tol = 1e-10 * (1.0 + radius);
        if pts.iter().all(|p| (*p - center).norm() <= radius + tol)
            && best.is_none_or(|b| radius < b.radius)
        {
            best = Some(EuclideanBall::new(center, radius));
        }
    };

    for i in 0..n {
        offer(pts[i], &pts[i..=i]);
        for j in i + 1..n {
            offer((pts[i] + pts[j]) * 0.5, &[pts[i], pts[j]]);
            for k in j + 1..n {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                if let Some(center) = triangle_circumcenter(a, b, c) {
                    offer(center, &[a, b, c]);
                }
                for &d in &pts[k + 1..n] {
                    if let Some(center) = tetrahedron_circumcenter(a, b, c, d) {
                        offer(center, &[a, b, c, d]);
                    }
                }
            }
        }
    }
    best.ok_or_else(|| Error::OracleSelfCheck("no enclosing ball".into()))
}

fn triangle_circumcenter(a: Vec3, b: Vec3, c: Vec3) -> Option<Vec3> {
    let (ab, ac) = (b - a, c - a);
    let normal = ab.cross(ac);
    let denom = 2.0 * normal.norm_squared();
    if denom <= 1e-14 * ab.norm_squared().max(ac.norm_squared()).powi(2) {
        return None;
    }
    let offset =
        (normal.cross(ab) * ac.norm_squared() + ac.cross(normal) * ab.norm_squared()) / denom;
    Some(a + offset)
}

fn tetrahedron_circumcenter(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> Option<Vec3> {
    let (d1, d2, d3) = (b - a, c - a, d - a);
    let det = d1.dot(d2.cross(d3));
    if det.abs() <= 1e-12 * d1.norm() * d2.norm() * d3.norm() {
        return None;
    }
    let offset = (d2.cross(d3) * d1.norm_squared()
        + d3.cross(d1) * d2.norm_squared()
        + d1.cross(d2) * d3.norm_squared())
        / (2.0 * det);
    Some(a + offset)
}

/// Smallest enclosing planar circle by enumeration over pairs and triples.
pub fn oracle_planar_circle(points: &[Vec2]) -> Result<Circle2> {
    check_size(points.len(), 1, MAX_PLANAR, "oracle_planar_circle")?;
    let pts = points;
    let n = pts.len();
    let mut best: Option<Circle2> = None;
    let mut offer = |center: Vec2, support: &[Vec2]| {
        let radius = support
            .iter()
            .map(|p| (*p - center).norm())
            .fold(0.0, f64::max);
        let tol = 1e-10 * (1.0 + radius);
        if pts.iter().all(|p| (*p - center).norm() <= radius + tol)
            && best.is_none_or(|b| radius < b.radius)
        {
            best = Some(Circle2 { center, radius });
        }
    };
    for i in 0..n {
        offer(pts[i], &pts[i..=i]);
        for j in i + 1..n {
            offer((pts[i] + pts[j]) * 0.5, &[pts[i], pts[j]]);
            for k in j + 1..n {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
                if d.abs() <= 1e-12 {
                    continue;
                }
                let (a2, b2, c2) = (a.norm_squared(), b.norm_squared(), c.norm_squared());
                let center = Vec2::new(
                    (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                    (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d,
                );
                offer(center, &[a, b, c]);
            }
        }
    }
    best.ok_or_else(|| Error::OracleSelfCheck("no enclosing circle".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uv(x: f64, y: f64, z: f64) -> UnitVector {
        UnitVector::normalize(Vec3::new(x, y, z)).unwrap()
    }

    fn tetrahedron() -> Vec<UnitVector> {
        vec![
            uv(1.0, 1.0, 1.0),
            uv(1.0, -1.0, -1.0),
            uv(-1.0, 1.0, -1.0),
            uv(-1.0, -1.0, 1.0),
        ]
    }

    #[test]
    fn axis_triple() {
        let (c, hemi) =
            oracle_spherical_sec(&[UnitVector::X, UnitVector::Y, UnitVector::Z]).unwrap();
        assert!(hemi);
        assert!((c.t() - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((c.center().vec() - uv(1.0, 1.0, 1.0).vec()).max_abs() < 1e-15);
    }

    #[test]
    fn tetrahedron_needs_more_than_a_hemisphere() {
        let (c, hemi) = oracle_spherical_sec(&tetrahedron()).unwrap();
        assert!(!hemi);
        // Large cap bounded by a face circumcircle, centered opposite a vertex.
        assert!((c.t() + 1.0 / 3.0).abs() < 1e-12);
        assert!(!oracle_hemisphere_feasible(&tetrahedron()).unwrap());
    }

    #[test]
    fn coincident_pair() {
        let (c, hemi) = oracle_spherical_sec(&[UnitVector::Z, UnitVector::Z]).unwrap();
        assert!(hemi);
        assert_eq!(c.t(), 1.0);
    }

    #[test]
    fn antipodal_pair_is_a_great_circle() {
        let pts = [UnitVector::X, UnitVector::X.antipode()];
        let (c, hemi) = oracle_spherical_sec(&pts).unwrap();
        assert!(!hemi);
        assert_eq!(c.t(), 0.0);
        assert!(!oracle_hemisphere_feasible(&pts).unwrap());
    }

    #[test]
    fn cap_is_feasible() {
        let pts: Vec<UnitVector> = (0..20)
            .map(|k| {
                let a = k as f64 * 0.7;
                uv(0.5 * a.cos(), 0.5 * a.sin(), 0.2 + 0.05 * k as f64)
            })
            .collect();
        assert!(pts.iter().all(|p| p.z() > 0.1));
        assert!(oracle_hemisphere_feasible(&pts).unwrap());
    }

    #[test]
    fn great_circle_points_are_not_feasible() {
        let pts = [UnitVector::X, UnitVector::Y, uv(-1.0, -1.0, 0.0)];
        assert!(!oracle_hemisphere_feasible(&pts).unwrap());
    }

    #[test]
    fn permutation_invariant() {
        let mut pts = tetrahedron();
        pts.push(uv(0.2, 0.1, 0.9));
        let reference = oracle_spherical_sec(&pts).unwrap();
        pts.reverse();
        assert_eq!(oracle_spherical_sec(&pts).unwrap(), reference);
        pts.swap(0, 2);
        assert_eq!(oracle_spherical_sec(&pts).unwrap(), reference);
    }

    #[test]
    fn size_limits() {
        assert!(oracle_spherical_sec(&[UnitVector::X]).is_err());
        assert!(oracle_spherical_sec(&vec![UnitVector::X; 61]).is_err());
        assert!(oracle_ball3d(&[]).is_err());
        assert!(oracle_ball3d(&vec![Vec3::ZERO; 41]).is_err());
        assert!(oracle_hemisphere_feasible(&[]).is_err());
    }

    #[test]
    fn ball_examples() {
        let b = oracle_ball3d(&[Vec3::new(0.0, 0.0, 1.0), Vec3::new(0.0, 2.0, 1.0)]).unwrap();
        assert_eq!(b, EuclideanBall::new(Vec3::new(0.0, 1.0, 1.0), 1.0));
        let tet: Vec<Vec3> = tetrahedron().iter().map(|p| p.vec()).collect();
        let b = oracle_ball3d(&tet).unwrap();
        assert!(b.center.norm() < 1e-14 && (b.radius - 1.0).abs() < 1e-14);
    }

    #[test]
    fn planar_example() {
        let c = oracle_planar_circle(&[
            Vec2::new(-1.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(c.center.norm() < 1e-15 && (c.radius - 1.0).abs() < 1e-15);
    }
}
