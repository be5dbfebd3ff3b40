//! Smallest enclosing circle in the plane.

use crate::error::{Error, Result};
use crate::list::MtfList;
use crate::vector::Vec2;
use crate::welzl::{self, Enclosing, WelzlStats};

const EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle2 {
    pub center: Vec2,
    pub radius: f64,
}

impl Circle2 {
    pub fn contains(&self, p: Vec2) -> bool {
        (p - self.center).norm() <= self.radius + EPS * (1.0 + self.radius)
    }
}

impl Enclosing for Circle2 {
    type Point = Vec2;
    const DIM: usize = 2;

    fn through(support: &[Vec2]) -> Self {
        match *support {
            [a] => Circle2 {
                center: a,
                radius: 0.0,
            },
            [a, b] => {
                let center = (a + b) * 0.5;
                Circle2 {
                    center,
                    radius: (a - b).norm() * 0.5,
                }
            }
            [a, b, c] => {
                let (ab, ac) = (b - a, c - a);
                let d = 2.0 * ab.cross(ac);
                let scale = ab.norm_squared().max(ac.norm_squared());
                if d.abs() <= 1e-14 * scale {
                    return welzl::fallback_through(support, |s: &Circle2| s.radius);
                }
                let (ab2, ac2) = (ab.norm_squared(), ac.norm_squared());
                let offset =
                    Vec2::new((ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d);
                let center = a + offset;
                let radius = (a - center)
                    .norm()
                    .max((b - center).norm())
                    .max((c - center).norm());
                Circle2 { center, radius }
            }
            _ => unreachable!("planar support holds 1 to 3 points"),
        }
    }

    #[inline]
    fn encloses(&self, p: &Vec2) -> bool {
        self.contains(*p)
    }
}

/// Smallest circle enclosing `points`, processed in the given order.
/// Shuffle first for expected linear time.
pub fn welzl_planar(points: &[Vec2]) -> Result<Circle2> {
    Ok(welzl_planar_with_stats(points)?.0)
}

pub fn welzl_planar_with_stats(points: &[Vec2]) -> Result<(Circle2, WelzlStats)> {
    if points.is_empty() {
        return Err(Error::invalid("cannot enclose an empty point set"));
    }
    let mut list = MtfList::from_vec(points.to_vec());
    let mut stats = WelzlStats::default();
    let circle = welzl::solve::<Circle2>(&mut list, &mut stats);
    Ok((circle, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cloud::{seeded_rng, shuffle};
    use crate::oracle::oracle_planar_circle;
    use rand::Rng;

    #[test]
    fn single_point() {
        let c = welzl_planar(&[Vec2::new(0.0, 0.0)]).unwrap();
        assert_eq!(
            c,
            Circle2 {
                center: Vec2::new(0.0, 0.0),
                radius: 0.0
            }
        );
    }

    #[test]
    fn diameter_pair_on_unit_circle() {
        let pts = [
            Vec2::new(-1.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
        ];
        let c = welzl_planar(&pts).unwrap();
        assert!(c.center.norm() < 1e-15);
        assert!((c.radius - 1.0).abs() < 1e-15);
    }

    #[test]
    fn empty_rejected() {
        assert!(welzl_planar(&[]).is_err());
    }

    #[test]
    fn collinear_and_duplicate_points() {
        let pts: Vec<Vec2> = (0..10)
            .map(|i| Vec2::new(i as f64, 2.0 * i as f64))
            .collect();
        let c = welzl_planar(&pts).unwrap();
        assert!((c.center - Vec2::new(4.5, 9.0)).norm() < 1e-12);
        let dup = vec![Vec2::new(1.0, 1.0); 5];
        assert_eq!(welzl_planar(&dup).unwrap().radius, 0.0);
    }

    #[test]
    fn boundary_depth_is_bounded() {
        let mut rng = seeded_rng(3);
        let mut pts: Vec<Vec2> = (0..2000)
            .map(|_| Vec2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        shuffle(&mut pts, 5);
        let (c, stats) = welzl_planar_with_stats(&pts).unwrap();
        assert!(stats.max_boundary <= 3);
        assert!(pts.iter().all(|p| c.contains(*p)));
    }

    #[test]
    fn agrees_with_enumeration() {
        let mut rng = seeded_rng(11);
        for _ in 0..100 {
            let n = rng.random_range(1..=25);
            let pts: Vec<Vec2> = (0..n)
                .map(|_| Vec2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)))
                .collect();
            let fast = welzl_planar(&pts).unwrap();
            let slow = oracle_planar_circle(&pts).unwrap();
            assert!((fast.radius - slow.radius).abs() <= 1e-10);
        }
    }
}
