//! Smallest enclosing ball in 3-space.
//!
//! Points need not lie on the unit sphere. On points that do, the result is
//! tied to the smallest enclosing spherical circle: for a cloud inside a
//! hemisphere the ball is `cap_to_ball` of that circle, otherwise it is the
//! unit ball at the origin.

use crate::error::{Error, Result};
use crate::list::MtfList;
use crate::sphere::EuclideanBall;
use crate::vector::{solve3, Vec3};
use crate::welzl::{self, Enclosing, WelzlStats};

const EPS: f64 = 1e-12;

impl EuclideanBall {
    pub fn contains(&self, p: Vec3) -> bool {
        (p - self.center).norm() <= self.radius + EPS * (1.0 + self.radius)
    }
}

fn farthest(center: Vec3, support: &[Vec3]) -> f64 {
    support
        .iter()
        .map(|p| (*p - center).norm())
        .fold(0.0, f64::max)
}

fn degenerate(support: &[Vec3]) -> EuclideanBall {
    welzl::fallback_through(support, |b: &EuclideanBall| b.radius)
}

impl Enclosing for EuclideanBall {
    type Point = Vec3;
    const DIM: usize = 3;

    fn through(support: &[Vec3]) -> Self {
        match *support {
            [a] => EuclideanBall::new(a, 0.0),
            [a, b] => EuclideanBall::new((a + b) * 0.5, (a - b).norm() * 0.5),
            [a, b, c] => {
                // Center in the triangle's plane: a + s·ab + w·ac with
                // (center - a)·ab = |ab|²/2 and (center - a)·ac = |ac|²/2.
                let (ab, ac) = (b - a, c - a);
                let (g11, g12, g22) = (ab.dot(ab), ab.dot(ac), ac.dot(ac));
                let det = g11 * g22 - g12 * g12;
                if det <= 1e-14 * g11.max(g22).powi(2) {
                    return degenerate(support);
                }
                let s = 0.5 * (g22 * g11 - g12 * g22) / det;
                let w = 0.5 * (g11 * g22 - g12 * g11) / det;
                let center = a + ab * s + ac * w;
                EuclideanBall::new(center, farthest(center, support))
            }
            [a, b, c, d] => {
                let rows = [(b - a).to_array(), (c - a).to_array(), (d - a).to_array()];
                let rhs = [
                    0.5 * (b - a).norm_squared(),
                    0.5 * (c - a).norm_squared(),
                    0.5 * (d - a).norm_squared(),
                ];
                let scale = (b - a).norm() * (c - a).norm() * (d - a).norm();
                match solve3(rows, rhs) {
                    Some(sol) if sol.det.abs() > 1e-12 * scale => {
                        let center = a + Vec3::from_array(sol.solution);
                        EuclideanBall::new(center, farthest(center, support))
                    }
                    _ => degenerate(support),
                }
            }
            _ => unreachable!("3D support holds 1 to 4 points"),
        }
    }

    #[inline]
    fn encloses(&self, p: &Vec3) -> bool {
        self.contains(*p)
    }
}

/// Smallest ball enclosing `points`, processed in the given order.
pub fn welzl_sphere3d(points: &[Vec3]) -> Result<EuclideanBall> {
    Ok(welzl_sphere3d_with_stats(points)?.0)
}

/// Like [`welzl_sphere3d`], also returning recursion counters. On unit-sphere
/// input contained in a hemisphere, `max_boundary` never exceeds 3.
pub fn welzl_sphere3d_with_stats(points: &[Vec3]) -> Result<(EuclideanBall, WelzlStats)> {
    if points.is_empty() {
        return Err(Error::invalid("cannot enclose an empty point set"));
    }
    let mut list = MtfList::from_vec(points.to_vec());
    Ok(welzl_sphere3d_list(&mut list))
}

/// Runs on a caller-owned list, leaving it in move-to-front order.
pub fn welzl_sphere3d_list(list: &mut MtfList<Vec3>) -> (EuclideanBall, WelzlStats) {
    let mut stats = WelzlStats::default();
    let ball = welzl::solve::<EuclideanBall>(list, &mut stats);
    (ball, stats)
}
