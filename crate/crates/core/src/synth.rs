//! Synthetic point clouds.

use rand::Rng;

use crate::error::{Error, Result};
use crate::sphere::{GeoCoordinate, UnitVector};
use crate::vector::Vec3;

/// Uniformly distributed point on the sphere.
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> UnitVector {
    // Archimedes: z is uniform on [-1, 1] for the uniform measure.
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let rho = (1.0 - z * z).max(0.0).sqrt();
    UnitVector::from_normalized(Vec3::new(rho * phi.cos(), rho * phi.sin(), z))
}

/// Orthonormal frame `(e1, e2, axis)` around `axis`.
fn frame(axis: UnitVector) -> (Vec3, Vec3, Vec3) {
    let a = axis.vec();
    let helper = if a.x.abs() < 0.9 {
        Vec3::new(1.0, 0.0, 0.0)
    } else {
        Vec3::new(0.0, 1.0, 0.0)
    };
    let e1 = a.cross(helper);
    let e1 = e1 / e1.norm();
    let e2 = a.cross(e1);
    (e1, e2, a)
}

/// `n` points uniformly distributed in the cap of geodesic radius `radius`
/// around `center`.
pub fn random_cap_cloud<R: Rng + ?Sized>(
    rng: &mut R,
    center: UnitVector,
    radius: f64,
    n: usize,
) -> Vec<UnitVector> {
    let (e1, e2, a) = frame(center);
    let z_min = radius.cos();
    (0..n)
        .map(|_| {
            let z: f64 = rng.random_range(z_min..=1.0);
            let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let rho = (1.0 - z * z).max(0.0).sqrt();
            let v = e1 * (rho * phi.cos()) + e2 * (rho * phi.sin()) + a * z;
            UnitVector::from_normalized(v / v.norm())
        })
        .collect()
}

/// Vertices of a randomly rotated regular tetrahedron inscribed in the sphere.
pub fn random_tetrahedron<R: Rng + ?Sized>(rng: &mut R) -> [UnitVector; 4] {
    let (e1, e2, a) = frame(random_unit(rng));
    let spin: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let (s, c) = spin.sin_cos();
    let (f1, f2) = (e1 * c + e2 * s, e2 * c - e1 * s);
    let k = 1.0 / 3f64.sqrt();
    [
        (1.0, 1.0, 1.0),
        (1.0, -1.0, -1.0),
        (-1.0, 1.0, -1.0),
        (-1.0, -1.0, 1.0),
    ]
    .map(|(x, y, z)| {
        let v = (f1 * x + f2 * y + a * z) * k;
        UnitVector::from_normalized(v / v.norm())
    })
}

/// `n >= 4` points not contained in any hemisphere: a random tetrahedral
/// frame plus uniformly random points, in random positions.
pub fn random_full_sphere_cloud<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<UnitVector> {
    assert!(
        n >= 4,
        "a full-sphere cloud needs at least the four frame points"
    );
    let mut pts: Vec<UnitVector> = random_tetrahedron(rng).to_vec();
    pts.extend((4..n).map(|_| random_unit(rng)));
    use rand::seq::SliceRandom;
    pts.shuffle(rng);
    pts
}

/// Spherical longitude/latitude rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rectangle {
    pub center: GeoCoordinate,
    pub lon_span: f64,
    pub lat_span: f64,
}

impl Rectangle {
    /// 90° of longitude by 60° of latitude around (0, 0).
    pub const DEFAULT: Rectangle = Rectangle {
        center: GeoCoordinate { lon: 0.0, lat: 0.0 },
        lon_span: 90.0,
        lat_span: 60.0,
    };

    pub fn validate(&self) -> Result<()> {
        if !(self.lon_span > 0.0 && self.lon_span <= 360.0) {
            return Err(Error::invalid(format!(
                "longitude span {} outside (0, 360]",
                self.lon_span
            )));
        }
        if !(self.lat_span > 0.0 && self.lat_span <= 180.0) {
            return Err(Error::invalid(format!(
                "latitude span {} outside (0, 180]",
                self.lat_span
            )));
        }
        let (lo, hi) = self.lat_bounds();
        if lo < -90.0 || hi > 90.0 {
            return Err(Error::invalid(format!(
                "latitude band [{lo}, {hi}] leaves [-90, 90]"
            )));
        }
        GeoCoordinate::new(self.center.lon, self.center.lat)?;
        Ok(())
    }

    fn lat_bounds(&self) -> (f64, f64) {
        (
            self.center.lat - 0.5 * self.lat_span,
            self.center.lat + 0.5 * self.lat_span,
        )
    }

    /// `n` points uniform by area: longitude uniform, sine of latitude uniform.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Result<Vec<GeoCoordinate>> {
        self.validate()?;
        if n == 0 {
            return Err(Error::invalid("need at least one point"));
        }
        let (lat_lo, lat_hi) = self.lat_bounds();
        let (s_lo, s_hi) = (lat_lo.to_radians().sin(), lat_hi.to_radians().sin());
        let lon_lo = self.center.lon - 0.5 * self.lon_span;
        Ok((0..n)
            .map(|_| {
                let lon = wrap_lon(lon_lo + self.lon_span * rng.random::<f64>());
                let s: f64 = rng.random_range(s_lo..=s_hi);
                let lat = s.clamp(-1.0, 1.0).asin().to_degrees().clamp(lat_lo, lat_hi);
                GeoCoordinate { lon, lat }
            })
            .collect())
    }

    pub fn sample_units<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Result<Vec<UnitVector>> {
        Ok(self
            .sample(rng, n)?
            .into_iter()
            .map(GeoCoordinate::to_unit)
            .collect())
    }
}

fn wrap_lon(lon: f64) -> f64 {
    if (-180.0..=180.0).contains(&lon) {
        lon
    } else {
        (lon + 180.0).rem_euclid(360.0) - 180.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cloud::seeded_rng;
    use crate::sphere::geodesic_distance;

    #[test]
    fn cap_cloud_stays_in_cap() {
        let mut rng = seeded_rng(1);
        let c = random_unit(&mut rng);
        for p in random_cap_cloud(&mut rng, c, 0.4, 500) {
            assert!(geodesic_distance(c, p) <= 0.4 + 1e-12);
        }
    }

    #[test]
    fn tetrahedron_is_regular() {
        let mut rng = seeded_rng(2);
        let t = random_tetrahedron(&mut rng);
        for i in 0..4 {
            for j in i + 1..4 {
                assert!((t[i].dot(t[j]) + 1.0 / 3.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rectangle_validation() {
        let bad = Rectangle {
            lat_span: 0.0,
            ..Rectangle::DEFAULT
        };
        assert!(bad.validate().is_err());
        let bad = Rectangle {
            center: GeoCoordinate {
                lon: 0.0,
                lat: 70.0,
            },
            ..Rectangle::DEFAULT
        };
        assert!(bad.validate().is_err());
        assert!(Rectangle::DEFAULT.sample(&mut seeded_rng(0), 0).is_err());
    }

    #[test]
    fn single_point_inside_rectangle() {
        let pts = Rectangle::DEFAULT.sample(&mut seeded_rng(4), 1).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].lon.abs() <= 45.0 && pts[0].lat.abs() <= 30.0);
    }

    #[test]
    fn wraps_across_antimeridian() {
        let r = Rectangle {
            center: GeoCoordinate {
                lon: 170.0,
                lat: 0.0,
            },
            ..Rectangle::DEFAULT
        };
        for g in r.sample(&mut seeded_rng(5), 1000).unwrap() {
            assert!((-180.0..=180.0).contains(&g.lon));
            assert!(g.lon >= 125.0 || g.lon <= -145.0);
        }
    }

    #[test]
    fn longitudes_are_uniform() {
        // 20 bins, each expected 5000 ± 3σ with σ = sqrt(n p (1 - p)).
        let n = 100_000;
        let pts = Rectangle::DEFAULT.sample(&mut seeded_rng(6), n).unwrap();
        let mut bins = [0usize; 20];
        for g in &pts {
            let b = (((g.lon + 45.0) / 90.0) * 20.0).floor() as usize;
            bins[b.min(19)] += 1;
        }
        let p = 1.0 / 20.0;
        let mean = n as f64 * p;
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        for &b in &bins {
            assert!((b as f64 - mean).abs() <= 3.0 * sigma, "bin {b}");
        }
    }

    #[test]
    fn latitudes_are_area_uniform() {
        let n = 100_000;
        let pts = Rectangle::DEFAULT.sample(&mut seeded_rng(7), n).unwrap();
        // Equal-area split of the ±30° band is at latitude 0: half the points
        // fall on each side, and a quarter above asin(0.25)°.
        let north = pts.iter().filter(|g| g.lat > 0.0).count() as f64 / n as f64;
        let upper = pts
            .iter()
            .filter(|g| g.lat > 0.25f64.asin().to_degrees())
            .count() as f64
            / n as f64;
        assert!((north - 0.5).abs() < 0.01);
        assert!((upper - 0.25).abs() < 0.01);
    }
}
