//! Points, circles and balls on and around the unit sphere.
//!
//! A spherical circle with center `u` and geodesic radius `r` is stored as the
//! plane `{x : u·x = t}` with `t = cos r`. A point lies inside the circle when
//! it is on the far side of that plane, so containment is a single dot product.

use crate::error::{Error, Result};
use crate::vector::{solve3, Vec3};

/// Accepted deviation of an input vector's length from 1 before it is
/// re-normalized; longer deviations are rejected.
pub const EPS_UNIT: f64 = 1e-9;
/// Slack of the plane containment test `u·p >= t - EPS_CONTAIN`.
pub const EPS_CONTAIN: f64 = 1e-12;
/// Two points are antipodal when `1 + a·b <= EPS_ANTIPODAL`.
pub const EPS_ANTIPODAL: f64 = 1e-12;
/// Three unit vectors are treated as coplanar with the origin when the
/// determinant of the matrix with rows `b1, b2, b3` is at most this value.
pub const EPS_SINGULAR: f64 = 1e-12;

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector(Vec3);

impl UnitVector {
    pub const X: UnitVector = UnitVector(Vec3::new(1.0, 0.0, 0.0));
    pub const Y: UnitVector = UnitVector(Vec3::new(0.0, 1.0, 0.0));
    pub const Z: UnitVector = UnitVector(Vec3::new(0.0, 0.0, 1.0));

    /// Builds a unit vector from components that are already of unit length up
    /// to [`EPS_UNIT`]. The result is re-normalized.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vec3::new(x, y, z);
        let norm = v.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > EPS_UNIT {
            return Err(Error::invalid(format!(
                "vector ({x}, {y}, {z}) has length {norm}, expected 1"
            )));
        }
        Ok(Self(v / norm))
    }

    /// Projects any finite nonzero vector onto the sphere.
    pub fn normalize(v: Vec3) -> Result<Self> {
        let norm = v.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::invalid(
                "cannot normalize a zero or non-finite vector",
            ));
        }
        Ok(Self(v / norm))
    }

    #[inline]
    pub(crate) fn from_normalized(v: Vec3) -> Self {
        Self(v)
    }

    #[inline]
    pub fn x(self) -> f64 {
        self.0.x
    }

    #[inline]
    pub fn y(self) -> f64 {
        self.0.y
    }

    #[inline]
    pub fn z(self) -> f64 {
        self.0.z
    }

    #[inline]
    pub fn vec(self) -> Vec3 {
        self.0
    }

    #[inline]
    pub fn dot(self, o: UnitVector) -> f64 {
        self.0.dot(o.0)
    }

    pub fn antipode(self) -> UnitVector {
        Self(-self.0)
    }

    pub fn to_geo(self) -> GeoCoordinate {
        unit_to_lonlat(self)
    }
}

/// Longitude and latitude in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoCoordinate {
    pub lon: f64,
    pub lat: f64,
}

impl GeoCoordinate {
    pub fn new(lon: f64, lat: f64) -> Result<Self> {
        if !(lon.is_finite() && (-180.0..=180.0).contains(&lon)) {
            return Err(Error::invalid(format!(
                "longitude {lon} outside [-180, 180]"
            )));
        }
        if !(lat.is_finite() && (-90.0..=90.0).contains(&lat)) {
            return Err(Error::invalid(format!("latitude {lat} outside [-90, 90]")));
        }
        Ok(Self { lon, lat })
    }

    pub fn to_unit(self) -> UnitVector {
        let (lon, lat) = (self.lon.to_radians(), self.lat.to_radians());
        let (slon, clon) = lon.sin_cos();
        let (slat, clat) = lat.sin_cos();
        let v = Vec3::new(clat * clon, clat * slon, slat);
        // Already unit up to rounding; normalize so the invariant holds tightly.
        UnitVector(v / v.norm())
    }
}

/// Converts validated degrees to a point on the sphere.
pub fn lonlat_to_unit(lon: f64, lat: f64) -> Result<UnitVector> {
    Ok(GeoCoordinate::new(lon, lat)?.to_unit())
}

/// Inverse of [`lonlat_to_unit`]. Poles report longitude 0.
pub fn unit_to_lonlat(p: UnitVector) -> GeoCoordinate {
    let horizontal = p.x().hypot(p.y());
    let lat = p.z().atan2(horizontal).to_degrees();
    let lon = if horizontal == 0.0 {
        0.0
    } else {
        p.y().atan2(p.x()).to_degrees()
    };
    GeoCoordinate { lon, lat }
}

/// Great-circle distance in radians, in `[0, π]`.
pub fn geodesic_distance(a: UnitVector, b: UnitVector) -> f64 {
    a.0.cross(b.0).norm().atan2(a.0.dot(b.0))
}

pub fn is_antipodal(a: UnitVector, b: UnitVector) -> bool {
    1.0 + a.dot(b) <= EPS_ANTIPODAL
}

/// A spherical circle in plane form: center `u`, `t = cos r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneCircle {
    center: UnitVector,
    t: f64,
}

impl PlaneCircle {
    pub fn new(center: UnitVector, t: f64) -> Result<Self> {
        if !(t.is_finite() && t > -1.0 && t <= 1.0) {
            return Err(Error::invalid(format!("plane offset {t} outside (-1, 1]")));
        }
        Ok(Self { center, t })
    }

    pub fn from_radius(center: UnitVector, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && (0.0..std::f64::consts::PI).contains(&radius)) {
            return Err(Error::invalid(format!("radius {radius} outside [0, π)")));
        }
        Ok(Self {
            center,
            t: radius.cos(),
        })
    }

    /// Radius-zero circle at `p`.
    pub fn point(p: UnitVector) -> Self {
        Self { center: p, t: 1.0 }
    }

    #[inline]
    pub fn center(&self) -> UnitVector {
        self.center
    }

    /// Plane offset, equal to the cosine of the radius.
    #[inline]
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn radius(&self) -> f64 {
        self.t.clamp(-1.0, 1.0).acos()
    }

    /// True when the circle bounds a cap strictly smaller than a hemisphere.
    pub fn is_small(&self) -> bool {
        self.t > 0.0
    }

    #[inline]
    pub fn contains(&self, p: UnitVector) -> bool {
        self.center.dot(p) >= self.t - EPS_CONTAIN
    }
}

#[inline]
pub fn contains(c: &PlaneCircle, p: UnitVector) -> bool {
    c.contains(p)
}

/// Smallest circle through two non-antipodal points.
pub fn circle_from_two(a: UnitVector, b: UnitVector) -> Result<PlaneCircle> {
    if is_antipodal(a, b) {
        return Err(Error::DegenerateMidpoint);
    }
    let center = UnitVector::normalize(a.0 + b.0)?;
    let t = (0.5 * geodesic_distance(a, b)).cos();
    Ok(PlaneCircle { center, t })
}

/// Outcome of [`circle_from_three`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Circumcircle {
    Small(PlaneCircle),
    /// The three points lie on a great circle; the plane through them
    /// contains the origin.
    GreatCircle,
}

/// Circle through three distinct points, from the plane `b_i·v = 1`.
pub fn circle_from_three(b1: UnitVector, b2: UnitVector, b3: UnitVector) -> Result<Circumcircle> {
    if b1 == b2 || b1 == b3 || b2 == b3 {
        return Err(Error::invalid(
            "circle_from_three needs pairwise distinct points",
        ));
    }
    let rows = [b1.0.to_array(), b2.0.to_array(), b3.0.to_array()];
    let Some(sol) = solve3(rows, [1.0; 3]) else {
        return Ok(Circumcircle::GreatCircle);
    };
    // Rows are unit vectors, so |det| is the normalized volume they span.
    if sol.det.abs() <= EPS_SINGULAR {
        return Ok(Circumcircle::GreatCircle);
    }
    let v = Vec3::from_array(sol.solution);
    let norm = v.norm();
    if !norm.is_finite() {
        return Ok(Circumcircle::GreatCircle);
    }
    Ok(Circumcircle::Small(PlaneCircle {
        center: UnitVector(v / norm),
        t: 1.0 / norm,
    }))
}

/// A Euclidean ball in 3-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanBall {
    pub center: Vec3,
    pub radius: f64,
}

impl EuclideanBall {
    pub fn new(center: Vec3, radius: f64) -> Self {
        Self { center, radius }
    }
}

/// The ball whose intersection with the unit sphere is the cap of `c`.
pub fn cap_to_ball(c: &PlaneCircle) -> Result<EuclideanBall> {
    if c.t <= 0.0 {
        return Err(Error::OutOfDomain(format!(
            "cap with t = {} is not smaller than a hemisphere",
            c.t
        )));
    }
    let t = c.t;
    Ok(EuclideanBall {
        center: c.center.0 * t,
        radius: ((1.0 - t) * (1.0 + t)).sqrt(),
    })
}

/// Inverse of [`cap_to_ball`]. The unit ball at the origin maps to
/// [`Error::FullSphere`].
pub fn ball_to_cap(b: &EuclideanBall) -> Result<PlaneCircle> {
    let offset = b.center.norm();
    if b.radius >= 1.0 || offset == 0.0 {
        return Err(Error::FullSphere);
    }
    if b.radius.is_nan() || b.radius < 0.0 {
        return Err(Error::invalid(format!("negative ball radius {}", b.radius)));
    }
    let residual = offset * offset + b.radius * b.radius - 1.0;
    if residual.abs() > EPS_UNIT {
        return Err(Error::invalid(format!(
            "ball does not meet the unit sphere in a great circle of itself (residual {residual})"
        )));
    }
    Ok(PlaneCircle {
        center: UnitVector(b.center / offset),
        t: offset.min(1.0),
    })
}
