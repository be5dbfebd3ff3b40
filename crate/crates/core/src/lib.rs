//! Smallest enclosing circles on the unit sphere.
//!
//! The central entry point is [`spherical::solve`], a randomized incremental
//! solver that runs in expected linear time and reports when the input is not
//! contained in any open hemisphere. Alongside it live the classic planar and
//! three-dimensional Welzl solvers ([`planar`], [`ball3d`]), exhaustive
//! reference solvers for verification ([`oracle`]), and the geodata plumbing
//! used by the command-line tool ([`geodata`], [`synth`], [`timing`]).
//!
//! All spherical computations happen on the unit sphere. Circles are stored in
//! plane form `{x : u·x = t}` where `u` is the center and `t = cos r`.

pub mod ball3d;
pub mod cloud;
mod error;
pub mod geodata;
pub mod list;
pub mod oracle;
pub mod planar;
pub mod sphere;
pub mod spherical;
pub mod synth;
pub mod timing;
pub mod vector;
mod welzl;

pub use ball3d::welzl_sphere3d;
pub use cloud::{seeded_rng, shuffle};
pub use error::{Error, Result};
pub use list::{MtfList, NodeId};
pub use planar::{welzl_planar, Circle2};
pub use sphere::{
    ball_to_cap, cap_to_ball, circle_from_three, circle_from_two, contains, geodesic_distance,
    is_antipodal, lonlat_to_unit, unit_to_lonlat, Circumcircle, EuclideanBall, GeoCoordinate,
    PlaneCircle, UnitVector,
};
pub use spherical::{
    solve, FullSphereState, NotInHemisphere, SolveOptions, SolveOutcome, SolveStats,
};
pub use vector::{Vec2, Vec3};
