//! Smallest enclosing circle of a point cloud on the unit sphere.
//!
//! The solver is the 3D move-to-front Welzl recursion specialised to points on
//! the sphere. While the points seen so far fit in an open hemisphere, the
//! smallest enclosing ball of any boundary triple already encloses everything
//! processed before it, so the recursion never needs a fourth boundary point
//! and behaves like the planar algorithm. When the cloud does not fit in a
//! hemisphere, one of three configurations is observed and the solve stops:
//!
//! * [`FullSphereState::A`]: the two points seeding a circle are antipodal.
//! * [`FullSphereState::B`]: a boundary triple lies on a great circle.
//! * [`FullSphereState::C`]: the circle through a boundary triple fails to
//!   enclose a point that precedes it.
//!
//! Expected running time is linear in the number of points provided the input
//! order is a uniformly random permutation. Shuffle once before solving.

use std::fmt;

use crate::error::{Error, Result};
use crate::list::{MtfList, NodeId};
use crate::sphere::{
    circle_from_three, circle_from_two, is_antipodal, Circumcircle, PlaneCircle, UnitVector,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// The caller guarantees the cloud lies in an open hemisphere. The
    /// enclosure scan at three boundary points is then skipped; results on
    /// clouds violating the guarantee are unspecified.
    pub hemisphere_known: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FullSphereState {
    /// Two antipodal points seed a circle.
    A,
    /// Three boundary points lie on a great circle.
    B,
    /// The circle through three boundary points misses an earlier point.
    C,
}

impl fmt::Display for FullSphereState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FullSphereState::A => "a",
            FullSphereState::B => "b",
            FullSphereState::C => "c",
        })
    }
}

/// Proof that the cloud is not contained in any open hemisphere.
#[derive(Debug, Clone, PartialEq)]
pub struct NotInHemisphere {
    pub state: FullSphereState,
    /// The antipodal pair (A), the great-circle triple (B), or the missed point
    /// followed by the boundary triple (C).
    pub witnesses: Vec<UnitVector>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    Enclosed(PlaneCircle),
    NotInHemisphere(NotInHemisphere),
}

impl SolveOutcome {
    pub fn circle(&self) -> Option<&PlaneCircle> {
        match self {
            SolveOutcome::Enclosed(c) => Some(c),
            SolveOutcome::NotInHemisphere(_) => None,
        }
    }

    pub fn is_enclosed(&self) -> bool {
        matches!(self, SolveOutcome::Enclosed(_))
    }
}

/// Counters recorded during one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Plane tests against the current circle, including enclosure scans.
    pub containment_tests: u64,
    pub recursive_calls: u64,
    /// Largest boundary set any call was made with. Never exceeds 3.
    pub max_boundary: usize,
    /// Enclosure scans at three boundary points that were run.
    pub hemisphere_scans: u64,
    /// Enclosure scans skipped because the subproblem was known to lie in a
    /// hemisphere.
    pub hemisphere_scans_skipped: u64,
    /// Number of stop events; 0 or 1.
    pub stops: u64,
}

/// Solves on `points` in the given order. See [`solve_list`].
pub fn solve(points: &[UnitVector], options: SolveOptions) -> Result<SolveOutcome> {
    Ok(solve_with_stats(points, options)?.0)
}

pub fn solve_with_stats(
    points: &[UnitVector],
    options: SolveOptions,
) -> Result<(SolveOutcome, SolveStats)> {
    let mut list = MtfList::from_vec(points.to_vec());
    solve_list(&mut list, options)
}

/// Solves on a caller-owned list, leaving it in move-to-front order.
///
/// A single point yields a radius-zero circle. An empty list is an error.
pub fn solve_list(
    list: &mut MtfList<UnitVector>,
    options: SolveOptions,
) -> Result<(SolveOutcome, SolveStats)> {
    let Some(head) = list.head() else {
        return Err(Error::invalid("cannot enclose an empty point cloud"));
    };
    let mut search = Search {
        list,
        stats: SolveStats::default(),
    };
    let outcome = if search.list.len() == 1 {
        Ok(PlaneCircle::point(*search.list.get(head)))
    } else {
        search.level(None, Boundary::default(), !options.hemisphere_known)
    };
    let stats = search.stats;
    match outcome {
        Ok(circle) => Ok((SolveOutcome::Enclosed(circle), stats)),
        Err(Halt::Stop(verdict)) => Ok((SolveOutcome::NotInHemisphere(verdict), stats)),
        Err(Halt::Error(e)) => Err(e),
    }
}

enum Halt {
    Stop(NotInHemisphere),
    Error(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Error(e)
    }
}

#[derive(Clone, Copy, Default)]
struct Boundary {
    points: [Option<UnitVector>; 3],
    len: usize,
}

impl Boundary {
    fn with(mut self, p: UnitVector) -> Self {
        self.points[self.len] = Some(p);
        self.len += 1;
        self
    }

    fn get(&self, i: usize) -> UnitVector {
        self.points[i].expect("boundary slot is filled")
    }
}

struct Search<'a> {
    list: &'a mut MtfList<UnitVector>,
    stats: SolveStats,
}

impl Search<'_> {
    fn stop(&mut self, state: FullSphereState, witnesses: Vec<UnitVector>) -> Halt {
        self.stats.stops += 1;
        Halt::Stop(NotInHemisphere { state, witnesses })
    }

    /// Smallest circle enclosing the list prefix before `end` with every
    /// boundary point on it. `scan` requests the enclosure check at three
    /// boundary points; it is off once the subproblem is known to lie in a
    /// hemisphere.
    fn level(
        &mut self,
        end: Option<NodeId>,
        boundary: Boundary,
        scan: bool,
    ) -> Result<PlaneCircle, Halt> {
        self.stats.max_boundary = self.stats.max_boundary.max(boundary.len);
        if boundary.len == 3 {
            return self.triple(end, boundary, scan);
        }

        let mut cursor = self.list.head().filter(|&id| Some(id) != end);
        let (a, b) = match boundary.len {
            0 => {
                let first = cursor.expect("top level holds at least two points");
                let second = self
                    .list
                    .next(first)
                    .expect("top level holds at least two points");
                cursor = self.list.next(second).filter(|&id| Some(id) != end);
                (*self.list.get(first), *self.list.get(second))
            }
            1 => match cursor {
                Some(first) => {
                    cursor = self.list.next(first).filter(|&id| Some(id) != end);
                    (boundary.get(0), *self.list.get(first))
                }
                None => return Ok(PlaneCircle::point(boundary.get(0))),
            },
            _ => (boundary.get(0), boundary.get(1)),
        };
        if is_antipodal(a, b) {
            return Err(self.stop(FullSphereState::A, vec![a, b]));
        }
        let mut circle = circle_from_two(a, b)?;

        while let Some(id) = cursor {
            if Some(id) == end {
                break;
            }
            let next = self.list.next(id);
            let p = *self.list.get(id);
            self.stats.containment_tests += 1;
            if !circle.contains(p) {
                // The current circle is a small cap holding everything seen so
                // far. If p is closer to its center than the antipodal cap
                // boundary, cap and p share a hemisphere and so does the
                // subproblem below.
                let sub_scan = scan && circle.center().dot(p) <= -circle.t();
                self.stats.recursive_calls += 1;
                circle = self.level(Some(id), boundary.with(p), sub_scan)?;
                self.list.move_to_front(id);
            }
            cursor = next;
        }
        Ok(circle)
    }

    fn triple(
        &mut self,
        end: Option<NodeId>,
        boundary: Boundary,
        scan: bool,
    ) -> Result<PlaneCircle, Halt> {
        let (b1, b2, b3) = (boundary.get(0), boundary.get(1), boundary.get(2));
        let circle = match circle_from_three(b1, b2, b3)? {
            Circumcircle::Small(c) => c,
            Circumcircle::GreatCircle => {
                return Err(self.stop(FullSphereState::B, vec![b1, b2, b3]));
            }
        };
        if !scan {
            self.stats.hemisphere_scans_skipped += 1;
            return Ok(circle);
        }
        self.stats.hemisphere_scans += 1;
        let mut outside = None;
        for &p in self.list.iter_until(end) {
            self.stats.containment_tests += 1;
            if !circle.contains(p) {
                outside = Some(p);
                break;
            }
        }
        match outside {
            Some(p) => Err(self.stop(FullSphereState::C, vec![p, b1, b2, b3])),
            None => Ok(circle),
        }
    }
}
