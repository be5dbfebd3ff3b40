//! Move-to-front Welzl recursion shared by the planar and 3D solvers.
//!
//! Recursion only happens when a point falls outside the current shape, and
//! its depth is bounded by the number of boundary points that determine a
//! shape (`DIM + 1`).

use crate::list::{MtfList, NodeId};

/// A shape family for which the smallest member through a set of support
/// points can be constructed directly.
pub(crate) trait Enclosing: Sized {
    type Point: Copy + Default;
    const DIM: usize;

    /// Smallest shape with every point of `support` on its boundary.
    /// `support` holds between 1 and `DIM + 1` points.
    fn through(support: &[Self::Point]) -> Self;

    fn encloses(&self, p: &Self::Point) -> bool;
}

/// Counters recorded during one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WelzlStats {
    pub containment_tests: u64,
    pub recursive_calls: u64,
    /// Largest boundary set any call was made with.
    pub max_boundary: usize,
}

#[derive(Clone, Copy)]
struct Boundary<P> {
    points: [P; 4],
    len: usize,
}

impl<P: Copy + Default> Boundary<P> {
    fn empty() -> Self {
        Self {
            points: [P::default(); 4],
            len: 0,
        }
    }

    fn with(mut self, p: P) -> Self {
        self.points[self.len] = p;
        self.len += 1;
        self
    }

    fn as_slice(&self) -> &[P] {
        &self.points[..self.len]
    }
}

/// Runs the recursion on a non-empty list, reordering it in place.
pub(crate) fn solve<S: Enclosing>(list: &mut MtfList<S::Point>, stats: &mut WelzlStats) -> S {
    debug_assert!(!list.is_empty());
    debug_assert!(S::DIM < 4);
    level::<S>(list, None, Boundary::empty(), stats)
}

fn level<S: Enclosing>(
    list: &mut MtfList<S::Point>,
    end: Option<NodeId>,
    boundary: Boundary<S::Point>,
    stats: &mut WelzlStats,
) -> S {
    stats.max_boundary = stats.max_boundary.max(boundary.len);
    if boundary.len == S::DIM + 1 {
        return S::through(boundary.as_slice());
    }

    // Seed with the boundary plus the first `2 - |B|` points of the prefix.
    let mut support = boundary;
    let mut cursor = list.head();
    while support.len < 2 {
        match cursor {
            Some(id) if Some(id) != end => {
                support = support.with(*list.get(id));
                cursor = list.next(id);
            }
            _ => break,
        }
    }
    let mut shape = S::through(support.as_slice());

    while let Some(id) = cursor {
        if Some(id) == end {
            break;
        }
        let next = list.next(id);
        let p = *list.get(id);
        stats.containment_tests += 1;
        if !shape.encloses(&p) {
            stats.recursive_calls += 1;
            shape = level::<S>(list, Some(id), boundary.with(p), stats);
            list.move_to_front(id);
        }
        cursor = next;
    }
    shape
}

/// Smallest of the shapes through proper subsets of `support` that enclose
/// all of `support`. Used when the full support set is degenerate.
pub(crate) fn fallback_through<S: Enclosing>(support: &[S::Point], size: impl Fn(&S) -> f64) -> S {
    let n = support.len();
    let mut best: Option<(f64, S)> = None;
    // Bitmask over subsets of at most three points; n <= 4.
    for mask in 1u32..(1 << n) - 1 {
        let subset: Vec<S::Point> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| support[i])
            .collect();
        let shape = S::through(&subset);
        if support.iter().all(|p| shape.encloses(p)) {
            let s = size(&shape);
            if best.as_ref().is_none_or(|(b, _)| s < *b) {
                best = Some((s, shape));
            }
        }
    }
    best.map(|(_, s)| s)
        .unwrap_or_else(|| S::through(&support[..1]))
}
