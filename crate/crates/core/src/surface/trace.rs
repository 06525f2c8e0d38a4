//! Cut-and-trace for a curve on one side of the half-twisted `∂Γ_B`.
//!
//! The side `F_P` (or `F_Q`) is a punctured torus made of an octagon and
//! two rectangles. In its untwisted frame the rectangle transversals are
//! two Farey-adjacent arcs `t1, t2`, so the flat torus cut along them is a
//! parallelogram spanned by their direction vectors. In lattice
//! coordinates `(a, b)` of that basis, `t1`-copies are the lines `b ∈ ℤ`
//! and `t2`-copies the lines `a ∈ ℤ`; the parallelogram corners are the
//! four boundary sides of the octagon.
//!
//! A straight curve is walked through the tiling. Each crossing of a
//! `t`-line is one arc through that rectangle; each stretch between two
//! crossings is one arc of the octagon, classified by the pair of sides it
//! joins. A fixed dictionary then names the slope of every piece in `F_A`
//! and `F_B`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{normalize, ArcFamily, Host, SideTag, SurfaceError, TwistDirection, TwistedPresentation};
use crate::farey::{classify, det_distance, q, ExtendedRational};

/// Counts of the pieces of a curve cut along the two transversals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OctagonPieces {
    /// Crossings with `t1` (arcs through the first rectangle).
    pub first_crossings: u64,
    /// Crossings with `t2`.
    pub second_crossings: u64,
    /// Octagon arcs cutting off the corners `(0,0), (1,0), (1,1), (0,1)`.
    pub corners: [u64; 4],
    /// Octagon arcs joining the two copies of `t1`.
    pub through_first: u64,
    /// Octagon arcs joining the two copies of `t2`.
    pub through_second: u64,
}

impl OctagonPieces {
    pub fn octagon_arcs(&self) -> u64 {
        self.corners.iter().sum::<u64>() + self.through_first + self.through_second
    }
}

// Start point (1/P1, 1/P2) in lattice coordinates, P1 and P2 distinct primes
// far above any slope height used here, so the line misses the lattice.
const P1: i128 = 1_000_003;
const P2: i128 = 1_000_033;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Crossing {
    /// `a` hits an integer: a copy of `t2`.
    A,
    /// `b` hits an integer: a copy of `t1`.
    B,
}

/// Time `(k - 1/p) / d` as a fraction with positive denominator.
fn crossing_time(k: i128, p: i128, d: i128) -> (i128, i128) {
    let (n, m) = (k * p - 1, p * d);
    if m < 0 {
        (-n, -m)
    } else {
        (n, m)
    }
}

/// Integer values crossed by `x0 + t d` for `t ∈ [0, 1)` with `0 < x0 < 1`.
fn crossed_integers(d: i128) -> core::ops::RangeInclusive<i128> {
    if d > 0 {
        1..=d
    } else {
        d + 1..=0
    }
}

/// Walks one period of the line with lattice direction `(da, db)`.
/// Both components must be non-zero.
fn walk(da: i128, db: i128) -> OctagonPieces {
    debug_assert!(da != 0 && db != 0);
    let mut events: Vec<((i128, i128), Crossing)> = crossed_integers(da)
        .map(|k| (crossing_time(k, P1, da), Crossing::A))
        .chain(crossed_integers(db).map(|k| (crossing_time(k, P2, db), Crossing::B)))
        .collect();
    events.sort_by(|(x, _), (y, _)| {
        let ord = (x.0 * y.1).cmp(&(y.0 * x.1));
        debug_assert_ne!(ord, Ordering::Equal, "line passed through the puncture");
        ord
    });

    // sides of the unit cell: a = 0 / a = 1 and b = 0 / b = 1
    let a_entry = if da > 0 { 0 } else { 1 };
    let a_exit = 1 - a_entry;
    let b_entry = if db > 0 { 0 } else { 1 };
    let b_exit = 1 - b_entry;
    let corner_index = |a: usize, b: usize| match (a, b) {
        (0, 0) => 0,
        (1, 0) => 1,
        (1, 1) => 2,
        _ => 3,
    };

    let mut out = OctagonPieces::default();
    let n = events.len();
    for i in 0..n {
        let prev = events[i].1;
        let next = events[(i + 1) % n].1;
        match (prev, next) {
            (Crossing::A, Crossing::A) => out.through_second += 1,
            (Crossing::B, Crossing::B) => out.through_first += 1,
            (Crossing::A, Crossing::B) => out.corners[corner_index(a_entry, b_exit)] += 1,
            (Crossing::B, Crossing::A) => out.corners[corner_index(a_exit, b_entry)] += 1,
        }
        match prev {
            Crossing::A => out.second_crossings += 1,
            Crossing::B => out.first_crossings += 1,
        }
    }
    out
}

/// Cuts the closed curve of slope `c` along the transversals `t1, t2`
/// (Farey-adjacent, neither parallel to `c`).
pub(crate) fn cut(c: ExtendedRational, t1: ExtendedRational, t2: ExtendedRational) -> OctagonPieces {
    let (ux, uy) = t1.direction();
    let (wx, wy) = t2.direction();
    let (vx, vy) = c.direction();
    let (ux, uy, wx, wy, vx, vy) = (ux as i128, uy as i128, wx as i128, wy as i128, vx as i128, vy as i128);
    let basis_det = ux * wy - uy * wx;
    debug_assert_eq!(basis_det.abs(), 1);
    // v = da·u + db·w
    let da = (vx * wy - vy * wx) * basis_det;
    let db = (ux * vy - uy * vx) * basis_det;
    walk(da, db)
}

/// A curve parallel to the boundary of the side: it cuts off every corner
/// once and crosses each transversal near both of its ends.
const PERIPHERAL: OctagonPieces = OctagonPieces {
    first_crossings: 2,
    second_crossings: 2,
    corners: [1, 1, 1, 1],
    through_first: 0,
    through_second: 0,
};

/// Where each piece type lands for a left twist.
struct Dictionary {
    rect_host: Host,
    /// Slopes of the rectangles over `t1` and `t2`.
    first_rect: ExtendedRational,
    second_rect: ExtendedRational,
    /// Slopes of corner arcs at corners {0, 2} and {1, 3}.
    corner_even: ExtendedRational,
    corner_odd: ExtendedRational,
    through_first: ExtendedRational,
    through_second: ExtendedRational,
}

/// Side `P`: transversals at `1/0` (the `-1` rectangle) and `1/1` (the `∞`
/// rectangle); the octagon lies in `F_B`.
fn side_p() -> Dictionary {
    Dictionary {
        rect_host: Host::FA,
        first_rect: q(-1, 1),
        second_rect: q(1, 0),
        corner_even: q(0, 1),
        corner_odd: q(1, 1),
        through_first: q(1, 0),
        through_second: q(1, 2),
    }
}

/// Side `Q` is side `P` carried by `x ↦ -1/x` with the hosts exchanged.
fn side_q() -> Dictionary {
    Dictionary {
        rect_host: Host::FB,
        first_rect: q(1, 1),
        second_rect: q(0, 1),
        corner_even: q(1, 0),
        corner_odd: q(-1, 1),
        through_first: q(0, 1),
        through_second: q(-2, 1),
    }
}

/// Quarter turn `p/q ↦ -q/p` taking the side-`P` frame to the side-`Q`
/// frame, where the transversals sit at `0/1` and `-1/1`.
const QUARTER_TURN: [[i64; 2]; 2] = [[0, -1], [1, 0]];

fn transversals(side: SideTag) -> (ExtendedRational, ExtendedRational) {
    match side {
        SideTag::P => (q(1, 0), q(1, 1)),
        SideTag::Q => (q(0, 1), q(-1, 1)),
    }
}

fn dictionary(side: SideTag) -> Dictionary {
    match side {
        SideTag::P => side_p(),
        SideTag::Q => side_q(),
    }
}

fn assemble(
    source_slope: ExtendedRational,
    side: SideTag,
    direction: TwistDirection,
    pieces: &OctagonPieces,
) -> TwistedPresentation {
    let d = dictionary(side);
    let oct_host = d.rect_host.other();
    let items = [
        (d.rect_host, d.first_rect, pieces.first_crossings),
        (d.rect_host, d.second_rect, pieces.second_crossings),
        (oct_host, d.corner_even, pieces.corners[0] + pieces.corners[2]),
        (oct_host, d.corner_odd, pieces.corners[1] + pieces.corners[3]),
        (oct_host, d.through_first, pieces.through_first),
        (oct_host, d.through_second, pieces.through_second),
    ];
    let split = |h: Host| normalize(items.iter().copied().filter(|it| it.0 == h));
    let left = TwistedPresentation {
        source_slope,
        side,
        twist_direction: TwistDirection::Left,
        families_fa: split(Host::FA),
        families_fb: split(Host::FB),
    };
    match direction {
        TwistDirection::Left => left,
        TwistDirection::Right => left.reflected(),
    }
}

fn require_distant(c: ExtendedRational) -> Result<(), SurfaceError> {
    let class = classify(c);
    if class.is_distant() {
        Ok(())
    } else {
        Err(SurfaceError::NotDistant { slope: c, class })
    }
}

/// The curve of slope `c` (in the frame of its solid torus) after the
/// half-twist, cut into arc families by geometric tracing.
pub fn cut_and_trace(
    c: ExtendedRational,
    side: SideTag,
    direction: TwistDirection,
) -> Result<TwistedPresentation, SurfaceError> {
    require_distant(c)?;
    let realized = match side {
        SideTag::P => c,
        SideTag::Q => c.transform(QUARTER_TURN).expect("canonical slopes stay canonical"),
    };
    let (t1, t2) = transversals(side);
    let pieces = cut(realized, t1, t2);
    Ok(assemble(c, side, direction, &pieces))
}

/// The boundary-parallel curve of the side, traced through the same
/// dictionary. Its families are the rectangles of the twisted `∂Γ_B`.
pub fn trace_peripheral(side: SideTag, direction: TwistDirection) -> TwistedPresentation {
    assemble(q(1, 0), side, direction, &PERIPHERAL)
}

/// What the counting argument guarantees about the host holding the
/// octagon, without deciding the split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBounds {
    pub host: Host,
    /// Arcs parallel to a rectangle side: `2·min(|s|, |r-s|)`.
    pub close_total: u64,
    pub close_candidates: [ExtendedRational; 2],
    /// `||r-s| - |s||` arcs of one further slope.
    pub third_count: u64,
    pub third_candidates: [ExtendedRational; 2],
}

impl FamilyBounds {
    /// Exact families must use only candidate slopes with the right totals,
    /// and the third slope must be a single one of the two candidates.
    pub fn admits(&self, families: &[ArcFamily]) -> bool {
        let mut close = 0;
        let mut third = Vec::new();
        for f in families {
            if f.host != self.host {
                return false;
            }
            if self.close_candidates.contains(&f.slope.0) {
                close += f.count;
            } else if self.third_candidates.contains(&f.slope.0) {
                third.push(f.count);
            } else {
                return false;
            }
        }
        close == self.close_total && third.len() == 1 && third[0] == self.third_count
    }
}

fn rect_counts(c: ExtendedRational) -> (u64, u64) {
    (det_distance(c, q(1, 0)), det_distance(c, q(1, 1)))
}

pub fn guaranteed_bounds(
    c: ExtendedRational,
    side: SideTag,
    direction: TwistDirection,
) -> Result<FamilyBounds, SurfaceError> {
    require_distant(c)?;
    let (s, r_minus_s) = rect_counts(c);
    let d = dictionary(side);
    let mirror = |x: ExtendedRational| match direction {
        TwistDirection::Left => x,
        TwistDirection::Right => -x,
    };
    Ok(FamilyBounds {
        host: d.rect_host.other(),
        close_total: 2 * s.min(r_minus_s),
        close_candidates: [mirror(d.corner_even), mirror(d.corner_odd)],
        third_count: s.abs_diff(r_minus_s),
        third_candidates: [mirror(d.through_first), mirror(d.through_second)],
    })
}

/// Closed-form rectangle families: for `c = r/s`, `|s|` arcs through the
/// first rectangle and `|r-s|` through the second. The octagon host's
/// split is taken from [`cut_and_trace`] and checked against
/// [`guaranteed_bounds`].
pub fn half_twist_families(
    c: ExtendedRational,
    side: SideTag,
    direction: TwistDirection,
) -> Result<TwistedPresentation, SurfaceError> {
    let bounds = guaranteed_bounds(c, side, direction)?;
    let (s, r_minus_s) = rect_counts(c);
    let d = dictionary(side);
    let mirror = |x: ExtendedRational| match direction {
        TwistDirection::Left => x,
        TwistDirection::Right => -x,
    };
    let rects = normalize([(d.rect_host, mirror(d.first_rect), s), (d.rect_host, mirror(d.second_rect), r_minus_s)]);
    let traced = cut_and_trace(c, side, direction)?;
    let octagon = traced.families(bounds.host).to_vec();
    debug_assert!(bounds.admits(&octagon));
    let (families_fa, families_fb) = match d.rect_host {
        Host::FA => (rects, octagon),
        Host::FB => (octagon, rects),
    };
    Ok(TwistedPresentation { source_slope: c, side, twist_direction: direction, families_fa, families_fb })
}
