//! Geometric crossing counts in the flat once-punctured torus.
//!
//! The torus is `ℝ²/ℤ²` with the puncture at the image of the lattice. An
//! arc of slope `a/b` is the straight segment from the origin to `(b, a)`;
//! a closed curve of slope `a/b` is one period of a straight line with
//! direction `(b, a)` pushed off the lattice by a fixed small offset.
//! Crossings are counted by testing one lift of the first object against
//! every lattice translate of the second, with exact integer orientation
//! tests. No closed-form intersection formula is used.

use serde::{Deserialize, Serialize};

use crate::farey::ExtendedRational;

/// A slope-carrying object in the punctured torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlopeObject {
    /// Properly embedded arc, both ends at the puncture.
    Arc(ExtendedRational),
    /// Essential simple closed curve.
    Curve(ExtendedRational),
}

impl SlopeObject {
    pub fn slope(self) -> ExtendedRational {
        match self {
            SlopeObject::Arc(s) | SlopeObject::Curve(s) => s,
        }
    }
}

// Offsets are (k1 / M, k2 / M²) with M prime; the line through such a point
// with a small integer direction never meets the lattice.
const M: i128 = 1009;
const SCALE: i128 = M * M;

type Pt = (i128, i128);

fn segment(obj: SlopeObject, offset_index: i128) -> (Pt, Pt) {
    let (run, rise) = obj.slope().direction();
    let (run, rise) = (run as i128 * SCALE, rise as i128 * SCALE);
    match obj {
        SlopeObject::Arc(_) => ((0, 0), (run, rise)),
        SlopeObject::Curve(_) => {
            let start = (offset_index * M, 2 * offset_index + 1);
            (start, (start.0 + run, start.1 + rise))
        }
    }
}

fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Strict crossing of two segments: each separates the other's endpoints.
fn crosses(s: (Pt, Pt), t: (Pt, Pt)) -> bool {
    let d1 = orient(s.0, s.1, t.0).signum();
    let d2 = orient(s.0, s.1, t.1).signum();
    let d3 = orient(t.0, t.1, s.0).signum();
    let d4 = orient(t.0, t.1, s.1).signum();
    d1 * d2 < 0 && d3 * d4 < 0
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

/// Number of transverse crossings between two straight objects in the
/// flat punctured torus. Parallel objects are disjoint after the push-off
/// and give 0.
pub fn lattice_oracle(first: SlopeObject, second: SlopeObject) -> u64 {
    if first.slope() == second.slope() {
        return 0;
    }
    let s = segment(first, 1);
    let t = segment(second, 2);
    let (sx0, sx1) = (s.0 .0.min(s.1 .0), s.0 .0.max(s.1 .0));
    let (sy0, sy1) = (s.0 .1.min(s.1 .1), s.0 .1.max(s.1 .1));
    let (tx0, tx1) = (t.0 .0.min(t.1 .0), t.0 .0.max(t.1 .0));
    let (ty0, ty1) = (t.0 .1.min(t.1 .1), t.0 .1.max(t.1 .1));
    let mut count = 0u64;
    for nx in floor_div(sx0 - tx1, SCALE) - 1..=floor_div(sx1 - tx0, SCALE) + 1 {
        for ny in floor_div(sy0 - ty1, SCALE) - 1..=floor_div(sy1 - ty0, SCALE) + 1 {
            let shift = (nx * SCALE, ny * SCALE);
            let moved = ((t.0 .0 + shift.0, t.0 .1 + shift.1), (t.1 .0 + shift.0, t.1 .1 + shift.1));
            if crosses(s, moved) {
                count += 1;
            }
        }
    }
    count
}
