//! Intersection calculus in a once-punctured torus.
//!
//! Slopes are measured against a fixed (meridian, longitude) frame: the
//! denominator of an arc's slope is the number of times it meets the
//! meridian. Two non-parallel arcs in minimal position meet in
//! `|det| - 1` points, a closed curve meets an arc in `|det|` points.

mod lattice;

use core::fmt;

use serde::{Deserialize, Serialize};

use crate::farey::{classify, common_neighbors, det_distance, ExtendedRational, FareyError, SlopeClass};

pub use lattice::{lattice_oracle, SlopeObject};

/// The slope of a properly embedded essential arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcSlope(pub ExtendedRational);

impl ArcSlope {
    pub fn slope(self) -> ExtendedRational {
        self.0
    }
}

impl From<ExtendedRational> for ArcSlope {
    fn from(s: ExtendedRational) -> Self {
        ArcSlope(s)
    }
}

impl fmt::Display for ArcSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PtorusError {
    NotAdjacent { a: ExtendedRational, b: ExtendedRational, det: u64 },
    /// The two transversals are crossed equally often, so the octagon
    /// decomposition is not determined.
    TiedCounts { count: u64 },
    NotClose { slope: ExtendedRational, class: SlopeClass },
}

impl fmt::Display for PtorusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PtorusError::NotAdjacent { a, b, det } => {
                write!(f, "transversals {a} and {b} are not Farey-adjacent (determinant {det})")
            }
            PtorusError::TiedCounts { count } => {
                write!(f, "curve meets both transversals {count} times; octagon counts need p < q")
            }
            PtorusError::NotClose { slope, class } => {
                write!(f, "transversal slope {slope} is {class}, expected close")
            }
        }
    }
}

impl core::error::Error for PtorusError {}

impl From<FareyError> for PtorusError {
    fn from(e: FareyError) -> Self {
        match e {
            FareyError::NotAdjacent { a, b, det } => PtorusError::NotAdjacent { a, b, det },
            // common_neighbors only fails on non-adjacent input
            other => unreachable!("unexpected farey error {other}"),
        }
    }
}

pub fn arc_arc_intersections(a: ArcSlope, b: ArcSlope) -> u64 {
    if a == b {
        0
    } else {
        det_distance(a.0, b.0) - 1
    }
}

/// Minimal intersection of a closed curve of slope `c` with an arc of slope `a`.
pub fn curve_arc_intersections(c: ExtendedRational, a: ArcSlope) -> u64 {
    det_distance(c, a.0)
}

/// Arcs of `c` in the octagon left after cutting along two disjoint arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctagonCount {
    pub p: u64,
    pub q: u64,
    /// Arcs cutting off one of the four boundary sides: `2p`.
    pub boundary_parallel: u64,
    /// Arcs joining the two copies of the more-crossed transversal: `q - p`.
    pub third_family: u64,
    pub third_slope: ExtendedRational,
}

pub fn octagon_counts(alpha: ArcSlope, beta: ArcSlope, c: ExtendedRational) -> Result<OctagonCount, PtorusError> {
    let (g1, g2) = common_neighbors(alpha.0, beta.0)?;
    let ia = curve_arc_intersections(c, alpha);
    let ib = curve_arc_intersections(c, beta);
    let (p, q) = (ia.min(ib), ia.max(ib));
    if p == q {
        return Err(PtorusError::TiedCounts { count: p });
    }
    // one neighbor pairs to q - p with c, the other to q + p
    let third_slope = if det_distance(c, g1) == q - p { g1 } else { g2 };
    debug_assert_eq!(det_distance(c, third_slope), q - p);
    Ok(OctagonCount { p, q, boundary_parallel: 2 * p, third_family: q - p, third_slope })
}

/// Solid torus after surgery on its core: the new meridian, written in
/// the original (meridian, longitude) frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeredTorus {
    pub coefficient: ExtendedRational,
    pub meridian: ExtendedRational,
}

/// Coefficient `p/q` produces a meridian of slope `p/q`; `1/0` is the
/// trivial surgery and returns the original meridian.
pub fn surged_meridian(coefficient: ExtendedRational) -> SurgeredTorus {
    SurgeredTorus { coefficient, meridian: coefficient }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCheck {
    pub ia: u64,
    pub ib: u64,
    pub gap: u64,
    pub pass: bool,
}

/// Intersections of `c` with two disjoint non-parallel close arcs, and
/// whether both and their difference are at least 2.
pub fn gap_check(c: ExtendedRational, alpha: ArcSlope, beta: ArcSlope) -> Result<GapCheck, PtorusError> {
    for t in [alpha, beta] {
        let class = classify(t.0);
        if class != SlopeClass::Close {
            return Err(PtorusError::NotClose { slope: t.0, class });
        }
    }
    let det = det_distance(alpha.0, beta.0);
    if det != 1 {
        return Err(PtorusError::NotAdjacent { a: alpha.0, b: beta.0, det });
    }
    let ia = curve_arc_intersections(c, alpha);
    let ib = curve_arc_intersections(c, beta);
    let gap = ia.abs_diff(ib);
    Ok(GapCheck { ia, ib, gap, pass: ia.min(ib) >= 2 && gap >= 2 })
}
