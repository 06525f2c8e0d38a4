//! The marked genus-2 surface `F = F_A ∪_Γ F_B` and the arc families that a
//! curve leaves in each punctured torus after a half-twist along `Γ_A`.
//!
//! Slopes in `F_A` are measured against `(∂A, λ_A)` and slopes in `F_B`
//! against `(∂B, λ_B)`, signs fixed so the half-twisted `∂Γ_B` meets `F_A`
//! in rectangles of slopes `∞, -1` and `F_B` in rectangles of slopes `0, 1`.

mod trace;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::farey::{q, ExtendedRational, SlopeClass};
use crate::ptorus::ArcSlope;

pub use trace::{
    cut_and_trace, guaranteed_bounds, half_twist_families, trace_peripheral, FamilyBounds, OctagonPieces,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    NotDistant { slope: ExtendedRational, class: SlopeClass },
    UnknownCurve(String),
}

impl fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceError::NotDistant { slope, class } => {
                write!(f, "slope {slope} is {class}; the half-twist families need a distant slope")
            }
            SurfaceError::UnknownCurve(name) => write!(f, "no curve named {name:?} in the model"),
        }
    }
}

impl core::error::Error for SurfaceError {}

/// One of the two punctured tori cut off by `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Host {
    #[serde(rename = "F_A")]
    FA,
    #[serde(rename = "F_B")]
    FB,
}

impl Host {
    pub fn other(self) -> Host {
        match self {
            Host::FA => Host::FB,
            Host::FB => Host::FA,
        }
    }
}

impl fmt::Display for Host {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Host::FA => "F_A",
            Host::FB => "F_B",
        })
    }
}

/// Component of `F - ∂Γ_B^{Γ_A}` holding the twisted curve. `P` has its
/// rectangles in `F_A`, `Q` in `F_B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SideTag {
    P,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistDirection {
    Left,
    Right,
}

impl TwistDirection {
    pub fn flipped(self) -> Self {
        match self {
            TwistDirection::Left => TwistDirection::Right,
            TwistDirection::Right => TwistDirection::Left,
        }
    }
}

impl fmt::Display for TwistDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistDirection::Left => "left",
            TwistDirection::Right => "right",
        })
    }
}

impl FromStr for TwistDirection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "left" => Ok(TwistDirection::Left),
            "right" => Ok(TwistDirection::Right),
            other => Err(alloc::format!("unknown twist direction {other:?} (expected left or right)")),
        }
    }
}

/// `count` parallel arcs of one slope in one punctured torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcFamily {
    pub host: Host,
    pub slope: ArcSlope,
    pub count: u64,
}

impl ArcFamily {
    pub fn new(host: Host, slope: ExtendedRational, count: u64) -> Self {
        Self { host, slope: ArcSlope(slope), count }
    }
}

/// Arc families of one twisted curve, unoriented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedPresentation {
    pub source_slope: ExtendedRational,
    pub side: SideTag,
    pub twist_direction: TwistDirection,
    pub families_fa: Vec<ArcFamily>,
    pub families_fb: Vec<ArcFamily>,
}

impl TwistedPresentation {
    pub fn families(&self, host: Host) -> &[ArcFamily] {
        match host {
            Host::FA => &self.families_fa,
            Host::FB => &self.families_fb,
        }
    }

    pub fn total_arcs(&self, host: Host) -> u64 {
        self.families(host).iter().map(|f| f.count).sum()
    }

    /// Negates every slope. This is the mirror that exchanges left and right
    /// half-twists.
    pub fn reflected(&self) -> Self {
        let flip = |fs: &[ArcFamily]| normalize(fs.iter().map(|f| (f.host, -f.slope.0, f.count)));
        Self {
            source_slope: self.source_slope,
            side: self.side,
            twist_direction: self.twist_direction.flipped(),
            families_fa: flip(&self.families_fa),
            families_fb: flip(&self.families_fb),
        }
    }
}

/// Merges equal slopes, drops empty families, sorts by slope.
pub(crate) fn normalize(items: impl IntoIterator<Item = (Host, ExtendedRational, u64)>) -> Vec<ArcFamily> {
    let mut merged: BTreeMap<(Host, ExtendedRational), u64> = BTreeMap::new();
    for (host, slope, count) in items {
        if count > 0 {
            *merged.entry((host, slope)).or_default() += count;
        }
    }
    merged.into_iter().map(|((host, slope), count)| ArcFamily::new(host, slope, count)).collect()
}

/// Published rectangle data of the half-twisted `∂Γ_B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateRectangles {
    pub fa_slopes: Vec<ExtendedRational>,
    pub fb_slopes: Vec<ExtendedRational>,
    pub fa_counts: Vec<u64>,
    pub fb_counts: Vec<u64>,
}

/// Each rectangle is bounded by two parallel arcs, hence the counts of 2.
pub fn template_rectangles(direction: TwistDirection) -> TemplateRectangles {
    let (fa, fb) = match direction {
        TwistDirection::Left => (alloc::vec![q(1, 0), q(-1, 1)], alloc::vec![q(0, 1), q(1, 1)]),
        TwistDirection::Right => (alloc::vec![q(1, 0), q(1, 1)], alloc::vec![q(0, 1), q(-1, 1)]),
    };
    TemplateRectangles { fa_slopes: fa, fb_slopes: fb, fa_counts: alloc::vec![2, 2], fb_counts: alloc::vec![2, 2] }
}

/// Arcs of an untwisted separating meridian of the standard triple.
/// `∂Γ_A` meets `F_A` in two meridians and misses `λ_B`, so its `F_B`
/// arcs have slope 0; `∂Γ_B` is the mirror image.
pub fn untwisted_families(curve: CurveName) -> Option<Vec<ArcFamily>> {
    let fams = match curve {
        CurveName::GammaA => alloc::vec![ArcFamily::new(Host::FA, q(1, 0), 2), ArcFamily::new(Host::FB, q(0, 1), 2)],
        CurveName::GammaB => alloc::vec![ArcFamily::new(Host::FA, q(0, 1), 2), ArcFamily::new(Host::FB, q(1, 0), 2)],
        _ => return None,
    };
    Some(fams)
}

/// Named curves of the marked model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveName {
    #[serde(rename = "∂A")]
    BoundaryA,
    #[serde(rename = "∂B")]
    BoundaryB,
    #[serde(rename = "Γ")]
    Gamma,
    #[serde(rename = "Γ_A")]
    GammaA,
    #[serde(rename = "Γ_B")]
    GammaB,
    #[serde(rename = "λ_A")]
    LambdaA,
    #[serde(rename = "λ_B")]
    LambdaB,
    #[serde(rename = "λ_AB")]
    LambdaAB,
}

/// What a curve is in the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveRole {
    Meridian,
    SeparatingMeridian,
    Longitude,
}

impl CurveName {
    pub const ALL: [CurveName; 8] = [
        CurveName::BoundaryA,
        CurveName::BoundaryB,
        CurveName::Gamma,
        CurveName::GammaA,
        CurveName::GammaB,
        CurveName::LambdaA,
        CurveName::LambdaB,
        CurveName::LambdaAB,
    ];

    pub fn role(self) -> CurveRole {
        match self {
            CurveName::BoundaryA | CurveName::BoundaryB => CurveRole::Meridian,
            CurveName::Gamma | CurveName::GammaA | CurveName::GammaB => CurveRole::SeparatingMeridian,
            _ => CurveRole::Longitude,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CurveName::BoundaryA => "∂A",
            CurveName::BoundaryB => "∂B",
            CurveName::Gamma => "Γ",
            CurveName::GammaA => "Γ_A",
            CurveName::GammaB => "Γ_B",
            CurveName::LambdaA => "λ_A",
            CurveName::LambdaB => "λ_B",
            CurveName::LambdaAB => "λ_AB",
        }
    }

    /// Left/right mirror of the handlebody: swaps the `A` and `B` labels.
    fn mirrored(self) -> Self {
        match self {
            CurveName::BoundaryA => CurveName::BoundaryB,
            CurveName::BoundaryB => CurveName::BoundaryA,
            CurveName::GammaA => CurveName::GammaB,
            CurveName::GammaB => CurveName::GammaA,
            CurveName::LambdaA => CurveName::LambdaB,
            CurveName::LambdaB => CurveName::LambdaA,
            other => other,
        }
    }
}

impl FromStr for CurveName {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let ascii = match t {
            "dA" | "∂A" => CurveName::BoundaryA,
            "dB" | "∂B" => CurveName::BoundaryB,
            "Gamma" | "Γ" => CurveName::Gamma,
            "Gamma_A" | "Γ_A" => CurveName::GammaA,
            "Gamma_B" | "Γ_B" => CurveName::GammaB,
            "lambda_A" | "λ_A" => CurveName::LambdaA,
            "lambda_B" | "λ_B" => CurveName::LambdaB,
            "lambda_AB" | "λ_AB" => CurveName::LambdaAB,
            _ => return Err(SurfaceError::UnknownCurve(t.into())),
        };
        Ok(ascii)
    }
}

/// The named curves of the standard picture and their pairwise geometric
/// intersection numbers.
///
/// Entries transcribed beyond the directly stated ones: a longitude `λ_X`
/// meets its own `Γ_X` twice (for `λ_AB` that is `Γ`); the three
/// separating meridians meet pairwise in 4 points; `∂A` meets the two
/// slope-0 arcs of `∂Γ_B ∩ F_A` once each, and symmetrically for `∂B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedModel {
    table: BTreeMap<(CurveName, CurveName), u64>,
}

fn key(a: CurveName, b: CurveName) -> (CurveName, CurveName) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Default for MarkedModel {
    fn default() -> Self {
        use CurveName::*;
        let mut m = MarkedModel { table: BTreeMap::new() };
        for a in CurveName::ALL {
            for b in CurveName::ALL {
                m.table.insert(key(a, b), 0);
            }
        }
        let nonzero = [
            (BoundaryA, LambdaA, 1),
            (BoundaryB, LambdaB, 1),
            (BoundaryA, GammaB, 2),
            (BoundaryB, GammaA, 2),
            (Gamma, LambdaAB, 2),
            (GammaA, LambdaA, 2),
            (GammaB, LambdaB, 2),
            (Gamma, GammaA, 4),
            (Gamma, GammaB, 4),
            (GammaA, GammaB, 4),
        ];
        for (a, b, n) in nonzero {
            m.set(a, b, n);
        }
        m
    }
}

impl MarkedModel {
    /// Overwrites one symmetric entry.
    pub fn set(&mut self, a: CurveName, b: CurveName, n: u64) {
        self.table.insert(key(a, b), n);
    }

    /// Drops every entry involving `c`.
    pub fn remove_curve(&mut self, c: CurveName) {
        self.table.retain(|&(a, b), _| a != c && b != c);
    }

    /// Renames curves through `map`, which must be a bijection.
    pub fn relabeled(&self, map: impl Fn(CurveName) -> CurveName) -> Self {
        MarkedModel { table: self.table.iter().map(|(&(a, b), &n)| (key(map(a), map(b)), n)).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = (CurveName, CurveName, u64)> + '_ {
        self.table.iter().map(|(&(a, b), &n)| (a, b, n))
    }
}

pub fn named_intersection(m: &MarkedModel, c1: CurveName, c2: CurveName) -> Result<u64, SurfaceError> {
    m.table
        .get(&key(c1, c2))
        .copied()
        .ok_or_else(|| SurfaceError::UnknownCurve(alloc::format!("{}/{}", c1.label(), c2.label())))
}

/// Rotation of the standard triple `Γ_B → Γ_A → Γ → Γ_B`, with the
/// longitudes cycled forward or backward.
fn rotation(forward_longitudes: bool) -> impl Fn(CurveName) -> CurveName {
    move |c| match c {
        CurveName::GammaB => CurveName::GammaA,
        CurveName::GammaA => CurveName::Gamma,
        CurveName::Gamma => CurveName::GammaB,
        CurveName::LambdaA if forward_longitudes => CurveName::LambdaB,
        CurveName::LambdaB if forward_longitudes => CurveName::LambdaAB,
        CurveName::LambdaAB if forward_longitudes => CurveName::LambdaA,
        CurveName::LambdaB => CurveName::LambdaA,
        CurveName::LambdaA => CurveName::LambdaAB,
        CurveName::LambdaAB => CurveName::LambdaB,
        other => other,
    }
}

const TRIPLE: [CurveName; 6] = [
    CurveName::Gamma,
    CurveName::GammaA,
    CurveName::GammaB,
    CurveName::LambdaA,
    CurveName::LambdaB,
    CurveName::LambdaAB,
];

/// True iff the separating-meridian/longitude part of the table is invariant
/// under the order-3 rotation and the whole table is invariant under the
/// left/right mirror.
///
/// The rotation's action on the longitudes is taken in whichever cyclic
/// order the table supports; the marking fixes the cycle only up to
/// direction.
pub fn standard_triple_check(m: &MarkedModel) -> bool {
    let lookup = |a, b| m.table.get(&key(a, b)).copied();
    let z3 = [true, false].into_iter().any(|forward| {
        let r = rotation(forward);
        TRIPLE.iter().all(|&a| TRIPLE.iter().all(|&b| lookup(a, b).is_some() && lookup(a, b) == lookup(r(a), r(b))))
    });
    let mirror = CurveName::ALL
        .iter()
        .all(|&a| CurveName::ALL.iter().all(|&b| lookup(a, b) == lookup(a.mirrored(), b.mirrored())));
    z3 && mirror
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_intersection_examples() {
        let m = MarkedModel::default();
        assert_eq!(named_intersection(&m, CurveName::Gamma, CurveName::LambdaAB), Ok(2));
        assert_eq!(named_intersection(&m, CurveName::GammaA, CurveName::LambdaAB), Ok(0));
        assert_eq!(named_intersection(&m, CurveName::BoundaryA, CurveName::LambdaA), Ok(1));
        assert_eq!(named_intersection(&m, CurveName::LambdaA, CurveName::BoundaryA), Ok(1));
    }

    #[test]
    fn stated_table_entries() {
        use CurveName::*;
        let m = MarkedModel::default();
        for (a, b, n) in [
            (BoundaryA, LambdaA, 1),
            (BoundaryB, LambdaB, 1),
            (Gamma, LambdaAB, 2),
            (GammaA, LambdaAB, 0),
            (GammaB, LambdaAB, 0),
            (GammaA, LambdaB, 0),
            (GammaB, LambdaA, 0),
        ] {
            assert_eq!(named_intersection(&m, a, b), Ok(n), "{a:?} {b:?}");
        }
    }

    #[test]
    fn unknown_curve() {
        let mut m = MarkedModel::default();
        m.remove_curve(CurveName::LambdaAB);
        assert!(matches!(
            named_intersection(&m, CurveName::Gamma, CurveName::LambdaAB),
            Err(SurfaceError::UnknownCurve(_))
        ));
        assert!(matches!("lambda_C".parse::<CurveName>(), Err(SurfaceError::UnknownCurve(_))));
        assert_eq!("λ_AB".parse::<CurveName>(), Ok(CurveName::LambdaAB));
    }

    #[test]
    fn standard_triple_examples() {
        let m = MarkedModel::default();
        assert!(standard_triple_check(&m));

        let mut broken = m.clone();
        broken.set(CurveName::Gamma, CurveName::LambdaAB, 1);
        assert!(!standard_triple_check(&broken));

        let swapped = m.relabeled(|c| match c {
            CurveName::LambdaA => CurveName::LambdaB,
            CurveName::LambdaB => CurveName::LambdaA,
            other => other,
        });
        assert!(standard_triple_check(&swapped));
    }

    #[test]
    fn template_examples() {
        let left = template_rectangles(TwistDirection::Left);
        assert_eq!(left.fa_slopes, [q(1, 0), q(-1, 1)]);
        assert_eq!(left.fb_slopes, [q(0, 1), q(1, 1)]);
        assert_eq!(left.fa_counts, [2, 2]);
        let right = template_rectangles(TwistDirection::Right);
        assert_eq!(right.fa_slopes, [q(1, 0), q(1, 1)]);
        assert_eq!(right.fb_slopes, [q(0, 1), q(-1, 1)]);
    }

    #[test]
    fn untwisted_gamma_a_in_fa() {
        let fams = untwisted_families(CurveName::GammaA).unwrap();
        let fa: Vec<_> = fams.iter().filter(|f| f.host == Host::FA).collect();
        assert_eq!(fa.len(), 1);
        assert_eq!((fa[0].slope.0, fa[0].count), (q(1, 0), 2));
        let m = MarkedModel::default();
        assert_eq!(named_intersection(&m, CurveName::GammaA, CurveName::LambdaB), Ok(0));
        // slope-0 arcs in F_B miss λ_B, which has slope 0 there
        let fb = fams.iter().find(|f| f.host == Host::FB).unwrap();
        assert_eq!(crate::farey::det_distance(fb.slope.0, q(0, 1)), 0);
    }
}
