//! Denominators, the high denominator rectangle condition, and the
//! distance-3 / SUMS certificates built on it.
//!
//! A certificate is a verdict, not a proof of the converse: `NotCertified`
//! only says the rectangle condition failed, and names where.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::farey::{det_distance, slopes_up_to, ExtendedRational};
use crate::ptorus::ArcSlope;
use crate::surface::{trace_peripheral, ArcFamily, Host, SideTag, TwistDirection, TwistedPresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BergeError {
    /// The curve never crosses `Γ`, so it has no denominators.
    EmptyIntersection,
    MalformedDescriptor(String),
}

impl fmt::Display for BergeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BergeError::EmptyIntersection => write!(f, "no arcs: the curve does not cross Γ"),
            BergeError::MalformedDescriptor(why) => write!(f, "malformed splitting descriptor: {why}"),
        }
    }
}

impl core::error::Error for BergeError {}

/// How `∂J` is glued to `∂H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Identification {
    /// Named disks to named disks; the standard distance-0 splitting.
    H0,
    /// Rotation of the standard triple followed by a half-twist along `Γ_A`.
    H2,
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identification::H0 => "h0",
            Identification::H2 => "h2",
        })
    }
}

impl core::str::FromStr for Identification {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "h0" => Ok(Identification::H0),
            "h2" => Ok(Identification::H2),
            other => Err(alloc::format!("unknown identification {other:?} (expected h0 or h2)")),
        }
    }
}

/// A meridian of `J` as it sits on `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeridianCurve {
    /// Crosses `Γ`; described by its arc families.
    Twisted(TwistedPresentation),
    /// A closed curve inside one punctured torus (untwisted gluing).
    Standard { host: Host, slope: ExtendedRational },
}

impl MeridianCurve {
    pub fn families(&self, host: Host) -> &[ArcFamily] {
        match self {
            MeridianCurve::Twisted(t) => t.families(host),
            MeridianCurve::Standard { .. } => &[],
        }
    }

    pub fn as_twisted(&self) -> Option<&TwistedPresentation> {
        match self {
            MeridianCurve::Twisted(t) => Some(t),
            MeridianCurve::Standard { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplittingDescriptor {
    /// Meridian of `H_A` (after surgery) in the `(∂A, λ_A)` frame.
    pub meridian_a: ExtendedRational,
    pub meridian_b: ExtendedRational,
    pub x_presentation: MeridianCurve,
    pub y_presentation: MeridianCurve,
    pub identification: Identification,
    pub twist_direction: TwistDirection,
}

impl SplittingDescriptor {
    /// The standard splitting: `X = A`, `Y = B`, no surgery, no twist.
    pub fn standard() -> Self {
        SplittingDescriptor {
            meridian_a: ExtendedRational::INFINITY,
            meridian_b: ExtendedRational::INFINITY,
            x_presentation: MeridianCurve::Standard { host: Host::FA, slope: ExtendedRational::INFINITY },
            y_presentation: MeridianCurve::Standard { host: Host::FB, slope: ExtendedRational::INFINITY },
            identification: Identification::H0,
            twist_direction: TwistDirection::Left,
        }
    }

    pub fn meridian(&self, host: Host) -> ExtendedRational {
        match host {
            Host::FA => self.meridian_a,
            Host::FB => self.meridian_b,
        }
    }

    pub fn curve(&self, which: CurveLabel) -> &MeridianCurve {
        match which {
            CurveLabel::X => &self.x_presentation,
            CurveLabel::Y => &self.y_presentation,
        }
    }

    /// Mirror image: every slope negated, twist direction reversed.
    pub fn reflected(&self) -> Self {
        let flip = |c: &MeridianCurve| match c {
            MeridianCurve::Twisted(t) => MeridianCurve::Twisted(t.reflected()),
            MeridianCurve::Standard { host, slope } => MeridianCurve::Standard { host: *host, slope: -*slope },
        };
        SplittingDescriptor {
            meridian_a: -self.meridian_a,
            meridian_b: -self.meridian_b,
            x_presentation: flip(&self.x_presentation),
            y_presentation: flip(&self.y_presentation),
            identification: self.identification,
            twist_direction: self.twist_direction.flipped(),
        }
    }

    pub fn validate(&self) -> Result<(), BergeError> {
        let bad = |why: &str| Err(BergeError::MalformedDescriptor(why.into()));
        match (self.identification, &self.x_presentation, &self.y_presentation) {
            (Identification::H0, MeridianCurve::Standard { host: hx, .. }, MeridianCurve::Standard { host: hy, .. }) => {
                if hx == hy {
                    return bad("standard meridians x and y must lie in different punctured tori");
                }
                Ok(())
            }
            (Identification::H0, _, _) => bad("h0 gluing carries untwisted meridians"),
            (Identification::H2, MeridianCurve::Twisted(x), MeridianCurve::Twisted(y)) => {
                if x.side == y.side {
                    return bad("x and y must lie on opposite sides P and Q");
                }
                if x.twist_direction != self.twist_direction || y.twist_direction != self.twist_direction {
                    return bad("presentation twist direction disagrees with the gluing");
                }
                for t in [x, y] {
                    for (host, fams) in [(Host::FA, &t.families_fa), (Host::FB, &t.families_fb)] {
                        if fams.iter().any(|f| f.host != host) {
                            return bad("family filed under the wrong punctured torus");
                        }
                        let mut slopes: Vec<_> = fams.iter().map(|f| f.slope).collect();
                        slopes.sort();
                        slopes.dedup();
                        if slopes.len() != fams.len() || fams.len() > 3 {
                            return bad("arc families in one punctured torus need at most three distinct slopes");
                        }
                    }
                }
                Ok(())
            }
            (Identification::H2, _, _) => bad("h2 gluing needs twisted presentations for x and y"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveLabel {
    X,
    Y,
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveLabel::X => "x",
            CurveLabel::Y => "y",
        })
    }
}

/// Intersections of an arc with the host meridian.
pub fn denominator(arc: ArcSlope, meridian: ExtendedRational) -> u64 {
    det_distance(arc.0, meridian)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorWitness {
    pub slope: ArcSlope,
    pub count: u64,
    pub denominator: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorSet {
    pub host: Host,
    /// Distinct denominators, ascending.
    pub values: Vec<u64>,
    pub witnesses: Vec<DenominatorWitness>,
}

pub fn denom_set(families: &[ArcFamily], meridian: ExtendedRational) -> Result<DenominatorSet, BergeError> {
    let first = families.first().ok_or(BergeError::EmptyIntersection)?;
    let witnesses: Vec<_> = families
        .iter()
        .map(|f| DenominatorWitness { slope: f.slope, count: f.count, denominator: denominator(f.slope, meridian) })
        .collect();
    let mut values: Vec<u64> = witnesses.iter().map(|w| w.denominator).collect();
    values.sort_unstable();
    values.dedup();
    Ok(DenominatorSet { host: first.host, values, witnesses })
}

/// Some `r, s` in the set with `2 <= r <= s - 2`.
pub fn has_high_denominators(values: &[u64]) -> bool {
    match (values.iter().filter(|&&v| v >= 2).min(), values.iter().max()) {
        (Some(&r), Some(&s)) => s >= r + 2,
        _ => false,
    }
}

/// Two rectangles of one curve in one punctured torus with denominators
/// `r >= 2` and `s >= r + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleWitness {
    pub curve: CurveLabel,
    pub host: Host,
    pub r: u64,
    pub s: u64,
    pub r_slope: ArcSlope,
    pub r_count: u64,
    pub s_slope: ArcSlope,
    pub s_count: u64,
}

impl RectangleWitness {
    /// Re-checks the inequalities from the witness alone.
    pub fn is_valid(&self) -> bool {
        self.r >= 2 && self.s >= self.r + 2 && self.r_count >= 2 && self.s_count >= 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RectangleFailure {
    /// The curve has no arcs in this punctured torus.
    NoArcs { curve: CurveLabel, host: Host },
    /// Fewer than two families have the two parallel arcs a rectangle needs.
    TooFewRectangles { curve: CurveLabel, host: Host, rectangles: usize },
    /// Rectangles exist but their denominators are not spread enough.
    LowDenominators { curve: CurveLabel, host: Host, denominators: Vec<u64> },
}

impl fmt::Display for RectangleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RectangleFailure::NoArcs { curve, host } => write!(f, "{curve} has no arcs in {host}"),
            RectangleFailure::TooFewRectangles { curve, host, rectangles } => {
                write!(f, "{curve} has {rectangles} rectangle(s) in {host}, need 2")
            }
            RectangleFailure::LowDenominators { curve, host, denominators } => {
                write!(f, "{curve} in {host}: rectangle denominators {denominators:?} have no r >= 2, s >= r + 2")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleReport {
    pub pass: bool,
    pub witnesses: Vec<RectangleWitness>,
    pub failures: Vec<RectangleFailure>,
    /// Sum of all family counts; at least 16 whenever the condition holds.
    pub total_arc_count: u64,
}

fn find_witness(
    curve: CurveLabel,
    host: Host,
    families: &[ArcFamily],
    meridian: ExtendedRational,
) -> Result<RectangleWitness, RectangleFailure> {
    if families.is_empty() {
        return Err(RectangleFailure::NoArcs { curve, host });
    }
    let rects: Vec<_> = families.iter().filter(|f| f.count >= 2).collect();
    if rects.len() < 2 {
        return Err(RectangleFailure::TooFewRectangles { curve, host, rectangles: rects.len() });
    }
    let den = |f: &ArcFamily| denominator(f.slope, meridian);
    // smallest admissible r against the largest s decides the question
    let low = rects.iter().filter(|f| den(f) >= 2).min_by_key(|f| (den(f), f.slope));
    let high = rects.iter().max_by_key(|f| (den(f), core::cmp::Reverse(f.slope)));
    match (low, high) {
        (Some(lo), Some(hi)) if den(hi) >= den(lo) + 2 => Ok(RectangleWitness {
            curve,
            host,
            r: den(lo),
            s: den(hi),
            r_slope: lo.slope,
            r_count: lo.count,
            s_slope: hi.slope,
            s_count: hi.count,
        }),
        _ => {
            let mut denominators: Vec<u64> = rects.iter().map(|f| den(f)).collect();
            denominators.sort_unstable();
            Err(RectangleFailure::LowDenominators { curve, host, denominators })
        }
    }
}

/// Searches each of `x, y` in each of `F_A, F_B` for a qualifying pair of
/// rectangles.
///
/// The rectangles' complementary regions are assumed free of the other
/// curve: `x` and `y` sit on opposite sides of the twisted separating
/// curve, which [`SplittingDescriptor::validate`] enforces.
pub fn rectangle_condition(d: &SplittingDescriptor) -> Result<RectangleReport, BergeError> {
    d.validate()?;
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    let mut total_arc_count = 0;
    for curve in [CurveLabel::X, CurveLabel::Y] {
        for host in [Host::FA, Host::FB] {
            let fams = d.curve(curve).families(host);
            total_arc_count += fams.iter().map(|f| f.count).sum::<u64>();
            match find_witness(curve, host, fams, d.meridian(host)) {
                Ok(w) => witnesses.push(w),
                Err(f) => failures.push(f),
            }
        }
    }
    Ok(RectangleReport { pass: failures.is_empty(), witnesses, failures, total_arc_count })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    NotCertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance3Certificate {
    pub verdict: Verdict,
    pub witnesses: Vec<RectangleWitness>,
    pub total_arc_count: u64,
    /// First failing `(curve, host)` check, in the order x/F_A, x/F_B, y/F_A, y/F_B.
    pub failure_reason: Option<RectangleFailure>,
}

impl Distance3Certificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    /// Soundness bookkeeping that needs nothing but the certificate.
    pub fn recheck(&self) -> bool {
        match self.verdict {
            Verdict::Certified => {
                self.witnesses.len() == 4
                    && self.witnesses.iter().all(RectangleWitness::is_valid)
                    && self.total_arc_count >= 16
                    && self.failure_reason.is_none()
            }
            Verdict::NotCertified => self.failure_reason.is_some(),
        }
    }
}

/// Certified iff the rectangle condition holds in both punctured tori,
/// which forces Hempel distance at least 3.
pub fn certify_distance3(d: &SplittingDescriptor) -> Result<Distance3Certificate, BergeError> {
    let report = rectangle_condition(d)?;
    let verdict = if report.pass { Verdict::Certified } else { Verdict::NotCertified };
    Ok(Distance3Certificate {
        verdict,
        witnesses: report.witnesses,
        total_arc_count: report.total_arc_count,
        failure_reason: report.failures.into_iter().next(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictWitness {
    pub curve: CurveLabel,
    pub host: Host,
    pub slope: ArcSlope,
    pub denominator: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsReport {
    pub is_sums: bool,
    pub rectangle_pass: bool,
    /// Largest-denominator family in each punctured torus, when it is at least 3.
    pub strict_witnesses: Vec<StrictWitness>,
}

/// `{A, B}` is a set of strict universal minimizers when the rectangle
/// condition holds and each punctured torus has an arc of denominator >= 3.
pub fn certify_sums(d: &SplittingDescriptor) -> Result<SumsReport, BergeError> {
    let report = rectangle_condition(d)?;
    let mut strict_witnesses = Vec::new();
    for host in [Host::FA, Host::FB] {
        let best = [CurveLabel::X, CurveLabel::Y]
            .into_iter()
            .flat_map(|c| d.curve(c).families(host).iter().map(move |f| (c, f)))
            .map(|(c, f)| StrictWitness { curve: c, host, slope: f.slope, denominator: denominator(f.slope, d.meridian(host)) })
            .max_by_key(|w| (w.denominator, core::cmp::Reverse((w.curve, w.slope))));
        if let Some(w) = best.filter(|w| w.denominator >= 3) {
            strict_witnesses.push(w);
        }
    }
    let is_sums = report.pass && strict_witnesses.len() == 2;
    Ok(SumsReport { is_sums, rectangle_pass: report.pass, strict_witnesses })
}

/// Arcs of a curve in one pair of pants `F_A - A`: `p` run between the two
/// copies of `∂A`, `q` run from one copy of `∂A` to `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsCounts {
    pub p: u64,
    pub q: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsTally {
    /// `|C ∩ ∂A| = p + q`.
    pub boundary_count: u64,
    /// `|C ∩ Γ| = 2q`.
    pub gamma_count: u64,
}

pub fn pants_counts(pattern: PantsCounts) -> PantsTally {
    PantsTally { boundary_count: pattern.p + pattern.q, gamma_count: 2 * pattern.q }
}

/// A curve on `F` in the small vocabulary the disjoint-curve search uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceCurve {
    Gamma,
    /// Essential closed curve inside one punctured torus.
    Closed { host: Host, slope: ExtendedRational },
    /// Curve crossing `Γ`, given by its arc families.
    Arcs { name: String, families: Vec<ArcFamily> },
}

impl SurfaceCurve {
    fn from_meridian(name: &str, m: &MeridianCurve) -> Self {
        match m {
            MeridianCurve::Twisted(t) => SurfaceCurve::Arcs {
                name: name.into(),
                families: t.families_fa.iter().chain(&t.families_fb).copied().collect(),
            },
            MeridianCurve::Standard { host, slope } => SurfaceCurve::Closed { host: *host, slope: *slope },
        }
    }
}

/// Minimal intersection under the slope calculus. `None` when both curves
/// cross `Γ`, which the calculus does not resolve.
pub fn surface_intersection(a: &SurfaceCurve, b: &SurfaceCurve) -> Option<u64> {
    use SurfaceCurve::*;
    match (a, b) {
        (Gamma, Gamma) | (Gamma, Closed { .. }) | (Closed { .. }, Gamma) => Some(0),
        (Gamma, Arcs { families, .. }) | (Arcs { families, .. }, Gamma) => {
            // each point of C ∩ Γ ends exactly one F_A arc
            Some(2 * families.iter().filter(|f| f.host == Host::FA).map(|f| f.count).sum::<u64>())
        }
        (Closed { host: h1, slope: s1 }, Closed { host: h2, slope: s2 }) => {
            Some(if h1 == h2 { det_distance(*s1, *s2) } else { 0 })
        }
        (Closed { host, slope }, Arcs { families, .. }) | (Arcs { families, .. }, Closed { host, slope }) => Some(
            families
                .iter()
                .filter(|f| f.host == *host)
                .map(|f| f.count * det_distance(*slope, f.slope.0))
                .sum(),
        ),
        (Arcs { .. }, Arcs { .. }) => None,
    }
}

/// An essential curve missing a meridian of each handlebody.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointCurveWitness {
    pub curve: SurfaceCurve,
    pub h_meridian: SurfaceCurve,
    pub j_meridian: SurfaceCurve,
}

fn h_meridians(d: &SplittingDescriptor) -> [SurfaceCurve; 3] {
    [
        SurfaceCurve::Closed { host: Host::FA, slope: d.meridian_a },
        SurfaceCurve::Closed { host: Host::FB, slope: d.meridian_b },
        SurfaceCurve::Gamma,
    ]
}

fn j_meridians(d: &SplittingDescriptor) -> [SurfaceCurve; 3] {
    // the separating meridian of J lands on Γ untwisted, on the twisted ∂Γ_B otherwise
    let lambda = match d.identification {
        Identification::H0 => SurfaceCurve::Gamma,
        Identification::H2 => {
            let t = trace_peripheral(SideTag::P, d.twist_direction);
            SurfaceCurve::Arcs { name: "Λ".into(), families: t.families_fa.iter().chain(&t.families_fb).copied().collect() }
        }
    };
    [SurfaceCurve::from_meridian("x", &d.x_presentation), SurfaceCurve::from_meridian("y", &d.y_presentation), lambda]
}

/// Looks for an essential curve of slope height at most `height_bound` (or
/// `Γ` itself) which, together with some representable meridian of `H` and
/// some representable meridian of `J`, forms a pairwise disjoint triple.
/// Candidates are tried in a fixed order,
/// `Γ` first, then closed curves in `F_A`, then in `F_B`, and the first hit
/// is returned.
///
/// This is a falsifier over a small candidate space, not a decision
/// procedure for distance.
pub fn bounded_dcp_search(d: &SplittingDescriptor, height_bound: u64) -> Option<DisjointCurveWitness> {
    if height_bound == 0 {
        return None;
    }
    let hs = h_meridians(d);
    let js = j_meridians(d);
    let slopes = slopes_up_to(height_bound);
    let candidates = core::iter::once(SurfaceCurve::Gamma).chain(
        [Host::FA, Host::FB]
            .into_iter()
            .flat_map(|host| slopes.iter().map(move |&slope| SurfaceCurve::Closed { host, slope })),
    );
    let disjoint = |a: &SurfaceCurve, b: &SurfaceCurve| surface_intersection(a, b) == Some(0);
    for c in candidates {
        for h in hs.iter().filter(|h| disjoint(&c, h)) {
            // H-meridians never cross Γ, so h against j is always computable
            if let Some(j) = js.iter().find(|j| disjoint(&c, j) && disjoint(h, j)) {
                return Some(DisjointCurveWitness { curve: c, h_meridian: h.clone(), j_meridian: j.clone() });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::q;
    use crate::surface::cut_and_trace;

    fn fam(host: Host, n: i64, d: i64, count: u64) -> ArcFamily {
        ArcFamily::new(host, q(n, d), count)
    }

    fn twisted(
        c: ExtendedRational,
        side: SideTag,
        fa: Vec<ArcFamily>,
        fb: Vec<ArcFamily>,
    ) -> MeridianCurve {
        MeridianCurve::Twisted(TwistedPresentation {
            source_slope: c,
            side,
            twist_direction: TwistDirection::Left,
            families_fa: fa,
            families_fb: fb,
        })
    }

    fn pipeline_descriptor(ma: ExtendedRational, mb: ExtendedRational) -> SplittingDescriptor {
        SplittingDescriptor {
            meridian_a: ma,
            meridian_b: mb,
            x_presentation: MeridianCurve::Twisted(cut_and_trace(q(11, 3), SideTag::P, TwistDirection::Left).unwrap()),
            y_presentation: MeridianCurve::Twisted(cut_and_trace(q(12, 5), SideTag::Q, TwistDirection::Left).unwrap()),
            identification: Identification::H2,
            twist_direction: TwistDirection::Left,
        }
    }

    #[test]
    fn denominator_examples() {
        assert_eq!(denominator(ArcSlope(q(1, 1)), q(1, 0)), 1);
        assert_eq!(denominator(ArcSlope(q(1, 0)), q(13, 5)), 5);
        assert_eq!(denominator(ArcSlope(q(-1, 1)), q(13, 5)), 18);
    }

    #[test]
    fn denom_set_examples() {
        let s = denom_set(&[fam(Host::FA, -1, 1, 3), fam(Host::FA, 1, 0, 8)], q(13, 5)).unwrap();
        assert_eq!(s.values, [5, 18]);
        assert_eq!(s.host, Host::FA);
        let s = denom_set(&[fam(Host::FB, 0, 1, 4), fam(Host::FB, 1, 1, 3)], q(1, 0)).unwrap();
        assert_eq!(s.values, [1]);
        assert_eq!(denom_set(&[], q(1, 0)), Err(BergeError::EmptyIntersection));
    }

    #[test]
    fn high_denominator_examples() {
        assert!(has_high_denominators(&[3, 14]));
        assert!(!has_high_denominators(&[1, 9]));
        assert!(!has_high_denominators(&[2, 3]));
        assert!(has_high_denominators(&[1, 2, 4]));
        assert!(!has_high_denominators(&[]));
    }

    #[test]
    fn pants_examples() {
        assert_eq!(pants_counts(PantsCounts { p: 3, q: 2 }), PantsTally { boundary_count: 5, gamma_count: 4 });
        assert_eq!(pants_counts(PantsCounts { p: 0, q: 1 }), PantsTally { boundary_count: 1, gamma_count: 2 });
        assert_eq!(pants_counts(PantsCounts { p: 2, q: 0 }), PantsTally { boundary_count: 2, gamma_count: 0 });
    }

    #[test]
    fn pipeline_descriptor_certifies() {
        let d = pipeline_descriptor(q(13, 5), q(17, 5));
        let cert = certify_distance3(&d).unwrap();
        assert!(cert.is_certified(), "{cert:?}");
        assert!(cert.recheck());
        let xa = cert.witnesses.iter().find(|w| w.curve == CurveLabel::X && w.host == Host::FA).unwrap();
        assert_eq!((xa.r, xa.s), (5, 18));
        assert!(certify_sums(&d).unwrap().is_sums);
    }

    #[test]
    fn count_one_family_is_not_a_rectangle() {
        let mut d = pipeline_descriptor(q(13, 5), q(17, 5));
        d.x_presentation = twisted(
            q(11, 3),
            SideTag::P,
            alloc::vec![fam(Host::FA, -1, 1, 1), fam(Host::FA, 1, 0, 8)],
            d.x_presentation.families(Host::FB).to_vec(),
        );
        let cert = certify_distance3(&d).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCertified);
        assert_eq!(
            cert.failure_reason,
            Some(RectangleFailure::TooFewRectangles { curve: CurveLabel::X, host: Host::FA, rectangles: 1 })
        );
    }

    #[test]
    fn trivial_surgery_on_a_fails_low() {
        let d = pipeline_descriptor(q(1, 0), q(17, 5));
        let cert = certify_distance3(&d).unwrap();
        match cert.failure_reason {
            Some(RectangleFailure::LowDenominators { host: Host::FA, denominators, .. }) => {
                assert!(denominators.iter().all(|&v| v <= 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn standard_splitting_is_not_certified() {
        let d = SplittingDescriptor::standard();
        let cert = certify_distance3(&d).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCertified);
        assert!(cert.recheck());
        assert!(!certify_sums(&d).unwrap().is_sums);
    }

    #[test]
    fn sums_needs_denominator_three_in_both_tori() {
        // every F_B denominator is 2: the rectangle test fails there and no strict witness exists
        let d = SplittingDescriptor {
            meridian_a: q(13, 5),
            meridian_b: q(1, 2),
            ..pipeline_descriptor(q(13, 5), q(1, 2))
        };
        let sums = certify_sums(&d).unwrap();
        assert!(!sums.is_sums);
        assert!(sums.strict_witnesses.iter().all(|w| w.host == Host::FA));
    }

    #[test]
    fn malformed_descriptors() {
        let mut d = pipeline_descriptor(q(13, 5), q(17, 5));
        d.y_presentation = d.x_presentation.clone();
        assert!(matches!(certify_distance3(&d), Err(BergeError::MalformedDescriptor(_))));
        let mut d = SplittingDescriptor::standard();
        d.identification = Identification::H2;
        assert!(matches!(rectangle_condition(&d), Err(BergeError::MalformedDescriptor(_))));
    }

    #[test]
    fn dcp_search_examples() {
        let d = pipeline_descriptor(q(13, 5), q(17, 5));
        assert_eq!(bounded_dcp_search(&d, 6), None);
        let w = bounded_dcp_search(&SplittingDescriptor::standard(), 2).expect("standard splitting has distance 0");
        assert_eq!(surface_intersection(&w.curve, &w.h_meridian), Some(0));
        assert_eq!(surface_intersection(&w.curve, &w.j_meridian), Some(0));
        assert_eq!(surface_intersection(&w.h_meridian, &w.j_meridian), Some(0));
        assert_eq!(bounded_dcp_search(&SplittingDescriptor::standard(), 0), None);
        assert_eq!(bounded_dcp_search(&d, 0), None);
    }

    #[test]
    fn reflection_keeps_the_certificate() {
        let d = pipeline_descriptor(q(13, 5), q(17, 5));
        let r = d.reflected();
        let (c1, c2) = (certify_distance3(&d).unwrap(), certify_distance3(&r).unwrap());
        assert_eq!(c1.verdict, c2.verdict);
        assert_eq!(c1.total_arc_count, c2.total_arc_count);
        let dens = |c: &Distance3Certificate| c.witnesses.iter().map(|w| (w.r, w.s)).collect::<Vec<_>>();
        assert_eq!(dens(&c1), dens(&c2));
    }
}
