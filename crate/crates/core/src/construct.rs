//! The surgery pipeline: validate a spec on the four link cores, build the
//! splitting, certify it, and compare it with the splitting obtained by
//! exchanging the cores `c_X` and `c_B`.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::berge::{
    certify_distance3, denominator, BergeError, CurveLabel, Distance3Certificate, Identification, MeridianCurve,
    SplittingDescriptor,
};
use crate::farey::{classify, slopes_up_to, ExtendedRational, Fraction, SlopeClass};
use crate::ptorus::surged_meridian;
use crate::surface::{cut_and_trace, Host, SideTag, TwistDirection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecMode {
    /// One splitting: `c_X, c_Y` distant, `c_A, c_B` remote.
    Single,
    /// Also `c_X` remote, so the exchanged spec is valid too.
    Pair,
}

impl fmt::Display for SpecMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecMode::Single => "single",
            SpecMode::Pair => "pair",
        })
    }
}

impl core::str::FromStr for SpecMode {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "single" => Ok(SpecMode::Single),
            "pair" => Ok(SpecMode::Pair),
            other => Err(alloc::format!("unknown mode {other:?} (expected single or pair)")),
        }
    }
}

/// Surgery coefficients on the cores of `J_X, J_Y, H_A, H_B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurgerySpec {
    #[serde(rename = "slope_cX")]
    pub slope_cx: ExtendedRational,
    #[serde(rename = "slope_cY")]
    pub slope_cy: ExtendedRational,
    #[serde(rename = "slope_cA")]
    pub slope_ca: ExtendedRational,
    #[serde(rename = "slope_cB")]
    pub slope_cb: ExtendedRational,
    #[serde(rename = "twist")]
    pub twist_direction: TwistDirection,
    pub mode: SpecMode,
    pub identification: Identification,
}

impl SurgerySpec {
    pub fn new(
        cx: ExtendedRational,
        cy: ExtendedRational,
        ca: ExtendedRational,
        cb: ExtendedRational,
        mode: SpecMode,
    ) -> Self {
        SurgerySpec {
            slope_cx: cx,
            slope_cy: cy,
            slope_ca: ca,
            slope_cb: cb,
            twist_direction: TwistDirection::Left,
            mode,
            identification: Identification::H2,
        }
    }

    pub fn is_pair(&self) -> bool {
        self.mode == SpecMode::Pair
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    XNotDistant { slope: ExtendedRational, class: SlopeClass },
    YNotDistant { slope: ExtendedRational, class: SlopeClass },
    ANotRemote { slope: ExtendedRational, class: SlopeClass },
    BNotRemote { slope: ExtendedRational, class: SlopeClass },
    XNotRemote { slope: ExtendedRational, class: SlopeClass },
    NotPairMode,
    Descriptor(BergeError),
}

impl ConstructError {
    /// Stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            ConstructError::XNotDistant { .. } => "XNotDistant",
            ConstructError::YNotDistant { .. } => "YNotDistant",
            ConstructError::ANotRemote { .. } => "ANotRemote",
            ConstructError::BNotRemote { .. } => "BNotRemote",
            ConstructError::XNotRemote { .. } => "XNotRemote",
            ConstructError::NotPairMode => "NotPairMode",
            ConstructError::Descriptor(BergeError::EmptyIntersection) => "EmptyIntersection",
            ConstructError::Descriptor(BergeError::MalformedDescriptor(_)) => "MalformedDescriptor",
        }
    }
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::XNotDistant { slope, class } => write!(f, "core c_X: slope {slope} is {class}, need distant"),
            ConstructError::YNotDistant { slope, class } => write!(f, "core c_Y: slope {slope} is {class}, need distant"),
            ConstructError::ANotRemote { slope, class } => write!(f, "core c_A: slope {slope} is {class}, need remote"),
            ConstructError::BNotRemote { slope, class } => write!(f, "core c_B: slope {slope} is {class}, need remote"),
            ConstructError::XNotRemote { slope, class } => {
                write!(f, "core c_X: slope {slope} is {class}, pair mode needs remote")
            }
            ConstructError::NotPairMode => f.write_str("core exchange needs a pair-mode spec"),
            ConstructError::Descriptor(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<BergeError> for ConstructError {
    fn from(e: BergeError) -> Self {
        ConstructError::Descriptor(e)
    }
}

pub fn validate_spec(s: SurgerySpec) -> Result<SurgerySpec, ConstructError> {
    let check = |slope: ExtendedRational, ok: fn(SlopeClass) -> bool, err: fn(ExtendedRational, SlopeClass) -> ConstructError| {
        let class = classify(slope);
        if ok(class) {
            Ok(())
        } else {
            Err(err(slope, class))
        }
    };
    let remote = |c: SlopeClass| c == SlopeClass::Remote;
    check(s.slope_cx, SlopeClass::is_distant, |slope, class| ConstructError::XNotDistant { slope, class })?;
    check(s.slope_cy, SlopeClass::is_distant, |slope, class| ConstructError::YNotDistant { slope, class })?;
    check(s.slope_ca, remote, |slope, class| ConstructError::ANotRemote { slope, class })?;
    check(s.slope_cb, remote, |slope, class| ConstructError::BNotRemote { slope, class })?;
    if s.is_pair() {
        check(s.slope_cx, remote, |slope, class| ConstructError::XNotRemote { slope, class })?;
    }
    Ok(s)
}

/// `x` is traced on side `P`, `y` on side `Q`. A right twist gives the
/// mirror image of the left-twist construction, meridians included.
pub fn build_splitting(s: SurgerySpec) -> Result<SplittingDescriptor, ConstructError> {
    let s = validate_spec(s)?;
    if s.identification == Identification::H0 {
        return Ok(SplittingDescriptor::standard());
    }
    let dir = s.twist_direction;
    let trace = |c, side| {
        cut_and_trace(c, side, dir).map(MeridianCurve::Twisted).expect("validated slopes are distant")
    };
    let orient = |m: ExtendedRational| match dir {
        TwistDirection::Left => m,
        TwistDirection::Right => -m,
    };
    Ok(SplittingDescriptor {
        meridian_a: orient(surged_meridian(s.slope_ca).meridian),
        meridian_b: orient(surged_meridian(s.slope_cb).meridian),
        x_presentation: trace(s.slope_cx, SideTag::P),
        y_presentation: trace(s.slope_cy, SideTag::Q),
        identification: Identification::H2,
        twist_direction: dir,
    })
}

/// Slides `c_X` past `c_B`: their coefficients trade places and the
/// half-twist along `Γ_A` changes hand.
pub fn exchange_cores(s: SurgerySpec) -> Result<SurgerySpec, ConstructError> {
    if !s.is_pair() {
        return Err(ConstructError::NotPairMode);
    }
    let s = validate_spec(s)?;
    Ok(SurgerySpec {
        slope_cx: s.slope_cb,
        slope_cb: s.slope_cx,
        twist_direction: s.twist_direction.flipped(),
        ..s
    })
}

/// Distinct denominators of one curve's arcs in one punctured torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DenomTuple {
    pub curve: CurveLabel,
    pub host: Host,
    pub values: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// `|a·x|, |a·y|, |b·x|, |b·y|`.
    pub quadruple: [u64; 4],
    /// In the order `(x, F_A), (x, F_B), (y, F_A), (y, F_B)`.
    pub denom_tuples: Vec<DenomTuple>,
}

impl InvariantReport {
    /// The report with labels and order forgotten.
    pub fn unordered(&self) -> ([u64; 4], Vec<Vec<u64>>) {
        let mut quad = self.quadruple;
        quad.sort_unstable();
        let mut tuples: Vec<_> = self.denom_tuples.iter().map(|t| t.values.clone()).collect();
        tuples.sort();
        (quad, tuples)
    }

    pub fn same_unordered(&self, other: &Self) -> bool {
        self.unordered() == other.unordered()
    }
}

/// Intersection numbers computed as `Σ count × det` over arc families,
/// which assumes the surged meridian meets each family minimally.
pub fn invariants(d: &SplittingDescriptor) -> Result<InvariantReport, ConstructError> {
    d.validate()?;
    if d.identification != Identification::H2 {
        return Err(BergeError::MalformedDescriptor("untwisted meridians carry no arc families to measure".into()).into());
    }
    let measure = |curve: CurveLabel, host: Host| -> u64 {
        d.curve(curve).families(host).iter().map(|f| f.count * denominator(f.slope, d.meridian(host))).sum()
    };
    let quadruple = [
        measure(CurveLabel::X, Host::FA),
        measure(CurveLabel::Y, Host::FA),
        measure(CurveLabel::X, Host::FB),
        measure(CurveLabel::Y, Host::FB),
    ];
    let mut denom_tuples = Vec::with_capacity(4);
    for curve in [CurveLabel::X, CurveLabel::Y] {
        for host in [Host::FA, Host::FB] {
            let mut values: Vec<u64> =
                d.curve(curve).families(host).iter().map(|f| denominator(f.slope, d.meridian(host))).collect();
            values.sort_unstable();
            values.dedup();
            denom_tuples.push(DenomTuple { curve, host, values });
        }
    }
    Ok(InvariantReport { quadruple, denom_tuples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairVerdict {
    Distinguishable,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub spec: SurgerySpec,
    pub exchanged_spec: SurgerySpec,
    pub descriptor_1: SplittingDescriptor,
    pub descriptor_2: SplittingDescriptor,
    pub certificate_1: Distance3Certificate,
    pub certificate_2: Distance3Certificate,
    pub invariants_1: InvariantReport,
    pub invariants_2: InvariantReport,
    pub verdict: PairVerdict,
}

impl PairReport {
    pub fn both_certified(&self) -> bool {
        self.certificate_1.is_certified() && self.certificate_2.is_certified()
    }
}

pub fn compare_pair(s: SurgerySpec) -> Result<PairReport, ConstructError> {
    let exchanged_spec = exchange_cores(s)?;
    let descriptor_1 = build_splitting(s)?;
    let descriptor_2 = build_splitting(exchanged_spec)?;
    let certificate_1 = certify_distance3(&descriptor_1)?;
    let certificate_2 = certify_distance3(&descriptor_2)?;
    let invariants_1 = invariants(&descriptor_1)?;
    let invariants_2 = invariants(&descriptor_2)?;
    let verdict = if invariants_1.same_unordered(&invariants_2) {
        PairVerdict::Inconclusive
    } else {
        PairVerdict::Distinguishable
    };
    Ok(PairReport {
        spec: s,
        exchanged_spec,
        descriptor_1,
        descriptor_2,
        certificate_1,
        certificate_2,
        invariants_1,
        invariants_2,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleStats {
    pub n: u64,
    pub height: u64,
    pub seed: u64,
    pub mode: SpecMode,
    pub valid: u64,
    /// Valid specs whose two splittings both certify.
    pub certified: u64,
    /// Certified pairs told apart by the invariants.
    pub distinguishable: u64,
    pub valid_fraction: Fraction,
    pub certified_fraction: Fraction,
    pub distinguishable_fraction: Fraction,
}

/// Draws `n` specs with each coefficient uniform over the slopes of height
/// at most `height`, and runs the pair pipeline on every valid one. In
/// single mode only the first splitting is certified and nothing is
/// compared.
pub fn sample_generic(n: u64, height: u64, seed: u64, mode: SpecMode) -> SampleStats {
    let pool = slopes_up_to(height.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut valid, mut certified, mut distinguishable) = (0, 0, 0);
    for _ in 0..n {
        let mut draw = || pool[rng.gen_range(0..pool.len())];
        let spec = SurgerySpec::new(draw(), draw(), draw(), draw(), mode);
        if validate_spec(spec).is_err() {
            continue;
        }
        valid += 1;
        match mode {
            SpecMode::Pair => {
                let report = compare_pair(spec).expect("validated pair spec");
                if report.both_certified() {
                    certified += 1;
                    if report.verdict == PairVerdict::Distinguishable {
                        distinguishable += 1;
                    }
                }
            }
            SpecMode::Single => {
                let d = build_splitting(spec).expect("validated spec");
                if certify_distance3(&d).expect("built descriptor").is_certified() {
                    certified += 1;
                }
            }
        }
    }
    SampleStats {
        n,
        height,
        seed,
        mode,
        valid,
        certified,
        distinguishable,
        valid_fraction: Fraction::new(valid, n),
        certified_fraction: Fraction::new(certified, valid),
        distinguishable_fraction: Fraction::new(distinguishable, certified),
    }
}
