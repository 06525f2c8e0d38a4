//! Extended rationals, the determinant pairing, Farey adjacency and the
//! close / nearby / distant / remote classification of slopes.
//!
//! Infinity is the single unsigned value `1/0`. Every constructor
//! canonicalizes, so structural equality is slope equality.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A slope `num/den` in lowest terms, with `1/0` standing for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedRational {
    num: i64,
    den: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FareyError {
    /// `0/0` has no slope.
    Indeterminate,
    /// Common neighbors only exist for Farey-adjacent slopes.
    NotAdjacent { a: ExtendedRational, b: ExtendedRational, det: u64 },
    Parse(alloc::string::String),
}

impl fmt::Display for FareyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FareyError::Indeterminate => write!(f, "0/0 is not a slope"),
            FareyError::NotAdjacent { a, b, det } => {
                write!(f, "{a} and {b} are not Farey-adjacent (determinant {det})")
            }
            FareyError::Parse(s) => write!(f, "cannot parse slope {s:?}: expected p/q, an integer, or inf"),
        }
    }
}

impl core::error::Error for FareyError {}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ExtendedRational {
    pub const INFINITY: Self = Self { num: 1, den: 0 };
    pub const ZERO: Self = Self { num: 0, den: 1 };

    /// Builds the canonical form of `num/den`. Signs move to the numerator
    /// and `±k/0` collapses to `1/0`.
    pub fn new(num: i64, den: i64) -> Result<Self, FareyError> {
        Self::from_wide(num as i128, den as i128)
    }

    pub(crate) fn from_wide(num: i128, den: i128) -> Result<Self, FareyError> {
        if num == 0 && den == 0 {
            return Err(FareyError::Indeterminate);
        }
        if den == 0 {
            return Ok(Self::INFINITY);
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num.unsigned_abs() as u64, den as u64) as i128;
        Ok(Self { num: (num / g) as i64, den: (den / g) as u64 })
    }

    /// An integer slope `n/1`.
    pub const fn integer(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    pub const fn num(&self) -> i64 {
        self.num
    }

    pub const fn den(&self) -> u64 {
        self.den
    }

    pub const fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// `max(|num|, den)`, the box height used by every enumeration here.
    pub fn height(&self) -> u64 {
        self.num.unsigned_abs().max(self.den)
    }

    /// `q/p`. Infinity and zero swap.
    pub fn recip(self) -> Self {
        Self::from_wide(self.den as i128, self.num as i128).expect("canonical slopes are never 0/0")
    }

    /// The primitive lattice vector `(den, num)`: run along the meridian
    /// direction, rise along the longitude.
    pub fn direction(&self) -> (i64, i64) {
        (self.den as i64, self.num)
    }

    /// Image under the integer matrix `[[a, b], [c, d]]` acting on `(num, den)`.
    pub fn transform(self, m: [[i64; 2]; 2]) -> Result<Self, FareyError> {
        let (p, q) = (self.num as i128, self.den as i128);
        Self::from_wide(
            m[0][0] as i128 * p + m[0][1] as i128 * q,
            m[1][0] as i128 * p + m[1][1] as i128 * q,
        )
    }
}

/// Reflection `p/q -> -p/q`; `1/0` is fixed.
impl core::ops::Neg for ExtendedRational {
    type Output = Self;

    fn neg(self) -> Self {
        if self.den == 0 {
            self
        } else {
            Self { num: -self.num, den: self.den }
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || FareyError::Parse(t.into());
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Self::INFINITY);
        }
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                Self::new(n, d).map_err(|_| bad())
            }
            None => t.parse::<i64>().map(Self::integer).map_err(|_| bad()),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = <alloc::string::String as Deserialize>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and tables; panics on `0/0`.
pub fn q(num: i64, den: i64) -> ExtendedRational {
    ExtendedRational::new(num, den).expect("0/0 is not a slope")
}

/// `|a.num * b.den - a.den * b.num|`.
pub fn det_distance(a: ExtendedRational, b: ExtendedRational) -> u64 {
    let d = a.num as i128 * b.den as i128 - a.den as i128 * b.num as i128;
    d.unsigned_abs() as u64
}

pub fn is_farey_adjacent(a: ExtendedRational, b: ExtendedRational) -> bool {
    det_distance(a, b) == 1
}

/// The two slopes adjacent to both `a` and `b`: their mediant and their
/// difference, in that order.
pub fn common_neighbors(
    a: ExtendedRational,
    b: ExtendedRational,
) -> Result<(ExtendedRational, ExtendedRational), FareyError> {
    let det = det_distance(a, b);
    if det != 1 {
        return Err(FareyError::NotAdjacent { a, b, det });
    }
    let (p, q_) = (a.num as i128, a.den as i128);
    let (r, s) = (b.num as i128, b.den as i128);
    // det 1 means neither sum nor difference can be 0/0
    let mediant = ExtendedRational::from_wide(p + r, q_ + s)?;
    let difference = ExtendedRational::from_wide(p - r, q_ - s)?;
    Ok((mediant, difference))
}

/// Five mutually exclusive tiers. `Nearby` is nearby-but-not-close,
/// `Distant` is distant-but-not-remote, `Intermediate` is neither nearby
/// nor distant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SlopeClass {
    Close,
    Nearby,
    Intermediate,
    Distant,
    Remote,
}

impl SlopeClass {
    /// Distant in the wide sense (remote slopes included).
    pub fn is_distant(self) -> bool {
        matches!(self, SlopeClass::Distant | SlopeClass::Remote)
    }

    /// Nearby in the wide sense (close slopes included).
    pub fn is_nearby(self) -> bool {
        matches!(self, SlopeClass::Close | SlopeClass::Nearby)
    }
}

impl fmt::Display for SlopeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SlopeClass::Close => "close",
            SlopeClass::Nearby => "nearby",
            SlopeClass::Intermediate => "intermediate",
            SlopeClass::Distant => "distant",
            SlopeClass::Remote => "remote",
        };
        f.write_str(s)
    }
}

/// `∞, 0, ±1, ±2, ±1/2`.
pub const CLOSE_SLOPES: [ExtendedRational; 8] = [
    ExtendedRational { num: 1, den: 0 },
    ExtendedRational { num: 0, den: 1 },
    ExtendedRational { num: 1, den: 1 },
    ExtendedRational { num: -1, den: 1 },
    ExtendedRational { num: 2, den: 1 },
    ExtendedRational { num: -2, den: 1 },
    ExtendedRational { num: 1, den: 2 },
    ExtendedRational { num: -1, den: 2 },
];

/// The ring around the close slopes: `±3, ±1/3, ±2/3, ±3/2`.
/// `-3/2` is included.
pub const NEARBY_RING: [ExtendedRational; 8] = [
    ExtendedRational { num: 3, den: 1 },
    ExtendedRational { num: -3, den: 1 },
    ExtendedRational { num: 1, den: 3 },
    ExtendedRational { num: -1, den: 3 },
    ExtendedRational { num: 2, den: 3 },
    ExtendedRational { num: -2, den: 3 },
    ExtendedRational { num: 3, den: 2 },
    ExtendedRational { num: -3, den: 2 },
];

/// One evaluated linear form `|a·p + b·q|` from the distant/remote tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassQuantity {
    pub form: alloc::string::String,
    pub value: u64,
    /// Whether the form belongs to the remote-only list.
    pub remote_only: bool,
}

// (label, a, b) meaning |a p + b q|
const DISTANT_FORMS: [(&str, i64, i64); 8] = [
    ("|p|", 1, 0),
    ("|q|", 0, 1),
    ("|p+q|", 1, 1),
    ("|p-q|", 1, -1),
    ("|p+2q|", 1, 2),
    ("|p-2q|", 1, -2),
    ("|2p+q|", 2, 1),
    ("|2p-q|", 2, -1),
];

const REMOTE_FORMS: [(&str, i64, i64); 8] = [
    ("|p+3q|", 1, 3),
    ("|p-3q|", 1, -3),
    ("|3p+2q|", 3, 2),
    ("|3p-2q|", 3, -2),
    ("|2p+3q|", 2, 3),
    ("|2p-3q|", 2, -3),
    ("|3p+q|", 3, 1),
    ("|3p-q|", 3, -1),
];

fn form_value(s: ExtendedRational, a: i64, b: i64) -> u64 {
    (a as i128 * s.num as i128 + b as i128 * s.den as i128).unsigned_abs() as u64
}

/// Every quantity the distant and remote tests look at, in a stable order.
pub fn class_quantities(s: ExtendedRational) -> Vec<ClassQuantity> {
    DISTANT_FORMS
        .iter()
        .map(|&(form, a, b)| ClassQuantity { form: form.into(), value: form_value(s, a, b), remote_only: false })
        .chain(
            REMOTE_FORMS
                .iter()
                .map(|&(form, a, b)| ClassQuantity { form: form.into(), value: form_value(s, a, b), remote_only: true }),
        )
        .collect()
}

pub fn classify(s: ExtendedRational) -> SlopeClass {
    if CLOSE_SLOPES.contains(&s) {
        return SlopeClass::Close;
    }
    if NEARBY_RING.contains(&s) {
        return SlopeClass::Nearby;
    }
    let distant = DISTANT_FORMS.iter().all(|&(_, a, b)| form_value(s, a, b) >= 2);
    if !distant {
        return SlopeClass::Intermediate;
    }
    if REMOTE_FORMS.iter().all(|&(_, a, b)| form_value(s, a, b) >= 2) {
        SlopeClass::Remote
    } else {
        SlopeClass::Distant
    }
}

/// All canonical slopes in the height box: `|num| <= height`,
/// `1 <= den <= height`, plus `1/0`. Ordered by denominator, then numerator.
pub fn slopes_up_to(height: u64) -> Vec<ExtendedRational> {
    let h = height as i64;
    let mut out = Vec::new();
    if height == 0 {
        return out;
    }
    out.push(ExtendedRational::INFINITY);
    for den in 1..=h {
        for num in -h..=h {
            if gcd(num.unsigned_abs(), den as u64) == 1 {
                out.push(ExtendedRational { num, den: den as u64 });
            }
        }
    }
    out
}

/// An exact non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub numer: u64,
    pub denom: u64,
}

impl Fraction {
    pub fn new(numer: u64, denom: u64) -> Self {
        let g = gcd(numer, denom).max(1);
        Self { numer: numer / g, denom: denom / g }
    }

    pub fn to_f64(self) -> f64 {
        if self.denom == 0 {
            0.0
        } else {
            self.numer as f64 / self.denom as f64
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some((self.numer as u128 * other.denom as u128).cmp(&(other.numer as u128 * self.denom as u128)))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Fraction of the slopes in the height box (see [`slopes_up_to`]) that
/// classify as remote. Height 0 yields `0/0`.
pub fn remote_density(height: u64) -> Fraction {
    let h = height as i64;
    let mut total = 0u64;
    let mut remote = 0u64;
    if height >= 1 {
        // 1/0
        total += 1;
    }
    for den in 1..=h {
        for num in -h..=h {
            if gcd(num.unsigned_abs(), den as u64) != 1 {
                continue;
            }
            total += 1;
            if classify(ExtendedRational { num, den: den as u64 }) == SlopeClass::Remote {
                remote += 1;
            }
        }
    }
    Fraction::new(remote, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(q(-1, 0), ExtendedRational::INFINITY);
        assert_eq!(q(5, 0), ExtendedRational::INFINITY);
        assert_eq!(q(0, -7), ExtendedRational::ZERO);
        assert_eq!(q(4, -6), q(-2, 3));
        assert_eq!(q(-2, 3).num(), -2);
        assert_eq!(q(-2, 3).den(), 3);
        assert_eq!(ExtendedRational::new(0, 0), Err(FareyError::Indeterminate));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<ExtendedRational>().unwrap(), ExtendedRational::INFINITY);
        assert_eq!("-3/2".parse::<ExtendedRational>().unwrap(), q(-3, 2));
        assert_eq!("6/-4".parse::<ExtendedRational>().unwrap(), q(-3, 2));
        assert_eq!("7".parse::<ExtendedRational>().unwrap(), q(7, 1));
        assert!("abc".parse::<ExtendedRational>().is_err());
        assert!("0/0".parse::<ExtendedRational>().is_err());
        assert!("1/".parse::<ExtendedRational>().is_err());
        assert_eq!(alloc::format!("{}", q(11, 3)), "11/3");
        assert_eq!(alloc::format!("{}", q(-1, 0)), "inf");
    }

    #[test]
    fn det_distance_examples() {
        assert_eq!(det_distance(q(1, 1), q(0, 1)), 1);
        assert_eq!(det_distance(q(2, 3), q(3, 2)), 5);
        assert_eq!(det_distance(q(11, 3), q(4, 1)), 1);
        assert_eq!(det_distance(q(11, 3), q(11, 3)), 0);
    }

    #[test]
    fn adjacency_examples() {
        assert!(is_farey_adjacent(q(1, 2), q(1, 3)));
        assert!(!is_farey_adjacent(q(1, 2), q(3, 2)));
        assert!(is_farey_adjacent(q(1, 0), q(5, 1)));
    }

    #[test]
    fn common_neighbor_examples() {
        assert_eq!(common_neighbors(q(1, 0), q(0, 1)).unwrap(), (q(1, 1), q(-1, 1)));
        assert_eq!(common_neighbors(q(1, 2), q(1, 3)).unwrap(), (q(2, 5), q(0, 1)));
        assert!(matches!(
            common_neighbors(q(1, 1), q(1, 3)),
            Err(FareyError::NotAdjacent { det: 2, .. })
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(q(1, 2)), SlopeClass::Close);
        assert_eq!(classify(q(-3, 2)), SlopeClass::Nearby);
        assert_eq!(classify(q(5, 2)), SlopeClass::Intermediate);
        assert_eq!(classify(q(7, 2)), SlopeClass::Distant);
        assert_eq!(classify(q(11, 3)), SlopeClass::Remote);
    }

    #[test]
    fn eleven_thirds_minimum_quantity_is_two() {
        let qs = class_quantities(q(11, 3));
        assert_eq!(qs.len(), 16);
        assert_eq!(qs.iter().map(|c| c.value).min(), Some(2));
    }

    #[test]
    fn box_enumeration_counts() {
        // 1/0, then den 1: -1, 0, 1
        assert_eq!(slopes_up_to(1).len(), 4);
        assert!(slopes_up_to(0).is_empty());
        let h3 = slopes_up_to(3);
        assert!(h3.contains(&q(-3, 2)) && !h3.contains(&q(4, 3)));
    }

    #[test]
    fn remote_density_small_heights() {
        assert_eq!(remote_density(8).numer, 0);
        assert!(remote_density(9).numer > 0);
        assert_eq!(remote_density(0), Fraction { numer: 0, denom: 0 });
    }

    #[test]
    fn transform_preserves_det() {
        let s = [[0, -1], [1, 0]];
        let (a, b) = (q(7, 2), q(1, 1));
        assert_eq!(
            det_distance(a.transform(s).unwrap(), b.transform(s).unwrap()),
            det_distance(a, b)
        );
    }
}
