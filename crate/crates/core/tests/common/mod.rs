#![allow(dead_code)]

use berge_core::construct::{SpecMode, SurgerySpec};
use berge_core::farey::{classify, slopes_up_to, SlopeClass};
use berge_core::{q, ExtendedRational};

/// The eight close slopes.
pub fn close_set() -> Vec<ExtendedRational> {
    vec![q(1, 0), q(0, 1), q(1, 1), q(-1, 1), q(2, 1), q(-2, 1), q(1, 2), q(-1, 2)]
}

/// The eight nearby slopes around them.
pub fn nearby_ring() -> Vec<ExtendedRational> {
    vec![q(3, 1), q(-3, 1), q(1, 3), q(-1, 3), q(2, 3), q(-2, 3), q(3, 2), q(-3, 2)]
}

/// `|ps - qr|` from raw parts, kept apart from the library kernel.
pub fn det(a: ExtendedRational, b: ExtendedRational) -> u64 {
    (a.num() as i128 * b.den() as i128 - a.den() as i128 * b.num() as i128).unsigned_abs() as u64
}

pub fn remote_slopes(height: u64) -> Vec<ExtendedRational> {
    slopes_up_to(height).into_iter().filter(|&s| classify(s) == SlopeClass::Remote).collect()
}

pub fn distant_or_remote(height: u64) -> Vec<ExtendedRational> {
    slopes_up_to(height).into_iter().filter(|&s| classify(s).is_distant()).collect()
}

/// Pair-mode specs over remote slopes of height at most `height`: the
/// anchor spec, then `extra` more picked by fixed strides.
pub fn pair_corpus(height: u64, extra: usize) -> Vec<SurgerySpec> {
    let pool = remote_slopes(height);
    let pick = |i: usize, stride: usize, shift: usize| pool[(i * stride + shift) % pool.len()];
    let mut out = vec![SurgerySpec::new(q(11, 3), q(12, 5), q(13, 5), q(17, 5), SpecMode::Pair)];
    for i in 0..extra {
        out.push(SurgerySpec::new(pick(i, 7, 0), pick(i, 13, 5), pick(i, 31, 11), pick(i, 53, 17), SpecMode::Pair));
    }
    out
}
