mod common;

use berge_core::farey::{classify, SlopeClass};
use berge_core::ptorus::{lattice_oracle, SlopeObject};
use berge_core::surface::{
    cut_and_trace, guaranteed_bounds, half_twist_families, template_rectangles, trace_peripheral, ArcFamily, Host,
    SideTag, TwistDirection, TwistedPresentation,
};
use berge_core::{q, ExtendedRational};
use common::distant_or_remote;

const SIDES: [SideTag; 2] = [SideTag::P, SideTag::Q];
const DIRECTIONS: [TwistDirection; 2] = [TwistDirection::Left, TwistDirection::Right];

fn as_pairs(fams: &[ArcFamily]) -> Vec<(ExtendedRational, u64)> {
    let mut v: Vec<_> = fams.iter().map(|f| (f.slope.0, f.count)).collect();
    v.sort();
    v
}

/// Rectangle families predicted from `c = r/s` alone.
fn predicted_rectangles(c: ExtendedRational, side: SideTag, dir: TwistDirection) -> (Host, Vec<(ExtendedRational, u64)>) {
    let s = c.den();
    let r_minus_s = (c.num() - c.den() as i64).unsigned_abs();
    if c.is_infinite() {
        unreachable!("1/0 is close");
    }
    let sign = if dir == TwistDirection::Left { 1 } else { -1 };
    let (host, first, second) = match side {
        SideTag::P => (Host::FA, q(-sign, 1), q(1, 0)),
        SideTag::Q => (Host::FB, q(sign, 1), q(0, 1)),
    };
    let mut v = vec![(first, s), (second, r_minus_s)];
    v.sort();
    (host, v)
}

#[test]
fn fast_path_agrees_with_tracing() {
    for c in distant_or_remote(50) {
        for side in SIDES {
            for dir in DIRECTIONS {
                let traced = cut_and_trace(c, side, dir).unwrap();
                let fast = half_twist_families(c, side, dir).unwrap();
                let (rect_host, predicted) = predicted_rectangles(c, side, dir);
                assert_eq!(as_pairs(traced.families(rect_host)), predicted, "{c} {side:?} {dir:?}");
                assert_eq!(traced.families(rect_host), fast.families(rect_host));

                let oct = rect_host.other();
                let bounds = guaranteed_bounds(c, side, dir).unwrap();
                assert_eq!(bounds.host, oct);
                assert!(bounds.admits(traced.families(oct)), "{c} {side:?} {dir:?}: {traced:?}");
                let (s, rs) = (predicted[0].1.min(predicted[1].1), predicted[0].1.max(predicted[1].1));
                assert_eq!(traced.total_arcs(oct), 2 * s + (rs - s));
            }
        }
    }
}

#[test]
fn rectangle_counts_match_lattice_crossings() {
    // x meets the two transversal arcs once per arc of the rectangle host
    for c in distant_or_remote(30) {
        let t = cut_and_trace(c, SideTag::P, TwistDirection::Left).unwrap();
        let crossings = lattice_oracle(SlopeObject::Curve(c), SlopeObject::Arc(q(1, 0)))
            + lattice_oracle(SlopeObject::Curve(c), SlopeObject::Arc(q(1, 1)));
        assert_eq!(t.total_arcs(Host::FA), crossings, "{c}");
    }
}

#[test]
fn peripheral_trace_reproduces_published_rectangles() {
    for dir in DIRECTIONS {
        let t = trace_peripheral(SideTag::P, dir);
        let tpl = template_rectangles(dir);
        let mut fa = tpl.fa_slopes.iter().copied().zip(tpl.fa_counts.iter().copied()).collect::<Vec<_>>();
        let mut fb = tpl.fb_slopes.iter().copied().zip(tpl.fb_counts.iter().copied()).collect::<Vec<_>>();
        fa.sort();
        fb.sort();
        assert_eq!(as_pairs(&t.families_fa), fa, "{dir:?}");
        assert_eq!(as_pairs(&t.families_fb), fb, "{dir:?}");
    }
    let left = template_rectangles(TwistDirection::Left);
    assert_eq!(left.fa_slopes, [q(1, 0), q(-1, 1)]);
    assert_eq!(left.fb_slopes, [q(0, 1), q(1, 1)]);
}

fn each_presentation(height: u64) -> impl Iterator<Item = TwistedPresentation> {
    distant_or_remote(height).into_iter().flat_map(|c| {
        SIDES.into_iter().flat_map(move |side| DIRECTIONS.into_iter().map(move |dir| cut_and_trace(c, side, dir).unwrap()))
    })
}

#[test]
fn arc_counts_balance_across_gamma() {
    for t in each_presentation(50) {
        assert_eq!(t.total_arcs(Host::FA), t.total_arcs(Host::FB), "{t:?}");
    }
}

#[test]
fn two_distinct_close_slopes_in_each_torus() {
    for t in each_presentation(50) {
        for host in [Host::FA, Host::FB] {
            let fams = t.families(host);
            assert!(fams.len() >= 2, "{t:?}");
            for f in fams {
                assert_eq!(classify(f.slope.0), SlopeClass::Close, "{t:?}");
            }
        }
    }
}

#[test]
fn right_twist_is_the_mirror() {
    for c in distant_or_remote(50) {
        for side in SIDES {
            let left = cut_and_trace(c, side, TwistDirection::Left).unwrap();
            let right = cut_and_trace(c, side, TwistDirection::Right).unwrap();
            assert_eq!(right, left.reflected(), "{c} {side:?}");
            assert_eq!(right.reflected(), left);
        }
    }
}

#[test]
fn non_distant_slopes_are_refused() {
    for c in berge_core::farey::slopes_up_to(20) {
        let ok = cut_and_trace(c, SideTag::P, TwistDirection::Left).is_ok();
        assert_eq!(ok, classify(c).is_distant(), "{c}");
    }
}
