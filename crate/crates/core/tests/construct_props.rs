mod common;

use berge_core::berge::{certify_distance3, MeridianCurve};
use berge_core::construct::{
    build_splitting, compare_pair, exchange_cores, invariants, validate_spec, ConstructError, SpecMode, SurgerySpec,
};
use berge_core::farey::{classify, slopes_up_to, SlopeClass};
use berge_core::ptorus::{lattice_oracle, SlopeObject};
use berge_core::surface::{Host, TwistDirection};
use berge_core::{q, ExtendedRational};
use common::{pair_corpus, remote_slopes};
use proptest::prelude::*;

#[test]
fn every_valid_pair_certifies_twice() {
    for spec in pair_corpus(30, 400) {
        let report = compare_pair(spec).unwrap();
        assert!(report.both_certified(), "{spec:?}");
    }
}

/// First failing gate, read straight off the classes.
fn expected_gate(s: &SurgerySpec) -> Option<&'static str> {
    let distant = |x: ExtendedRational| classify(x).is_distant();
    let remote = |x: ExtendedRational| classify(x) == SlopeClass::Remote;
    if !distant(s.slope_cx) {
        Some("XNotDistant")
    } else if !distant(s.slope_cy) {
        Some("YNotDistant")
    } else if !remote(s.slope_ca) {
        Some("ANotRemote")
    } else if !remote(s.slope_cb) {
        Some("BNotRemote")
    } else if s.mode == SpecMode::Pair && !remote(s.slope_cx) {
        Some("XNotRemote")
    } else {
        None
    }
}

#[test]
fn validation_follows_classification_per_core() {
    let base = SurgerySpec::new(q(11, 3), q(12, 5), q(13, 5), q(17, 5), SpecMode::Pair);
    for s in slopes_up_to(20) {
        for mode in [SpecMode::Single, SpecMode::Pair] {
            let variants = [
                SurgerySpec { slope_cx: s, mode, ..base },
                SurgerySpec { slope_cy: s, mode, ..base },
                SurgerySpec { slope_ca: s, mode, ..base },
                SurgerySpec { slope_cb: s, mode, ..base },
            ];
            for v in variants {
                assert_eq!(validate_spec(v).err().map(|e| e.kind()), expected_gate(&v), "{v:?}");
            }
        }
    }
}

#[test]
fn invariants_ignore_family_order_and_reruns() {
    for spec in pair_corpus(20, 60) {
        let d = build_splitting(spec).unwrap();
        let base = invariants(&d).unwrap();
        assert_eq!(invariants(&build_splitting(spec).unwrap()).unwrap(), base);
        let mut shuffled = d.clone();
        for curve in [&mut shuffled.x_presentation, &mut shuffled.y_presentation] {
            if let MeridianCurve::Twisted(t) = curve {
                t.families_fa.reverse();
                t.families_fb.rotate_left(1);
            }
        }
        assert_eq!(invariants(&shuffled).unwrap(), base);
    }
}

#[test]
fn quadruple_matches_lattice_counts() {
    for spec in pair_corpus(12, 20) {
        let d = build_splitting(spec).unwrap();
        let inv = invariants(&d).unwrap();
        let count = |curve: &MeridianCurve, host: Host| -> u64 {
            curve
                .families(host)
                .iter()
                .map(|f| f.count * lattice_oracle(SlopeObject::Curve(d.meridian(host)), SlopeObject::Arc(f.slope.0)))
                .sum()
        };
        let lattice = [
            count(&d.x_presentation, Host::FA),
            count(&d.y_presentation, Host::FA),
            count(&d.x_presentation, Host::FB),
            count(&d.y_presentation, Host::FB),
        ];
        assert_eq!(inv.quadruple, lattice, "{spec:?}");
    }
}

#[test]
fn second_splitting_mirrors_the_swapped_spec() {
    for spec in pair_corpus(30, 100) {
        let report = compare_pair(spec).unwrap();
        let swapped = SurgerySpec { twist_direction: TwistDirection::Left, ..report.exchanged_spec };
        assert_eq!(report.descriptor_2, build_splitting(swapped).unwrap().reflected(), "{spec:?}");
        let c2 = certify_distance3(&build_splitting(swapped).unwrap()).unwrap();
        assert_eq!(c2.verdict, report.certificate_2.verdict);
    }
}

#[test]
fn symmetric_specs_are_inconclusive() {
    let pool = remote_slopes(15);
    for (i, &u) in pool.iter().enumerate().step_by(5) {
        let v = pool[(i * 3 + 1) % pool.len()];
        let spec = SurgerySpec::new(u, v, v, u, SpecMode::Pair);
        let r = compare_pair(spec).unwrap();
        assert_eq!(r.verdict, berge_core::construct::PairVerdict::Inconclusive, "{spec:?}");
    }
}

fn remote_slope() -> impl Strategy<Value = ExtendedRational> {
    let pool = remote_slopes(30);
    (0..pool.len()).prop_map(move |i| pool[i])
}

fn any_slope() -> impl Strategy<Value = ExtendedRational> {
    (-40i64..=40, 0i64..=40)
        .prop_filter("not 0/0", |&(n, d)| n != 0 || d != 0)
        .prop_map(|(n, d)| ExtendedRational::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn exchange_is_an_involution(a in remote_slope(), b in remote_slope(), c in remote_slope(), d in remote_slope(), right in any::<bool>()) {
        let mut spec = SurgerySpec::new(a, b, c, d, SpecMode::Pair);
        if right {
            spec.twist_direction = TwistDirection::Right;
        }
        let once = exchange_cores(spec).unwrap();
        prop_assert_eq!(exchange_cores(once).unwrap(), spec);
        prop_assert_ne!(once.twist_direction, spec.twist_direction);
    }

    #[test]
    fn validation_matches_classes(a in any_slope(), b in any_slope(), c in any_slope(), d in any_slope(), pair in any::<bool>()) {
        let mode = if pair { SpecMode::Pair } else { SpecMode::Single };
        let spec = SurgerySpec::new(a, b, c, d, mode);
        prop_assert_eq!(validate_spec(spec).err().map(|e| e.kind()), expected_gate(&spec));
    }

    #[test]
    fn single_mode_refuses_exchange(a in remote_slope(), b in remote_slope()) {
        let spec = SurgerySpec::new(a, b, a, b, SpecMode::Single);
        prop_assert_eq!(exchange_cores(spec), Err(ConstructError::NotPairMode));
    }
}
