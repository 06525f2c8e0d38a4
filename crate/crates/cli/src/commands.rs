use std::path::Path;

use berge_core::berge::{certify_distance3, certify_sums};
use berge_core::construct::{build_splitting, compare_pair, sample_generic, ConstructError, SpecMode, SurgerySpec};
use berge_core::farey::{class_quantities, classify, det_distance, slopes_up_to};
use berge_core::ptorus::{arc_arc_intersections, curve_arc_intersections, lattice_oracle, ArcSlope, SlopeObject};
use berge_core::surface::{
    cut_and_trace, guaranteed_bounds, half_twist_families, template_rectangles, trace_peripheral, Host, SideTag,
    TwistDirection,
};
use berge_core::{q, ExtendedRational};
use serde_json::{json, Value};

use crate::report::{ReportDocument, Status};
use crate::specfile;

pub type Outcome = (ReportDocument, Status);

/// Most listed disagreements per oracle run; the counts stay exact.
const MAX_LISTED: usize = 20;

fn input_error(command: &str, inputs: Value, kind: &str, message: String) -> Outcome {
    let result = json!({ "error": kind, "message": message });
    (ReportDocument::new(command, inputs, result, vec![message]), Status::InputError)
}

fn construct_error(command: &str, inputs: Value, e: ConstructError) -> Outcome {
    input_error(command, inputs, e.kind(), e.to_string())
}

pub fn classify_cmd(text: &str) -> Outcome {
    let inputs = json!({ "slope": text });
    let slope: ExtendedRational = match text.parse() {
        Ok(s) => s,
        Err(e) => return input_error("classify", inputs, "ParseError", format!("{e}")),
    };
    let class = classify(slope);
    let result = json!({ "slope": slope, "class": class, "quantities": class_quantities(slope) });
    (ReportDocument::new("classify", inputs, result, vec![]), Status::Affirmative)
}

fn load_spec(
    command: &str,
    path: &Path,
    default_mode: SpecMode,
    direction: Option<TwistDirection>,
) -> Result<(SurgerySpec, Value), Box<Outcome>> {
    let mut inputs = json!({ "spec_path": path.display().to_string() });
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(command, inputs.clone(), "ParseError", format!("cannot read {}: {e}", path.display())))
        .map_err(Box::new)?;
    let file = specfile::parse(&text).map_err(|e| Box::new(input_error(command, inputs.clone(), "ParseError", e)))?;
    let mut spec = file.into_spec(default_mode);
    if let Some(dir) = direction {
        spec.twist_direction = dir;
    }
    inputs["spec"] = json!(spec);
    inputs["spec_text"] = json!(specfile::render(&spec));
    Ok((spec, inputs))
}

pub fn certify_cmd(path: &Path, direction: Option<TwistDirection>) -> Outcome {
    let (spec, inputs) = match load_spec("certify", path, SpecMode::Single, direction) {
        Ok(v) => v,
        Err(out) => return *out,
    };
    let descriptor = match build_splitting(spec) {
        Ok(d) => d,
        Err(e) => return construct_error("certify", inputs, e),
    };
    let (certificate, sums) = match (certify_distance3(&descriptor), certify_sums(&descriptor)) {
        (Ok(c), Ok(s)) => (c, s),
        (Err(e), _) | (_, Err(e)) => return construct_error("certify", inputs, e.into()),
    };
    let mut diagnostics = vec![];
    if let Some(why) = &certificate.failure_reason {
        diagnostics.push(format!("not certified: {why}"));
    }
    let status = Status::affirm(certificate.is_certified());
    let result = json!({ "descriptor": descriptor, "certificate": certificate, "sums": sums });
    (ReportDocument::new("certify", inputs, result, diagnostics), status)
}

pub fn pair_cmd(path: &Path, direction: Option<TwistDirection>) -> Outcome {
    let (spec, inputs) = match load_spec("pair", path, SpecMode::Pair, direction) {
        Ok(v) => v,
        Err(out) => return *out,
    };
    let report = match compare_pair(spec) {
        Ok(r) => r,
        Err(e) => return construct_error("pair", inputs, e),
    };
    let mut diagnostics = vec![];
    for (i, cert) in [&report.certificate_1, &report.certificate_2].into_iter().enumerate() {
        if let Some(why) = &cert.failure_reason {
            diagnostics.push(format!("splitting {} not certified: {why}", i + 1));
        }
    }
    let status = Status::affirm(report.both_certified());
    (ReportDocument::new("pair", inputs, json!(report), diagnostics), status)
}

pub fn sample_cmd(n: u64, height: u64, seed: u64, mode: SpecMode) -> Outcome {
    let inputs = json!({ "n": n, "height": height, "seed": seed, "mode": mode });
    let stats = sample_generic(n, height, seed, mode);
    let mut result = json!(stats);
    result["valid_rate"] = json!(stats.valid_fraction.to_f64());
    result["certified_rate"] = json!(stats.certified_fraction.to_f64());
    result["distinguishable_rate"] = json!(stats.distinguishable_fraction.to_f64());
    (ReportDocument::new("sample", inputs, result, vec![]), Status::Affirmative)
}

#[derive(Default)]
struct Tally {
    compared: u64,
    disagreements: u64,
    listed: Vec<Value>,
}

impl Tally {
    fn check(&mut self, agree: bool, detail: impl FnOnce() -> Value) {
        self.compared += 1;
        if !agree {
            self.disagreements += 1;
            if self.listed.len() < MAX_LISTED {
                self.listed.push(detail());
            }
        }
    }

    fn row(&self, check: &str) -> Value {
        json!({ "check": check, "compared": self.compared, "disagreements": self.disagreements })
    }
}

fn pairing_rows(height: u64, rows: &mut Vec<Value>, listed: &mut Vec<Value>) -> u64 {
    let slopes = slopes_up_to(height);
    let (mut arcs, mut mixed, mut curves) = (Tally::default(), Tally::default(), Tally::default());
    for &a in &slopes {
        for &b in &slopes {
            let cases = [
                (&mut arcs, SlopeObject::Arc(a), SlopeObject::Arc(b), arc_arc_intersections(ArcSlope(a), ArcSlope(b))),
                (&mut mixed, SlopeObject::Curve(a), SlopeObject::Arc(b), curve_arc_intersections(a, ArcSlope(b))),
                (&mut curves, SlopeObject::Curve(a), SlopeObject::Curve(b), det_distance(a, b)),
            ];
            for (tally, x, y, closed) in cases {
                let oracle = lattice_oracle(x, y);
                tally.check(oracle == closed, || json!({ "first": x, "second": y, "oracle": oracle, "closed_form": closed }));
            }
        }
    }
    let mut bad = 0;
    for (name, t) in [("arc/arc vs |det| - 1", arcs), ("curve/arc vs |det|", mixed), ("curve/curve vs |det|", curves)] {
        rows.push(t.row(name));
        bad += t.disagreements;
        listed.extend(t.listed);
    }
    bad
}

fn twist_rows(height: u64, rows: &mut Vec<Value>, listed: &mut Vec<Value>) -> u64 {
    let mut bad = 0;
    for dir in [TwistDirection::Left, TwistDirection::Right] {
        let traced = trace_peripheral(SideTag::P, dir);
        let tpl = template_rectangles(dir);
        let sorted = |mut v: Vec<ExtendedRational>| {
            v.sort();
            v
        };
        let fa = sorted(traced.families_fa.iter().map(|f| f.slope.0).collect());
        let fb = sorted(traced.families_fb.iter().map(|f| f.slope.0).collect());
        let agrees = fa == sorted(tpl.fa_slopes.clone()) && fb == sorted(tpl.fb_slopes.clone());
        bad += u64::from(!agrees);
        rows.push(json!({
            "check": format!("half-twisted boundary of Γ_B ({dir})"),
            "traced_fa": fa, "traced_fb": fb,
            "published_fa": tpl.fa_slopes, "published_fb": tpl.fb_slopes,
            "compared": 1, "disagreements": u64::from(!agrees),
        }));
    }
    let (mut rect, mut bounds, mut crossings) = (Tally::default(), Tally::default(), Tally::default());
    for c in slopes_up_to(height).into_iter().filter(|&c| classify(c).is_distant()) {
        for side in [SideTag::P, SideTag::Q] {
            for dir in [TwistDirection::Left, TwistDirection::Right] {
                let (Ok(traced), Ok(fast), Ok(b)) =
                    (cut_and_trace(c, side, dir), half_twist_families(c, side, dir), guaranteed_bounds(c, side, dir))
                else {
                    unreachable!("distant slopes are accepted")
                };
                let host = b.host.other();
                rect.check(traced.families(host) == fast.families(host), || {
                    json!({ "slope": c, "side": side, "direction": dir, "traced": traced.families(host), "fast": fast.families(host) })
                });
                bounds.check(b.admits(traced.families(b.host)), || {
                    json!({ "slope": c, "side": side, "direction": dir, "octagon": traced.families(b.host), "bounds": b })
                });
            }
        }
        let traced = cut_and_trace(c, SideTag::P, TwistDirection::Left).expect("distant");
        let lattice = lattice_oracle(SlopeObject::Curve(c), SlopeObject::Arc(q(1, 0)))
            + lattice_oracle(SlopeObject::Curve(c), SlopeObject::Arc(q(1, 1)));
        let arcs = traced.total_arcs(Host::FA);
        crossings.check(arcs == lattice, || json!({ "slope": c, "arcs": arcs, "lattice": lattice }));
    }
    for (name, t) in [
        ("rectangle families: traced vs closed form", rect),
        ("octagon families within guaranteed bounds", bounds),
        ("rectangle arcs vs lattice crossings", crossings),
    ] {
        rows.push(t.row(name));
        bad += t.disagreements;
        listed.extend(t.listed);
    }
    bad
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Pairing,
    Twist,
    All,
}

pub fn oracle_cmd(scope: Scope, height: u64) -> Outcome {
    let inputs = json!({ "scope": scope, "height": height });
    let mut rows = Vec::new();
    let mut listed = Vec::new();
    let mut bad = 0;
    if matches!(scope, Scope::Pairing | Scope::All) {
        bad += pairing_rows(height, &mut rows, &mut listed);
    }
    if matches!(scope, Scope::Twist | Scope::All) {
        bad += twist_rows(height, &mut rows, &mut listed);
    }
    let diagnostics = if bad == 0 { vec![] } else { vec![format!("{bad} disagreement(s)")] };
    let result = json!({ "rows": rows, "total_disagreements": bad, "disagreements": listed });
    (ReportDocument::new("oracle", inputs, result, diagnostics), Status::affirm(bad == 0))
}
