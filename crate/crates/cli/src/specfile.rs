//! Flat `key = value` surgery specs. `#` starts a comment.
//!
//! ```text
//! slope_cX = 11/3
//! slope_cY = 12/5
//! slope_cA = 13/5
//! slope_cB = 17/5
//! twist = left
//! mode = pair
//! identification = h2
//! ```

use berge_core::berge::Identification;
use berge_core::construct::{SpecMode, SurgerySpec};
use berge_core::surface::TwistDirection;
use berge_core::ExtendedRational;

/// A parsed file. `mode` stays open so each command can pick its default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecFile {
    pub slope_cx: ExtendedRational,
    pub slope_cy: ExtendedRational,
    pub slope_ca: ExtendedRational,
    pub slope_cb: ExtendedRational,
    pub twist: TwistDirection,
    pub mode: Option<SpecMode>,
    pub identification: Identification,
}

impl SpecFile {
    pub fn into_spec(self, default_mode: SpecMode) -> SurgerySpec {
        SurgerySpec {
            slope_cx: self.slope_cx,
            slope_cy: self.slope_cy,
            slope_ca: self.slope_ca,
            slope_cb: self.slope_cb,
            twist_direction: self.twist,
            mode: self.mode.unwrap_or(default_mode),
            identification: self.identification,
        }
    }
}

pub fn parse(text: &str) -> Result<SpecFile, String> {
    let mut slopes: [Option<ExtendedRational>; 4] = [None; 4];
    let mut twist = None;
    let mut mode = None;
    let mut identification = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| format!("line {}: {msg}", i + 1);
        let (key, value) = line.split_once('=').ok_or_else(|| at(format!("expected key = value, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let slot = match key {
            "slope_cX" => Some(0),
            "slope_cY" => Some(1),
            "slope_cA" => Some(2),
            "slope_cB" => Some(3),
            _ => None,
        };
        let dup = |k: &str| at(format!("duplicate key {k}"));
        match (key, slot) {
            (_, Some(k)) => {
                if slopes[k].is_some() {
                    return Err(dup(key));
                }
                slopes[k] = Some(value.parse().map_err(|e| at(format!("{key}: {e}")))?);
            }
            ("twist", _) => {
                if twist.replace(value.parse::<TwistDirection>().map_err(at)?).is_some() {
                    return Err(dup(key));
                }
            }
            ("mode", _) => {
                if mode.replace(value.parse::<SpecMode>().map_err(at)?).is_some() {
                    return Err(dup(key));
                }
            }
            ("identification", _) => {
                if identification.replace(value.parse::<Identification>().map_err(at)?).is_some() {
                    return Err(dup(key));
                }
            }
            _ => return Err(at(format!("unknown key {key:?}"))),
        }
    }
    let names = ["slope_cX", "slope_cY", "slope_cA", "slope_cB"];
    let mut got = [ExtendedRational::INFINITY; 4];
    for (k, s) in slopes.iter().enumerate() {
        got[k] = s.ok_or_else(|| format!("missing key {}", names[k]))?;
    }
    Ok(SpecFile {
        slope_cx: got[0],
        slope_cy: got[1],
        slope_ca: got[2],
        slope_cb: got[3],
        twist: twist.unwrap_or(TwistDirection::Left),
        mode,
        identification: identification.unwrap_or(Identification::H2),
    })
}

pub fn render(s: &SurgerySpec) -> String {
    format!(
        "slope_cX = {}\nslope_cY = {}\nslope_cA = {}\nslope_cB = {}\ntwist = {}\nmode = {}\nidentification = {}\n",
        s.slope_cx, s.slope_cy, s.slope_ca, s.slope_cb, s.twist_direction, s.mode, s.identification
    )
}
