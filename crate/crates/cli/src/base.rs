//! Base knots for the cable command: `unknot`, `torus:p,q`, `fusion:m1,m2`
//! or `qp:<file>`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cable_slopes_core::cabling::{CableParams, ClosedForm, DegreeProvider, ExactKnot};
use cable_slopes_core::fusion::{fusion_degree, special_forms, FusionParams, SpecialForm};

use crate::formats::read_closed_form;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Unknot,
    Torus(CableParams),
    Fusion(FusionParams),
    File(PathBuf),
}

fn pair(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::invalid(format!("expected two integers `a,b`, got {s:?}"));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
}

impl FromStr for BaseSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "unknot" {
            return Ok(BaseSpec::Unknot);
        }
        match s.split_once(':') {
            Some(("torus", rest)) => {
                let (p, q) = pair(rest)?;
                CableParams::new(p, q).map(BaseSpec::Torus).map_err(|e| CliError::invalid(e.to_string()))
            }
            Some(("fusion", rest)) => {
                let (m1, m2) = pair(rest)?;
                Ok(BaseSpec::Fusion(FusionParams::new(m1, m2)))
            }
            Some(("qp", path)) if !path.is_empty() => Ok(BaseSpec::File(PathBuf::from(path))),
            _ => Err(CliError::invalid(format!(
                "unknown base {s:?}; expected unknot, torus:p,q, fusion:m1,m2 or qp:<file>"
            ))),
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Unknot => f.write_str("unknot"),
            BaseSpec::Torus(c) => write!(f, "T{c}"),
            BaseSpec::Fusion(k) => write!(f, "{k}"),
            BaseSpec::File(path) => write!(f, "{}", path.display()),
        }
    }
}

/// A base knot with its degree function.
#[derive(Debug, Clone)]
pub struct Base {
    pub label: String,
    /// An identification with a simpler knot, for display.
    pub note: Option<String>,
    pub exact: Option<ExactKnot>,
    pub closed: ClosedForm,
}

/// Torus knot degrees have period at most 2.
const EXACT_FIT_PERIOD: usize = 2;
const EXACT_FIT_COLORS: u64 = 24;

fn exact_closed_form(knot: &ExactKnot) -> Result<ClosedForm, CliError> {
    let provider = DegreeProvider::exact(knot.clone(), EXACT_FIT_COLORS);
    ClosedForm::fit(|n| provider.degree(n), EXACT_FIT_PERIOD, EXACT_FIT_COLORS)
        .map_err(|e| CliError::invalid(format!("exact degrees do not fit a quasi-polynomial: {e}")))
}

impl Base {
    pub fn exact(label: String, note: Option<String>, knot: ExactKnot) -> Result<Self, CliError> {
        let closed = exact_closed_form(&knot)?;
        Ok(Base { label, note, exact: Some(knot), closed })
    }

    pub fn resolve(spec: &BaseSpec) -> Result<Self, CliError> {
        let label = spec.to_string();
        match spec {
            BaseSpec::Unknot => Base::exact(label, None, ExactKnot::Unknot),
            BaseSpec::Torus(c) => Base::exact(label, None, ExactKnot::torus(*c)),
            BaseSpec::Fusion(k) => {
                let special = special_forms(*k);
                let note = special.map(|s| identification(*k, s));
                match special {
                    Some(s) if k.is_degenerate() => {
                        let knot = s.exact_knot().ok_or_else(|| CliError::invalid(format!("{k} has no exact form")))?;
                        Base::exact(label, note, knot)
                    }
                    _ => {
                        let closed = fusion_degree(*k).map_err(|e| CliError::invalid(e.to_string()))?;
                        Ok(Base { label, note, exact: None, closed })
                    }
                }
            }
            BaseSpec::File(path) => Ok(Base { label, note: None, exact: None, closed: read_closed_form(path)? }),
        }
    }

    /// Degrees for cabling up to color `n_max`, exact when possible.
    pub fn provider(&self, params: CableParams, n_max: u64) -> DegreeProvider {
        match &self.exact {
            Some(knot) => DegreeProvider::exact(knot.clone(), max_color(params, n_max)),
            None => DegreeProvider::from(self.closed.clone()),
        }
    }
}

/// The largest base color `|2qk + 1|` needed for the cable's colors up to `n_max`.
pub fn max_color(params: CableParams, n_max: u64) -> u64 {
    params.q() as u64 * n_max.saturating_sub(1) + 1
}

pub fn identification(k: FusionParams, s: SpecialForm) -> String {
    let trivial = if s.is_trivial() { " (trivial: the unknot)" } else { "" };
    format!("{k} = {s}{trivial}")
}
