//! Parallel grid sweeps and their report rows.

use cable_slopes_core::cabling::ClosedForm;
use cable_slopes_core::conjectures::{verify_closed_form, verify_fusion, GridSpec, SlopeReport};
use cable_slopes_core::fusion::region;
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::QuasiPolyJson;
use crate::CliError;

pub const THREADS_VAR: &str = "CABLE_SLOPES_THREADS";

/// A pool sized by `CABLE_SLOPES_THREADS`, or all cores when unset.
pub fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::invalid(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| CliError::invalid(e.to_string()))
}

/// Reports for named bases followed by the grid, in ascending `(m1, m2)`
/// order regardless of scheduling.
pub fn run(spec: &GridSpec, bases: &[(String, ClosedForm)]) -> Result<Vec<SlopeReport>, CliError> {
    let pool = thread_pool()?;
    let knots = spec.knots();
    Ok(pool.install(|| {
        let named: Vec<Vec<SlopeReport>> =
            bases.par_iter().map(|(label, cf)| verify_closed_form(label, cf, &spec.qs, spec.margin)).collect();
        let grid: Vec<Vec<SlopeReport>> = knots.par_iter().map(|k| verify_fusion(*k, &spec.qs, spec.margin)).collect();
        named.into_iter().chain(grid).flatten().collect()
    }))
}

fn join(values: &[impl ToString]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// One CSV line per report. Base rows carry the knot's own `a_K`; cable rows
/// the cable's `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub knot: String,
    pub m1: Option<i64>,
    pub m2: Option<i64>,
    pub region: String,
    pub cable: String,
    #[serde(rename = "a_K")]
    pub a: String,
    #[serde(rename = "4a_K")]
    pub four_a: String,
    pub b_pattern: String,
    #[serde(rename = "M1")]
    pub m1_const: String,
    #[serde(rename = "M2max")]
    pub m2max: String,
    #[serde(rename = "conjB_verdict")]
    pub conj_b: &'static str,
    pub slope_verdict: &'static str,
    pub pass: bool,
}

impl ReportRow {
    pub fn new(r: &SlopeReport) -> Self {
        let qp = r.qp.as_ref();
        let a = qp.and_then(|q| q.constant_a()).map(ToString::to_string).unwrap_or_default();
        ReportRow {
            knot: r.knot.clone(),
            m1: r.fusion.map(|k| k.m1),
            m2: r.fusion.map(|k| k.m2),
            region: r.fusion.and_then(|k| region(k).ok()).map(|g| g.to_string()).unwrap_or_default(),
            cable: r.cable.map(|c| c.to_string()).unwrap_or_default(),
            a,
            four_a: join(&r.js.iter().collect::<Vec<_>>()),
            b_pattern: qp.map(|q| join(q.b().values())).unwrap_or_default(),
            m1_const: r.conditions.as_ref().map(|c| c.m1.to_string()).unwrap_or_default(),
            m2max: r.conditions.as_ref().map(|c| c.m2max.to_string()).unwrap_or_default(),
            conj_b: verdict(r.error.is_none() && r.b_nonpositive),
            slope_verdict: verdict(r.error.is_none() && r.containment),
            pass: r.pass(),
        }
    }
}

/// The JSON form of a report, embedding its quasi-polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub knot: String,
    pub cable: Option<String>,
    pub js: Vec<String>,
    pub bs_candidates: Vec<String>,
    pub containment: bool,
    pub b_nonpositive: bool,
    pub b_zero_residues: Vec<usize>,
    pub consistent: bool,
    pub fit_verified: bool,
    pub admission: Option<String>,
    pub exact_admissible: Option<bool>,
    pub quasipoly: Option<QuasiPolyJson>,
    pub error: Option<String>,
    pub pass: bool,
}

impl ReportJson {
    pub fn new(r: &SlopeReport) -> Self {
        let strings = |s: &std::collections::BTreeSet<_>| s.iter().map(ToString::to_string).collect();
        ReportJson {
            knot: r.knot.clone(),
            cable: r.cable.map(|c| c.to_string()),
            js: strings(&r.js),
            bs_candidates: strings(&r.bs_candidates),
            containment: r.containment,
            b_nonpositive: r.b_nonpositive,
            b_zero_residues: r.b_zero_residues.clone(),
            consistent: r.consistent,
            fit_verified: r.fit_verified,
            admission: r.admission.map(|a| a.to_string()),
            exact_admissible: r.exact_admissible,
            quasipoly: r.qp.as_ref().map(QuasiPolyJson::from_qp),
            error: r.error.clone(),
            pass: r.pass(),
        }
    }
}
