//! Verdicts for the two conjectures on degree quasi-polynomials: the linear
//! coefficient is never positive, and every Jones slope `4a` is a boundary
//! slope. Boundary slopes are only known here through candidate sets: `{4a_K}`
//! for a base knot and its image under cabling.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::cabling::{
    admissible, boundary_slopes_cable, cable_quasipoly, cable_quasipoly_unchecked, CableParams, ClosedForm,
};
use crate::exactpoly::Rational;
use crate::fusion::{
    cable_region_membership, fusion_degree, fusion_m_constants, jones_slope_coefficient, linear_term, FusionError,
    FusionParams,
};
use crate::qpoly::{m_constants, QuasiPoly, SlopeConditions};

/// `(b <= 0 at every residue, residues where b = 0)` over the canonical period.
pub fn check_conjecture_b(qp: &QuasiPoly) -> (bool, Vec<usize>) {
    let period = qp.period();
    let b: Vec<&Rational> = (0..period).map(|i| qp.b().at(i as u64)).collect();
    let nonpositive = b.iter().all(|x| !x.is_positive());
    let zeros = (0..period).filter(|&i| b[i].is_zero()).collect();
    (nonpositive, zeros)
}

/// `js ⊆ bs`.
pub fn check_slope(js: &BTreeSet<Rational>, bs: &BTreeSet<Rational>) -> bool {
    js.is_subset(bs)
}

/// How a cable entered a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Admission {
    /// The region's listed cabling condition for 2-fusion knots.
    Listed,
    /// The generic admissibility inequalities with closed-form constants.
    Generic,
}

impl fmt::Display for Admission {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Admission::Listed => "listed",
            Admission::Generic => "generic",
        })
    }
}

/// One line of a sweep: a base knot or one of its cables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeReport {
    pub knot: String,
    /// Set for 2-fusion bases and their cables.
    pub fusion: Option<FusionParams>,
    /// The constants the cables were admitted with.
    pub conditions: Option<SlopeConditions>,
    pub cable: Option<CableParams>,
    pub js: BTreeSet<Rational>,
    pub bs_candidates: BTreeSet<Rational>,
    pub containment: bool,
    pub b_nonpositive: bool,
    pub b_zero_residues: Vec<usize>,
    /// Base: the fitted coefficients equal the tables. Cable: `A ∈ {q^2 a, pq/4}`
    /// and `B ≡ 0` on the right regime.
    pub consistent: bool,
    /// The closed form agrees with an independent fit of the per-n values.
    pub fit_verified: bool,
    pub admission: Option<Admission>,
    /// Whether the cable also passes the admissibility test with the exact
    /// constants of the fitted base quasi-polynomial.
    pub exact_admissible: Option<bool>,
    pub qp: Option<QuasiPoly>,
    pub error: Option<String>,
}

impl SlopeReport {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.containment && self.b_nonpositive && self.consistent && self.fit_verified
    }

    fn failed(knot: String, cable: Option<CableParams>, admission: Option<Admission>, error: String) -> Self {
        SlopeReport {
            knot,
            fusion: None,
            conditions: None,
            cable,
            js: BTreeSet::new(),
            bs_candidates: BTreeSet::new(),
            containment: false,
            b_nonpositive: false,
            b_zero_residues: Vec::new(),
            consistent: false,
            fit_verified: false,
            admission,
            exact_admissible: None,
            qp: None,
            error: Some(error),
        }
    }
}

fn four(x: &Rational) -> Rational {
    x * &Rational::from(4)
}

/// The report for one cable of a base with degree `base` and slope
/// candidates `bs`.
pub fn cable_report(
    knot: &str,
    base: &ClosedForm,
    bs: &BTreeSet<Rational>,
    params: CableParams,
    admission: Admission,
) -> SlopeReport {
    let label = String::from(knot);
    let exact = match m_constants(base.qp()) {
        Ok(sc) => sc,
        Err(e) => return SlopeReport::failed(label, Some(params), Some(admission), format!("{e}")),
    };
    let exact_admissible = admissible(&exact, params).is_some();
    let result = if exact_admissible { cable_quasipoly(base, params) } else { cable_quasipoly_unchecked(base, params) };
    let cq = match result {
        Ok(c) => c,
        Err(e) => {
            let msg = if exact_admissible {
                format!("{e}")
            } else {
                format!("not admissible with the exact constants (M1 = {}, M2max = {}): {e}", exact.m1, exact.m2max)
            };
            let mut r = SlopeReport::failed(label, Some(params), Some(admission), msg);
            r.exact_admissible = Some(exact_admissible);
            return r;
        }
    };
    let big_a = cq.qp.constant_a().cloned().unwrap_or_default();
    let js = BTreeSet::from([four(&big_a)]);
    let bs_cable = boundary_slopes_cable(bs, params);
    let (b_nonpositive, b_zero_residues) = check_conjecture_b(&cq.qp);
    let q2a = Rational::from(params.q() * params.q()) * &exact.a;
    let pq4 = Rational::new(params.pq(), 4);
    let consistent = match cq.regime {
        crate::cabling::Regime::Left => big_a == q2a && cq.qp.b().values().iter().all(Rational::is_negative),
        crate::cabling::Regime::Right => big_a == pq4 && b_zero_residues.len() == cq.qp.period(),
    };
    SlopeReport {
        knot: label,
        fusion: None,
        conditions: None,
        cable: Some(params),
        containment: check_slope(&js, &bs_cable),
        js,
        bs_candidates: bs_cable,
        b_nonpositive,
        b_zero_residues,
        consistent,
        fit_verified: cq.fit_verified,
        admission: Some(admission),
        exact_admissible: Some(exact_admissible),
        qp: Some(cq.qp),
        error: None,
    }
}

/// Cables `(p,q)` with `p` within `margin` of either admissibility threshold,
/// in ascending `(q, p)` order. Both sides of each threshold are included;
/// callers filter by their admission rule.
pub fn threshold_cables(sc: &SlopeConditions, qs: &[i64], margin: i64) -> Vec<CableParams> {
    let mut out = BTreeSet::new();
    for &q in qs {
        let qr = Rational::from(q);
        let lower = sc.lower_threshold() * &qr;
        let upper = sc.upper_threshold() * &qr + &sc.m2max;
        for t in [lower, upper] {
            let lo = t.floor().to_i64().unwrap_or(i64::MIN / 2) - margin;
            let hi = t.ceil().to_i64().unwrap_or(i64::MAX / 2) + margin;
            for p in lo..=hi {
                if let Ok(c) = CableParams::new(p, q) {
                    out.insert((q, p, c));
                }
            }
        }
    }
    out.into_iter().map(|(_, _, c)| c).collect()
}

/// A base knot given by its degree quasi-polynomial: its own report and
/// those of the cables passing the generic admissibility test with the
/// quasi-polynomial's constants. `bs = {4a}`.
pub fn verify_closed_form(knot: &str, base: &ClosedForm, qs: &[i64], margin: i64) -> Vec<SlopeReport> {
    let label = String::from(knot);
    let Some(a) = base.qp().constant_a() else {
        let mut r = SlopeReport::failed(label, None, None, format!("{}", crate::qpoly::QpolyError::NonConstantSlope));
        r.qp = Some(base.qp().clone());
        return alloc::vec![r];
    };
    let js = BTreeSet::from([four(a)]);
    let (b_nonpositive, b_zero_residues) = check_conjecture_b(base.qp());
    let mut reports = alloc::vec![SlopeReport {
        knot: label,
        fusion: None,
        conditions: None,
        cable: None,
        containment: true,
        bs_candidates: js.clone(),
        js: js.clone(),
        b_nonpositive,
        b_zero_residues,
        consistent: true,
        fit_verified: true,
        admission: None,
        exact_admissible: None,
        qp: Some(base.qp().clone()),
        error: None,
    }];
    // Cables need b <= 0; a positive b has already failed the base report.
    let Ok(sc) = m_constants(base.qp()) else { return reports };
    for c in threshold_cables(&sc, qs, margin) {
        if admissible(&sc, c).is_some() {
            reports.push(cable_report(knot, base, &js, c, Admission::Generic));
        }
    }
    for r in &mut reports {
        r.conditions = Some(sc.clone());
    }
    reports
}

fn fusion_base_report(params: FusionParams) -> Result<(SlopeReport, ClosedForm), FusionError> {
    let cf = fusion_degree(params)?;
    let a_table = jones_slope_coefficient(params)?;
    let qp = cf.qp();
    let period = qp.period() as u64;
    let mut b_matches = true;
    for r in 0..period {
        // Any color in the residue class works; pick one past valid_from.
        let n = qp.valid_from() + (r + period - qp.valid_from() % period) % period;
        b_matches &= qp.b().at(n) == &linear_term(params, n)?;
    }
    let js = BTreeSet::from([four(qp.constant_a().unwrap_or(&Rational::zero()))]);
    let bs = BTreeSet::from([four(&a_table)]);
    let (b_nonpositive, b_zero_residues) = check_conjecture_b(qp);
    let report = SlopeReport {
        knot: format!("{params}"),
        fusion: Some(params),
        conditions: None,
        cable: None,
        containment: check_slope(&js, &bs),
        consistent: qp.constant_a() == Some(&a_table) && b_matches,
        js,
        bs_candidates: bs,
        b_nonpositive,
        b_zero_residues,
        fit_verified: true,
        admission: None,
        exact_admissible: None,
        qp: Some(qp.clone()),
        error: None,
    };
    Ok((report, cf))
}

/// Reports for `K(m1, m2)` and its cables near the admissibility thresholds.
///
/// Cables are admitted by the listed condition for the knot's region, or by
/// the generic inequalities with the closed-form constants where no
/// condition is listed.
pub fn verify_fusion(params: FusionParams, qs: &[i64], margin: i64) -> Vec<SlopeReport> {
    let label = format!("{params}");
    let (base, cf) = match fusion_base_report(params) {
        Ok(x) => x,
        Err(e) => {
            let mut r = SlopeReport::failed(label, None, None, format!("{e}"));
            r.fusion = Some(params);
            return alloc::vec![r];
        }
    };
    let sc = match fusion_m_constants(params) {
        Ok(sc) => sc,
        Err(e) => {
            let mut r = SlopeReport::failed(label, None, None, format!("{e}"));
            r.fusion = Some(params);
            return alloc::vec![r];
        }
    };
    let bs = base.bs_candidates.clone();
    let mut reports = alloc::vec![base];
    for c in threshold_cables(&sc, qs, margin) {
        let admission = match cable_region_membership(params, c) {
            Ok(true) => Some(Admission::Listed),
            Ok(false) => None,
            Err(FusionError::Unspecified { .. }) => admissible(&sc, c).map(|_| Admission::Generic),
            Err(e) => {
                reports.push(SlopeReport::failed(label.clone(), Some(c), None, format!("{e}")));
                continue;
            }
        };
        if let Some(admission) = admission {
            reports.push(cable_report(&label, &cf, &bs, c, admission));
        }
    }
    for r in &mut reports {
        r.fusion = Some(params);
        r.conditions = Some(sc.clone());
    }
    reports
}

/// A rectangular grid of 2-fusion knots, with the cable `q` values and the
/// distance of `p` from each threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub m1: (i64, i64),
    pub m2: (i64, i64),
    pub qs: Vec<i64>,
    pub margin: i64,
}

impl GridSpec {
    /// `m1, m2 ∈ [-4, 4]`, `q ∈ {2, 3}`, `p` within 3 of each threshold.
    pub fn standard() -> Self {
        GridSpec { m1: (-4, 4), m2: (-4, 4), qs: alloc::vec![2, 3], margin: 3 }
    }

    pub fn empty() -> Self {
        GridSpec { m1: (0, -1), m2: (0, -1), qs: Vec::new(), margin: 0 }
    }

    /// Non-degenerate knots in ascending `(m1, m2)` order.
    pub fn knots(&self) -> Vec<FusionParams> {
        let mut out = Vec::new();
        for m1 in self.m1.0..=self.m1.1 {
            for m2 in self.m2.0..=self.m2.1 {
                let p = FusionParams::new(m1, m2);
                if !p.is_degenerate() {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// All reports of a grid, in ascending `(m1, m2)` order.
pub fn verify_grid(spec: &GridSpec) -> Vec<SlopeReport> {
    spec.knots().into_iter().flat_map(|k| verify_fusion(k, &spec.qs, spec.margin)).collect()
}
