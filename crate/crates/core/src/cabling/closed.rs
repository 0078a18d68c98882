use alloc::vec::Vec;

use num_integer::Integer;

use super::certificate::{CertificateScanner, MaxCertificate};
use super::provider::{ClosedForm, DegreeProvider};
use super::{admissible, AdmissibleBranch, CableParams, CablingError};
use crate::exactpoly::Rational;
use crate::qpoly::{fit_quasipoly, m_constants, QuasiPoly, SlopeConditions};

/// Which side of `p = 4qa` the cable lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `p - 4qa < 0`: the maximizer drifts with `n` and `A = q^2 a`.
    Left,
    /// `p - 4qa > 0`: the maximizer stays bounded, `A = pq/4` and `B = 0`.
    Right,
}

/// The degree quasi-polynomial of a cable, with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableQuasiPoly {
    pub qp: QuasiPoly,
    pub regime: Regime,
    /// `None` when the cable was computed without the admissibility check
    /// and fails it.
    pub branch: Option<AdmissibleBranch>,
    pub conditions: SlopeConditions,
    /// Period of the maximizer data `(sign, offset, color residue)` in `n`.
    pub maximizer_period: usize,
    /// Whether an independent fit of the certified degrees over eight
    /// periods reproduces `qp`.
    pub fit_verified: bool,
}

impl CableQuasiPoly {
    /// `4A`, the candidate Jones slope of the cable.
    pub fn four_a(&self) -> Option<Rational> {
        self.qp.constant_a().map(|a| a * &Rational::from(4))
    }
}

/// The degree quasi-polynomial of the `(p,q)`-cable of a knot whose degree
/// is `base`. Fails with `NotAdmissible` unless `(p,q)` satisfies one of the
/// admissibility inequalities.
pub fn cable_quasipoly(base: &ClosedForm, params: CableParams) -> Result<CableQuasiPoly, CablingError> {
    let sc = m_constants(base.qp())?;
    if admissible(&sc, params).is_none() {
        return Err(CablingError::NotAdmissible { p: params.p(), q: params.q() });
    }
    build(base, params, sc)
}

/// As [`cable_quasipoly`] but without the admissibility check; the result is
/// only returned once the per-n maximizers have been seen to stabilize and
/// the closed form reproduces every certified degree it covers.
pub fn cable_quasipoly_unchecked(base: &ClosedForm, params: CableParams) -> Result<CableQuasiPoly, CablingError> {
    let sc = m_constants(base.qp())?;
    build(base, params, sc)
}

/// Maximizer data that determines the closed form at `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Shape {
    /// `k = eps (n/2 + s)`; `twice_s = 2s`; `residue = color mod period`.
    Drift { eps: i64, twice_s: i64, residue: u64 },
    /// `k = s`, stored as `2s`.
    Fixed { twice_k: i64 },
}

fn shape(cert: &MaxCertificate, params: CableParams, regime: Regime, base_period: u64) -> Option<Shape> {
    let k2 = cert.argmax.twice();
    match regime {
        Regime::Right => Some(Shape::Fixed { twice_k: k2 }),
        Regime::Left => {
            let eps = k2.signum();
            if eps == 0 {
                return None;
            }
            Some(Shape::Drift { eps, twice_s: eps * k2 - cert.n as i64, residue: cert.color(params) % base_period })
        }
    }
}

/// `(B, D)` at one residue of the cable quasi-polynomial.
fn coefficients(shape: &Shape, base: &ClosedForm, params: CableParams, sc: &SlopeConditions) -> (Rational, Rational) {
    let p = Rational::from(params.p());
    let q = Rational::from(params.q());
    let minus_pq_4 = -Rational::new(params.pq(), 4);
    match *shape {
        Shape::Drift { eps, twice_s, residue } => {
            let e = Rational::from(eps);
            let s = Rational::new(twice_s, 2);
            let half_e = Rational::new(eps, 2);
            let bi = base.qp().b().at(residue).clone();
            let di = base.qp().d().at(residue).clone();
            let x = -p + Rational::from(4) * &q * &sc.a;
            let big_b = &x * &(&q * &s + &half_e) + &q * &bi;
            let big_d =
                minus_pq_4 + &x * &s * (&q * &s + &e) + Rational::from(2) * &q * &bi * &s + &sc.a + &bi * &e + di;
            (big_b, big_d)
        }
        Shape::Fixed { twice_k } => {
            let s = Rational::new(twice_k, 2);
            let color = (params.q() * twice_k + 1).unsigned_abs();
            let big_d = minus_pq_4 - &p * &s * (&q * &s + Rational::one()) + base.degree(color);
            (Rational::zero(), big_d)
        }
    }
}

/// Least period `P <= max` of `seq`, if one exists.
fn least_period<T: PartialEq>(seq: &[T], max: usize) -> Option<usize> {
    (1..=max).find(|&per| (per..seq.len()).all(|i| seq[i] == seq[i - per]))
}

fn build(base: &ClosedForm, params: CableParams, sc: SlopeConditions) -> Result<CableQuasiPoly, CablingError> {
    let x = Rational::from(params.p()) - Rational::from(4 * params.q()) * &sc.a;
    let regime = match x.signum() {
        -1 => Regime::Left,
        1 => Regime::Right,
        _ => return Err(CablingError::DegenerateRegime),
    };
    let branch = admissible(&sc, params);
    let base_period = base.qp().period() as u64;
    let provider = DegreeProvider::from(base.clone());
    let window = (4 * (base_period.lcm(&2)) * params.q() as u64).max(16);

    let mut last_n = 0;
    for attempt in 0..4u32 {
        let n0 = (window << attempt).max(base.qp().valid_from());
        let max_n = n0 + 4 * window;
        last_n = max_n;
        let scanner = CertificateScanner::new(&provider, params, max_n)?;
        let certs: Vec<MaxCertificate> = (1..=max_n).map(|n| scanner.scan(n)).collect();
        let cert = |n: u64| &certs[n as usize - 1];

        let shapes: Option<Vec<Shape>> =
            (n0..n0 + 2 * window).map(|n| shape(cert(n), params, regime, base_period)).collect();
        let Some(shapes) = shapes else { continue };
        let Some(per) = least_period(&shapes, window as usize) else { continue };

        // Residue r of the result holds n ≡ r (mod per).
        let mut bs = alloc::vec![Rational::zero(); per];
        let mut ds = alloc::vec![Rational::zero(); per];
        for (i, sh) in shapes.iter().take(per).enumerate() {
            let r = ((n0 + i as u64) % per as u64) as usize;
            let (b, d) = coefficients(sh, base, params, &sc);
            bs[r] = b;
            ds[r] = d;
        }
        let a = match regime {
            Regime::Left => Rational::from(params.q() * params.q()) * &sc.a,
            Regime::Right => Rational::new(params.pq(), 4),
        };
        let qp = QuasiPoly::from_residues(alloc::vec![a; per], bs, ds, n0)?;

        let agrees = |n: u64| cert(n).degree(params).as_ref() == Some(&qp.formula_at(n));
        if !(n0..=max_n).all(agrees) {
            continue;
        }
        let mut valid_from = n0;
        while valid_from > 1 && agrees(valid_from - 1) {
            valid_from -= 1;
        }
        let qp = qp.with_valid_from(valid_from);

        let span = 8 * per as u64;
        let samples: Vec<(u64, Rational)> = (valid_from..valid_from + span.max(4 * per as u64))
            .filter(|&n| n <= max_n)
            .map(|n| (n, cert(n).degree(params).expect("checked above")))
            .collect();
        let fit_verified = fit_quasipoly(&samples, per).map_or(false, |f| f == qp);

        return Ok(CableQuasiPoly { qp, regime, branch, conditions: sc, maximizer_period: per, fit_verified });
    }
    Err(CablingError::StabilizationFailure { last_n })
}
