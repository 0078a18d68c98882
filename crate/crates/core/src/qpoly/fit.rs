use alloc::vec::Vec;

use super::{QpolyError, QuasiPoly};
use crate::exactpoly::Rational;

/// Coefficients `(a, b, d)` of the quadratic through three points.
fn quadratic_through(pts: [(i64, &Rational); 3]) -> (Rational, Rational, Rational) {
    let [(x0, y0), (x1, y1), (x2, y2)] = pts;
    let (fx0, fx1, fx2) = (Rational::from(x0), Rational::from(x1), Rational::from(x2));
    let d01 = (y1 - y0) / (&fx1 - &fx0);
    let d12 = (y2 - y1) / (&fx2 - &fx1);
    let a = (&d12 - &d01) / (&fx2 - &fx0);
    let b = &d01 - &(&a * &(&fx0 + &fx1));
    let d = y0 - &(&a * &fx0.pow2()) - &(&b * &fx0);
    (a, b, d)
}

/// Recovers the quasi-polynomial of least period `<= max_period` that agrees
/// with `samples` on a suffix of at least `4 * max_period` values.
///
/// `samples` must be at consecutive `n`. For each candidate period and each
/// residue class the quadratic through the last three samples of that class
/// is checked against every earlier sample; `valid_from` is the least sampled
/// `n` from which all residue classes agree.
pub fn fit_quasipoly(samples: &[(u64, Rational)], max_period: usize) -> Result<QuasiPoly, QpolyError> {
    let max_period = max_period.max(1);
    let needed = 4 * max_period;
    if samples.len() < needed {
        return Err(QpolyError::InsufficientSamples { needed, got: samples.len() });
    }
    if let Some(w) = samples.windows(2).find(|w| w[1].0 != w[0].0 + 1) {
        return Err(QpolyError::NonConsecutiveSamples { after: w[0].0 });
    }
    let first = samples[0].0;
    let last = samples[samples.len() - 1].0;

    for period in 1..=max_period {
        let mut a = Vec::with_capacity(period);
        let mut b = Vec::with_capacity(period);
        let mut d = Vec::with_capacity(period);
        let mut valid_from = first;
        // Residue r holds the coefficients for n ≡ r (mod period).
        for r in 0..period {
            let class: Vec<&(u64, Rational)> =
                samples.iter().filter(|(n, _)| (*n % period as u64) as usize == r).collect();
            let k = class.len();
            let pts = [class[k - 3], class[k - 2], class[k - 1]].map(|(n, y)| (*n as i64, y));
            let (ca, cb, cd) = quadratic_through(pts);
            let probe = QuasiPoly::polynomial(ca.clone(), cb.clone(), cd.clone(), 1)?;
            if let Some((n, _)) = class.iter().rev().find(|(n, y)| &probe.formula_at(*n) != y) {
                valid_from = valid_from.max(n + 1);
            }
            a.push(ca);
            b.push(cb);
            d.push(cd);
        }
        if last + 1 - valid_from >= needed as u64 {
            return QuasiPoly::from_residues(a, b, d, valid_from);
        }
    }
    Err(QpolyError::NoFit { max_period })
}
