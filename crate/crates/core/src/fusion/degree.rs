use super::lattice::{choose, delta_closed};
use super::tables::{i6_divisible, jones_slope_coefficient, linear_term};
use super::{region, Case, FusionError, FusionParams};
use crate::cabling::ClosedForm;
use crate::exactpoly::Rational;

/// An upper bound on the period of `d+[J_K(n)]`: the denominator of the
/// case's center `c`, which also covers the `I6` divisibility condition.
pub fn natural_period_bound(params: FusionParams) -> Result<usize, FusionError> {
    let FusionParams { m1, m2 } = params;
    let bound = match region(params)?.case() {
        Case::A => 2 * (m1 + m2 - 1).abs(),
        Case::B2 => 2 * (1 + m1 + m2).abs(),
        Case::C2 => (2 * m1 + 2 * m2 - 1).abs(),
        Case::B1 | Case::C1 => 1,
    };
    Ok(bound.max(1) as usize)
}

fn d_plus(params: FusionParams, n: u64) -> Result<Rational, FusionError> {
    Ok(delta_closed(params, n - 1)? + Rational::new(n as i64 - 1, 2))
}

/// `d+[J_K(n)]` from the closed forms written out case by case, with the
/// periodic correction `r_{n-1} = k1(n-1) - c(n-1)`.
///
/// In Case C-2 at colors where `(-1 + (1+m2)(n-1)) / (-1 + 2m1 + 2m2)` is an
/// integer this formula omits the constant `-(2 + m2) / (2m1 + 2m2 - 1)`
/// coming from the half-integer correction; see [`fusion_degree`].
pub fn displayed_degree(params: FusionParams, n: u64) -> Result<Rational, FusionError> {
    assert!(n >= 1, "colors start at 1");
    let FusionParams { m1, m2 } = params;
    let case = region(params)?.case();
    let nn = Rational::from(n as i64);
    let r = |n: i64, d: i64| Rational::new(n, d);
    let r_sq = || {
        let choice = choose(params, case, n as i64 - 1).expect("case has a center");
        (Rational::from(choice.k1) - choice.center).pow2()
    };
    let a = jones_slope_coefficient(params)?;
    let b = linear_term(params, n)?;
    let quad = &a * &nn.pow2() + &b * &nn;
    Ok(match case {
        Case::A => {
            let den = 4 * (-1 + m1 + m2);
            quad - (Rational::from(m1 + 2 * m2) + r(1, 2) - r((1 - m1).pow(2), den))
                + Rational::from(1 - m1 - m2) * r_sq()
        }
        Case::B1 => quad - (r(3, 2) + Rational::from(m1 + 2 * m2)),
        Case::B2 => {
            let konst = r(3 + 3 * m1 + 9 * m2, 4) - r((m2 - 1).pow(2), 4 * (1 + m1 + m2));
            quad - konst + Rational::from(-1 - m1 - m2) * r_sq()
        }
        Case::C1 => (r(5, 2) + Rational::from(m1 + 3 * m2)) * (nn - Rational::one()),
        Case::C2 => {
            let den = 2 * m1 + 2 * m2 - 1;
            let konst = r(1, 2) + Rational::from(m1 + 2 * m2) - r((2 * m1 - 5).pow(2), 8 * den);
            quad - konst + (r(1, 2) - Rational::from(m1 + m2)) * r_sq()
        }
    })
}

/// The constant missing from [`displayed_degree`] at `n`.
fn display_offset(params: FusionParams, n: u64) -> Rational {
    let FusionParams { m1, m2 } = params;
    match region(params).map(|r| r.case()) {
        Ok(Case::C2) if i6_divisible(params, n) => Rational::new(-(2 + m2), 2 * m1 + 2 * m2 - 1),
        _ => Rational::zero(),
    }
}

/// The degree function `d+[J_K(n)] = delta_K(n-1) + (n-1)/2` as a
/// quasi-polynomial with tail, found by fitting values of [`delta_closed`]
/// and checked against [`displayed_degree`] at every sampled color.
pub fn fusion_degree(params: FusionParams) -> Result<ClosedForm, FusionError> {
    let period = natural_period_bound(params)?;
    let max_color = 8 * period as u64 + 16;
    let mut values = alloc::vec::Vec::with_capacity(max_color as usize);
    for n in 1..=max_color {
        values.push(d_plus(params, n)?);
    }
    let cf = ClosedForm::fit(|n| values[n as usize - 1].clone(), period, max_color)?;
    for n in 1..=max_color {
        if cf.degree(n) != displayed_degree(params, n)? + display_offset(params, n) {
            return Err(FusionError::DisplayMismatch { n });
        }
    }
    Ok(cf)
}
