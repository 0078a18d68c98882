use super::{region, FusionError, FusionParams, Region};
use crate::cabling::CableParams;
use crate::exactpoly::Rational;
use crate::qpoly::SlopeConditions;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn int(n: i64) -> Rational {
    Rational::from(n)
}

/// `a_K`, the constant quadratic coefficient of `d+[J_K(n)]`; the Jones slope
/// is `4 a_K`.
pub fn jones_slope_coefficient(params: FusionParams) -> Result<Rational, FusionError> {
    let FusionParams { m1, m2 } = params;
    Ok(match region(params)? {
        Region::I1 | Region::I2 => int(m1 + 2 * m2) + r(1, 2) + r(m2 * m2, 4 * (-1 + m1 + m2)),
        Region::I3 => r(1, 2) + int(2 * m2),
        Region::I4 => r(3 + 3 * m1 + 9 * m2, 4) + r(m1 * m1, 4 * (1 + m1 + m2)),
        Region::I5 => Rational::zero(),
        Region::I6 => r((2 * m1 + 3 * m2).pow(2), 2 * (-1 + 2 * m1 + 2 * m2)),
    })
}

/// True when `(-1 + (1 + m2)(n - 1)) / (-1 + 2 m1 + 2 m2)` is an integer.
pub(super) fn i6_divisible(params: FusionParams, n: u64) -> bool {
    let FusionParams { m1, m2 } = params;
    let num = -1 + (1 + m2) * (n as i64 - 1);
    num.rem_euclid(-1 + 2 * m1 + 2 * m2) == 0
}

/// `b_K(n)`, the linear coefficient of `d+[J_K(n)]`.
pub fn linear_term(params: FusionParams, n: u64) -> Result<Rational, FusionError> {
    let FusionParams { m1, m2 } = params;
    Ok(match region(params)? {
        Region::I1 | Region::I2 => r(m2 * (1 - m1), 2 * (-1 + m1 + m2)),
        Region::I3 => int(1 + m1),
        Region::I4 => r(m1 * (m2 - 1), 2 * (1 + m1 + m2)),
        Region::I5 => r(5, 2) + int(m1 + 3 * m2),
        Region::I6 => {
            let c = if i6_divisible(params, n) { -3 } else { -5 };
            r((c + 2 * m1) * (1 + m2), 2 * (-1 + 2 * m1 + 2 * m2))
        }
    })
}

/// `M1` and `max{0, M2}` in closed form, with `a = a_K`.
///
/// In `I6`, `M1 = -(1 + m2) / (-1 + 2 m1 + 2 m2)`: the difference of the two
/// linear coefficients, which is positive since `m2 <= -2`.
pub fn fusion_m_constants(params: FusionParams) -> Result<SlopeConditions, FusionError> {
    let FusionParams { m1, m2 } = params;
    let a = jones_slope_coefficient(params)?;
    let zero = Rational::zero();
    let (big_m1, m2max) = match region(params)? {
        Region::I1 => (zero.clone(), r((1 - m1 + m2).pow(2), 4 * (m1 + m2 - 1))),
        Region::I2 => (zero.clone(), r(3 * m2, 4)),
        Region::I3 | Region::I5 => (zero.clone(), zero.clone()),
        Region::I4 => (zero.clone(), (r(m1 + m2 - 1, 4) + r(m1 * (m2 - 1), m1 + m2 + 1)).max(zero.clone())),
        Region::I6 => {
            let den = 2 * m1 + 2 * m2 - 1;
            let m2v = r(den, 8) + r((2 * m1 - 6) * (m2 + 1), den);
            (r(-(1 + m2), den), m2v.max(zero.clone()))
        }
    };
    Ok(SlopeConditions { a, m1: big_m1, m2max })
}

/// Whether `(p,q)` lies in the admissible cabling region listed for the
/// knot's region. `I3` and `I5` have no listed condition.
pub fn cable_region_membership(params: FusionParams, pq: CableParams) -> Result<bool, FusionError> {
    let FusionParams { m1, m2 } = params;
    let p = int(pq.p());
    let q = int(pq.q());
    let zero = Rational::zero();
    let two_sided = |lower: Rational, upper: Rational, bound: Rational| {
        (&p - &(lower * &q)).is_negative() || &p - &(upper * &q) > bound
    };
    Ok(match region(params)? {
        Region::I1 => {
            let t = int(4 * m1 + 8 * m2 + 2) + r(m2 * m2, m1 + m2 - 1);
            two_sided(t.clone(), t, r((1 - m1 + m2).pow(2), 4 * (m1 + m2 - 1)))
        }
        Region::I2 => {
            let t = int(9 * m2 + 6);
            two_sided(t.clone(), t, r(3 * m2, 4))
        }
        Region::I4 => {
            let t = int(3 * m1 + 9 * m2 + 3) + r(m1 * m1, m1 + m2 + 1);
            let bound = (r(m1 + m2 - 1, 4) + r(m1 * (m2 - 1), m1 + m2 + 1)).max(zero);
            two_sided(t.clone(), t, bound)
        }
        Region::I6 => {
            let den = 2 * m1 + 2 * m2 - 1;
            let sq = 2 * (2 * m1 + 3 * m2).pow(2);
            let bound = (r(den, 8) + r((2 * m1 - 6) * (m2 + 1), den)).max(zero);
            two_sided(r(sq + m2 + 1, den), r(sq - (m2 + 1), den), bound)
        }
        region @ (Region::I3 | Region::I5) => return Err(FusionError::Unspecified { region }),
    })
}
