use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{region, Case, FusionError, FusionParams};
use crate::exactpoly::Rational;

fn in_lattice(n: i64, k1: i64, k2: i64) -> bool {
    0 <= k1 && k1 <= n && (n - 2 * k1).abs() <= n + 2 * k2 && n + 2 * k2 <= n + 2 * k1
}

/// `2 Q(n, k1, k2)`, unchecked.
fn twice_q(params: FusionParams, n: i64, k1: i64, k2: i64) -> i128 {
    let (m1, m2) = (params.m1 as i128, params.m2 as i128);
    let (n, k1, k2) = (n as i128, k1 as i128, k2 as i128);
    let mu = (2 * k1 + n).min(2 * k1 + k2 + n).min(k2 + 2 * n);
    let poly = -3 * k1 * k2 - k2 * k2 - k1 * m1 - k1 * k1 * m1 - k2 * m2 - k2 * k2 * m2 - 6 * k1 * n - 3 * k2 * n
        + 2 * m1 * n
        + 4 * m2 * n
        - k2 * m2 * n
        - 2 * n * n
        + m1 * n * n
        + 2 * m2 * n * n;
    k1 - 3 * k1 * k1 + 2 * poly + (1 + 8 * k1 + 4 * k2 + 8 * n) * mu - 3 * mu * mu
}

/// `Q(n, k1, k2)` on the lattice `0 <= k1 <= n`, `|n - 2k1| <= n + 2k2 <= n + 2k1`.
pub fn q_lattice_value(params: FusionParams, n: i64, k1: i64, k2: i64) -> Result<Rational, FusionError> {
    if n < 0 || !in_lattice(n, k1, k2) {
        return Err(FusionError::OutsideLattice { n, k1, k2 });
    }
    Ok(half(twice_q(params, n, k1, k2)))
}

fn half(x: i128) -> Rational {
    Rational::from(num_bigint::BigInt::from(x)) / Rational::from(2i64)
}

/// The integers nearest `c`: one, or two when `c` is a half-integer.
fn nearest(c: &Rational) -> Vec<i64> {
    let f = c.floor().to_i64().expect("nearest integer fits in i64");
    let frac = c.fract_part();
    let half = Rational::new(1, 2);
    if frac == half {
        alloc::vec![f, f + 1]
    } else if frac < half {
        alloc::vec![f]
    } else {
        alloc::vec![f + 1]
    }
}

/// The maximizing `k1` for Cases A, B-2 and C-2, together with the center `c`.
pub(super) struct Choice {
    pub k1: i64,
    pub center: Rational,
}

/// Among the integers nearest `c` that lie in `[lo, hi]`, the one giving the
/// larger `Q`; when none does, `c` clamped into `[lo, hi]`.
fn pick(c: &Rational, lo: i64, hi: i64, value: impl Fn(i64) -> i128) -> i64 {
    let near = nearest(c);
    let inside: Vec<i64> = near.iter().copied().filter(|k| (lo..=hi).contains(k)).collect();
    if inside.is_empty() {
        return near[0].clamp(lo, hi);
    }
    // Both nearest integers sit symmetrically about the vertex, so they agree.
    debug_assert!(inside.len() < 2 || value(inside[0]) == value(inside[1]));
    inside.into_iter().max_by_key(|&k| (value(k), -k)).unwrap()
}

pub(super) fn center(params: FusionParams, case: Case, n: i64) -> Option<Rational> {
    let FusionParams { m1, m2 } = params;
    match case {
        Case::A => Some(Rational::new(1 - m1 + m2 + m2 * n, 2 * (-1 + m1 + m2))),
        Case::B2 => Some(Rational::new(1 - m1 - m2 + (1 + m2) * n, 2 * (1 + m1 + m2))),
        Case::C2 => Some(Rational::new(-3 + 2 * (m1 + m2) + 2 * (1 + m2) * n, 2 * (1 - 2 * m1 - 2 * m2))),
        Case::B1 | Case::C1 => None,
    }
}

pub(super) fn choose(params: FusionParams, case: Case, n: i64) -> Option<Choice> {
    let c = center(params, case, n)?;
    let k1 = match case {
        Case::A => pick(&c, 0, n.div_euclid(2), |k| twice_q(params, n, k, -k)),
        Case::B2 => pick(&c, (n + 1).div_euclid(2), n, |k| twice_q(params, n, k, k - n)),
        Case::C2 => pick(&c, 0, n, |k| twice_q(params, n, k, k)),
        Case::B1 | Case::C1 => unreachable!(),
    };
    Some(Choice { k1, center: c })
}

/// `c3 + 1/2` when `c3` is a half-integer, else zero.
fn c2_correction(c3: &Rational) -> Rational {
    if c3.is_half_odd() {
        c3 + &Rational::new(1, 2)
    } else {
        Rational::zero()
    }
}

/// `delta_K(n)` from the case formulas.
pub fn delta_closed(params: FusionParams, n: u64) -> Result<Rational, FusionError> {
    let case = region(params)?.case();
    let n = n as i64;
    match case {
        Case::B1 => q_lattice_value(params, n, n, 0),
        Case::C1 => q_lattice_value(params, n, n, n),
        Case::A | Case::B2 | Case::C2 => {
            let Choice { k1, center } = choose(params, case, n).unwrap();
            match case {
                Case::A => q_lattice_value(params, n, k1, -k1),
                Case::B2 => q_lattice_value(params, n, k1, k1 - n),
                _ => Ok(q_lattice_value(params, n, k1, k1)? - c2_correction(&center)),
            }
        }
    }
}

/// `delta_K(n)` as the maximum of `Q` over the whole lattice (with the
/// half-integer correction in Case C-2).
pub fn delta_bruteforce(params: FusionParams, n: u64) -> Result<Rational, FusionError> {
    let case = region(params)?.case();
    let n = n as i64;
    let mut best: Option<i128> = None;
    for k1 in 0..=n {
        // Least k2 with n + 2k2 >= |n - 2k1|.
        let lo = ((n - 2 * k1).abs() - n + 1).div_euclid(2);
        for k2 in lo..=k1 {
            let v = twice_q(params, n, k1, k2);
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    }
    let max = half(best.expect("lattice is non-empty"));
    Ok(match case {
        Case::C2 => max - c2_correction(&center(params, case, n).unwrap()),
        _ => max,
    })
}
