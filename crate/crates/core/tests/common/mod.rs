#![allow(dead_code)]

use cable_slopes_core::qpoly::QuasiPoly;
use cable_slopes_core::{rat, Rational};

/// `(a, b off 0 mod 3, b on 0 mod 3, d off, d on)` for a period-3 qp.
pub fn period3(a: Rational, b_off: Rational, b_on: Rational, d_off: Rational, d_on: Rational) -> QuasiPoly {
    QuasiPoly::from_residues(
        vec![a.clone(), a.clone(), a],
        vec![b_on, b_off.clone(), b_off],
        vec![d_on, d_off.clone(), d_off],
        1,
    )
    .unwrap()
}

pub fn knot_8_20() -> QuasiPoly {
    period3(rat(2, 3), rat(-1, 2), rat(-5, 6), rat(-1, 6), rat(-1, 2))
}

pub fn knot_9_43() -> QuasiPoly {
    period3(rat(8, 3), rat(-1, 2), rat(-5, 6), rat(-13, 6), rat(-7, 2))
}

pub fn knot_9_44() -> QuasiPoly {
    period3(rat(7, 6), rat(-1, 1), rat(-4, 3), rat(-1, 6), rat(-1, 2))
}
