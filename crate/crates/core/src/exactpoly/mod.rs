//! Exact arithmetic substrate: reduced rationals and Laurent polynomials in
//! quarter powers of `v`.

mod laurent;
mod rational;

pub use laurent::{ParsePolyError, QuarterLaurent, ZeroPolynomial};
pub use rational::{rat, ParseRationalError, Rational};

/// Sum of two polynomials.
pub fn laurent_add(f: &QuarterLaurent, g: &QuarterLaurent) -> QuarterLaurent {
    f + g
}

/// Product of two polynomials.
pub fn laurent_mul(f: &QuarterLaurent, g: &QuarterLaurent) -> QuarterLaurent {
    f * g
}

pub fn degree_hi(f: &QuarterLaurent) -> Result<Rational, ZeroPolynomial> {
    f.degree_hi()
}

pub fn degree_lo(f: &QuarterLaurent) -> Result<Rational, ZeroPolynomial> {
    f.degree_lo()
}
