//! Degree quasi-polynomials of colored Jones polynomials under cabling.
//!
//! Everything here is exact: rationals are arbitrary precision, polynomials
//! carry integer coefficients, and no floating point is used anywhere.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod cabling;
pub mod conjectures;
pub mod exactpoly;
pub mod fusion;
pub mod qpoly;

pub use exactpoly::{rat, QuarterLaurent, Rational};
