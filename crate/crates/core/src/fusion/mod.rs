//! The 2-fusion knots `K(m1, m2)`: the lattice function `Q(n, k1, k2)` whose
//! maximum governs the highest degree, the case-by-case closed forms, and the
//! slope, linear-term and cabling tables that follow from them.
//!
//! For `n > 0`, `d+[J_K(n)] = delta_K(n-1) + (n-1)/2`.

mod degree;
mod lattice;
mod special;
mod tables;

use core::fmt;

use crate::cabling::CablingError;

pub use degree::{displayed_degree, fusion_degree, natural_period_bound};
pub use lattice::{delta_bruteforce, delta_closed, q_lattice_value};
pub use special::{mirror_partner, special_forms, SpecialForm};
pub use tables::{cable_region_membership, fusion_m_constants, jones_slope_coefficient, linear_term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FusionError {
    #[error("m2 = {m2} is a torus-knot case; use special_forms")]
    DegenerateM2 { m2: i64 },
    #[error("(n, k1, k2) = ({n}, {k1}, {k2}) is outside the lattice")]
    OutsideLattice { n: i64, k1: i64, k2: i64 },
    #[error("no cabling condition is listed for region {region}")]
    Unspecified { region: Region },
    #[error("fitted degree disagrees with the displayed closed form at n = {n}")]
    DisplayMismatch { n: u64 },
    #[error(transparent)]
    Cabling(#[from] CablingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionParams {
    pub m1: i64,
    pub m2: i64,
}

impl FusionParams {
    pub fn new(m1: i64, m2: i64) -> Self {
        FusionParams { m1, m2 }
    }

    /// True for `m2 ∈ {-1, 0}`, where the knot is a torus knot.
    pub fn is_degenerate(&self) -> bool {
        self.m2 == 0 || self.m2 == -1
    }

    fn check(&self) -> Result<(), FusionError> {
        if self.is_degenerate() {
            Err(FusionError::DegenerateM2 { m2: self.m2 })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for FusionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.m1, self.m2)
    }
}

/// The six parameter regions for `m2 ∉ {-1, 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// `m2 >= 1`, `m1 >= 2`
    I1,
    /// `m2 >= 1`, `m1 = 1`
    I2,
    /// `m2 >= 1`, `m1 < -(m2+1)/2`
    I3,
    /// `m2 >= 1`, `0 >= m1 >= -(m2+1)/2`
    I4,
    /// `m2 <= -2`, `m1 <= -3 m2 / 2`
    I5,
    /// `m2 <= -2`, `m1 > -3 m2 / 2`
    I6,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::I1 => "I1",
            Region::I2 => "I2",
            Region::I3 => "I3",
            Region::I4 => "I4",
            Region::I5 => "I5",
            Region::I6 => "I6",
        };
        f.write_str(s)
    }
}

pub fn region(params: FusionParams) -> Result<Region, FusionError> {
    params.check()?;
    let FusionParams { m1, m2 } = params;
    Ok(if m2 >= 1 {
        if m1 >= 2 {
            Region::I1
        } else if m1 == 1 {
            Region::I2
        } else if 2 * m1 >= -(m2 + 1) {
            Region::I4
        } else {
            Region::I3
        }
    } else if 2 * m1 <= -3 * m2 {
        Region::I5
    } else {
        Region::I6
    })
}

/// Which maximizer describes `delta_K(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `Q(n, k1, -k1)`, `k1` nearest `c1` with `k1 <= n/2`.
    A,
    /// `Q(n, n, 0)`.
    B1,
    /// `Q(n, k1, k1 - n)`, `k1` nearest `c2`.
    B2,
    /// `Q(n, n, n)`.
    C1,
    /// `Q(n, k1, k1)`, `k1` nearest `c3`, less `c3 + 1/2` when `c3` is a half-integer.
    C2,
}

impl Region {
    pub fn case(self) -> Case {
        match self {
            Region::I1 | Region::I2 => Case::A,
            Region::I3 => Case::B1,
            Region::I4 => Case::B2,
            Region::I5 => Case::C1,
            Region::I6 => Case::C2,
        }
    }
}
