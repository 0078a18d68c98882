//! The cabling engine for `(p,q)`-cables:
//!
//! ```text
//! J_{K_{p,q}}(n) = v^{pq(n^2-1)/4} * sum_{k in S_n} v^{-pk(qk+1)} J_K(2qk+1),  J_K(-m) = -J_K(m)
//! ```
//!
//! evaluated either literally on exact polynomials ([`cable_exact`]) or at
//! the level of highest degrees ([`cable_degree_per_n`]), where the top
//! degree of the sum is certified by a unique maximal summand.

mod certificate;
mod closed;
mod exact;
mod provider;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::exactpoly::Rational;
use crate::qpoly::{QpolyError, SlopeConditions};

pub use certificate::{cable_degree_per_n, CertificateScanner, MaxCertificate};
pub use closed::{cable_quasipoly, cable_quasipoly_unchecked, CableQuasiPoly, Regime};
pub use exact::{cable_exact, ColoredJones, ExactKnot, JonesTable};
pub use provider::{ClosedForm, DegreeProvider};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CablingError {
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("q = {q} is not a non-trivial cable; use the reversed cable K(-p,-q) = rK(p,q) so that q > 1")]
    TrivialOrNegativeQ { q: i64 },
    #[error("(p,q) = ({p},{q}) satisfies neither admissibility condition")]
    NotAdmissible { p: i64, q: i64 },
    #[error("p - 4qa = 0, so no cabling regime applies")]
    DegenerateRegime,
    #[error("per-n maximizers did not stabilize by n = {last_n}")]
    StabilizationFailure { last_n: u64 },
    #[error("base degree at color 1 is {found}, expected 0")]
    NormalizationViolated { found: Rational },
    #[error("tail table must hold the degrees for colors 1..{valid_from} ({expected} values), got {got}")]
    TailLength { valid_from: u64, expected: usize, got: usize },
    #[error("degree of a zero polynomial at color {color}")]
    ZeroJones { color: u64 },
    #[error("scaled degrees overflow machine integers")]
    Overflow,
    #[error(transparent)]
    Qpoly(#[from] QpolyError),
}

/// Parameters of a non-trivial `(p,q)`-cable: `gcd(p,q) = 1` and `q > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CableParams {
    p: i64,
    q: i64,
}

impl CableParams {
    pub fn new(p: i64, q: i64) -> Result<Self, CablingError> {
        if q <= 1 {
            return Err(CablingError::TrivialOrNegativeQ { q });
        }
        if p.gcd(&q) != 1 {
            return Err(CablingError::NotCoprime { p, q });
        }
        Ok(CableParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn pq(&self) -> i64 {
        self.p * self.q
    }
}

impl fmt::Display for CableParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.0, 2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_rational(), f)
    }
}

/// `S_n`: all `k` with `|k| <= (n-1)/2`, integers for odd `n` and
/// half-integers for even `n`, in ascending order.
pub fn sample_set(n: u64) -> Vec<HalfInt> {
    assert!(n >= 1, "colors start at 1");
    let m = n as i64 - 1;
    (0..n as i64).map(|j| HalfInt(-m + 2 * j)).collect()
}

/// Which admissibility inequality holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdmissibleBranch {
    /// `p - (4a - M1) q < 0`
    Left,
    /// `p - (4a + M1) q > max{0, M2}`
    Right,
}

/// Returns the branch that makes `(p,q)` admissible, if any.
pub fn admissible(sc: &SlopeConditions, pq: CableParams) -> Option<AdmissibleBranch> {
    let p = Rational::from(pq.p);
    let q = Rational::from(pq.q);
    if (&p - &(sc.lower_threshold() * &q)).is_negative() {
        Some(AdmissibleBranch::Left)
    } else if &p - &(sc.upper_threshold() * &q) > sc.m2max {
        Some(AdmissibleBranch::Right)
    } else {
        None
    }
}

/// `q^2 bs ∪ {pq}`.
pub fn boundary_slopes_cable(bs: &BTreeSet<Rational>, pq: CableParams) -> BTreeSet<Rational> {
    let q2 = Rational::from(pq.q * pq.q);
    bs.iter().map(|s| s * &q2).chain(core::iter::once(Rational::from(pq.pq()))).collect()
}
