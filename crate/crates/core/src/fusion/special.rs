use core::fmt;

use super::FusionParams;
use crate::cabling::{CableParams, ExactKnot};

/// A known identification of `K(m1, m2)` with a simpler knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialForm {
    /// The torus knot `T(2, t)`, `t` odd.
    Torus2 { t: i64 },
    /// The mirror image of `K(m1, m2)`.
    MirrorOf(FusionParams),
}

impl SpecialForm {
    /// `T(2, ±1)` is the unknot.
    pub fn is_trivial(&self) -> bool {
        matches!(self, SpecialForm::Torus2 { t } if t.abs() == 1)
    }

    /// The exactly computable knot, for torus identifications.
    pub fn exact_knot(&self) -> Option<ExactKnot> {
        match *self {
            SpecialForm::Torus2 { t } if t.abs() == 1 => Some(ExactKnot::Unknot),
            SpecialForm::Torus2 { t } => Some(ExactKnot::torus(CableParams::new(t, 2).ok()?)),
            SpecialForm::MirrorOf(_) => None,
        }
    }
}

impl fmt::Display for SpecialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialForm::Torus2 { t } => write!(f, "T(2,{t})"),
            SpecialForm::MirrorOf(k) => write!(f, "mirror of {k}"),
        }
    }
}

/// `K(m1,0) = T(2, 2m1+1)`, `K(m1,-1) = T(2, 2m1-3)`, `K(-1,1) = T(2,5)` and
/// `K(1,m2) = K*(0, -m2-1)`, checked in that order.
pub fn special_forms(params: FusionParams) -> Option<SpecialForm> {
    let FusionParams { m1, m2 } = params;
    match (m1, m2) {
        (_, 0) => Some(SpecialForm::Torus2 { t: 2 * m1 + 1 }),
        (_, -1) => Some(SpecialForm::Torus2 { t: 2 * m1 - 3 }),
        (-1, 1) => Some(SpecialForm::Torus2 { t: 5 }),
        (1, _) => Some(SpecialForm::MirrorOf(FusionParams::new(0, -m2 - 1))),
        _ => None,
    }
}

/// `K(m1, m2)` is the mirror image of `K(1 - m1, -1 - m2)`.
pub fn mirror_partner(params: FusionParams) -> FusionParams {
    FusionParams::new(1 - params.m1, -1 - params.m2)
}
