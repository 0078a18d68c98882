use alloc::boxed::Box;
use alloc::vec::Vec;

use super::{sample_set, CableParams};
use crate::exactpoly::QuarterLaurent;

/// Anything that can produce the colored Jones polynomial `J(color)` for
/// colors `>= 1`.
pub trait ColoredJones {
    fn jones(&self, color: u64) -> QuarterLaurent;
}

/// Knots whose colored Jones polynomials are computed exactly by iterated
/// cabling of the unknot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactKnot {
    /// `J(m) = [m]`.
    Unknot,
    Cable {
        base: Box<ExactKnot>,
        params: CableParams,
    },
    /// The mirror image, `v -> v^-1`.
    Mirror(Box<ExactKnot>),
}

impl ExactKnot {
    /// The torus knot `T(p,q)` as the `(p,q)`-cable of the unknot.
    pub fn torus(params: CableParams) -> Self {
        ExactKnot::Cable { base: Box::new(ExactKnot::Unknot), params }
    }

    pub fn cable(self, params: CableParams) -> Self {
        ExactKnot::Cable { base: Box::new(self), params }
    }

    pub fn mirror(self) -> Self {
        match self {
            ExactKnot::Mirror(k) => *k,
            k => ExactKnot::Mirror(Box::new(k)),
        }
    }

    /// All `J(1..=max_color)`, sharing work between colors.
    pub fn table(&self, max_color: u64) -> Vec<QuarterLaurent> {
        match self {
            ExactKnot::Unknot => (1..=max_color as i64).map(QuarterLaurent::quantum_integer).collect(),
            ExactKnot::Mirror(k) => k.table(max_color).iter().map(QuarterLaurent::mirror).collect(),
            ExactKnot::Cable { base, params } => {
                let need = max_base_color(*params, max_color);
                let inner = SliceJones(base.table(need));
                (1..=max_color).map(|n| cable_exact(&inner, *params, n)).collect()
            }
        }
    }
}

impl ColoredJones for ExactKnot {
    fn jones(&self, color: u64) -> QuarterLaurent {
        match self {
            ExactKnot::Unknot => QuarterLaurent::quantum_integer(color as i64),
            ExactKnot::Mirror(k) => k.jones(color).mirror(),
            ExactKnot::Cable { base, params } => cable_exact(base.as_ref(), *params, color),
        }
    }
}

/// Largest base color that the cable sum at `n <= max_color` touches.
fn max_base_color(params: CableParams, max_color: u64) -> u64 {
    params.q() as u64 * max_color.saturating_sub(1) + 1
}

struct SliceJones(Vec<QuarterLaurent>);

impl ColoredJones for SliceJones {
    fn jones(&self, color: u64) -> QuarterLaurent {
        self.0[color as usize - 1].clone()
    }
}

/// A knot together with its precomputed `J(1..=max_color)`; colors past the
/// table are computed on demand.
#[derive(Debug, Clone)]
pub struct JonesTable {
    knot: ExactKnot,
    polys: Vec<QuarterLaurent>,
}

impl JonesTable {
    pub fn new(knot: ExactKnot, max_color: u64) -> Self {
        let polys = knot.table(max_color);
        JonesTable { knot, polys }
    }

    pub fn knot(&self) -> &ExactKnot {
        &self.knot
    }

    pub fn max_color(&self) -> u64 {
        self.polys.len() as u64
    }

    pub fn get(&self, color: u64) -> Option<&QuarterLaurent> {
        color.checked_sub(1).and_then(|i| self.polys.get(i as usize))
    }
}

impl ColoredJones for JonesTable {
    fn jones(&self, color: u64) -> QuarterLaurent {
        match self.get(color) {
            Some(p) => p.clone(),
            None => self.knot.jones(color),
        }
    }
}

/// The `n`-colored Jones polynomial of the `(p,q)`-cable of `base`, by the
/// cabling sum.
pub fn cable_exact<J: ColoredJones + ?Sized>(base: &J, params: CableParams, n: u64) -> QuarterLaurent {
    let (p, q) = (params.p(), params.q());
    let n2 = n as i64 * n as i64;
    let mut out = QuarterLaurent::zero();
    for k in sample_set(n) {
        let k2 = k.twice();
        // 2qk + 1, and the exponents in quarter units.
        let color = q * k2 + 1;
        let shift = p * q * (n2 - 1) - p * k2 * (q * k2 + 2);
        let poly = base.jones(color.unsigned_abs());
        out.add_shifted(&poly, shift, color < 0);
    }
    out
}
