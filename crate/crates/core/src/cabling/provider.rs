use alloc::vec::Vec;

use super::exact::{ColoredJones, ExactKnot, JonesTable};
use super::CablingError;
use crate::exactpoly::Rational;
use crate::qpoly::{fit_quasipoly, QuasiPoly};

/// A degree function given by a quasi-polynomial from `valid_from` on and an
/// explicit table below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    qp: QuasiPoly,
    tail: Vec<Rational>,
}

impl ClosedForm {
    /// `tail[i]` is the degree at color `i + 1`, for every color below
    /// `qp.valid_from()`. The degree at color 1 must be 0.
    pub fn new(qp: QuasiPoly, tail: Vec<Rational>) -> Result<Self, CablingError> {
        let expected = (qp.valid_from() - 1) as usize;
        if tail.len() != expected {
            return Err(CablingError::TailLength { valid_from: qp.valid_from(), expected, got: tail.len() });
        }
        let cf = ClosedForm { qp, tail };
        let d1 = cf.degree(1);
        if !d1.is_zero() {
            return Err(CablingError::NormalizationViolated { found: d1 });
        }
        Ok(cf)
    }

    /// A quasi-polynomial valid for every color.
    pub fn from_qp(qp: QuasiPoly) -> Result<Self, CablingError> {
        Self::new(qp, Vec::new())
    }

    /// Fits the degrees at colors `1..=max_color` and keeps the values below
    /// the fitted validity threshold as the tail.
    pub fn fit(degree: impl Fn(u64) -> Rational, max_period: usize, max_color: u64) -> Result<Self, CablingError> {
        let samples: Vec<(u64, Rational)> = (1..=max_color).map(|n| (n, degree(n))).collect();
        let qp = fit_quasipoly(&samples, max_period)?;
        let tail = samples[..(qp.valid_from() - 1) as usize].iter().map(|(_, d)| d.clone()).collect();
        Self::new(qp, tail)
    }

    pub fn qp(&self) -> &QuasiPoly {
        &self.qp
    }

    pub fn tail(&self) -> &[Rational] {
        &self.tail
    }

    pub fn degree(&self, color: u64) -> Rational {
        assert!(color >= 1, "colors start at 1");
        match self.tail.get(color as usize - 1) {
            Some(d) => d.clone(),
            None => self.qp.formula_at(color),
        }
    }
}

/// Source of the highest degree `d+[J_K(m)]` of a base knot.
#[derive(Debug, Clone)]
pub enum DegreeProvider {
    ClosedForm(ClosedForm),
    /// Degrees read off exact polynomials; `degrees[i]` is the degree at
    /// color `i + 1`.
    Exact {
        table: JonesTable,
        degrees: Vec<Rational>,
    },
}

impl DegreeProvider {
    /// Exact degrees of `knot`, precomputed for colors up to `max_color`.
    pub fn exact(knot: ExactKnot, max_color: u64) -> Self {
        let table = JonesTable::new(knot, max_color);
        let degrees = (1..=max_color).map(|c| table.get(c).map(top_degree).unwrap_or_default()).collect();
        DegreeProvider::Exact { table, degrees }
    }

    pub fn degree(&self, color: u64) -> Rational {
        assert!(color >= 1, "colors start at 1");
        match self {
            DegreeProvider::ClosedForm(cf) => cf.degree(color),
            DegreeProvider::Exact { table, degrees } => match degrees.get(color as usize - 1) {
                Some(d) => d.clone(),
                None => top_degree(&table.jones(color)),
            },
        }
    }

    pub fn closed_form(&self) -> Option<&ClosedForm> {
        match self {
            DegreeProvider::ClosedForm(cf) => Some(cf),
            DegreeProvider::Exact { .. } => None,
        }
    }
}

impl From<ClosedForm> for DegreeProvider {
    fn from(cf: ClosedForm) -> Self {
        DegreeProvider::ClosedForm(cf)
    }
}

fn top_degree(p: &crate::exactpoly::QuarterLaurent) -> Rational {
    p.degree_hi().expect("colored Jones polynomial of a knot is nonzero")
}
