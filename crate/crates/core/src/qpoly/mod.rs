//! Periodic coefficient sequences and quadratic quasi-polynomials
//! `a(n) n^2 + b(n) n + d(n)`.

mod fit;

use alloc::vec::Vec;

use num_integer::Integer;

use crate::exactpoly::Rational;

pub use fit::fit_quasipoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QpolyError {
    #[error("periodic sequence needs at least one value")]
    EmptySequence,
    #[error("n = {n} is below the validity threshold {valid_from}")]
    BelowValidity { n: u64, valid_from: u64 },
    #[error("quadratic coefficient is not constant")]
    NonConstantSlope,
    #[error("linear coefficient is positive at residue {residue}")]
    PositiveLinearTerm { residue: usize },
    #[error("need at least {needed} consecutive samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("samples are not at consecutive n (gap after n = {after})")]
    NonConsecutiveSamples { after: u64 },
    #[error("no quasi-polynomial of period <= {max_period} fits the samples")]
    NoFit { max_period: usize },
    #[error("residue vectors must all have length {period}")]
    LengthMismatch { period: usize },
    #[error("valid_from must be at least 1")]
    ZeroValidity,
}

/// A periodic function of `n`: entry `i` is the value at every `n ≡ i (mod period)`.
///
/// Always stored with its minimal period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSeq {
    values: Vec<Rational>,
}

impl PeriodicSeq {
    pub fn new(values: Vec<Rational>) -> Result<Self, QpolyError> {
        if values.is_empty() {
            return Err(QpolyError::EmptySequence);
        }
        let len = values.len();
        let minimal =
            (1..=len).filter(|p| len % p == 0).find(|&p| (p..len).all(|i| values[i] == values[i % p])).unwrap_or(len);
        let mut values = values;
        values.truncate(minimal);
        Ok(PeriodicSeq { values })
    }

    pub fn constant(value: Rational) -> Self {
        PeriodicSeq { values: alloc::vec![value] }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| v == &self.values[0])
    }

    pub fn at(&self, n: u64) -> &Rational {
        &self.values[(n % self.values.len() as u64) as usize]
    }

    /// Values over one minimal period.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Values re-expanded to `period`, which must be a multiple of the minimal period.
    pub fn expanded(&self, period: usize) -> Vec<Rational> {
        debug_assert_eq!(period % self.period(), 0);
        (0..period).map(|i| self.values[i % self.period()].clone()).collect()
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        PeriodicSeq::new(self.values.iter().map(f).collect()).expect("non-empty")
    }
}

/// `a(n) n^2 + b(n) n + d(n)` for `n >= valid_from`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiPoly {
    a: PeriodicSeq,
    b: PeriodicSeq,
    d: PeriodicSeq,
    valid_from: u64,
}

impl QuasiPoly {
    pub fn new(a: PeriodicSeq, b: PeriodicSeq, d: PeriodicSeq, valid_from: u64) -> Result<Self, QpolyError> {
        if valid_from == 0 {
            return Err(QpolyError::ZeroValidity);
        }
        Ok(QuasiPoly { a, b, d, valid_from })
    }

    /// Builds from residue vectors of a common length `period`.
    pub fn from_residues(
        a: Vec<Rational>,
        b: Vec<Rational>,
        d: Vec<Rational>,
        valid_from: u64,
    ) -> Result<Self, QpolyError> {
        let period = a.len();
        if b.len() != period || d.len() != period {
            return Err(QpolyError::LengthMismatch { period });
        }
        QuasiPoly::new(PeriodicSeq::new(a)?, PeriodicSeq::new(b)?, PeriodicSeq::new(d)?, valid_from)
    }

    /// A quasi-polynomial with constant coefficients.
    pub fn polynomial(a: Rational, b: Rational, d: Rational, valid_from: u64) -> Result<Self, QpolyError> {
        QuasiPoly::new(PeriodicSeq::constant(a), PeriodicSeq::constant(b), PeriodicSeq::constant(d), valid_from)
    }

    pub fn zero() -> Self {
        QuasiPoly::polynomial(Rational::zero(), Rational::zero(), Rational::zero(), 1).expect("valid")
    }

    pub fn a(&self) -> &PeriodicSeq {
        &self.a
    }

    pub fn b(&self) -> &PeriodicSeq {
        &self.b
    }

    pub fn d(&self) -> &PeriodicSeq {
        &self.d
    }

    pub fn valid_from(&self) -> u64 {
        self.valid_from
    }

    pub fn with_valid_from(mut self, valid_from: u64) -> Self {
        self.valid_from = valid_from.max(1);
        self
    }

    /// Least common period of the three coefficient functions.
    pub fn period(&self) -> usize {
        self.a.period().lcm(&self.b.period()).lcm(&self.d.period())
    }

    /// The constant quadratic coefficient, if there is one.
    pub fn constant_a(&self) -> Option<&Rational> {
        self.a.is_constant().then(|| &self.a.values()[0])
    }

    /// Evaluates the formula at `n`, ignoring `valid_from`.
    pub fn formula_at(&self, n: u64) -> Rational {
        let nn = Rational::from(n as i64);
        let mut v = self.a.at(n) * &nn.pow2();
        v += self.b.at(n) * &nn;
        v += self.d.at(n);
        v
    }

    /// The negated quasi-polynomial `(-a, -b, -d)`.
    pub fn mirror(&self) -> Self {
        QuasiPoly { a: self.a.map(|x| -x), b: self.b.map(|x| -x), d: self.d.map(|x| -x), valid_from: self.valid_from }
    }
}

/// Exact value `a(n) n^2 + b(n) n + d(n)`.
pub fn qp_eval(qp: &QuasiPoly, n: u64) -> Result<Rational, QpolyError> {
    if n < qp.valid_from {
        return Err(QpolyError::BelowValidity { n, valid_from: qp.valid_from });
    }
    Ok(qp.formula_at(n))
}

/// The constants controlling which cables have a predictable degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeConditions {
    /// Constant quadratic coefficient `a`.
    pub a: Rational,
    /// `max |b(i) - b(j)|` over `i ≡ j (mod 2)`.
    pub m1: Rational,
    /// `max{0, M2}` with `M2 = max 2b(i) + |b(i)-b(j)| + |d(i)-d(j)|` over `i ≡ j (mod 2)`.
    pub m2max: Rational,
}

impl SlopeConditions {
    pub fn four_a(&self) -> Rational {
        &self.a * &Rational::from_int(4)
    }

    /// `4a - M1`: cables with `p < (4a - M1) q` are admissible.
    pub fn lower_threshold(&self) -> Rational {
        self.four_a() - &self.m1
    }

    /// `4a + M1`: cables with `p - (4a + M1) q > max{0, M2}` are admissible.
    pub fn upper_threshold(&self) -> Rational {
        self.four_a() + &self.m1
    }
}

/// Computes `M1` and `max{0, M2}` by scanning every residue pair of equal
/// parity in a window of length `lcm(period, 2)`.
pub fn m_constants(qp: &QuasiPoly) -> Result<SlopeConditions, QpolyError> {
    let a = qp.constant_a().ok_or(QpolyError::NonConstantSlope)?.clone();
    let period = qp.period();
    if let Some(residue) = (0..period).find(|&i| qp.b().at(i as u64).is_positive()) {
        return Err(QpolyError::PositiveLinearTerm { residue });
    }
    let window = period.lcm(&2);
    let b = qp.b().expanded(window);
    let d = qp.d().expanded(window);
    let two = Rational::from_int(2);
    let mut m1 = Rational::zero();
    let mut m2: Option<Rational> = None;
    for i in 0..window {
        for j in (i % 2..window).step_by(2) {
            let db = (&b[i] - &b[j]).abs();
            let dd = (&d[i] - &d[j]).abs();
            let cand = &two * &b[i] + &db + &dd;
            m2 = Some(match m2 {
                Some(cur) => cur.max(cand),
                None => cand,
            });
            m1 = m1.max(db);
        }
    }
    let m2max = m2.unwrap_or_default().max(Rational::zero());
    Ok(SlopeConditions { a, m1, m2max })
}
