use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("degree of the zero polynomial is undefined")]
pub struct ZeroPolynomial;

/// Sparse Laurent polynomial in `v^(1/4)` with integer coefficients.
///
/// Key `e` stands for `v^(e/4)`. No stored coefficient is zero, so the zero
/// polynomial is the empty map and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuarterLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QuarterLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * v^(quarter_exp/4)`.
    pub fn monomial(quarter_exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(quarter_exp, BigInt::from(coeff));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    /// Quantum integer `[m] = (v^(m/2) - v^(-m/2)) / (v^(1/2) - v^(-1/2))`,
    /// with `[0] = 0` and `[-m] = -[m]`.
    pub fn quantum_integer(m: i64) -> Self {
        let mut p = Self::zero();
        let k = m.abs();
        let sign = if m < 0 { -1 } else { 1 };
        for j in 0..k {
            p.terms.insert(2 * (k - 1) - 4 * j, BigInt::from(sign));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, quarter_exp: i64) -> BigInt {
        self.terms.get(&quarter_exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, quarter_exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(quarter_exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&quarter_exp);
        }
    }

    /// `self += sign * v^(shift/4) * other`.
    pub fn add_shifted(&mut self, other: &QuarterLaurent, shift: i64, negate: bool) {
        for (e, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            self.add_term(e + shift, c);
        }
    }

    /// Multiply by `v^(quarter_exp/4)`.
    pub fn shifted(&self, quarter_exp: i64) -> Self {
        QuarterLaurent { terms: self.terms.iter().map(|(e, c)| (e + quarter_exp, c.clone())).collect() }
    }

    /// Substitution `v -> v^-1`.
    pub fn mirror(&self) -> Self {
        QuarterLaurent { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn max_quarter_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_quarter_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest power of `v`.
    pub fn degree_hi(&self) -> Result<Rational, ZeroPolynomial> {
        self.max_quarter_exp().map(|e| Rational::new(e, 4)).ok_or(ZeroPolynomial)
    }

    /// Lowest power of `v`.
    pub fn degree_lo(&self) -> Result<Rational, ZeroPolynomial> {
        self.min_quarter_exp().map(|e| Rational::new(e, 4)).ok_or(ZeroPolynomial)
    }
}

impl<'a, 'b> Add<&'b QuarterLaurent> for &'a QuarterLaurent {
    type Output = QuarterLaurent;
    fn add(self, rhs: &'b QuarterLaurent) -> QuarterLaurent {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, false);
        out
    }
}

impl Add for QuarterLaurent {
    type Output = QuarterLaurent;
    fn add(mut self, rhs: QuarterLaurent) -> QuarterLaurent {
        self.add_shifted(&rhs, 0, false);
        self
    }
}

impl<'a, 'b> Sub<&'b QuarterLaurent> for &'a QuarterLaurent {
    type Output = QuarterLaurent;
    fn sub(self, rhs: &'b QuarterLaurent) -> QuarterLaurent {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, true);
        out
    }
}

impl Sub for QuarterLaurent {
    type Output = QuarterLaurent;
    fn sub(mut self, rhs: QuarterLaurent) -> QuarterLaurent {
        self.add_shifted(&rhs, 0, true);
        self
    }
}

impl<'a, 'b> Mul<&'b QuarterLaurent> for &'a QuarterLaurent {
    type Output = QuarterLaurent;
    fn mul(self, rhs: &'b QuarterLaurent) -> QuarterLaurent {
        let mut out = QuarterLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QuarterLaurent {
    type Output = QuarterLaurent;
    fn mul(self, rhs: QuarterLaurent) -> QuarterLaurent {
        &self * &rhs
    }
}

impl Neg for QuarterLaurent {
    type Output = QuarterLaurent;
    fn neg(self) -> QuarterLaurent {
        QuarterLaurent { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, quarter_exp: i64) -> fmt::Result {
    let r = Rational::new(quarter_exp, 4);
    if r.is_integer() {
        write!(f, "v^({})", r.numer())
    } else {
        write!(f, "v^({}/{})", r.numer(), r.denom())
    }
}

/// Canonical text: `c*v^(e)` terms in decreasing exponent order, e.g.
/// `1*v^(3/2) - 2*v^(0) + 1*v^(-1/2)`. The zero polynomial prints as `0`.
impl fmt::Display for QuarterLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{}*", c.abs())?;
            write_exponent(f, *e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuarterLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid polynomial text near `{0}`")]
pub struct ParsePolyError(pub String);

/// Parses the canonical text form (and tolerates any term order).
impl FromStr for QuarterLaurent {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = QuarterLaurent::zero();
        if s == "0" {
            return Ok(out);
        }
        let err = |t: &str| ParsePolyError(String::from(t));
        let mut rest = s;
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        }
        loop {
            let split = [(rest.find(" + "), true), (rest.find(" - "), false)]
                .into_iter()
                .filter_map(|(i, pos)| i.map(|i| (i, pos)))
                .min_by_key(|(i, _)| *i);
            let (term, tail, next_sign) = match split {
                None => (rest, "", None),
                Some((i, pos)) => (&rest[..i], &rest[i + 3..], Some(pos)),
            };
            let (c, e) = term.trim().split_once("*v^(").ok_or_else(|| err(term))?;
            let e = e.strip_suffix(')').ok_or_else(|| err(term))?;
            let c: BigInt = c.trim().parse().map_err(|_| err(term))?;
            let e: Rational = e.parse().map_err(|_| err(term))?;
            let q = &e * &Rational::from_int(4);
            let q = q.to_i64().ok_or_else(|| err(term))?;
            out.add_term(q, sign.clone() * c);
            match next_sign {
                None => break,
                Some(pos) => {
                    sign = if pos { BigInt::one() } else { -BigInt::one() };
                    rest = tail;
                }
            }
        }
        Ok(out)
    }
}
