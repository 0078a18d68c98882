use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::provider::DegreeProvider;
use super::{sample_set, CableParams, CablingError, HalfInt};
use crate::exactpoly::Rational;

/// The maximum of `f(k) = -pk(qk+1) + d+[J_K(2qk+1)]` over `S_n`.
///
/// When the maximizer is unique the cable's degree at `n` is exactly
/// `pq(n^2-1)/4 + max_value`; otherwise that value is only an upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaxCertificate {
    pub n: u64,
    /// The smallest maximizing `k`.
    pub argmax: HalfInt,
    pub max_value: Rational,
    /// `max - second largest value`, counting repeated values; `None` when
    /// `S_n` has a single element.
    pub gap: Option<Rational>,
    pub unique: bool,
}

impl MaxCertificate {
    /// `pq(n^2-1)/4 + max_value`.
    pub fn degree_bound(&self, params: CableParams) -> Rational {
        let n = self.n as i64;
        Rational::new(params.pq() * (n * n - 1), 4) + &self.max_value
    }

    /// The certified degree, when the maximizer is unique.
    pub fn degree(&self, params: CableParams) -> Option<Rational> {
        self.unique.then(|| self.degree_bound(params))
    }

    /// The base color `|2qk+1|` of the maximizing summand.
    pub fn color(&self, params: CableParams) -> u64 {
        (params.q() * self.argmax.twice() + 1).unsigned_abs()
    }
}

/// Tracks the largest value, its first position and the runner-up.
struct Best<T: Ord + Clone> {
    top: Option<(T, HalfInt)>,
    second: Option<T>,
    tied: bool,
}

impl<T: Ord + Clone> Best<T> {
    fn new() -> Self {
        Best { top: None, second: None, tied: false }
    }

    fn push(&mut self, v: T, k: HalfInt) {
        match &self.top {
            None => self.top = Some((v, k)),
            Some((cur, _)) if v > *cur => {
                let (old, _) = self.top.replace((v, k)).unwrap();
                self.second = Some(old);
                self.tied = false;
            }
            Some((cur, _)) => {
                if v == *cur {
                    self.tied = true;
                }
                if self.second.as_ref().map_or(true, |s| v > *s) {
                    self.second = Some(v);
                }
            }
        }
    }
}

/// Evaluates every summand exactly.
pub fn cable_degree_per_n(provider: &DegreeProvider, params: CableParams, n: u64) -> MaxCertificate {
    let (p, q) = (params.p(), params.q());
    let mut best = Best::new();
    for k in sample_set(n) {
        let k2 = k.twice();
        let shift = Rational::new(-p * k2 * (q * k2 + 2), 4);
        let v = shift + provider.degree((q * k2 + 1).unsigned_abs());
        best.push(v, k);
    }
    let (max_value, argmax) = best.top.unwrap();
    let gap = best.second.map(|s| &max_value - &s);
    MaxCertificate { n, argmax, max_value, gap, unique: !best.tied }
}

/// Scans many `n` for one provider and cable using scaled machine integers.
///
/// Every base degree is multiplied by a common denominator `scale` (a
/// multiple of 4), so each summand is an exact `i128`.
#[derive(Debug, Clone)]
pub struct CertificateScanner {
    params: CableParams,
    max_n: u64,
    scale: i128,
    scaled: Vec<i128>,
}

impl CertificateScanner {
    pub fn new(provider: &DegreeProvider, params: CableParams, max_n: u64) -> Result<Self, CablingError> {
        let max_color = params.q() as u64 * max_n.saturating_sub(1) + 1;
        let degrees: Vec<Rational> = (1..=max_color).map(|c| provider.degree(c)).collect();
        let scale_big = num_integer::Integer::lcm(&Rational::common_denominator(&degrees), &BigInt::from(4));
        let overflow = CablingError::Overflow;
        let scale = scale_big.to_i128().ok_or(overflow.clone())?;
        let scaled = degrees
            .iter()
            .map(|d| (d.numer() * (&scale_big / d.denom())).to_i128())
            .collect::<Option<Vec<i128>>>()
            .ok_or(overflow.clone())?;
        // Bound every summand well inside i128.
        let n = max_n as i128;
        let shift_bound = (params.p() as i128)
            .abs()
            .checked_mul(params.q() as i128 * n + 2)
            .and_then(|x| x.checked_mul(n))
            .and_then(|x| x.checked_mul(scale / 4))
            .ok_or(overflow.clone())?;
        let deg_bound = scaled.iter().map(|x| x.abs()).max().unwrap_or(0);
        if shift_bound.checked_add(deg_bound).map_or(true, |s| s > i128::MAX / 4) {
            return Err(overflow);
        }
        Ok(CertificateScanner { params, max_n, scale, scaled })
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    pub fn scan(&self, n: u64) -> MaxCertificate {
        assert!(n >= 1 && n <= self.max_n, "n = {n} outside the scanned range 1..={}", self.max_n);
        let (p, q) = (self.params.p() as i128, self.params.q() as i128);
        let quarter = self.scale / 4;
        let mut best = Best::new();
        for k in sample_set(n) {
            let k2 = k.twice() as i128;
            let color = (q * k2 + 1).unsigned_abs() as usize;
            let v = -p * k2 * (q * k2 + 2) * quarter + self.scaled[color - 1];
            best.push(v, k);
        }
        let (top, argmax) = best.top.unwrap();
        let to_rat = |x: i128| Rational::from(BigInt::from(x)) / Rational::from(BigInt::from(self.scale));
        MaxCertificate {
            n,
            argmax,
            max_value: to_rat(top),
            gap: best.second.map(|s| to_rat(top - s)),
            unique: !best.tied,
        }
    }
}
