use cable_slopes_core::exactpoly::*;
use cable_slopes_core::qpoly::*;

mod common;

use common::*;

use proptest::prelude::*;

fn sample(qp: &QuasiPoly, range: core::ops::RangeInclusive<u64>) -> Vec<(u64, Rational)> {
    range.map(|n| (n, qp.formula_at(n))).collect()
}

#[test]
fn recovers_9_43() {
    let qp = knot_9_43();
    let fitted = fit_quasipoly(&sample(&qp, 5..=40), 6).unwrap();
    assert_eq!(fitted.period(), 3);
    assert_eq!(fitted.constant_a(), Some(&rat(8, 3)));
    assert_eq!(fitted.b().values(), &[rat(-5, 6), rat(-1, 2), rat(-1, 2)]);
    assert_eq!(fitted.d().values(), &[rat(-7, 2), rat(-13, 6), rat(-13, 6)]);
    assert_eq!(fitted.valid_from(), 5);
}

#[test]
fn zeros_fit_period_one() {
    let samples: Vec<_> = (1..=12).map(|n| (n, Rational::zero())).collect();
    let fitted = fit_quasipoly(&samples, 3).unwrap();
    assert_eq!(fitted, QuasiPoly::zero());
}

#[test]
fn transient_prefix_sets_valid_from() {
    let qp = knot_8_20();
    let mut samples = sample(&qp, 1..=40);
    samples[0].1 = rat(99, 1);
    samples[3].1 = rat(-4, 1);
    let fitted = fit_quasipoly(&samples, 3).unwrap();
    assert_eq!(fitted.valid_from(), 5);
    assert_eq!(fitted, qp.with_valid_from(5));
}

#[test]
fn rejects_bad_input() {
    let samples: Vec<_> = (1..=5).map(|n| (n, Rational::zero())).collect();
    assert_eq!(fit_quasipoly(&samples, 2), Err(QpolyError::InsufficientSamples { needed: 8, got: 5 }));
    let gappy = vec![(1, Rational::zero()), (3, Rational::zero()), (4, Rational::zero()), (5, Rational::zero())];
    assert_eq!(fit_quasipoly(&gappy, 1), Err(QpolyError::NonConsecutiveSamples { after: 1 }));
    // n^3 has no quadratic quasi-polynomial presentation.
    let cubic: Vec<_> = (1..=30).map(|n| (n, Rational::from((n * n * n) as i64))).collect();
    assert_eq!(fit_quasipoly(&cubic, 3), Err(QpolyError::NoFit { max_period: 3 }));
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn round_trip(
        period in 1usize..=4,
        a in proptest::collection::vec(coeff(), 4),
        b in proptest::collection::vec(coeff(), 4),
        d in proptest::collection::vec(coeff(), 4),
        start in 1u64..10,
    ) {
        let qp = QuasiPoly::from_residues(
            a[..period].to_vec(), b[..period].to_vec(), d[..period].to_vec(), start,
        ).unwrap();
        let samples = sample(&qp, start..=start + 20);
        let fitted = fit_quasipoly(&samples, 4).unwrap();
        prop_assert_eq!(fitted, qp);
    }
}
