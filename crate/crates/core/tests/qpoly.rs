use cable_slopes_core::exactpoly::*;
use cable_slopes_core::qpoly::*;

mod common;

use common::*;

use proptest::prelude::*;

#[test]
fn periodic_seq_is_minimal() {
    let s = PeriodicSeq::new(vec![rat(1, 2), rat(1, 3), rat(1, 2), rat(1, 3)]).unwrap();
    assert_eq!(s.period(), 2);
    assert_eq!(s.at(5), &rat(1, 3));
    assert_eq!(PeriodicSeq::new(vec![]), Err(QpolyError::EmptySequence));
    let c = PeriodicSeq::new(vec![rat(3, 1); 6]).unwrap();
    assert!(c.is_constant());
}

#[test]
fn canonical_common_period() {
    let qp = QuasiPoly::from_residues(
        vec![rat(1, 1); 6],
        vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)],
        vec![rat(0, 1), rat(0, 1), rat(2, 1), rat(0, 1), rat(0, 1), rat(2, 1)],
        1,
    )
    .unwrap();
    assert_eq!(qp.period(), 6);
    assert_eq!(qp.b().period(), 2);
    assert_eq!(qp.d().period(), 3);
}

#[test]
fn eval_8_20() {
    let qp = knot_8_20();
    assert_eq!(qp_eval(&qp, 4).unwrap(), rat(17, 2));
    assert_eq!(qp_eval(&qp, 6).unwrap(), rat(37, 2));
    assert_eq!(qp_eval(&QuasiPoly::zero(), 17).unwrap(), Rational::zero());
}

#[test]
fn eval_below_validity() {
    let qp = knot_8_20().with_valid_from(5);
    assert_eq!(qp_eval(&qp, 4), Err(QpolyError::BelowValidity { n: 4, valid_from: 5 }));
}

#[test]
fn m_constants_golden_knots() {
    let sc = m_constants(&knot_8_20()).unwrap();
    assert_eq!(sc.m1, rat(1, 3));
    assert_eq!(sc.m2max, Rational::zero());
    assert_eq!(sc.lower_threshold(), rat(7, 3));
    assert_eq!(sc.upper_threshold(), rat(3, 1));

    let sc = m_constants(&knot_9_43()).unwrap();
    assert_eq!((sc.lower_threshold(), sc.upper_threshold()), (rat(31, 3), rat(11, 1)));
    assert_eq!(sc.m2max, rat(2, 3));

    let sc = m_constants(&knot_9_44()).unwrap();
    assert_eq!((sc.lower_threshold(), sc.upper_threshold()), (rat(13, 3), rat(5, 1)));
    assert_eq!(sc.m2max, Rational::zero());
}

#[test]
fn m_constants_single_residue() {
    let qp = QuasiPoly::polynomial(rat(3, 2), rat(-1, 4), rat(7, 1), 1).unwrap();
    let sc = m_constants(&qp).unwrap();
    assert_eq!(sc.m1, Rational::zero());
    assert_eq!(sc.m2max, Rational::zero());
    let qp = QuasiPoly::polynomial(rat(3, 2), Rational::zero(), rat(7, 1), 1).unwrap();
    assert_eq!(m_constants(&qp).unwrap().m2max, Rational::zero());
}

#[test]
fn m_constants_errors() {
    let qp = QuasiPoly::from_residues(vec![rat(1, 1), rat(2, 1)], vec![rat(0, 1); 2], vec![rat(0, 1); 2], 1).unwrap();
    assert_eq!(m_constants(&qp), Err(QpolyError::NonConstantSlope));
    let qp = QuasiPoly::polynomial(rat(1, 1), rat(1, 2), rat(0, 1), 1).unwrap();
    assert_eq!(m_constants(&qp), Err(QpolyError::PositiveLinearTerm { residue: 0 }));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

fn nonpositive_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=0, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn m_constants_ignore_period_reexpansion(
        a in small_rational(),
        b in proptest::collection::vec(nonpositive_rational(), 1..=4),
        d_seed in proptest::collection::vec(small_rational(), 4),
    ) {
        let p = b.len();
        let d: Vec<Rational> = d_seed[..p].to_vec();
        let base = QuasiPoly::from_residues(vec![a.clone(); p], b.clone(), d.clone(), 1).unwrap();
        // The same function given over twice the period.
        let doubled = QuasiPoly::from_residues(
            vec![a; 2 * p],
            b.iter().chain(b.iter()).cloned().collect(),
            d.iter().chain(d.iter()).cloned().collect(),
            1,
        ).unwrap();
        prop_assert_eq!(&doubled, &base);
        prop_assert_eq!(m_constants(&base).unwrap(), m_constants(&doubled).unwrap());
    }

    #[test]
    fn mirror_negates_values(
        a in proptest::collection::vec(small_rational(), 3),
        b in proptest::collection::vec(small_rational(), 3),
        d in proptest::collection::vec(small_rational(), 3),
        n in 1u64..200,
    ) {
        let qp = QuasiPoly::from_residues(a, b, d, 1).unwrap();
        prop_assert_eq!(qp_eval(&qp.mirror(), n).unwrap(), -qp_eval(&qp, n).unwrap());
    }
}
