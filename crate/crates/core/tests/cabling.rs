use std::collections::BTreeSet;

use cable_slopes_core::cabling::*;
use cable_slopes_core::exactpoly::*;
use cable_slopes_core::qpoly::*;

mod common;

use common::*;

#[test]
fn cable_params_validation() {
    assert!(CableParams::new(2, 3).is_ok());
    assert!(CableParams::new(-7, 2).is_ok());
    assert_eq!(CableParams::new(4, 2), Err(CablingError::NotCoprime { p: 4, q: 2 }));
    assert_eq!(CableParams::new(3, 1), Err(CablingError::TrivialOrNegativeQ { q: 1 }));
    assert_eq!(CableParams::new(3, -2), Err(CablingError::TrivialOrNegativeQ { q: -2 }));
}

#[test]
fn sample_sets() {
    assert_eq!(sample_set(1), vec![HalfInt::from_twice(0)]);
    assert_eq!(sample_set(2), vec![HalfInt::from_twice(-1), HalfInt::from_twice(1)]);
    let s5: Vec<i64> = sample_set(5).iter().map(|k| k.twice() / 2).collect();
    assert_eq!(s5, vec![-2, -1, 0, 1, 2]);
    assert_eq!(HalfInt::from_twice(-1).to_rational(), rat(-1, 2));
}

#[test]
fn admissibility_examples() {
    let sc820 = m_constants(&knot_8_20()).unwrap();
    let pq = |p, q| CableParams::new(p, q).unwrap();
    assert_eq!(admissible(&sc820, pq(1, 2)), Some(AdmissibleBranch::Left));
    assert_eq!(admissible(&sc820, pq(5, 2)), None);
    assert_eq!(admissible(&sc820, pq(7, 2)), Some(AdmissibleBranch::Right));
    let sc943 = m_constants(&knot_9_43()).unwrap();
    assert_eq!(admissible(&sc943, pq(23, 2)), Some(AdmissibleBranch::Right));
    assert_eq!(admissible(&sc943, pq(45, 4)), Some(AdmissibleBranch::Right));
    assert_eq!(admissible(&sc943, pq(21, 2)), None);
    assert_eq!(admissible(&sc943, pq(20, 3)), Some(AdmissibleBranch::Left));
}

#[test]
fn boundary_slope_transform() {
    let pq = CableParams::new(2, 3).unwrap();
    let empty = BTreeSet::new();
    assert_eq!(boundary_slopes_cable(&empty, pq), BTreeSet::from([rat(6, 1)]));
    assert_eq!(
        boundary_slopes_cable(&BTreeSet::from([Rational::zero()]), pq),
        BTreeSet::from([Rational::zero(), rat(6, 1)])
    );
    let pq = CableParams::new(1, 2).unwrap();
    assert_eq!(boundary_slopes_cable(&BTreeSet::from([rat(8, 3)]), pq), BTreeSet::from([rat(32, 3), rat(2, 1)]));
}
