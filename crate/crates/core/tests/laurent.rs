use cable_slopes_core::exactpoly::*;

fn v(e: i64) -> QuarterLaurent {
    QuarterLaurent::monomial(e, 1)
}

#[test]
fn add_cancellation() {
    assert!((&v(4) + &-v(4)).is_zero());
    assert_eq!(&v(1) + &v(1), QuarterLaurent::monomial(1, 2));
    let f = &v(2) - &v(-2);
    assert_eq!(&f + &v(-2), v(2));
}

#[test]
fn mul_examples() {
    assert_eq!(&v(1) * &v(1), v(2));
    let f = &v(2) + &v(-2);
    assert_eq!(&f * &f, QuarterLaurent::from_terms([(4, 1), (0, 2), (-4, 1)]));
    assert!((&f * &QuarterLaurent::zero()).is_zero());
}

#[test]
fn degrees() {
    let f = QuarterLaurent::from_terms([(18, 1), (0, 3)]);
    assert_eq!(f.degree_hi().unwrap(), rat(9, 2));
    let c = QuarterLaurent::monomial(0, 7);
    assert_eq!(c.degree_hi().unwrap(), Rational::zero());
    assert_eq!(c.degree_lo().unwrap(), Rational::zero());
    let z = &v(-3) - &v(-3);
    assert_eq!(z.degree_hi(), Err(ZeroPolynomial));
    assert_eq!(z.degree_lo(), Err(ZeroPolynomial));
}

#[test]
fn quantum_integers() {
    let q3 = QuarterLaurent::quantum_integer(3);
    assert_eq!(q3.to_string(), "1*v^(1) + 1*v^(0) + 1*v^(-1)");
    assert_eq!(QuarterLaurent::quantum_integer(-2), -QuarterLaurent::quantum_integer(2));
    assert!(QuarterLaurent::quantum_integer(0).is_zero());
    assert_eq!(QuarterLaurent::quantum_integer(5).degree_hi().unwrap(), Rational::from_int(2));
}

#[test]
fn canonical_text() {
    let f = QuarterLaurent::from_terms([(6, 1), (0, -2), (-2, 1)]);
    assert_eq!(f.to_string(), "1*v^(3/2) - 2*v^(0) + 1*v^(-1/2)");
    assert_eq!(f.to_string().parse::<QuarterLaurent>().unwrap(), f);
    let g = QuarterLaurent::from_terms([(1, -3), (-5, 4)]);
    assert_eq!(g.to_string(), "-3*v^(1/4) + 4*v^(-5/4)");
    assert_eq!(g.to_string().parse::<QuarterLaurent>().unwrap(), g);
    assert_eq!("0".parse::<QuarterLaurent>().unwrap(), QuarterLaurent::zero());
}

#[test]
fn mirror_swaps_degrees() {
    let f = QuarterLaurent::from_terms([(7, 2), (-3, 1), (-10, -5)]);
    let m = f.mirror();
    assert_eq!(m.degree_hi().unwrap(), -f.degree_lo().unwrap());
    assert_eq!(m.degree_lo().unwrap(), -f.degree_hi().unwrap());
}
