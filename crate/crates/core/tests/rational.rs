use cable_slopes_core::exactpoly::*;
use num_bigint::BigInt;

#[test]
fn reduced_on_construction() {
    let r = rat(6, -4);
    assert_eq!(r.numer(), &BigInt::from(-3));
    assert_eq!(r.denom(), &BigInt::from(2));
}

#[test]
fn display_and_parse() {
    assert_eq!(rat(-7, 3).to_string(), "-7/3");
    assert_eq!(Rational::from_int(4).to_string(), "4/1");
    assert_eq!("12/8".parse::<Rational>().unwrap(), rat(3, 2));
    assert_eq!(" -5 ".parse::<Rational>().unwrap(), Rational::from_int(-5));
    assert!("1/0".parse::<Rational>().is_err());
    assert!("x".parse::<Rational>().is_err());
}

#[test]
fn floor_ceil_fract() {
    assert_eq!(rat(-3, 2).floor(), BigInt::from(-2));
    assert_eq!(rat(-3, 2).ceil(), BigInt::from(-1));
    assert_eq!(rat(-3, 2).fract_part(), rat(1, 2));
    assert!(rat(5, 2).is_half_odd());
    assert!(!rat(5, 4).is_half_odd());
}

#[test]
fn arithmetic_is_exact() {
    let x = rat(1, 3) + rat(1, 6);
    assert_eq!(x, rat(1, 2));
    assert_eq!(&x * &rat(4, 1), Rational::from_int(2));
    assert_eq!(rat(2, 3) / rat(4, 9), rat(3, 2));
    assert!(rat(-1, 3) < rat(-1, 4));
}
