use cable_slopes_core::exactpoly::*;
use cable_slopes_core::fusion::*;

fn fp(m1: i64, m2: i64) -> FusionParams {
    FusionParams::new(m1, m2)
}

#[test]
fn q_examples() {
    assert_eq!(q_lattice_value(fp(2, 1), 0, 0, 0), Ok(Rational::zero()));
    assert_eq!(q_lattice_value(fp(2, 1), 4, 4, 0), Ok(rat(70, 1)));
    assert_eq!(q_lattice_value(fp(1, -2), 3, 3, 3), Ok(rat(-9, 1)));
    assert_eq!(q_lattice_value(fp(-3, 1), 4, 4, 0), Ok(rat(50, 1)));
    assert_eq!(q_lattice_value(fp(2, 1), 4, 5, 0), Err(FusionError::OutsideLattice { n: 4, k1: 5, k2: 0 }));
    assert!(q_lattice_value(fp(2, 1), 4, 1, -3).is_err());
}

#[test]
fn fixed_maximizer_displays() {
    // Q(n,n,0) and Q(n,n,n) in closed form.
    for (m1, m2) in [(2, 1), (-3, 4), (0, 2), (5, -3), (1, -2)] {
        for n in 0..12i64 {
            let b1 = Rational::from(2 * m2) * Rational::from(n * n)
                + Rational::new(n * n, 2)
                + (Rational::new(3, 2) + Rational::from(m1 + 4 * m2)) * Rational::from(n);
            assert_eq!(q_lattice_value(fp(m1, m2), n, n, 0).unwrap(), b1);
            assert_eq!(q_lattice_value(fp(m1, m2), n, n, n).unwrap(), Rational::from((2 + m1 + 3 * m2) * n));
        }
    }
}

#[test]
fn delta_examples() {
    assert_eq!(delta_closed(fp(1, -2), 5), Ok(rat(-15, 1)));
    assert_eq!(delta_bruteforce(fp(4, 2), 0), Ok(Rational::zero()));
    assert_eq!(delta_closed(fp(2, 0), 3), Err(FusionError::DegenerateM2 { m2: 0 }));
    for (m1, m2) in [(-1, 1), (2, 1), (0, 1)] {
        for n in 0..=12 {
            assert_eq!(delta_closed(fp(m1, m2), n), delta_bruteforce(fp(m1, m2), n), "({m1},{m2}) n={n}");
        }
    }
}

#[test]
fn case_conditions_match_regions() {
    for m1 in -10i64..=10 {
        for m2 in -10i64..=10 {
            let p = fp(m1, m2);
            if p.is_degenerate() {
                continue;
            }
            let case = if m1 >= 1 && m2 >= 1 {
                Case::A
            } else if m2 >= 1 {
                if 1 + m1 + m2 <= 0 || 1 + 2 * m1 + m2 < 0 {
                    Case::B1
                } else {
                    Case::B2
                }
            } else if 2 * m1 <= -3 * m2 {
                Case::C1
            } else {
                Case::C2
            };
            assert_eq!(region(p).unwrap().case(), case, "({m1},{m2})");
        }
    }
    assert_eq!(Region::I4.case(), Case::B2);
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(128))]
    #[test]
    fn closed_form_is_the_lattice_maximum(m1 in -20i64..=20, m2 in -20i64..=20, n in 0u64..=30) {
        let p = fp(m1, m2);
        proptest::prop_assume!(!p.is_degenerate());
        proptest::prop_assert_eq!(delta_closed(p, n), delta_bruteforce(p, n));
    }
}
