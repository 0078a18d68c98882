use cable_slopes_core::fusion::*;

#[test]
fn identifications() {
    let sf = |m1, m2| special_forms(FusionParams::new(m1, m2));
    assert_eq!(sf(3, 0), Some(SpecialForm::Torus2 { t: 7 }));
    assert_eq!(sf(-1, 1), Some(SpecialForm::Torus2 { t: 5 }));
    assert_eq!(sf(2, 3), None);
    assert_eq!(sf(1, -1), Some(SpecialForm::Torus2 { t: -1 }));
    assert!(sf(1, -1).unwrap().is_trivial());
    assert_eq!(sf(1, 4), Some(SpecialForm::MirrorOf(FusionParams::new(0, -5))));
    assert_eq!(sf(3, 0).unwrap().to_string(), "T(2,7)");
}

#[test]
fn degenerate_mirror_pairs_agree() {
    // K(m,0) and K(1-m,-1) are mirror images; both are T(2, .) knots.
    for m in -4i64..=4 {
        let a = special_forms(FusionParams::new(m, 0)).unwrap();
        let b = special_forms(mirror_partner(FusionParams::new(m, 0))).unwrap();
        let (SpecialForm::Torus2 { t: ta }, SpecialForm::Torus2 { t: tb }) = (a, b) else { panic!() };
        assert_eq!(ta, -tb);
    }
}
