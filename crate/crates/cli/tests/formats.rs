use cable_slopes::formats::{read_degree_csv, write_csv, DegreeRow, QuasiPolyJson};
use cable_slopes_core::qpoly::QuasiPoly;
use cable_slopes_core::{rat, Rational};

fn knot_8_20() -> QuasiPoly {
    QuasiPoly::from_residues(
        vec![rat(2, 3); 3],
        vec![rat(-5, 6), rat(-1, 2), rat(-1, 2)],
        vec![rat(-1, 2), rat(-1, 6), rat(-1, 6)],
        1,
    )
    .unwrap()
}

#[test]
fn quasipoly_json_round_trip() {
    let json = QuasiPolyJson::from_qp(&knot_8_20());
    assert_eq!(json.a, vec!["2/3", "2/3", "2/3"]);
    let text = serde_json::to_string(&json).unwrap();
    assert!(!text.contains("tail"));
    let back: QuasiPolyJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_qp().unwrap(), knot_8_20());
}

#[test]
fn residue_zero_is_n_divisible_by_period() {
    let json = QuasiPolyJson::from_qp(&knot_8_20());
    // 8_20 at n = 3: 6 - 5/2 - 1/2.
    let qp = json.to_qp().unwrap();
    assert_eq!(qp.formula_at(3), rat(3, 1));
    assert_eq!(json.b[0], "-5/6");
}

#[test]
fn golden_files_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for name in ["8_20", "9_43", "9_44"] {
        let cf = cable_slopes::formats::read_closed_form(&dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(cf.degree(1), Rational::zero(), "{name}");
        assert_eq!(cf.qp().period(), 3);
    }
}

#[test]
fn closed_form_needs_a_tail_below_valid_from() {
    let mut json = QuasiPolyJson::from_qp(&knot_8_20().with_valid_from(3));
    assert!(json.to_closed_form().is_err());
    json.tail = vec!["0/1".into(), "3/2".into()];
    let cf = json.to_closed_form().unwrap();
    assert_eq!(cf.degree(2), rat(3, 2));
    let again = QuasiPolyJson::from_closed_form(&cf);
    assert_eq!(again.tail, json.tail);
}

#[test]
fn malformed_coefficients_are_rejected() {
    let mut json = QuasiPolyJson::from_qp(&knot_8_20());
    json.period = 2;
    assert!(json.to_qp().is_err());
    let mut json = QuasiPolyJson::from_qp(&knot_8_20());
    json.d[1] = "1/0".into();
    assert!(json.to_qp().is_err());
}

#[test]
fn degree_csv() {
    let rows = read_degree_csv("n,d_plus\n1,0/1\n2, 3/2\n").unwrap();
    assert_eq!(rows, vec![(1, Rational::zero()), (2, rat(3, 2))]);
    assert!(read_degree_csv("n,deg\n1,0\n").is_err());
    assert!(read_degree_csv("n,d_plus\n1,x\n").is_err());
    assert!(read_degree_csv("n,d_plus\nfoo,1/2\n").is_err());
    let text = write_csv([DegreeRow { n: 1, d_plus: "0/1".into() }]);
    assert_eq!(text, "n,d_plus\n1,0/1\n");
}

proptest::proptest! {
    #[test]
    fn json_round_trip_any_quasipoly(
        coeffs in proptest::collection::vec((-50i64..50, 1i64..12), 3..=18),
        valid_from in 1u64..5,
    ) {
        let period = coeffs.len() / 3;
        let rs: Vec<Rational> = coeffs.iter().take(3 * period).map(|&(n, d)| rat(n, d)).collect();
        let qp = QuasiPoly::from_residues(
            rs[..period].to_vec(),
            rs[period..2 * period].to_vec(),
            rs[2 * period..].to_vec(),
            valid_from,
        )
        .unwrap();
        let text = serde_json::to_string(&QuasiPolyJson::from_qp(&qp)).unwrap();
        let back: QuasiPolyJson = serde_json::from_str(&text).unwrap();
        proptest::prop_assert_eq!(back.to_qp().unwrap(), qp);
    }
}
