use cable_slopes_core::cabling::*;
use cable_slopes_core::exactpoly::*;

fn pq(p: i64, q: i64) -> CableParams {
    CableParams::new(p, q).unwrap()
}

#[test]
fn trefoil_small_colors() {
    let t23 = ExactKnot::torus(pq(2, 3));
    assert_eq!(t23.jones(1), QuarterLaurent::one());
    let j2 = t23.jones(2);
    assert_eq!(j2.degree_hi().unwrap(), rat(9, 2));
    assert_eq!(j2.to_string().parse::<QuarterLaurent>().unwrap(), j2);
}

#[test]
fn torus_symmetry_and_unknot_cables() {
    // T(p,q) = T(q,p) as unoriented knots, and the (1,q) and (p,1)
    // torus knots are trivial.
    for (p, q) in [(2, 3), (2, 5), (3, 4), (-2, 3)] {
        let a = ExactKnot::torus(pq(p, q)).table(6);
        let b = ExactKnot::torus(pq(q * p.signum(), p.abs())).table(6);
        assert_eq!(a, b, "T({p},{q})");
    }
    let u = ExactKnot::torus(pq(1, 2)).table(6);
    let expect: Vec<_> = (1..=6).map(QuarterLaurent::quantum_integer).collect();
    assert_eq!(u, expect);
}

#[test]
fn mirror_reflects() {
    let k = ExactKnot::torus(pq(2, 3));
    let m = k.clone().mirror();
    assert_eq!(m.jones(3), k.jones(3).mirror());
    assert_eq!(m.mirror(), k);
    assert_eq!(ExactKnot::torus(pq(-2, 3)).jones(4), ExactKnot::torus(pq(2, 3)).jones(4).mirror());
}

#[test]
fn table_matches_direct() {
    let k = ExactKnot::torus(pq(2, 3)).cable(pq(13, 2));
    let table = JonesTable::new(k.clone(), 4);
    for c in 1..=5 {
        assert_eq!(table.jones(c), k.jones(c));
    }
}
