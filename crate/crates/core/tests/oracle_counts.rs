use congruence_core::chowforms::RationalSpaceCurve;
use congruence_core::formulas;
use congruence_core::oracles::named::*;
use congruence_core::oracles::*;
use congruence_core::PrimeField;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

#[test]
fn quintic_secant_order() {
    let c = RationalSpaceCurve::rational_quintic(fp());
    assert_eq!(oracle_sec_order(&c, 5).unwrap().count, 6);
    assert_eq!(oracle_sec_class(&c, 5).unwrap().count, 10);
}

#[test]
fn quartic_surface_counts() {
    let s = random_surface(fp(), 4, 17).unwrap();
    assert_eq!(oracle_ch1_degree(&s, 1).unwrap().count, formulas::ch1_degree(4).unwrap());
    assert_eq!(oracle_infl_through_point(&s, 1).unwrap().count, formulas::infl_through_point(4).unwrap());
    assert_eq!(oracle_dual_surface_degree(&s, 1).unwrap().count, formulas::dual_surface_degree(4).unwrap());
}

#[test]
fn quartic_plane_curve_counts() {
    let f = random_plane_curve(fp(), 4, 23);
    assert_eq!(oracle_plane_inflections(&f, 1).unwrap().count, formulas::plane_infl_count(4).unwrap());
    assert_eq!(oracle_plane_bitangents(&f, 1).unwrap().count, formulas::plane_bitangent_count(4).unwrap());
    assert_eq!(oracle_plane_bitangents(&klein_quartic(fp()), 1).unwrap().count, 28);
}
