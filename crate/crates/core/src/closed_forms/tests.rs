use super::*;
use crate::partitions::{bounded, diagonal, vertical};
use crate::series::QSeries;
use crate::verify::printed::XVYV_DISPLAYS;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn ser(r: &FactoredRational, n: usize) -> QSeries {
    r.to_series(n)
}

#[test]
fn nodal_coefficients() {
    let s = ser(&cf_nodal_reduced(), 5);
    assert_eq!(*s.coeff(0), p("1"));
    assert_eq!(*s.coeff(3), p("1+2T^2"));
    assert_eq!(*s.coeff(5), p("1+4T^2"));
}

#[test]
fn fat_line_matches_bounded_partitions() {
    assert_eq!(ser(&cf_fat_line(1, false).unwrap(), 6), ser(&FactoredRational::geometric(Factor::new(1, 0).unwrap()), 6));
    assert_eq!(*ser(&cf_fat_line(2, false).unwrap(), 3).coeff(3), p("1+T"));
    for k in 1..=4 {
        assert_eq!(ser(&cf_fat_line(k, false).unwrap(), 12), bounded::bounded_partitions_series(k as u32, 12), "k={k}");
    }
    assert!(cf_fat_line(0, false).is_err());
}

#[test]
fn fat_line_doubled_convention() {
    assert_eq!(cf_fat_line(5, true).unwrap().to_series(10), cf_plane(5).unwrap().to_series(10));
}

#[test]
fn xyv_one_is_the_node() {
    assert!(cf_xyv(1).unwrap().equals_as_rational(&cf_nodal_reduced()));
    assert!(cf_xvyv(1).unwrap().equals_as_rational(&cf_nodal_reduced()));
}

#[test]
fn xyv_and_x2yv_match_vertical_strata() {
    for v in 1..=4 {
        assert_eq!(ser(&cf_xyv(v).unwrap(), 10), vertical::series(1, v as u32, 10).unwrap(), "xy^{v}");
    }
    for v in 1..=3 {
        assert_eq!(ser(&cf_x2yv(v).unwrap(), 10), vertical::series(2, v as u32, 10).unwrap(), "x^2y^{v}");
    }
}

#[test]
fn x2y2_two_ways() {
    assert_eq!(ser(&cf_x2yv(2).unwrap(), 20), ser(&cf_xvyv(2).unwrap(), 20));
}

#[test]
fn f_one_and_t_equals_one() {
    assert_eq!(cf_f(1).unwrap(), p("Q^2T^2-Q+1"));
    assert_eq!(cf_f(1).unwrap().specialize_t(1).unwrap(), p("Q^2-Q+1"));
    for k in 2..=6u32 {
        let f = cf_f(k as i64).unwrap().specialize_t(1).unwrap();
        assert_eq!(f, LaurentPoly::term(Monomial::new(k * k, 0, 0), 1), "k={k}");
    }
}

#[test]
fn printed_rational_functions() {
    for &(v, num, den) in XVYV_DISPLAYS {
        let r = cf_xvyv(v).unwrap();
        assert_eq!(*r.numerator(), p(num), "numerator v={v}");
        assert_eq!(r.expanded_denominator(), p(den), "denominator v={v}");
    }
}

#[test]
fn top_monomial_of_numerator() {
    for v in 1..=5i64 {
        let (m, c) = cf_xvyv(v).unwrap().numerator().leading_term().unwrap();
        assert_eq!(m, Monomial::new((v * (v + 1)) as u32, (2 * v * v) as i32, 0), "v={v}");
        assert_eq!(c, 1.into());
    }
}

#[test]
fn xvyv_matches_diagonal_strata() {
    for v in 1..=3i64 {
        let oracle: LaurentPoly = (0..=10).fold(LaurentPoly::zero(), |acc, n| &acc + &diagonal::aggregate(n, v as usize));
        assert_eq!(ser(&cf_xvyv(v).unwrap(), 10), QSeries::from_poly(&oracle, 10), "v={v}");
    }
}

#[test]
fn overlaps_for_smaller_u() {
    let n = 14;
    assert_eq!(ser(&cf_xvm1yv(2).unwrap(), n), ser(&cf_xyv(2).unwrap(), n));
    assert_eq!(ser(&cf_xvm1yv(3).unwrap(), n), ser(&cf_x2yv(3).unwrap(), n));
    assert_eq!(ser(&cf_xvm2yv(3).unwrap(), n), ser(&cf_xyv(3).unwrap(), n));
    assert_eq!(ser(&cf_xvm2yv(4).unwrap(), n), ser(&cf_x2yv(4).unwrap(), n));
}

#[test]
fn plane_and_durfee_agree_to_twice_kmax() {
    for kmax in 1..=4i64 {
        let n = (2 * kmax) as usize;
        assert_eq!(ser(&cf_durfee_lhs(kmax).unwrap(), n), ser(&cf_plane(n as i64).unwrap(), n), "kmax={kmax}");
    }
}

#[test]
fn durfee_one_row_short() {
    let lhs = ser(&cf_durfee_lhs(1).unwrap(), 4);
    let plane = ser(&cf_plane(4).unwrap(), 4);
    let d = plane.first_divergence(&lhs).unwrap();
    assert_eq!(d.degree, 3);
    assert_eq!(d.left, p("1+T^2+T^4"));
    assert_eq!(d.right, p("1+2T^2"));
    // Against a single plane factor the gap opens one degree earlier.
    let d = ser(&cf_plane(1).unwrap(), 4).first_divergence(&lhs).unwrap();
    assert_eq!(d.degree, 2);
    assert_eq!(&d.right - &d.left, p("T^2"));
}

#[test]
fn low_coefficients_are_one() {
    let forms = [
        cf_nodal_reduced(),
        cf_fat_line(3, false).unwrap(),
        cf_xyv(3).unwrap(),
        cf_x2yv(3).unwrap(),
        cf_xvyv(4).unwrap(),
        cf_xvm1yv(4).unwrap(),
        cf_xvm2yv(5).unwrap(),
        cf_plane(4).unwrap(),
        cf_durfee_lhs(3).unwrap(),
    ];
    for f in &forms {
        let s = f.to_series(1);
        assert_eq!(*s.coeff(0), LaurentPoly::one(), "{f}");
        assert_eq!(*s.coeff(1), LaurentPoly::one(), "{f}");
    }
}

#[test]
fn domain_errors() {
    assert!(cf_xyv(0).is_err());
    assert!(cf_x2yv(0).is_err());
    assert!(cf_xvyv(0).is_err());
    assert!(cf_xvm1yv(1).is_err());
    assert!(cf_xvm2yv(2).is_err());
    assert!(cf_plane(0).is_err());
    assert!(cf_durfee_lhs(0).is_err());
    assert!(cf_hopf_closed(0).is_err());
    assert!(cf_f(0).is_err());
}

#[test]
fn transfer_matrix_entries() {
    // k = 3, s = 2: a = 2, b = 1.
    let m = TransferMatrix::new(&Formulas::exact(), 3, 2).unwrap();
    assert_eq!(m.entries[0][0], &(&p("Q^4T^4") * &p("T^2-1")) + &p("1-Q^2T^2").pow(2));
    assert_eq!(m.entries[0][1], &p("Q^2T^2") * &p("T^2-1"));
    assert_eq!(m.entries[1][0], p("Q^2T^2"));
    assert_eq!(m.entries[1][1], p("Q^4T^6"));
}

#[test]
fn initial_vectors() {
    let f = Formulas::exact();
    let v1 = InitialVector::v1(&f, 2).unwrap();
    assert_eq!(v1.entries[0], p("Q^4T^6-Q^4T^4"));
    assert_eq!(v1.entries[1], p("Q^2T^2"));
    let w1 = InitialVector::w1(&f, 2).unwrap();
    assert!(w1.entries[0].is_zero());
    assert_eq!(w1.entries[1], p("Q^2T^2-Q^4T^4"));
    let d2 = InitialVector::d2(&f, 3).unwrap();
    assert_eq!(d2.entries[1], &(&p("Q^7T^8") * &p("1-Q^3T^4")) * &p("1-Q^2T^2"));
}

#[test]
fn hopf_closed_substitutes_to_xyv() {
    assert!(cf_hopf_closed(1).unwrap().substitute_t().unwrap().equals_as_rational(&cf_nodal_reduced()));
    for v in 1..=4 {
        let sub = cf_hopf_closed(v).unwrap().substitute_t().unwrap();
        assert_eq!(sub.to_series(12), cf_xyv(v).unwrap().to_series(12), "v={v}");
    }
}

#[test]
fn every_site_is_read() {
    let f = Formulas::exact();
    f.nodal_reduced().unwrap();
    f.fat_line(3, false).unwrap();
    f.xyv(3).unwrap();
    f.x2yv(3).unwrap();
    f.xvyv(3).unwrap();
    f.xvm1yv(3).unwrap();
    f.xvm2yv(4).unwrap();
    f.plane(3).unwrap();
    f.durfee_lhs(3).unwrap();
    f.hopf_closed(3).unwrap();
    let declared: BTreeSet<&str> = SITES.iter().copied().collect();
    assert_eq!(f.sites_read(), declared);
    assert_eq!(declared.len(), SITES.len());
}

#[test]
fn tweak_changes_only_its_site() {
    let exact = cf_xyv(2).unwrap();
    let moved = Formulas::tweaked("xyv.tail.t", 1).xyv(2).unwrap();
    assert!(!moved.equals_as_rational(&exact));
    let untouched = Formulas::tweaked("plane.q", 1).xyv(2).unwrap();
    assert!(untouched.equals_as_rational(&exact));
    assert!(Formulas::tweaked("plane.q", -1).plane(2).is_err());
}

#[test]
fn curve_dispatch() {
    assert!(cf_curve(3, 3).unwrap().equals_as_rational(&cf_xvyv(3).unwrap()));
    assert!(cf_curve(1, 5).unwrap().equals_as_rational(&cf_xyv(5).unwrap()));
    assert!(cf_curve(2, 5).unwrap().equals_as_rational(&cf_x2yv(5).unwrap()));
    assert!(cf_curve(4, 5).unwrap().equals_as_rational(&cf_xvm1yv(5).unwrap()));
    assert!(cf_curve(4, 6).unwrap().equals_as_rational(&cf_xvm2yv(6).unwrap()));
    for (u, v) in [(3, 7), (0, 3), (4, 3), (5, 9)] {
        assert!(matches!(cf_curve(u, v), Err(Error::UnsupportedCurve { .. })), "({u},{v})");
    }
}
