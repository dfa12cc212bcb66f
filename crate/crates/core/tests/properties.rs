use proptest::prelude::*;

use nodal_hilb::kr::{kr_p, BinaryPair, KrSolver, Rewrite};
use nodal_hilb::series::json::{poly_from_json, poly_to_json, series_from_json, series_to_json};
use nodal_hilb::series::{Factor, FactoredRational, LaurentPoly, Monomial, QSeries};

fn poly_with(t: std::ops::RangeInclusive<i32>, with_a: bool) -> impl Strategy<Value = LaurentPoly> {
    let a_max = if with_a { 2u32 } else { 0 };
    prop::collection::vec((0u32..4, t, 0u32..=a_max, -5i64..=5), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(q, t, a, c)| (Monomial::new(q, t, a), c)))
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(-4..=4, true)
}

fn factor(beta: std::ops::RangeInclusive<i32>) -> impl Strategy<Value = Factor> {
    (1i64..4, beta).prop_map(|(a, b)| Factor::new(a, b as i64).unwrap())
}

fn rational(beta: std::ops::RangeInclusive<i32>, t: std::ops::RangeInclusive<i32>) -> impl Strategy<Value = FactoredRational> {
    (poly_with(t, false), prop::collection::vec(factor(beta), 0..4))
        .prop_map(|(num, fs)| FactoredRational::new(num, fs))
}

fn bits() -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 0..5)
}

/// Random pairs with equal numbers of ones.
fn pair() -> impl Strategy<Value = BinaryPair> {
    (bits(), bits()).prop_filter_map("ones must match", |(t, w)| BinaryPair::new(t, w).ok())
}

proptest! {
    #[test]
    fn ring_axioms(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &LaurentPoly::one(), x.clone());
    }

    #[test]
    fn series_of_product(r1 in rational(-3..=3, -3..=3), r2 in rational(-3..=3, -3..=3)) {
        let n = 8;
        prop_assert_eq!((&r1 * &r2).to_series(n), r1.to_series(n).mul(&r2.to_series(n)));
    }

    #[test]
    fn series_of_sum(r1 in rational(-3..=3, -3..=3), r2 in rational(-3..=3, -3..=3)) {
        let n = 8;
        prop_assert_eq!(r1.add(&r2).to_series(n), r1.to_series(n).add(&r2.to_series(n)));
        prop_assert!(r1.add(&r2).equals_as_rational(&r2.add(&r1)));
    }

    #[test]
    fn substitution_commutes_with_expansion(r in rational(-3..=0, -3..=0)) {
        let n = 8;
        let left = r.substitute_t().unwrap().to_series(n);
        let right = r.to_series(n).substitute_t().unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn geometric_series_inverts_its_factor(f in factor(-3..=3)) {
        let mut s = FactoredRational::geometric(f).to_series(10);
        s.mul_one_minus(f.alpha, f.beta);
        prop_assert_eq!(s, QSeries::one(10));
    }

    #[test]
    fn json_round_trip(x in poly(), n in 0usize..6) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&x)).unwrap(), x.clone());
        let s = QSeries::from_poly(&x, n);
        prop_assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn display_parse_round_trip(x in poly()) {
        prop_assert_eq!(x.to_string().parse::<LaurentPoly>().unwrap(), x);
    }

    #[test]
    fn rewrites_keep_the_count_of_ones(p in pair()) {
        match p.rewrite() {
            Rewrite::Base { .. } => prop_assert_eq!(p.ones(), 0),
            Rewrite::Peel { next, .. } => prop_assert_eq!(next.ones() + 1, p.ones()),
            Rewrite::Rotate { next } => {
                prop_assert_eq!(next.ones(), p.ones());
                prop_assert_eq!(next.len() + 1, p.len());
            }
            Rewrite::Split { raise, keep, .. } => {
                prop_assert_eq!(raise.ones(), p.ones() + 1);
                prop_assert_eq!(keep.ones(), p.ones());
                prop_assert_eq!(raise.len(), p.len());
            }
        }
    }

    #[test]
    fn recursion_cache_is_transparent(ps in prop::collection::vec(pair(), 1..4)) {
        let mut shared = KrSolver::new(5, false);
        for p in &ps {
            prop_assert_eq!(shared.solve(p).unwrap(), kr_p(p, 5, false).unwrap());
        }
    }

    #[test]
    fn recursion_values_are_nonnegative_at_a_zero(p in pair()) {
        prop_assert!(kr_p(&p, 6, true).unwrap().is_nonnegative());
    }
}
