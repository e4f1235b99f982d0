mod common;

use common::*;
use graphmub::catalog::TRIDIAGONAL_CATALOG;
use graphmub::{poly_is_irreducible, poly_is_primitive, tridiag_char_poly, PolyZp, TridiagSpec};
use proptest::prelude::*;

#[test]
fn irreducibility_agrees_with_trial_division() {
    for (p, max_deg) in [(2u64, 8usize), (3, 6), (5, 4), (7, 4)] {
        for deg in 1..=max_deg {
            if p.pow(deg as u32) > 10_000 {
                continue;
            }
            for f in monic_of_degree(p, deg) {
                assert_eq!(
                    poly_is_irreducible(&f).unwrap(),
                    brute_irreducible(&f),
                    "{f} over Z_{p}"
                );
            }
        }
    }
}

#[test]
fn irreducible_is_coprime_to_lower_degrees() {
    for (p, deg) in [(2u64, 6usize), (3, 4), (5, 3)] {
        for f in monic_of_degree(p, deg)
            .into_iter()
            .filter(|f| poly_is_irreducible(f).unwrap())
        {
            for k in 1..deg {
                for g in monic_of_degree(p, k) {
                    assert!(f.gcd(&g).unwrap().is_one());
                }
            }
        }
    }
}

#[test]
fn primitivity_agrees_with_order_of_x() {
    for (p, deg) in [
        (2u64, 1usize),
        (2, 4),
        (2, 6),
        (3, 2),
        (3, 3),
        (5, 2),
        (7, 2),
    ] {
        let full = p.pow(deg as u32) - 1;
        for f in monic_of_degree(p, deg)
            .into_iter()
            .filter(|f| poly_is_irreducible(f).unwrap())
        {
            if f.coeff(0) == 0 {
                assert!(!poly_is_primitive(&f).unwrap());
                continue;
            }
            assert_eq!(
                poly_is_primitive(&f).unwrap(),
                brute_order_of_x(&f) == full,
                "{f}"
            );
        }
    }
}

#[test]
fn catalog_polynomials_are_primitive_and_irreducible() {
    for (p, d) in TRIDIAGONAL_CATALOG {
        let f = tridiag_char_poly(&TridiagSpec::new(pm(*p), d.to_vec()).unwrap());
        assert!(poly_is_primitive(&f).unwrap());
        assert!(poly_is_irreducible(&f).unwrap());
    }
}

fn poly_strategy(p: u64, max_len: usize) -> impl Strategy<Value = PolyZp> {
    prop::collection::vec(0..p, 0..max_len).prop_map(move |c| poly(p, &c))
}

proptest! {
    #[test]
    fn division_identity(p in prime_strategy(), seed_a in prop::collection::vec(0u64..7, 0..10), seed_b in prop::collection::vec(0u64..7, 1..6)) {
        let a = poly(p, &seed_a);
        let b = poly(p, &seed_b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.checked_mul(&b).unwrap().checked_add(&r).unwrap(), a.clone());
        prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        let one = PolyZp::one(pm(p));
        prop_assert_eq!(a.checked_mul(&one).unwrap(), a);
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(5, 8), b in poly_strategy(5, 8)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
    }
}
